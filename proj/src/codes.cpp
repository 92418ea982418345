#include "vassiliev/codes.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "vassiliev/error.hpp"

namespace vassiliev {

namespace {

constexpr const char* kModule = "knot_codes";

[[noreturn]] void fail(const std::string& message, std::optional<std::size_t> pos = std::nullopt) {
  throw Error(kModule, message, pos);
}

bool is_node_role(Role r) { return r == Role::NodeA || r == Role::NodeB; }

struct Position {
  std::size_t component;
  std::size_t index;
};

// Location of the two visits of every id: [0] is Over/NodeA, [1] is Under/NodeB.
std::map<int, std::array<Position, 2>> locate(const std::vector<Component>& components) {
  std::map<int, std::array<Position, 2>> where;
  for (std::size_t c = 0; c < components.size(); ++c)
    for (std::size_t i = 0; i < components[c].size(); ++i) {
      const Visit& v = components[c][i];
      int slot = (v.role == Role::Over || v.role == Role::NodeA) ? 0 : 1;
      where[v.id][slot] = Position{c, i};
    }
  return where;
}

Component rotated(const Component& comp, std::size_t start) {
  Component out;
  out.reserve(comp.size());
  for (std::size_t k = 0; k < comp.size(); ++k) out.push_back(comp[(start + k) % comp.size()]);
  return out;
}

}  // namespace

SingularDiagram::SingularDiagram(std::vector<Component> components, std::map<int, int> crossing_signs,
                                 std::map<int, int> node_orientations)
    : components_(std::move(components)),
      crossings_(std::move(crossing_signs)),
      nodes_(std::move(node_orientations)) {
  for (const auto& [id, s] : crossings_) {
    if (s != 1 && s != -1) fail("crossing " + std::to_string(id) + " has sign other than +-1");
    if (nodes_.count(id)) fail("id " + std::to_string(id) + " used for both a crossing and a node");
  }
  for (const auto& [id, s] : nodes_)
    if (s != 1 && s != -1) fail("node " + std::to_string(id) + " has orientation other than +-1");

  std::map<int, std::array<int, 4>> seen;  // counts per role
  for (const auto& comp : components_)
    for (const auto& v : comp) {
      bool node = is_node_role(v.role);
      if (node && !nodes_.count(v.id)) fail("visit to unknown node " + std::to_string(v.id));
      if (!node && !crossings_.count(v.id)) fail("visit to unknown crossing " + std::to_string(v.id));
      ++seen[v.id][static_cast<int>(v.role)];
    }
  for (const auto& [id, s] : crossings_) {
    auto& n = seen[id];
    if (n[0] != 1 || n[1] != 1)
      fail("crossing " + std::to_string(id) + " must be visited exactly once over and once under");
  }
  for (const auto& [id, s] : nodes_) {
    auto& n = seen[id];
    if (n[2] != 1 || n[3] != 1) fail("node " + std::to_string(id) + " must be visited exactly twice");
  }
}

SingularDiagram SingularDiagram::unknot() { return SingularDiagram({Component{}}, {}); }

int SingularDiagram::crossing_sign(int id) const {
  auto it = crossings_.find(id);
  if (it == crossings_.end()) fail("unknown crossing id " + std::to_string(id));
  return it->second;
}

int SingularDiagram::node_orientation(int id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) fail("unknown node id " + std::to_string(id));
  return it->second;
}

std::array<std::size_t, 2> SingularDiagram::components_of(int id) const {
  auto where = locate(components_);
  auto it = where.find(id);
  if (it == where.end()) fail("unknown id " + std::to_string(id));
  return {it->second[0].component, it->second[1].component};
}

// ---- canonical form ---------------------------------------------------------

namespace {

// Encodes components in a chosen order and rotation, relabelling ids by first
// appearance. Node strands are renamed so that the first visit is strand A.
struct Encoder {
  explicit Encoder(const SingularDiagram& diagram) : d(diagram) {}
  const SingularDiagram& d;
  std::map<int, int> label;
  std::map<int, bool> node_swapped;
  int next = 1;

  std::vector<int> encode(const Component& comp, std::size_t start) {
    std::vector<int> out;
    out.reserve(comp.size() * 2 + 1);
    out.push_back(static_cast<int>(comp.size()));
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const Visit& v = comp[(start + k) % comp.size()];
      auto it = label.find(v.id);
      bool node = is_node_role(v.role);
      if (it == label.end()) {
        it = label.emplace(v.id, next++).first;
        int extra;
        if (node) {
          bool swapped = v.role == Role::NodeB;
          node_swapped[v.id] = swapped;
          extra = (swapped ? -1 : 1) * d.node_orientation(v.id);
          out.push_back(it->second * 8 + 4 + (extra > 0 ? 0 : 1));
        } else {
          extra = d.crossing_sign(v.id);
          out.push_back(it->second * 8 + (v.role == Role::Over ? 0 : 2) + (extra > 0 ? 0 : 1));
        }
      } else {
        int r;
        if (node) {
          r = 6;
        } else {
          r = v.role == Role::Over ? 0 : 2;
        }
        out.push_back(-(it->second * 8 + r));
      }
    }
    return out;
  }
};

struct CanonicalChoice {
  std::vector<std::size_t> order;
  std::vector<std::size_t> starts;
  std::vector<int> code;
};

void search(const SingularDiagram& d, std::vector<bool>& used, Encoder enc, CanonicalChoice current,
            std::optional<CanonicalChoice>& best) {
  const auto& comps = d.components();
  if (current.order.size() == comps.size()) {
    if (!best || current.code < best->code) best = std::move(current);
    return;
  }
  // Try every unused component and rotation; keep only the minimal extensions.
  std::vector<std::pair<std::vector<int>, std::pair<std::size_t, std::size_t>>> options;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (used[c]) continue;
    std::size_t rotations = std::max<std::size_t>(1, comps[c].size());
    for (std::size_t r = 0; r < rotations; ++r) {
      Encoder trial = enc;
      options.push_back({trial.encode(comps[c], r), {c, r}});
    }
  }
  auto minimal = std::min_element(options.begin(), options.end(), [](const auto& a, const auto& b) {
                   return a.first < b.first;
                 })->first;
  for (const auto& [code, choice] : options) {
    if (code != minimal) continue;
    Encoder next = enc;
    next.encode(comps[choice.first], choice.second);
    CanonicalChoice extended = current;
    extended.order.push_back(choice.first);
    extended.starts.push_back(choice.second);
    extended.code.insert(extended.code.end(), code.begin(), code.end());
    used[choice.first] = true;
    search(d, used, next, std::move(extended), best);
    used[choice.first] = false;
  }
}

CanonicalChoice canonical_choice(const SingularDiagram& d) {
  std::vector<bool> used(d.component_count(), false);
  std::optional<CanonicalChoice> best;
  search(d, used, Encoder(d), CanonicalChoice{}, best);
  return *best;
}

}  // namespace

SingularDiagram SingularDiagram::canonical() const {
  CanonicalChoice choice = canonical_choice(*this);
  Encoder enc(*this);
  for (std::size_t k = 0; k < choice.order.size(); ++k)
    enc.encode(components_[choice.order[k]], choice.starts[k]);

  std::vector<Component> comps;
  std::map<int, int> crossings, nodes;
  for (std::size_t k = 0; k < choice.order.size(); ++k) {
    Component comp = rotated(components_[choice.order[k]], choice.starts[k]);
    for (Visit& v : comp) {
      int old = v.id;
      v.id = enc.label.at(old);
      if (is_node_role(v.role)) {
        if (enc.node_swapped.at(old)) v.role = v.role == Role::NodeA ? Role::NodeB : Role::NodeA;
        nodes[v.id] = (enc.node_swapped.at(old) ? -1 : 1) * nodes_.at(old);
      } else {
        crossings[v.id] = crossings_.at(old);
      }
    }
    comps.push_back(std::move(comp));
  }
  return SingularDiagram(std::move(comps), std::move(crossings), std::move(nodes));
}

std::string SingularDiagram::key() const {
  CanonicalChoice choice = canonical_choice(*this);
  std::string out;
  out.reserve(choice.code.size() * 3);
  for (int v : choice.code) {
    out += std::to_string(v);
    out += ',';
  }
  return out;
}

bool isomorphic(const SingularDiagram& a, const SingularDiagram& b) {
  if (a.component_count() != b.component_count() || a.crossing_count() != b.crossing_count() ||
      a.node_count() != b.node_count())
    return false;
  return a.key() == b.key();
}

// ---- planar diagram view ------------------------------------------------------

std::vector<std::vector<int>> SingularDiagram::component_arcs() const {
  std::vector<std::vector<int>> arcs;
  int next = 1;
  for (const auto& comp : components_) {
    std::vector<int> labels;
    for (std::size_t i = 0; i < comp.size(); ++i) labels.push_back(next++);
    arcs.push_back(std::move(labels));
  }
  return arcs;
}

std::vector<PDEntry> SingularDiagram::pd_entries() const {
  // Arc k of a component leaves visit k and enters visit k+1.
  auto arcs = component_arcs();
  struct Ends {
    int in = 0, out = 0;
  };
  std::map<int, std::array<Ends, 2>> ends;  // [0] over/A, [1] under/B
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& comp = components_[c];
    std::size_t n = comp.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Visit& v = comp[i];
      int slot = (v.role == Role::Over || v.role == Role::NodeA) ? 0 : 1;
      ends[v.id][slot].in = arcs[c][(i + n - 1) % n];
      ends[v.id][slot].out = arcs[c][i];
    }
  }
  std::vector<PDEntry> out;
  for (const auto& [id, e] : ends) {
    PDEntry entry;
    entry.id = id;
    if (nodes_.count(id)) {
      entry.is_node = true;
      entry.sign = nodes_.at(id);
      const Ends& a = e[0];
      const Ends& b = e[1];
      entry.arcs = entry.sign > 0 ? std::array<int, 4>{a.in, b.in, a.out, b.out}
                                  : std::array<int, 4>{a.in, b.out, a.out, b.in};
    } else {
      entry.sign = crossings_.at(id);
      const Ends& over = e[0];
      const Ends& under = e[1];
      entry.arcs = entry.sign > 0 ? std::array<int, 4>{under.in, over.out, under.out, over.in}
                                  : std::array<int, 4>{under.in, over.in, under.out, over.out};
    }
    out.push_back(entry);
  }
  return out;
}

// ---- Gauss code -----------------------------------------------------------------

SingularDiagram parse_gauss(std::string_view text) {
  std::vector<Component> comps;
  std::map<int, int> crossings, nodes;
  std::map<int, std::size_t> first_pos;
  std::map<int, std::array<int, 3>> count;  // O, U, N
  Component current;
  bool current_explicit_empty = false;
  bool any_token = false;

  auto flush = [&]() {
    comps.push_back(std::move(current));
    current.clear();
    current_explicit_empty = false;
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (ch == '|') {
      flush();
      any_token = true;
      ++pos;
      continue;
    }
    if (ch == '(') {
      if (pos + 1 >= text.size() || text[pos + 1] != ')') fail("expected '()' for an empty component", pos);
      if (!current.empty() || current_explicit_empty) fail("'()' must stand alone in its component", pos);
      current_explicit_empty = true;
      any_token = true;
      pos += 2;
      continue;
    }
    if (ch != 'O' && ch != 'U' && ch != 'N') fail(std::string("unexpected character '") + ch + "'", pos);
    if (current_explicit_empty) fail("'()' must stand alone in its component", pos);
    std::size_t token_start = pos++;
    std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits_start == pos) fail("expected crossing label after '" + std::string(1, ch) + "'", pos);
    int id = std::stoi(std::string(text.substr(digits_start, pos - digits_start)));
    if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) fail("expected sign '+' or '-'", pos);
    int sign = text[pos] == '+' ? 1 : -1;
    ++pos;
    any_token = true;

    if (!first_pos.count(id)) first_pos[id] = token_start;
    auto& n = count[id];
    if (ch == 'N') {
      if (n[0] || n[1]) fail("label " + std::to_string(id) + " used for both a crossing and a node", token_start);
      if (++n[2] > 2) fail("node label " + std::to_string(id) + " appears more than twice", token_start);
      auto [it, fresh] = nodes.try_emplace(id, sign);
      if (!fresh && it->second != sign)
        fail("inconsistent signs for node " + std::to_string(id), token_start);
      current.push_back(Visit{id, fresh ? Role::NodeA : Role::NodeB});
    } else {
      if (n[2]) fail("label " + std::to_string(id) + " used for both a crossing and a node", token_start);
      int idx = ch == 'O' ? 0 : 1;
      if (++n[idx] > 1)
        fail("label " + std::to_string(id) + " appears more than once as " + std::string(1, ch), token_start);
      auto [it, fresh] = crossings.try_emplace(id, sign);
      if (!fresh && it->second != sign)
        fail("inconsistent signs for crossing " + std::to_string(id), token_start);
      current.push_back(Visit{id, ch == 'O' ? Role::Over : Role::Under});
    }
  }
  if (any_token) flush();

  for (const auto& [id, n] : count) {
    if (n[2] == 0 && (n[0] != 1 || n[1] != 1))
      fail("crossing label " + std::to_string(id) + " must appear exactly twice, once as O and once as U",
           first_pos[id]);
    if (n[2] != 0 && n[2] != 2)
      fail("node label " + std::to_string(id) + " must appear exactly twice", first_pos[id]);
  }
  return SingularDiagram(std::move(comps), std::move(crossings), std::move(nodes));
}

std::string to_gauss(const SingularDiagram& d) {
  // The first node token read is strand A; flip the printed sign when the
  // stored strand A is read second.
  std::map<int, bool> node_seen;
  std::map<int, int> printed_node_sign;
  for (const auto& comp : d.components())
    for (const auto& v : comp)
      if (is_node_role(v.role) && !node_seen[v.id]) {
        node_seen[v.id] = true;
        printed_node_sign[v.id] = (v.role == Role::NodeA ? 1 : -1) * d.node_orientation(v.id);
      }
  std::string out;
  for (std::size_t c = 0; c < d.components().size(); ++c) {
    if (c) out += '|';
    const auto& comp = d.components()[c];
    if (comp.empty()) {
      out += "()";
      continue;
    }
    for (const auto& v : comp) {
      int sign;
      switch (v.role) {
        case Role::Over: out += 'O'; sign = d.crossing_sign(v.id); break;
        case Role::Under: out += 'U'; sign = d.crossing_sign(v.id); break;
        default: out += 'N'; sign = printed_node_sign[v.id]; break;
      }
      out += std::to_string(v.id);
      out += sign > 0 ? '+' : '-';
    }
  }
  return out;
}

// ---- PD code -------------------------------------------------------------------

namespace {

struct PDTuple {
  bool node;
  std::array<int, 4> arcs;
  std::size_t position;
};

std::vector<PDTuple> tokenize_pd(std::string_view text) {
  std::vector<PDTuple> out;
  std::size_t pos = 0;
  auto skip = [&]() {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip();
  while (pos < text.size()) {
    std::size_t start = pos;
    char ch = text[pos];
    if (ch != 'X' && ch != 'V') fail(std::string("expected 'X(' or 'V(' but found '") + ch + "'", pos);
    ++pos;
    if (pos >= text.size() || text[pos] != '(') fail("expected '('", pos);
    ++pos;
    PDTuple t{ch == 'V', {}, start};
    for (int k = 0; k < 4; ++k) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      std::size_t ds = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (ds == pos) fail("expected arc label", pos);
      t.arcs[k] = std::stoi(std::string(text.substr(ds, pos - ds)));
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      char want = k < 3 ? ',' : ')';
      if (pos >= text.size() || text[pos] != want) fail(std::string("expected '") + want + "'", pos);
      ++pos;
    }
    out.push_back(t);
    skip();
  }
  return out;
}

enum class Dir : std::int8_t { Unknown = 0, In = 1, Out = -1 };

}  // namespace

SingularDiagram parse_pd(std::string_view text) {
  auto tuples = tokenize_pd(text);
  const std::size_t n = tuples.size();

  std::map<int, std::vector<std::pair<std::size_t, int>>> occurrences;
  for (std::size_t t = 0; t < n; ++t)
    for (int k = 0; k < 4; ++k) occurrences[tuples[t].arcs[k]].push_back({t, k});
  for (const auto& [label, occ] : occurrences)
    if (occ.size() != 2)
      fail("arc " + std::to_string(label) + " appears " + std::to_string(occ.size()) + " times (expected 2)",
           tuples[occ.front().first].position);

  std::vector<std::array<Dir, 4>> dir(n, {Dir::In, Dir::Unknown, Dir::Out, Dir::Unknown});
  auto propagate = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [label, occ] : occurrences) {
        Dir& d0 = dir[occ[0].first][occ[0].second];
        Dir& d1 = dir[occ[1].first][occ[1].second];
        if (d0 != Dir::Unknown && d1 != Dir::Unknown) {
          if (d0 == d1)
            fail("arc " + std::to_string(label) + " has inconsistent orientation", tuples[occ[0].first].position);
        } else if (d0 != Dir::Unknown) {
          d1 = static_cast<Dir>(-static_cast<int>(d0));
          changed = true;
        } else if (d1 != Dir::Unknown) {
          d0 = static_cast<Dir>(-static_cast<int>(d1));
          changed = true;
        }
      }
      for (std::size_t t = 0; t < n; ++t) {
        Dir& b = dir[t][1];
        Dir& d = dir[t][3];
        if (b != Dir::Unknown && d != Dir::Unknown) {
          if (b == d) fail("strand through slots b,d has inconsistent orientation", tuples[t].position);
        } else if (b != Dir::Unknown) {
          d = static_cast<Dir>(-static_cast<int>(b));
          changed = true;
        } else if (d != Dir::Unknown) {
          b = static_cast<Dir>(-static_cast<int>(d));
          changed = true;
        }
      }
    }
  };
  propagate();
  for (std::size_t t = 0; t < n; ++t) {
    if (dir[t][1] != Dir::Unknown) continue;
    int b = tuples[t].arcs[1], d = tuples[t].arcs[3];
    // Consecutive numbering along the orientation: d -> b when b follows d.
    bool d_to_b = (b - d == 1) || (d - b > 1);
    dir[t][3] = d_to_b ? Dir::In : Dir::Out;
    dir[t][1] = d_to_b ? Dir::Out : Dir::In;
    propagate();
  }

  // Trace circuits. Arc label -> (tuple, slot) where it enters.
  std::map<int, std::pair<std::size_t, int>> enters;
  for (const auto& [label, occ] : occurrences)
    for (const auto& o : occ)
      if (dir[o.first][o.second] == Dir::In) enters[label] = o;

  std::map<int, int> crossings, nodes;
  for (std::size_t t = 0; t < n; ++t) {
    int id = static_cast<int>(t) + 1;
    // Over strand (or strand B) running d -> b gives a positive crossing,
    // and for a node strand B running b -> d gives orientation +1.
    bool d_to_b = dir[t][3] == Dir::In;
    if (tuples[t].node)
      nodes[id] = d_to_b ? -1 : 1;
    else
      crossings[id] = d_to_b ? 1 : -1;
  }

  std::set<int> unvisited;
  for (const auto& [label, occ] : occurrences) unvisited.insert(label);
  std::vector<Component> comps;
  while (!unvisited.empty()) {
    int start = *unvisited.begin();
    Component comp;
    int arc = start;
    do {
      unvisited.erase(arc);
      auto [t, slot] = enters.at(arc);
      int id = static_cast<int>(t) + 1;
      bool primary = slot == 0;
      Role role = tuples[t].node ? (primary ? Role::NodeA : Role::NodeB) : (primary ? Role::Under : Role::Over);
      comp.push_back(Visit{id, role});
      int out_slot = primary ? 2 : (slot == 1 ? 3 : 1);
      arc = tuples[t].arcs[out_slot];
    } while (arc != start);
    // Basepoint: the visit entered by the smallest arc label, i.e. `start`.
    comps.push_back(std::move(comp));
  }
  return SingularDiagram(std::move(comps), std::move(crossings), std::move(nodes));
}

std::string to_pd(const SingularDiagram& d) {
  std::string out;
  for (const auto& e : d.pd_entries()) {
    if (!out.empty()) out += ' ';
    out += e.is_node ? "V(" : "X(";
    for (int k = 0; k < 4; ++k) {
      if (k) out += ',';
      out += std::to_string(e.arcs[k]);
    }
    out += ')';
  }
  return out;
}

SingularDiagram parse_code(std::string_view text) {
  if (text.find("X(") != std::string_view::npos || text.find("V(") != std::string_view::npos)
    return parse_pd(text);
  return parse_gauss(text);
}

nlohmann::json to_json(const SingularDiagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  j["nodes"] = nlohmann::json::array();
  for (const auto& e : d.pd_entries()) {
    nlohmann::json entry = {{"id", e.id}, {"pd", e.arcs}};
    if (e.is_node) {
      entry["orientation"] = e.sign;
      j["nodes"].push_back(entry);
    } else {
      entry["sign"] = e.sign;
      j["crossings"].push_back(entry);
    }
  }
  auto arcs = d.component_arcs();
  j["components"] = nlohmann::json::array();
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    nlohmann::json comp;
    comp["arcs"] = arcs[c];
    comp["basepoint_arc"] = arcs[c].empty() ? nlohmann::json(nullptr) : nlohmann::json(arcs[c].front());
    nlohmann::json visits = nlohmann::json::array();
    for (const auto& v : d.components()[c]) {
      const char* role = v.role == Role::Over    ? "over"
                         : v.role == Role::Under ? "under"
                         : v.role == Role::NodeA ? "node_a"
                                                 : "node_b";
      visits.push_back({{"id", v.id}, {"role", role}});
    }
    comp["visits"] = visits;
    j["components"].push_back(comp);
  }
  j["gauss"] = to_gauss(d);
  return j;
}

SingularDiagram diagram_from_json(const nlohmann::json& j) {
  if (!j.contains("gauss") || !j["gauss"].is_string()) fail("diagram JSON requires a 'gauss' string field");
  return parse_gauss(j["gauss"].get<std::string>());
}

// ---- braids ------------------------------------------------------------------------

SingularDiagram braid_closure(int strands, const std::vector<BraidLetter>& word) {
  if (strands < 1) fail("braid needs at least one strand");
  // visits[p] collects the visits of the strand that starts at bottom position p.
  std::vector<Component> along(strands);
  std::vector<int> at(strands);  // at[position] = starting position of the strand there
  std::iota(at.begin(), at.end(), 0);
  std::map<int, int> crossings, nodes;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const auto& letter = word[k];
    if (letter.generator < 1 || letter.generator >= strands)
      fail("braid generator " + std::to_string(letter.generator) + " out of range");
    int id = static_cast<int>(k) + 1;
    int left = at[letter.generator - 1];   // moves left -> right
    int right = at[letter.generator];      // moves right -> left
    switch (letter.kind) {
      case BraidLetter::Kind::Positive:
        crossings[id] = 1;
        along[left].push_back({id, Role::Over});
        along[right].push_back({id, Role::Under});
        break;
      case BraidLetter::Kind::Negative:
        crossings[id] = -1;
        along[left].push_back({id, Role::Under});
        along[right].push_back({id, Role::Over});
        break;
      case BraidLetter::Kind::Singular:
        nodes[id] = 1;
        along[left].push_back({id, Role::NodeA});
        along[right].push_back({id, Role::NodeB});
        break;
    }
    std::swap(at[letter.generator - 1], at[letter.generator]);
  }
  // Strand starting at bottom position p ends at the top position q with at[q] == p.
  std::vector<int> end_position(strands);
  for (int q = 0; q < strands; ++q) end_position[at[q]] = q;
  std::vector<bool> done(strands, false);
  std::vector<Component> comps;
  for (int p = 0; p < strands; ++p) {
    if (done[p]) continue;
    Component comp;
    int cur = p;
    while (!done[cur]) {
      done[cur] = true;
      comp.insert(comp.end(), along[cur].begin(), along[cur].end());
      cur = end_position[cur];
    }
    comps.push_back(std::move(comp));
  }
  return SingularDiagram(std::move(comps), std::move(crossings), std::move(nodes));
}

// ---- operations ----------------------------------------------------------------------

SingularDiagram switch_crossing(const SingularDiagram& d, int crossing_id) {
  if (!d.has_crossing(crossing_id)) fail("unknown crossing id " + std::to_string(crossing_id));
  auto comps = d.components();
  for (auto& comp : comps)
    for (auto& v : comp)
      if (v.id == crossing_id) v.role = v.role == Role::Over ? Role::Under : Role::Over;
  auto crossings = d.crossings();
  crossings[crossing_id] = -crossings[crossing_id];
  return SingularDiagram(std::move(comps), std::move(crossings), d.nodes());
}

SingularDiagram smooth(const SingularDiagram& d, int id) {
  if (!d.has_crossing(id) && !d.has_node(id)) fail("unknown id " + std::to_string(id));
  auto where = locate(d.components());
  Position p = where.at(id)[0];
  Position q = where.at(id)[1];
  const auto& comps = d.components();
  std::vector<Component> out;
  if (p.component == q.component) {
    // [v1 A v2 B] splits into A and B.
    const Component& comp = comps[p.component];
    Component seq = rotated(comp, p.index);
    std::size_t j = (q.index + comp.size() - p.index) % comp.size();
    Component a(seq.begin() + 1, seq.begin() + static_cast<std::ptrdiff_t>(j));
    Component b(seq.begin() + static_cast<std::ptrdiff_t>(j) + 1, seq.end());
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (c == p.component) {
        out.push_back(std::move(a));
        out.push_back(std::move(b));
      } else {
        out.push_back(comps[c]);
      }
    }
  } else {
    // [v1 A] and [v2 B] merge into A B.
    Component first = rotated(comps[p.component], p.index);
    Component second = rotated(comps[q.component], q.index);
    Component merged(first.begin() + 1, first.end());
    merged.insert(merged.end(), second.begin() + 1, second.end());
    std::size_t keep = std::min(p.component, q.component);
    std::size_t drop = std::max(p.component, q.component);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (c == keep)
        out.push_back(merged);
      else if (c != drop)
        out.push_back(comps[c]);
    }
  }
  auto crossings = d.crossings();
  auto nodes = d.nodes();
  crossings.erase(id);
  nodes.erase(id);
  return SingularDiagram(std::move(out), std::move(crossings), std::move(nodes));
}

SingularDiagram resolve_node(const SingularDiagram& d, int node_id, Resolution r) {
  if (!d.has_node(node_id)) fail("unknown node id " + std::to_string(node_id));
  if (r == Resolution::Smooth) return smooth(d, node_id);
  int orientation = d.node_orientation(node_id);
  int sign = r == Resolution::Positive ? 1 : -1;
  // Strand A passes over exactly when the requested sign equals the orientation.
  bool a_over = sign == orientation;
  auto comps = d.components();
  for (auto& comp : comps)
    for (auto& v : comp)
      if (v.id == node_id) {
        bool is_a = v.role == Role::NodeA;
        v.role = (is_a == a_over) ? Role::Over : Role::Under;
      }
  auto crossings = d.crossings();
  auto nodes = d.nodes();
  nodes.erase(node_id);
  crossings[node_id] = sign;
  return SingularDiagram(std::move(comps), std::move(crossings), std::move(nodes));
}

int writhe(const SingularDiagram& d) {
  if (d.node_count() != 0) fail("writhe is defined only for diagrams without nodes");
  int total = 0;
  for (const auto& [id, s] : d.crossings()) total += s;
  return total;
}

int linking_number(const SingularDiagram& d, std::size_t first, std::size_t second) {
  if (first >= d.component_count() || second >= d.component_count() || first == second)
    fail("linking number needs two distinct component indices");
  int total = 0;
  for (const auto& [id, s] : d.crossings()) {
    auto comps = d.components_of(id);
    if ((comps[0] == first && comps[1] == second) || (comps[0] == second && comps[1] == first)) total += s;
  }
  if (total % 2 != 0) fail("odd inter-component crossing sum; diagram is not classical");
  return total / 2;
}

}  // namespace vassiliev
