#include "vassiliev/chords.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "vassiliev/error.hpp"

namespace vassiliev {

namespace {

constexpr const char* kModule = "chord_diagrams";

void check_matching(const std::vector<int>& partner) {
  const int n = static_cast<int>(partner.size());
  for (int p = 0; p < n; ++p) {
    int q = partner[p];
    if (q < 0 || q >= n || q == p || partner[q] != p)
      throw Error(kModule, "partner list is not a fixed-point-free involution");
  }
}

}  // namespace

ChordDiagram::ChordDiagram(std::vector<int> partner)
    : partner_(std::move(partner)), circles_{static_cast<int>(partner_.size())} {
  check_matching(partner_);
  canonicalize();
}

ChordDiagram::ChordDiagram(std::vector<int> partner, std::vector<int> circle_sizes)
    : partner_(std::move(partner)), circles_(std::move(circle_sizes)) {
  if (circles_.empty()) circles_.push_back(0);
  if (std::accumulate(circles_.begin(), circles_.end(), 0) != static_cast<int>(partner_.size()))
    throw Error(kModule, "circle sizes do not add up to the number of chord ends");
  check_matching(partner_);
  canonicalize();
}

ChordDiagram ChordDiagram::from_word(const std::vector<int>& labels, std::vector<int> circle_sizes) {
  std::map<int, std::vector<int>> at;
  for (std::size_t p = 0; p < labels.size(); ++p) at[labels[p]].push_back(static_cast<int>(p));
  std::vector<int> partner(labels.size());
  for (const auto& [label, pts] : at) {
    if (pts.size() != 2) throw Error(kModule, "chord label " + std::to_string(label) + " must appear twice");
    partner[pts[0]] = pts[1];
    partner[pts[1]] = pts[0];
  }
  if (circle_sizes.empty()) circle_sizes.push_back(static_cast<int>(labels.size()));
  return ChordDiagram(std::move(partner), std::move(circle_sizes));
}

std::vector<int> rotate_matching(const std::vector<int>& partner, std::size_t shift) {
  const std::size_t n = partner.size();
  std::vector<int> out(n);
  if (n == 0) return out;
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t np = (p + n - shift % n) % n;
    out[np] = static_cast<int>((static_cast<std::size_t>(partner[p]) + n - shift % n) % n);
  }
  return out;
}

void ChordDiagram::canonicalize() {
  const std::size_t n = partner_.size();
  std::vector<int> offsets(circles_.size(), 0);
  for (std::size_t c = 1; c < circles_.size(); ++c) offsets[c] = offsets[c - 1] + circles_[c - 1];

  std::vector<int> shift(circles_.size(), 0);
  std::vector<int> best = partner_;
  std::vector<int> relabel(n), candidate(n);
  while (true) {
    for (std::size_t c = 0; c < circles_.size(); ++c)
      for (int i = 0; i < circles_[c]; ++i)
        relabel[offsets[c] + i] = offsets[c] + (i - shift[c] + circles_[c]) % circles_[c];
    for (std::size_t p = 0; p < n; ++p) candidate[relabel[p]] = relabel[partner_[p]];
    if (candidate < best) best = candidate;
    // Odometer over independent circle rotations.
    std::size_t c = 0;
    for (; c < circles_.size(); ++c) {
      if (++shift[c] < std::max(1, circles_[c])) break;
      shift[c] = 0;
    }
    if (c == circles_.size()) break;
  }
  partner_ = std::move(best);
}

std::vector<int> ChordDiagram::word() const {
  std::vector<int> labels(partner_.size(), -1);
  int next = 0;
  for (std::size_t p = 0; p < partner_.size(); ++p)
    if (labels[p] < 0) labels[p] = labels[partner_[p]] = next++;
  return labels;
}

std::string ChordDiagram::to_string() const {
  std::ostringstream out;
  auto w = word();
  std::size_t p = 0;
  for (std::size_t c = 0; c < circles_.size(); ++c) {
    if (c) out << '|';
    out << '(';
    for (int i = 0; i < circles_[c]; ++i, ++p) out << (i ? " " : "") << w[p];
    out << ')';
  }
  return out.str();
}

ChordDiagram insert_on_circle(const ChordDiagram& a, std::size_t circle, const ChordDiagram& b) {
  if (circle >= a.circle_count()) throw Error(kModule, "circle index out of range");
  if (b.circle_count() != 1) throw Error(kModule, "only single-circle diagrams can be inserted");
  auto wa = a.word();
  auto wb = b.word();
  const int shift = static_cast<int>(a.degree());
  std::vector<int> labels;
  std::vector<int> sizes = a.circle_sizes();
  std::size_t p = 0;
  for (std::size_t c = 0; c < a.circle_count(); ++c) {
    if (c == circle)
      for (int x : wb) labels.push_back(x + shift);
    for (int i = 0; i < sizes[c]; ++i) labels.push_back(wa[p++]);
  }
  sizes[circle] += static_cast<int>(wb.size());
  return ChordDiagram::from_word(labels, sizes);
}

ChordDiagram chord_diagram_of(const SingularDiagram& g) {
  if (g.component_count() > 1) throw Error(kModule, "chord diagrams are read from one-component diagrams");
  std::vector<int> labels;
  if (g.component_count() == 1)
    for (const auto& v : g.components()[0])
      if (v.role == Role::NodeA || v.role == Role::NodeB) labels.push_back(v.id);
  return ChordDiagram::from_word(labels);
}

std::vector<std::vector<int>> raw_matchings(int m) {
  if (m < 0) throw Error(kModule, "degree must be non-negative");
  std::vector<std::vector<int>> out;
  std::vector<int> partner(2 * m, -1);
  std::function<void()> rec = [&]() {
    auto it = std::find(partner.begin(), partner.end(), -1);
    if (it == partner.end()) {
      out.push_back(partner);
      return;
    }
    int p = static_cast<int>(it - partner.begin());
    for (int q = p + 1; q < 2 * m; ++q) {
      if (partner[q] != -1) continue;
      partner[p] = q;
      partner[q] = p;
      rec();
      partner[p] = partner[q] = -1;
    }
  };
  rec();
  return out;
}

ChordEnumeration enumerate_chord_diagrams(int m) {
  ChordEnumeration result;
  for (auto& partner : raw_matchings(m)) {
    ++result.raw_count;
    result.classes.insert(ChordDiagram(std::move(partner)));
  }
  return result;
}

namespace detail {

std::vector<FourTermRelation> four_term_relations_with(int m, const std::array<int, 4>& signs) {
  if (m < 2) throw Error(kModule, "four-term relations need degree at least 2");
  std::set<std::vector<std::pair<ChordDiagram, int>>> seen;
  std::vector<FourTermRelation> out;
  for (const auto& d : enumerate_chord_diagrams(m).classes) {
    const auto word = d.word();
    const int n = static_cast<int>(word.size());
    for (int fixed = 0; fixed < m; ++fixed)
      for (int moving = 0; moving < m; ++moving) {
        if (moving == fixed) continue;
        for (int p = 0; p < n; ++p) {
          if (word[p] != moving) continue;
          // Remove this end of the moving chord; keep its other end in place.
          std::vector<int> reduced;
          for (int q = 0; q < n; ++q)
            if (q != p) reduced.push_back(word[q]);
          std::vector<int> ends;
          for (int q = 0; q < n - 1; ++q)
            if (reduced[q] == fixed) ends.push_back(q);
          const std::array<int, 4> slots{ends[0], ends[0] + 1, ends[1], ends[1] + 1};
          FourTermRelation rel;
          std::vector<std::pair<ChordDiagram, int>> terms;
          for (int k = 0; k < 4; ++k) {
            std::vector<int> w = reduced;
            w.insert(w.begin() + slots[k], moving);
            rel.diagrams[k] = ChordDiagram::from_word(w);
            rel.signs[k] = signs[k];
            terms.push_back({rel.diagrams[k], signs[k]});
          }
          if (seen.insert(terms).second) out.push_back(rel);
        }
      }
  }
  return out;
}

}  // namespace detail

std::vector<FourTermRelation> four_term_relations(int m) {
  return detail::four_term_relations_with(m, {1, -1, 1, -1});
}

FourTermCheck<std::int64_t> satisfies_4T(const std::function<std::int64_t(const ChordDiagram&)>& w, int m) {
  FourTermCheck<std::int64_t> check;
  for (const auto& rel : four_term_relations(m)) {
    std::int64_t sum = 0;
    for (int k = 0; k < 4; ++k) sum += rel.signs[k] * w(rel.diagrams[k]);
    if (sum != 0) {
      check.satisfied = false;
      check.counterexample = rel;
      check.residual = sum;
      return check;
    }
  }
  return check;
}

FourTermCheck<std::complex<double>> satisfies_4T(const std::function<std::complex<double>(const ChordDiagram&)>& w,
                                                 int m, double tolerance) {
  FourTermCheck<std::complex<double>> check;
  std::map<ChordDiagram, std::complex<double>> memo;
  auto value = [&](const ChordDiagram& d) {
    auto it = memo.find(d);
    if (it == memo.end()) it = memo.emplace(d, w(d)).first;
    return it->second;
  };
  for (const auto& rel : four_term_relations(m)) {
    std::complex<double> sum = 0.0;
    for (int k = 0; k < 4; ++k) sum += static_cast<double>(rel.signs[k]) * value(rel.diagrams[k]);
    if (std::abs(sum) > tolerance) {
      check.satisfied = false;
      check.counterexample = rel;
      check.residual = sum;
      return check;
    }
  }
  return check;
}

}  // namespace vassiliev
