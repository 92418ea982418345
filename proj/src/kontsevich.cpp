#include "vassiliev/kontsevich.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <thread>
#include <tuple>

#include <Eigen/Dense>

#include "vassiliev/error.hpp"
#include "vassiliev/fixtures.hpp"

namespace vassiliev {

namespace {

constexpr const char* kModule = "kontsevich_integral";
const Complex kTwoPiI(0.0, 2.0 * std::numbers::pi);

// ---- deterministic parallel map ---------------------------------------------

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads) : hw;
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// ---- grids ------------------------------------------------------------------

// Midpoint nodes of the map t = mid + (H/2) tanh(u), u in [-U, U], which
// clusters nodes towards the cutoff ends of each slab.
struct SlabGrid {
  std::vector<double> t;
  std::map<std::size_t, std::vector<Complex>> z;   // strand -> position
  std::map<std::size_t, std::vector<Complex>> dz;  // strand -> dz/dt * dt/du * du
};

struct GridSet {
  int steps = 0;
  double cutoff = 0;  // relative to the slab height
  std::vector<SlabGrid> slabs;
  std::map<ChordSlot, std::vector<Complex>> weights;  // chord one-forms per node
};

GridSet build_grid(const MorseKnot& mk, int steps, double cutoff, const std::vector<ChordSlot>& slots) {
  GridSet g;
  g.steps = steps;
  g.cutoff = cutoff;
  for (const Slab& slab : mk.slabs()) {
    SlabGrid sg;
    const double H = slab.hi - slab.lo, mid = 0.5 * (slab.lo + slab.hi);
    const double U = std::atanh(1.0 - 2.0 * cutoff);
    const double h = 2.0 * U / steps;
    std::vector<double> jac(steps);
    for (int k = 0; k < steps; ++k) {
      double u = -U + (k + 0.5) * h;
      sg.t.push_back(mid + 0.5 * H * std::tanh(u));
      double c = std::cosh(u);
      jac[k] = 0.5 * H / (c * c) * h;
    }
    for (std::size_t j : slab.strands) {
      std::vector<Complex> z(steps), dz(steps);
      const Strand& st = mk.strands()[j];
      double guess = st.up ? st.s0 : st.s1;
      // Walk in the direction of increasing parameter so each solve starts near its root.
      for (int n = 0; n < steps; ++n) {
        int k = st.up ? n : steps - 1 - n;
        auto [zz, dzdt] = mk.evaluate(j, sg.t[k], guess);
        z[k] = zz;
        dz[k] = dzdt * jac[k];
      }
      sg.z.emplace(j, std::move(z));
      sg.dz.emplace(j, std::move(dz));
    }
    g.slabs.push_back(std::move(sg));
  }
  for (const ChordSlot& s : slots) {
    const SlabGrid& sg = g.slabs[s.slab];
    const auto& za = sg.z.at(s.strand_a);
    const auto& zb = sg.z.at(s.strand_b);
    const auto& da = sg.dz.at(s.strand_a);
    const auto& db = sg.dz.at(s.strand_b);
    std::vector<Complex> w(steps);
    for (int k = 0; k < steps; ++k) w[k] = (da[k] - db[k]) / ((za[k] - zb[k]) * kTwoPiI);
    g.weights.emplace(s, std::move(w));
  }
  return g;
}

// Ordered iterated integral over t_1 < ... < t_m. Within one node of the grid
// the r chords i..i+r-1 falling in it contribute prod w / r!, which is exact
// for piecewise-constant one-forms.
Complex iterated_integral(const GridSet& g, const ChordPlacement& p) {
  const std::size_t m = p.chords.size();
  std::vector<Complex> F(m + 1, 0.0);
  F[0] = 1.0;
  std::size_t begin = 0;
  std::vector<const std::vector<Complex>*> w(m);
  for (std::size_t i = 0; i < m; ++i) w[i] = &g.weights.at(p.chords[i]);
  std::vector<double> inv_factorial(m + 1, 1.0);
  for (std::size_t r = 1; r <= m; ++r) inv_factorial[r] = inv_factorial[r - 1] / static_cast<double>(r);
  while (begin < m) {
    std::size_t end = begin;
    while (end < m && p.chords[end].slab == p.chords[begin].slab) ++end;
    for (int k = 0; k < g.steps; ++k) {
      for (std::size_t j = end; j > begin; --j) {
        Complex acc = 0.0, prod = 1.0;
        for (std::size_t r = 1; r <= j - begin; ++r) {
          prod *= (*w[j - r])[k];
          acc += F[j - r] * prod * inv_factorial[r];
        }
        F[j] += acc;
      }
    }
    begin = end;
  }
  return (p.down_ends % 2 == 0 ? 1.0 : -1.0) * F[m];
}

// ---- extrapolation ------------------------------------------------------------

// Values at cutoffs eps, eps/2, eps/4 fitted exactly by I0 + a sqrt(eps) + b eps.
Complex richardson3(const std::array<Complex, 3>& f) {
  Eigen::Matrix3d A;
  A << 1, 1, 1, 1, std::sqrt(0.5), 0.5, 1, 0.5, 0.25;
  Eigen::Vector3d row = A.transpose().colPivHouseholderQr().solve(Eigen::Vector3d(1, 0, 0));
  return row[0] * f[0] + row[1] * f[1] + row[2] * f[2];
}

// Fit of the two finest cutoffs by I0 + a sqrt(eps).
Complex richardson2(const Complex& f2, const Complex& f3) {
  Complex a = (f2 - f3) / (std::sqrt(0.5) - 0.5);
  return f3 - 0.5 * a;
}

struct Samples {
  std::array<Complex, 3> fine{};    // full step count
  std::array<Complex, 3> coarse{};  // half step count
  double magnitude = 0;             // sum of magnitudes entering the sums
};

Estimate extrapolate(const Samples& s) {
  Estimate e;
  e.value = richardson3(s.fine);
  Complex two = richardson2(s.fine[1], s.fine[2]);
  Complex coarse = richardson3(s.coarse);
  e.error = std::abs(e.value - two) + std::abs(e.value - coarse) + 1e-12 * (1.0 + s.magnitude);
  Complex d1 = s.fine[0] - s.fine[1], d2 = s.fine[1] - s.fine[2];
  e.converged = !(std::abs(d2) > 0.9 * std::abs(d1) && std::abs(d1) > 1e-9 * (1.0 + s.magnitude));
  e.cutoff_values.assign(s.fine.begin(), s.fine.end());
  return e;
}

void check_quadrature(const Quadrature& q) {
  if (q.steps < 16) throw Error(kModule, "quadrature needs at least 16 steps per slab");
  if (!(q.epsilon > 0 && q.epsilon < 0.25)) throw Error(kModule, "cutoff epsilon must lie in (0, 0.25)");
}

std::vector<ChordSlot> slots_of(const std::vector<ChordPlacement>& placements) {
  std::set<ChordSlot> s;
  for (const auto& p : placements) s.insert(p.chords.begin(), p.chords.end());
  return {s.begin(), s.end()};
}

// Grids in the order: full steps at eps, eps/2, eps/4, then half steps.
std::vector<GridSet> build_grids(const MorseKnot& mk, const Quadrature& q, const std::vector<ChordSlot>& slots) {
  std::vector<std::pair<int, double>> configs;
  for (int steps : {q.steps, q.steps / 2})
    for (double f : {1.0, 0.5, 0.25}) configs.push_back({steps, q.epsilon * f});
  std::vector<GridSet> grids(configs.size());
  parallel_for(configs.size(), q.threads,
               [&](std::size_t i) { grids[i] = build_grid(mk, configs[i].first, configs[i].second, slots); });
  return grids;
}

std::vector<std::array<Complex, 6>> integrate_all(const std::vector<GridSet>& grids,
                                                  const std::vector<ChordPlacement>& placements, int threads) {
  std::vector<std::array<Complex, 6>> values(placements.size());
  parallel_for(placements.size(), threads, [&](std::size_t i) {
    for (std::size_t c = 0; c < 6; ++c) values[i][c] = iterated_integral(grids[c], placements[i]);
  });
  return values;
}

void accumulate(Samples& s, const std::array<Complex, 6>& v) {
  for (int c = 0; c < 3; ++c) {
    s.fine[c] += v[c];
    s.coarse[c] += v[c + 3];
  }
  s.magnitude += std::abs(v[0]);
}

ChordDiagram empty_diagram(std::size_t circles) { return ChordDiagram({}, std::vector<int>(circles, 0)); }

}  // namespace

// ---- propagator ---------------------------------------------------------------

Propagator wick_propagator(FieldComponent first, FieldComponent second) {
  Propagator p;
  if (first == second) {
    p.formula = "0";
    return p;
  }
  p.vanishes = false;
  p.equal_time = true;
  p.color_diagonal = true;
  p.orientation = first == FieldComponent::Plus ? 1 : -1;
  p.formula = p.orientation > 0 ? "kappa delta^{ab} delta(t-s) / (z-w)" : "kappa delta^{ab} delta(t-s) / (w-z)";
  return p;
}

// ---- placements ----------------------------------------------------------------

std::vector<ChordPlacement> enumerate_placements(const MorseKnot& mk, int m, PlacementFilter filter) {
  if (m < 1) throw Error(kModule, "placements need at least one chord");
  const auto& strands = mk.strands();
  std::vector<ChordSlot> choices;
  for (std::size_t s = 0; s < mk.slabs().size(); ++s) {
    const auto& present = mk.slabs()[s].strands;
    for (std::size_t a = 0; a < present.size(); ++a)
      for (std::size_t b = a + 1; b < present.size(); ++b) {
        bool cross = strands[present[a]].component != strands[present[b]].component;
        if (filter == PlacementFilter::SelfOnly && cross) continue;
        if (filter == PlacementFilter::CrossOnly && !cross) continue;
        choices.push_back({s, present[a], present[b]});
      }
  }
  std::vector<ChordPlacement> out;
  std::vector<ChordSlot> current;
  std::function<void()> extend = [&] {
    if (static_cast<int>(current.size()) == m) {
      ChordPlacement p;
      p.chords = current;
      // Read chord ends along each component: strands in order, and along an
      // up strand in increasing height (chord index), along a down strand in decreasing.
      std::vector<std::tuple<std::size_t, std::size_t, long, int>> ends;
      for (int i = 0; i < m; ++i)
        for (std::size_t j : {current[i].strand_a, current[i].strand_b}) {
          const Strand& st = strands[j];
          ends.emplace_back(st.component, st.index, st.up ? i : -i, i);
          if (!st.up) ++p.down_ends;
        }
      for (const auto& c : current)
        p.cross_component = p.cross_component || strands[c.strand_a].component != strands[c.strand_b].component;
      std::sort(ends.begin(), ends.end());
      std::vector<int> partner(ends.size());
      std::vector<int> first(m, -1);
      std::vector<int> sizes(mk.component_count(), 0);
      for (std::size_t k = 0; k < ends.size(); ++k) {
        int chord = std::get<3>(ends[k]);
        ++sizes[std::get<0>(ends[k])];
        if (first[chord] < 0) {
          first[chord] = static_cast<int>(k);
        } else {
          partner[k] = first[chord];
          partner[first[chord]] = static_cast<int>(k);
        }
      }
      p.diagram = ChordDiagram(partner, sizes);
      out.push_back(std::move(p));
      return;
    }
    for (const auto& c : choices) {
      if (!current.empty() && c.slab < current.back().slab) continue;
      current.push_back(c);
      extend();
      current.pop_back();
    }
  };
  extend();
  return out;
}

// ---- integrals -----------------------------------------------------------------

Estimate placement_integral(const MorseKnot& mk, const ChordPlacement& placement, const Quadrature& q) {
  check_quadrature(q);
  for (const auto& c : placement.chords) {
    if (c.slab >= mk.slabs().size()) throw Error(kModule, "placement refers to a missing slab");
    const auto& present = mk.slabs()[c.slab].strands;
    if (std::find(present.begin(), present.end(), c.strand_a) == present.end() ||
        std::find(present.begin(), present.end(), c.strand_b) == present.end() || c.strand_a == c.strand_b)
      throw Error(kModule, "placement uses strands absent from its slab");
  }
  for (std::size_t i = 1; i < placement.chords.size(); ++i)
    if (placement.chords[i].slab < placement.chords[i - 1].slab)
      throw Error(kModule, "placement chords must be ordered by slab");
  std::vector<ChordPlacement> one{placement};
  auto grids = build_grids(mk, q, slots_of(one));
  auto values = integrate_all(grids, one, 1);
  Samples s;
  accumulate(s, values[0]);
  // Non-convergence is reported through the flag; single placements may diverge logarithmically.
  return extrapolate(s);
}

Complex CoefficientTable::coefficient(const ChordDiagram& d) const {
  auto it = entries.find(d);
  return it == entries.end() ? Complex(0.0) : it->second.value;
}

double CoefficientTable::error(const ChordDiagram& d) const {
  auto it = entries.find(d);
  return it == entries.end() ? 0.0 : it->second.error;
}

bool CoefficientTable::converged() const {
  for (const auto& [d, e] : entries)
    if (!e.converged) return false;
  return true;
}

CoefficientTable degree_coefficients(const MorseKnot& mk, int m, const Quadrature& q) {
  check_quadrature(q);
  if (m < 0) throw Error(kModule, "degree must be nonnegative");
  if (m > 3) throw Error(kModule, "degrees above 3 are not supported");
  CoefficientTable table;
  table.degree = m;
  table.circles = mk.component_count();
  table.quadrature = q;
  for (std::size_t c = 0; c < mk.component_count(); ++c) table.maxima.push_back(mk.maxima(c));
  table.entries[empty_diagram(table.circles)] = {Complex(1.0), 0.0, true, 1, {1.0, 1.0, 1.0}};
  if (m == 0) return table;

  std::vector<ChordPlacement> placements;
  for (int d = 1; d <= m; ++d) {
    auto more = enumerate_placements(mk, d);
    placements.insert(placements.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  auto grids = build_grids(mk, q, slots_of(placements));
  auto values = integrate_all(grids, placements, q.threads);

  std::map<ChordDiagram, Samples> sums;
  std::map<ChordDiagram, std::size_t> counts;
  for (std::size_t i = 0; i < placements.size(); ++i) {
    accumulate(sums[placements[i].diagram], values[i]);
    ++counts[placements[i].diagram];
  }
  if (table.circles == 1)
    for (int d = 1; d <= m; ++d)
      for (const auto& diagram : enumerate_chord_diagrams(d).classes) sums.try_emplace(diagram);
  for (const auto& [diagram, s] : sums) {
    Estimate e = extrapolate(s);
    table.entries[diagram] = {e.value, e.error, e.converged, counts[diagram], e.cutoff_values};
  }
  return table;
}

Estimate linking_integral(const MorseKnot& mk, std::size_t first, std::size_t second, const Quadrature& q) {
  check_quadrature(q);
  if (first == second || first >= mk.component_count() || second >= mk.component_count())
    throw Error(kModule, "linking needs two distinct existing components");
  std::vector<ChordPlacement> placements;
  for (auto& p : enumerate_placements(mk, 1, PlacementFilter::CrossOnly)) {
    std::size_t a = mk.strands()[p.chords[0].strand_a].component;
    std::size_t b = mk.strands()[p.chords[0].strand_b].component;
    if ((a == first && b == second) || (a == second && b == first)) placements.push_back(std::move(p));
  }
  Samples s;
  if (!placements.empty()) {
    auto grids = build_grids(mk, q, slots_of(placements));
    auto values = integrate_all(grids, placements, q.threads);
    for (const auto& v : values) accumulate(s, v);
  }
  return extrapolate(s);
}

// ---- normalization -------------------------------------------------------------

namespace {

using Series = std::map<ChordDiagram, CoefficientEntry>;

// Product with a single-circle series inserted on circle `circle`, truncated at `degree`.
Series multiply(const Series& a, const Series& b, std::size_t circle, int degree) {
  Series out;
  for (const auto& [da, ea] : a)
    for (const auto& [db, eb] : b) {
      if (static_cast<int>(da.degree() + db.degree()) > degree) continue;
      ChordDiagram d = insert_on_circle(da, circle, db);
      auto& e = out[d];
      e.value += ea.value * eb.value;
      e.error += std::abs(ea.value) * eb.error + std::abs(eb.value) * ea.error + ea.error * eb.error;
      e.converged = e.converged && ea.converged && eb.converged;
      e.placements += ea.placements * eb.placements;
    }
  return out;
}

Series inverse(const Series& h, int degree) {
  // (1 + x)^{-1} = sum_n (-x)^n with x the positive-degree part.
  Series minus_x, one;
  for (const auto& [d, e] : h) {
    if (d.degree() == 0) {
      if (std::abs(e.value - Complex(1.0)) > 1e-12) throw Error(kModule, "hump series must have unit constant term");
      one[d] = {Complex(1.0), 0.0, true, 1, {}};
    } else {
      CoefficientEntry n = e;
      n.value = -e.value;
      minus_x[d] = n;
    }
  }
  Series result = one, power = one;
  for (int n = 1; n <= degree; ++n) {
    power = multiply(power, minus_x, 0, degree);
    for (const auto& [d, e] : power) {
      auto& r = result[d];
      r.value += e.value;
      r.error += e.error;
      r.converged = r.converged && e.converged;
    }
  }
  return result;
}

}  // namespace

const CoefficientTable& hump_reference(int m, const Quadrature& q) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, double>, CoefficientTable> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(m, q.steps, q.epsilon);
  auto it = cache.find(key);
  if (it == cache.end()) {
    MorseKnot hump(hump_unknot());
    it = cache.emplace(key, degree_coefficients(hump, m, q)).first;
  }
  return it->second;
}

CoefficientTable hump_normalize(const CoefficientTable& raw, const CoefficientTable& hump) {
  if (!(raw.quadrature == hump.quadrature)) throw Error(kModule, "hump reference uses different quadrature settings");
  if (hump.circles != 1 || (hump.maxima.size() == 1 && hump.maxima[0] != 2))
    throw Error(kModule, "hump reference must be a one-component table with two maxima");
  if (hump.degree < raw.degree) throw Error(kModule, "hump reference degree is lower than the table degree");
  if (raw.normalized) throw Error(kModule, "table is already normalized");
  CoefficientTable out = raw;
  out.normalized = true;
  Series z = raw.entries;
  Series inv;
  bool have_inverse = false;
  for (std::size_t c = 0; c < raw.circles; ++c) {
    int power = raw.maxima.at(c) - 1;
    if (power <= 0) continue;
    if (!have_inverse) {
      Series h;
      for (const auto& [d, e] : hump.entries)
        if (static_cast<int>(d.degree()) <= raw.degree) h[d] = e;
      inv = inverse(h, raw.degree);
      have_inverse = true;
    }
    for (int k = 0; k < power; ++k) z = multiply(z, inv, c, raw.degree);
  }
  out.entries = z;
  // Keep diagrams of the raw table present even when the correction cancels them exactly.
  for (const auto& [d, e] : raw.entries) out.entries.try_emplace(d, CoefficientEntry{Complex(0.0), 0.0, true, 0, {}});
  return out;
}

CoefficientTable hump_normalize(const CoefficientTable& raw) {
  bool needed = false;
  for (int m : raw.maxima) needed = needed || m > 1;
  if (!needed) {
    CoefficientTable out = raw;
    out.normalized = true;
    return out;
  }
  return hump_normalize(raw, hump_reference(raw.degree, raw.quadrature));
}

// ---- expectation ----------------------------------------------------------------

std::vector<SeriesTerm> expectation_series(const CoefficientTable& table, const LieAlgebraData& lie, int max_degree,
                                           double k) {
  if (max_degree < 0 || max_degree > table.degree)
    throw Error(kModule, "series degree exceeds the coefficient table degree");
  if (!(k != 0)) throw Error(kModule, "coupling k must be nonzero");
  std::vector<SeriesTerm> out;
  Complex partial = 0.0;
  double error = 0;
  for (int m = 0; m <= max_degree; ++m) {
    Complex term = 0.0;
    double term_error = 0;
    for (const auto& [d, e] : table.entries) {
      if (static_cast<int>(d.degree()) != m) continue;
      Complex w = weight(lie, d);
      term += w * e.value;
      term_error += std::abs(w) * e.error;
    }
    double scale = std::pow(k, -m);
    partial += scale * term;
    error += std::abs(scale) * term_error;
    out.push_back({m, scale * term, partial, error});
  }
  return out;
}

nlohmann::json to_json(const CoefficientTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [d, e] : table.entries) {
    entries.push_back({{"diagram", d.partner()},
                       {"circle_sizes", d.circle_sizes()},
                       {"word", d.word()},
                       {"degree", d.degree()},
                       {"re", e.value.real()},
                       {"im", e.value.imag()},
                       {"error", e.error},
                       {"converged", e.converged},
                       {"placements", e.placements}});
  }
  const Quadrature& q = table.quadrature;
  return {{"degree", table.degree},
          {"circles", table.circles},
          {"maxima", table.maxima},
          {"normalized", table.normalized},
          {"quadrature",
           {{"steps", q.steps},
            {"coarse_steps", q.steps / 2},
            {"epsilon", q.epsilon},
            {"cutoffs", {q.epsilon, q.epsilon / 2, q.epsilon / 4}},
            {"rule", "midpoint in u with t = mid + (H/2) tanh(u)"},
            {"extrapolation", "I0 + a sqrt(eps) + b eps"}}},
          {"entries", entries}};
}

}  // namespace vassiliev
