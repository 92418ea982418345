#include "vassiliev/morse.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>

#include <Eigen/Sparse>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "vassiliev/error.hpp"

namespace vassiliev {

namespace {

constexpr const char* kModule = "kontsevich_integral";

double wrap(double s, double n) {
  s = std::fmod(s, n);
  return s < 0 ? s + n : s;
}

}  // namespace

// ---- JSON ------------------------------------------------------------------

nlohmann::json curve_to_json(const Curve& curve) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& comp : curve) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : comp) pts.push_back({{"re", p.z.real()}, {"im", p.z.imag()}, {"t", p.t}});
    comps.push_back(std::move(pts));
  }
  return {{"components", std::move(comps)}};
}

Curve curve_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw Error(kModule, "curve JSON needs a 'components' array");
  Curve curve;
  for (const auto& comp : j["components"]) {
    if (!comp.is_array()) throw Error(kModule, "each component must be an array of samples");
    CurveComponent out;
    for (const auto& p : comp) {
      if (!p.is_object() || !p.contains("re") || !p.contains("im") || !p.contains("t"))
        throw Error(kModule, "curve samples need 're', 'im' and 't'", out.size());
      out.push_back({Complex(p["re"].get<double>(), p["im"].get<double>()), p["t"].get<double>()});
    }
    curve.push_back(std::move(out));
  }
  return curve;
}

Curve load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(kModule, "cannot open curve file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(kModule, std::string("invalid JSON in '") + path + "': " + e.what());
  }
  return curve_from_json(j);
}

void save_curve(const Curve& curve, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(kModule, "cannot write curve file '" + path + "'");
  out << curve_to_json(curve).dump(1) << "\n";
}

// ---- spline ------------------------------------------------------------------

PeriodicSpline::PeriodicSpline(const std::vector<double>& y) {
  const int n = static_cast<int>(y.size());
  if (n < 4) throw Error(kModule, "a closed curve needs at least 4 samples");
  // Second derivatives M solve M[k-1] + 4 M[k] + M[k+1] = 6 (y[k+1] - 2 y[k] + y[k-1]) cyclically.
  Eigen::SparseMatrix<double> A(n, n);
  std::vector<Eigen::Triplet<double>> entries;
  Eigen::VectorXd rhs(n);
  for (int k = 0; k < n; ++k) {
    int prev = (k + n - 1) % n, next = (k + 1) % n;
    entries.emplace_back(k, k, 4.0);
    entries.emplace_back(k, prev, 1.0);
    entries.emplace_back(k, next, 1.0);
    rhs[k] = 6.0 * (y[next] - 2.0 * y[k] + y[prev]);
  }
  A.setFromTriplets(entries.begin(), entries.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(A);
  Eigen::VectorXd M = solver.solve(rhs);
  a_.resize(n);
  b_.resize(n);
  c_.resize(n);
  d_.resize(n);
  for (int k = 0; k < n; ++k) {
    int next = (k + 1) % n;
    a_[k] = y[k];
    b_[k] = y[next] - y[k] - (2.0 * M[k] + M[next]) / 6.0;
    c_[k] = M[k] / 2.0;
    d_[k] = (M[next] - M[k]) / 6.0;
  }
}

std::size_t PeriodicSpline::segment(double& s) const {
  const double n = static_cast<double>(a_.size());
  s = wrap(s, n);
  auto k = static_cast<std::size_t>(std::floor(s));
  if (k >= a_.size()) k = a_.size() - 1;
  s -= static_cast<double>(k);
  return k;
}

double PeriodicSpline::value(double s) const {
  std::size_t k = segment(s);
  return a_[k] + s * (b_[k] + s * (c_[k] + s * d_[k]));
}

double PeriodicSpline::derivative(double s) const {
  std::size_t k = segment(s);
  return b_[k] + s * (2.0 * c_[k] + 3.0 * s * d_[k]);
}

std::vector<double> PeriodicSpline::critical_parameters() const {
  std::vector<double> out;
  for (std::size_t k = 0; k < a_.size(); ++k) {
    // b + 2c x + 3d x^2 = 0 on [0, 1)
    const double qa = 3.0 * d_[k], qb = 2.0 * c_[k], qc = b_[k];
    std::vector<double> roots;
    const double scale = std::abs(qa) + std::abs(qb) + std::abs(qc);
    if (scale == 0) continue;
    if (std::abs(qa) <= 1e-14 * scale) {
      if (qb != 0) roots.push_back(-qc / qb);
    } else {
      double disc = qb * qb - 4.0 * qa * qc;
      if (disc >= 0) {
        double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
        roots.push_back(q / qa);
        if (q != 0) roots.push_back(qc / q);
      }
    }
    for (double x : roots)
      if (x >= 0 && x < 1) out.push_back(static_cast<double>(k) + x);
  }
  std::sort(out.begin(), out.end());
  // Roots found on both sides of a knot are the same point.
  std::vector<double> merged;
  const double n = static_cast<double>(a_.size());
  for (double s : out)
    if (merged.empty() || s - merged.back() > 1e-9) merged.push_back(s);
  if (merged.size() > 1 && merged.front() + n - merged.back() <= 1e-9) merged.pop_back();
  return merged;
}

// ---- Morse knot --------------------------------------------------------------

MorseKnot::MorseKnot(Curve curve, const MorseOptions& options) : curve_(std::move(curve)) {
  if (curve_.empty()) throw Error(kModule, "curve has no components");
  for (std::size_t c = 0; c < curve_.size(); ++c) {
    auto& comp = curve_[c];
    if (comp.size() < 4) throw Error(kModule, "component " + std::to_string(c) + " has fewer than 4 samples");
    auto dist = [](const CurveSample& p, const CurveSample& q) { return std::hypot(std::abs(p.z - q.z), p.t - q.t); };
    std::vector<double> spacing;
    for (std::size_t k = 0; k + 1 < comp.size(); ++k) spacing.push_back(dist(comp[k], comp[k + 1]));
    std::vector<double> sorted = spacing;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    double median = sorted[sorted.size() / 2];
    double gap = dist(comp.back(), comp.front());
    // An explicitly repeated closing sample is dropped.
    if (gap <= 1e-12 * (1.0 + median)) {
      comp.pop_back();
      gap = dist(comp.back(), comp.front());
    }
    if (!(median > 0)) throw Error(kModule, "component " + std::to_string(c) + " has repeated samples");
    if (gap > options.gap_factor * median)
      throw Error(kModule, "component " + std::to_string(c) + " is not closed: gap " + std::to_string(gap) +
                               " exceeds " + std::to_string(options.gap_factor) + " x median spacing");
  }
  build(options);
}

double MorseKnot::height(std::size_t component, double s) const { return splines_[component].t.value(s); }

void MorseKnot::build(const MorseOptions& options) {
  double tmin = std::numeric_limits<double>::infinity(), tmax = -tmin;
  for (const auto& comp : curve_)
    for (const auto& p : comp) {
      tmin = std::min(tmin, p.t);
      tmax = std::max(tmax, p.t);
    }
  const double range = std::max(tmax - tmin, 1e-300);

  std::vector<std::vector<double>> crit;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 30) throw Error(kModule, "could not separate coinciding critical heights by tilting");
    splines_.clear();
    crit.clear();
    std::vector<double> all;
    bool ok = true;
    for (const auto& comp : curve_) {
      std::vector<double> xs, ys, ts;
      for (const auto& p : comp) {
        xs.push_back(p.z.real());
        ys.push_back(p.z.imag());
        ts.push_back(p.t + tilt_ * p.z.real());
      }
      splines_.push_back({PeriodicSpline(xs), PeriodicSpline(ys), PeriodicSpline(ts)});
      auto cp = splines_.back().t.critical_parameters();
      if (cp.size() < 2 || cp.size() % 2 != 0)
        throw Error(kModule, "component has " + std::to_string(cp.size()) + " critical points; expected an even number >= 2");
      for (double s : cp) all.push_back(splines_.back().t.value(s));
      crit.push_back(std::move(cp));
    }
    std::sort(all.begin(), all.end());
    for (std::size_t k = 0; k + 1 < all.size(); ++k)
      if (all[k + 1] - all[k] <= options.level_tolerance * range) ok = false;
    if (ok) {
      levels_ = all;
      break;
    }
    tilt_ = tilt_ == 0 ? options.tilt : 2 * tilt_;
  }

  strands_.clear();
  maxima_.assign(curve_.size(), 0);
  for (std::size_t c = 0; c < curve_.size(); ++c) {
    const double n = static_cast<double>(curve_[c].size());
    const auto& cp = crit[c];
    for (std::size_t i = 0; i < cp.size(); ++i) {
      Strand st;
      st.component = c;
      st.index = i;
      st.s0 = cp[i];
      st.s1 = i + 1 < cp.size() ? cp[i + 1] : cp[0] + n;
      double t0 = height(c, st.s0), t1 = height(c, st.s1);
      st.up = t1 > t0;
      st.lo = std::min(t0, t1);
      st.hi = std::max(t0, t1);
      if (i > 0 && st.up == strands_.back().up)
        throw Error(kModule, "critical points of component " + std::to_string(c) + " do not alternate");
      strands_.push_back(st);
      if (st.up) ++maxima_[c];
    }
  }

  slabs_.clear();
  for (std::size_t k = 0; k + 1 < levels_.size(); ++k) {
    Slab slab{levels_[k], levels_[k + 1], {}};
    const double tol = 1e-12 * range;
    for (std::size_t j = 0; j < strands_.size(); ++j)
      if (strands_[j].lo <= slab.lo + tol && strands_[j].hi >= slab.hi - tol) slab.strands.push_back(j);
    slabs_.push_back(std::move(slab));
  }

  // Embedding check: strands sharing a height must not share a position.
  double zscale = 0;
  for (const auto& comp : curve_)
    for (const auto& p : comp) zscale = std::max(zscale, std::abs(p.z));
  const double tol = 1e-6 * (1.0 + zscale);
  for (const auto& slab : slabs_) {
    const std::size_t count = slab.strands.size();
    if (count < 2) continue;
    const int probes = options.intersection_probes;
    const double step = (slab.hi - slab.lo) / probes;
    std::vector<std::vector<Complex>> zs(probes);
    for (int k = 0; k < probes; ++k)
      for (std::size_t j : slab.strands) zs[k].push_back(evaluate(j, slab.lo + (k + 0.5) * step).first);
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = a + 1; b < count; ++b) {
        // Coarse minimum of the separation, then Brent refinement around it.
        int best = 0;
        for (int k = 1; k < probes; ++k)
          if (std::abs(zs[k][a] - zs[k][b]) < std::abs(zs[best][a] - zs[best][b])) best = k;
        auto separation = [&](double t) {
          return std::abs(evaluate(slab.strands[a], t).first - evaluate(slab.strands[b], t).first);
        };
        double lo = slab.lo + std::max(0.5, best - 0.5) * step;
        double hi = slab.lo + std::min(probes - 0.5, best + 1.5) * step;
        auto [t, d] = boost::math::tools::brent_find_minima(separation, lo, hi, 50);
        if (d < tol) throw Error(kModule, "self-intersection near height " + std::to_string(t));
      }
  }
}

int MorseKnot::maxima() const { return std::accumulate(maxima_.begin(), maxima_.end(), 0); }

std::pair<Complex, Complex> MorseKnot::evaluate(std::size_t strand, double t) const {
  const Strand& st = strands_.at(strand);
  double guess = st.s0 + (st.s1 - st.s0) * (st.up ? (t - st.lo) : (st.hi - t)) / (st.hi - st.lo);
  return evaluate(strand, t, guess);
}

std::pair<Complex, Complex> MorseKnot::evaluate(std::size_t strand, double t, double& guess) const {
  const Strand& st = strands_.at(strand);
  const auto& sp = splines_[st.component];
  const double sign = st.up ? 1.0 : -1.0;
  // g(s) = sign * (t(s) - t) increases on [s0, s1].
  auto g = [&](double s) { return sign * (sp.t.value(s) - t); };
  double lo = st.s0, hi = st.s1;
  double s = std::clamp(guess, lo, hi);
  bool converged = false;
  for (int it = 0; it < 50; ++it) {
    double f = g(s);
    if (f > 0)
      hi = s;
    else
      lo = s;
    double df = sign * sp.t.derivative(s);
    double next = df > 0 ? s - f / df : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - s) <= 1e-15 * (1.0 + std::abs(s))) {
      s = next;
      converged = true;
      break;
    }
    s = next;
  }
  if (!converged) {
    std::uintmax_t max_iter = 200;
    auto r = boost::math::tools::toms748_solve(g, lo, hi, boost::math::tools::eps_tolerance<double>(52), max_iter);
    s = 0.5 * (r.first + r.second);
  }
  guess = s;
  Complex z(sp.x.value(s), sp.y.value(s));
  Complex dz(sp.x.derivative(s), sp.y.derivative(s));
  return {z, dz / sp.t.derivative(s)};
}

nlohmann::json MorseKnot::summary() const {
  nlohmann::json slabs = nlohmann::json::array();
  for (const auto& s : slabs_) slabs.push_back({{"lo", s.lo}, {"hi", s.hi}, {"strands", s.strands.size()}});
  return {{"components", curve_.size()}, {"critical_levels", levels_}, {"maxima", maxima()},
          {"maxima_per_component", maxima_}, {"tilt", tilt_}, {"slabs", slabs}};
}

}  // namespace vassiliev
