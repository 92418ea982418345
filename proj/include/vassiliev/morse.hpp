#pragma once

// Space curves in (complex plane) x (height), interpolated by periodic cubic
// splines and sliced into monotone strands between critical heights.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace vassiliev {

using Complex = std::complex<double>;

struct CurveSample {
  Complex z;
  double t = 0;
};

/// One closed component; the last sample connects back to the first.
using CurveComponent = std::vector<CurveSample>;
using Curve = std::vector<CurveComponent>;

nlohmann::json curve_to_json(const Curve& curve);
Curve curve_from_json(const nlohmann::json& j);
Curve load_curve(const std::string& path);
void save_curve(const Curve& curve, const std::string& path);

/// C^2 periodic cubic spline through equally spaced samples, parameter s in [0, n).
class PeriodicSpline {
 public:
  PeriodicSpline() = default;
  explicit PeriodicSpline(const std::vector<double>& values);

  std::size_t size() const noexcept { return a_.size(); }
  double value(double s) const;
  double derivative(double s) const;
  /// Zeros of the derivative in [0, n), sorted.
  std::vector<double> critical_parameters() const;

 private:
  std::size_t segment(double& s) const;
  std::vector<double> a_, b_, c_, d_;
};

struct Strand {
  std::size_t component = 0;
  std::size_t index = 0;  // position among the strands of its component, from the first critical point
  double s0 = 0, s1 = 0;  // parameter range; s1 may exceed the component length once
  bool up = true;
  double lo = 0, hi = 0;  // height range
};

struct Slab {
  double lo = 0, hi = 0;
  std::vector<std::size_t> strands;  // strands spanning the whole slab
};

struct MorseOptions {
  double tilt = 1e-3;           // first tilt slope tried when critical heights coincide
  double level_tolerance = 1e-7;  // relative to the height range
  double gap_factor = 10.0;     // closing gap allowed, relative to the median sample spacing
  int intersection_probes = 64;  // heights probed per slab for the embedding check
};

/// A curve sliced by height. Construction validates closure, genericity of
/// critical heights and the absence of self-intersections at sample
/// resolution. Coinciding critical heights are separated by adding
/// `tilt * Re(z)` to the height, doubling the slope until they are distinct;
/// the slope used is recorded.
class MorseKnot {
 public:
  explicit MorseKnot(Curve curve, const MorseOptions& options = {});

  const Curve& curve() const noexcept { return curve_; }
  std::size_t component_count() const noexcept { return curve_.size(); }
  const std::vector<double>& critical_levels() const noexcept { return levels_; }
  const std::vector<Strand>& strands() const noexcept { return strands_; }
  const std::vector<Slab>& slabs() const noexcept { return slabs_; }
  int maxima() const;
  int maxima(std::size_t component) const { return maxima_[component]; }
  double tilt_applied() const noexcept { return tilt_; }

  /// Position and dz/dt on a strand at height t within its range.
  std::pair<Complex, Complex> evaluate(std::size_t strand, double t) const;
  /// As evaluate, starting the parameter search from `guess`; updates it.
  std::pair<Complex, Complex> evaluate(std::size_t strand, double t, double& guess) const;

  nlohmann::json summary() const;

 private:
  struct Splines {
    PeriodicSpline x, y, t;
  };
  void build(const MorseOptions& options);
  double height(std::size_t component, double s) const;

  Curve curve_;
  std::vector<Splines> splines_;
  std::vector<double> levels_;
  std::vector<Strand> strands_;
  std::vector<Slab> slabs_;
  std::vector<int> maxima_;
  double tilt_ = 0;
};

}  // namespace vassiliev
