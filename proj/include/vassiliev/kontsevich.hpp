#pragma once

// Iterated integrals of the axial-gauge expansion on Morse knots: Wick
// pairings at equal heights, chord placements on strands, the downward-sign
// rule, cutoff extrapolation at critical levels and the hump normalization.

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vassiliev/chords.hpp"
#include "vassiliev/lie.hpp"
#include "vassiliev/morse.hpp"

namespace vassiliev {

// ---- propagator ------------------------------------------------------------

enum class FieldComponent { Plus, Zero };

/// Two-point function of gauge-field components in axial gauge. Only mixed
/// pairs propagate: kappa delta^{ab} delta(t - s) / (z - w).
struct Propagator {
  bool vanishes = true;
  bool equal_time = false;    // carries delta(t - s)
  bool color_diagonal = false;  // carries delta^{ab}
  int orientation = 0;        // +1 for (z - w) in the denominator, -1 for (w - z)
  std::string formula;
};

Propagator wick_propagator(FieldComponent first, FieldComponent second);

// ---- placements ------------------------------------------------------------

struct ChordSlot {
  std::size_t slab = 0;
  std::size_t strand_a = 0, strand_b = 0;  // strand_a < strand_b
  friend auto operator<=>(const ChordSlot&, const ChordSlot&) = default;
};

/// m chords at increasing heights t_1 < ... < t_m. Both ends of a chord share
/// its height, so each chord sits in one slab on two strands present there.
struct ChordPlacement {
  std::vector<ChordSlot> chords;  // slabs nondecreasing
  ChordDiagram diagram;           // induced by reading the ends along the components
  int down_ends = 0;              // |P down|
  bool cross_component = false;   // some chord joins two components
};

enum class PlacementFilter { All, SelfOnly, CrossOnly };

std::vector<ChordPlacement> enumerate_placements(const MorseKnot& mk, int m,
                                                 PlacementFilter filter = PlacementFilter::All);

// ---- quadrature ------------------------------------------------------------

struct Quadrature {
  int steps = 2000;        // midpoint nodes per slab
  double epsilon = 1e-3;   // first cutoff, relative to the slab height
  int threads = 0;         // 0: hardware concurrency
  friend bool operator==(const Quadrature& a, const Quadrature& b) {
    return a.steps == b.steps && a.epsilon == b.epsilon;
  }
};

struct Estimate {
  Complex value;
  double error = 0;
  bool converged = true;
  std::vector<Complex> cutoff_values;  // at epsilon, epsilon/2, epsilon/4 with the full step count
};

/// Iterated integral of one placement, signed by (-1)^{|P down|}, with each
/// chord contributing (1/(2 pi i)) d log(z_a - z_b).
Estimate placement_integral(const MorseKnot& mk, const ChordPlacement& placement, const Quadrature& q = {});

struct CoefficientEntry {
  Complex value;
  double error = 0;
  bool converged = true;
  std::size_t placements = 0;
  std::vector<Complex> cutoff_values;
};

struct CoefficientTable {
  int degree = 0;  // entries cover every degree 0..degree
  std::size_t circles = 1;
  std::map<ChordDiagram, CoefficientEntry> entries;
  Quadrature quadrature;
  std::vector<int> maxima;  // per component
  bool normalized = false;

  Complex coefficient(const ChordDiagram& d) const;
  double error(const ChordDiagram& d) const;
  bool converged() const;
};

/// Sums placement integrals by induced diagram for all degrees up to m.
/// Sums are formed at each cutoff before extrapolating, since single
/// placements can diverge logarithmically at critical levels.
CoefficientTable degree_coefficients(const MorseKnot& mk, int m, const Quadrature& q = {});

/// Linking number of two components from the degree-1 chords joining them.
Estimate linking_integral(const MorseKnot& mk, std::size_t first = 0, std::size_t second = 1, const Quadrature& q = {});

// ---- normalization ---------------------------------------------------------

/// Degree-m table of the shipped two-maxima unknot, computed once per
/// quadrature setting and cached.
const CoefficientTable& hump_reference(int m, const Quadrature& q);

/// Multiplies the series by H^{-(maxima - 1)} on each component, H being the
/// hump series, as truncated series under connected sum.
CoefficientTable hump_normalize(const CoefficientTable& raw, const CoefficientTable& hump);
CoefficientTable hump_normalize(const CoefficientTable& raw);

// ---- expectation value -----------------------------------------------------

struct SeriesTerm {
  int degree = 0;
  Complex term;          // k^{-m} sum_D weight(D) coefficient(D)
  Complex partial_sum;
  double error = 0;
};

/// Partial sums of sum_m k^{-m} sum_D W(D) Z_D for the given table.
std::vector<SeriesTerm> expectation_series(const CoefficientTable& table, const LieAlgebraData& lie, int max_degree,
                                           double k);

nlohmann::json to_json(const CoefficientTable& table);

}  // namespace vassiliev
