#pragma once

// Chord diagrams on one or more oriented circles, their enumeration and the
// four-term relations.

#include <complex>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vassiliev/codes.hpp"

namespace vassiliev {

/// A perfect matching of points placed on circles. Points are numbered
/// consecutively around circle 0, then circle 1, and so on; `partner[p]` is
/// the other end of the chord at p. Values are kept in canonical form:
/// the lexicographically least partner list over independent rotations of
/// each circle (reflections are not quotiented).
class ChordDiagram {
 public:
  ChordDiagram() = default;
  /// Single circle. Throws unless `partner` is a fixed-point-free involution.
  explicit ChordDiagram(std::vector<int> partner);
  ChordDiagram(std::vector<int> partner, std::vector<int> circle_sizes);

  /// Builds a diagram from the chord label met at each point, e.g. {1,2,1,2}.
  static ChordDiagram from_word(const std::vector<int>& labels, std::vector<int> circle_sizes = {});

  std::size_t degree() const noexcept { return partner_.size() / 2; }
  std::size_t circle_count() const noexcept { return circles_.size(); }
  const std::vector<int>& partner() const noexcept { return partner_; }
  const std::vector<int>& circle_sizes() const noexcept { return circles_; }

  /// Chord label (0-based, by first appearance) at each point.
  std::vector<int> word() const;
  std::string to_string() const;

  friend auto operator<=>(const ChordDiagram&, const ChordDiagram&) = default;

 private:
  void canonicalize();
  std::vector<int> partner_;
  std::vector<int> circles_ = {0};
};

/// Partner list of a single-circle matching rotated by `shift` positions.
std::vector<int> rotate_matching(const std::vector<int>& partner, std::size_t shift);

/// Connected sum at the basepoints: the points of `b` are inserted on circle
/// `circle` of `a` just before that circle's first point.
ChordDiagram insert_on_circle(const ChordDiagram& a, std::size_t circle, const ChordDiagram& b);

/// Chord diagram of a one-component diagram, read from its basepoint. Crossings are ignored.
ChordDiagram chord_diagram_of(const SingularDiagram& g);

struct ChordEnumeration {
  std::uint64_t raw_count = 0;
  std::set<ChordDiagram> classes;
};

/// All perfect matchings of 2m cyclic points, quotiented by rotation.
ChordEnumeration enumerate_chord_diagrams(int m);
/// Raw perfect matchings of 2m points in lexicographic order.
std::vector<std::vector<int>> raw_matchings(int m);

struct FourTermRelation {
  std::array<int, 4> signs{};
  std::array<ChordDiagram, 4> diagrams;
};

/// Four-term relations of degree m (m >= 2). The moving chord end is placed
/// just before and just after each end of a fixed chord, in traversal order,
/// with signs (+, -, +, -). Identical signed tuples are emitted once;
/// tuples that cancel term by term are kept.
std::vector<FourTermRelation> four_term_relations(int m);

template <typename Scalar>
struct FourTermCheck {
  bool satisfied = true;
  std::optional<FourTermRelation> counterexample;
  Scalar residual{};
};

namespace detail {
std::vector<FourTermRelation> four_term_relations_with(int m, const std::array<int, 4>& signs);
}

FourTermCheck<std::int64_t> satisfies_4T(const std::function<std::int64_t(const ChordDiagram&)>& w, int m);
FourTermCheck<std::complex<double>> satisfies_4T(const std::function<std::complex<double>(const ChordDiagram&)>& w,
                                                 int m, double tolerance = 1e-9);

/// Dispatches a callable on its result type: integral weights are checked
/// exactly, anything else as complex numbers with a tolerance.
template <typename F>
  requires std::invocable<F, const ChordDiagram&> &&
           (!std::is_same_v<std::decay_t<F>, std::function<std::int64_t(const ChordDiagram&)>>) &&
           (!std::is_same_v<std::decay_t<F>, std::function<std::complex<double>(const ChordDiagram&)>>)
auto satisfies_4T(F&& w, int m, double tolerance = 1e-9) {
  using R = std::invoke_result_t<F, const ChordDiagram&>;
  if constexpr (std::is_integral_v<R>) {
    (void)tolerance;
    return satisfies_4T(std::function<std::int64_t(const ChordDiagram&)>(std::forward<F>(w)), m);
  } else {
    return satisfies_4T(std::function<std::complex<double>(const ChordDiagram&)>(std::forward<F>(w)), m, tolerance);
  }
}

}  // namespace vassiliev
