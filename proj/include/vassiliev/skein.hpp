#pragma once

// Skein-recursive link invariants and their extension to rigid-vertex graphs.

#include <concepts>
#include <cstdint>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "vassiliev/codes.hpp"
#include "vassiliev/error.hpp"
#include "vassiliev/laurent.hpp"

namespace vassiliev {

template <typename R>
concept RingValue = requires(R a, R b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { magnitude(a) };
};

inline bool is_zero(std::int64_t v) { return v == 0; }
inline std::int64_t magnitude(std::int64_t v) { return v < 0 ? -v : v; }

template <typename R>
using Invariant = std::function<R(const SingularDiagram&)>;

/// Conway polynomial by the skein relation, memoized on canonical diagrams.
/// The cache is shared and thread-safe; values do not depend on it.
class ConwayEvaluator {
 public:
  explicit ConwayEvaluator(bool use_cache = true) : use_cache_(use_cache) {}

  LaurentPoly operator()(const SingularDiagram& d);
  std::size_t cache_size() const;
  void clear();

 private:
  LaurentPoly evaluate(const SingularDiagram& canonical);

  bool use_cache_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, LaurentPoly> cache_;
};

/// Process-wide evaluator.
LaurentPoly conway(const SingularDiagram& d);

/// Coefficient of z^2 in the Conway polynomial of a node-free knot diagram.
std::int64_t v2(const SingularDiagram& d);

/// True when the components split into groups with no crossings or nodes between them.
bool is_split(const SingularDiagram& d);

template <typename R>
struct GraphInvariantReport {
  SingularDiagram graph;
  R value{};
  std::int64_t resolution_count = 0;
};

namespace detail {

template <RingValue R>
void expand(const Invariant<R>& V, const R& a, const R& b, const R& c, const SingularDiagram& g, const R& weight,
            GraphInvariantReport<R>& report) {
  if (g.node_count() == 0) {
    report.value = report.value + weight * V(g);
    ++report.resolution_count;
    return;
  }
  int node = g.nodes().begin()->first;
  if (!is_zero(a)) expand(V, a, b, c, resolve_node(g, node, Resolution::Positive), weight * a, report);
  if (!is_zero(b)) expand(V, a, b, c, resolve_node(g, node, Resolution::Negative), weight * b, report);
  if (!is_zero(c)) expand(V, a, b, c, resolve_node(g, node, Resolution::Smooth), weight * c, report);
}

}  // namespace detail

/// Sum over all resolutions S of the nodes of `g` of a^{i+} b^{i-} c^{i0} V(S).
/// Resolutions whose weight is zero are pruned and not counted.
template <RingValue R>
GraphInvariantReport<R> extend_invariant(const Invariant<R>& V, const R& a, const R& b, const R& c,
                                         const SingularDiagram& g) {
  GraphInvariantReport<R> report{g, R{}, 0};
  detail::expand<R>(V, a, b, c, g, R{1}, report);
  return report;
}

/// Vassiliev extension: a = 1, b = -1, c = 0.
template <RingValue R>
R vassiliev_eval(const Invariant<R>& V, const SingularDiagram& g) {
  return extend_invariant<R>(V, R{1}, R{-1}, R{0}, g).value;
}

template <typename R>
struct FiniteTypeEntry {
  std::size_t index = 0;
  std::size_t nodes = 0;
  R value{};
  bool vanishes = false;
};

template <typename R>
struct FiniteTypeReport {
  int order = 0;
  std::vector<FiniteTypeEntry<R>> entries;
  bool all_vanish() const {
    for (const auto& e : entries)
      if (!e.vanishes) return false;
    return true;
  }
};

/// Evaluates the Vassiliev extension of V on graphs with more than `order` nodes.
template <RingValue R>
FiniteTypeReport<R> finite_type_check(const Invariant<R>& V, int order, const std::vector<SingularDiagram>& samples) {
  FiniteTypeReport<R> report{order, {}};
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (static_cast<int>(samples[i].node_count()) <= order)
      throw Error("skein_engine", "sample " + std::to_string(i) + " has " +
                                      std::to_string(samples[i].node_count()) + " nodes; need more than " +
                                      std::to_string(order));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    R value = vassiliev_eval<R>(V, samples[i]);
    report.entries.push_back({i, samples[i].node_count(), value, is_zero(value)});
  }
  return report;
}

template <typename R>
struct EmbeddingVariant {
  std::vector<int> switches;
  R value{};
  R difference{};
};

template <typename R>
struct EmbeddingReport {
  R base_value{};
  std::vector<EmbeddingVariant<R>> variants;
  std::int64_t max_abs_difference = 0;
  bool identical() const { return max_abs_difference == 0; }
};

/// Compares the Vassiliev extension on `g` (with exactly `order` nodes) and on
/// the diagrams obtained by applying each sequence of crossing switches.
template <RingValue R>
EmbeddingReport<R> embedding_independence_check(const Invariant<R>& V, int order, const SingularDiagram& g,
                                                const std::vector<std::vector<int>>& switch_sequences) {
  if (static_cast<int>(g.node_count()) != order)
    throw Error("skein_engine", "graph has " + std::to_string(g.node_count()) + " nodes; expected " +
                                    std::to_string(order));
  EmbeddingReport<R> report;
  report.base_value = vassiliev_eval<R>(V, g);
  for (const auto& seq : switch_sequences) {
    SingularDiagram variant = g;
    for (int id : seq) variant = switch_crossing(variant, id);
    R value = vassiliev_eval<R>(V, variant);
    R diff = value - report.base_value;
    report.max_abs_difference = std::max<std::int64_t>(report.max_abs_difference, magnitude(diff));
    report.variants.push_back({seq, value, diff});
  }
  return report;
}

}  // namespace vassiliev
