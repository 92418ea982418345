#include "vassiliev/skein.hpp"

#include <numeric>
#include <set>

namespace vassiliev {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

bool is_split(const SingularDiagram& d) {
  const std::size_t n = d.component_count();
  if (n < 2) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::map<int, std::size_t> first_component;
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& v : d.components()[c]) {
      auto [it, fresh] = first_component.try_emplace(v.id, c);
      if (!fresh) parent[find_root(parent, it->second)] = find_root(parent, c);
    }
  std::set<std::size_t> roots;
  for (std::size_t c = 0; c < n; ++c) roots.insert(find_root(parent, c));
  return roots.size() > 1;
}

LaurentPoly ConwayEvaluator::operator()(const SingularDiagram& d) {
  if (d.node_count() != 0) throw Error("skein_engine", "conway requires a diagram without nodes");
  return evaluate(d.canonical());
}

std::size_t ConwayEvaluator::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

void ConwayEvaluator::clear() {
  std::unique_lock lock(mutex_);
  cache_.clear();
}

LaurentPoly ConwayEvaluator::evaluate(const SingularDiagram& d) {
  // The empty code stands for the crossing-free unknot.
  if (d.component_count() == 0) return LaurentPoly(1);
  if (is_split(d)) return LaurentPoly(0);
  if (d.crossing_count() == 0) return LaurentPoly(d.component_count() == 1 ? 1 : 0);

  std::string key;
  if (use_cache_) {
    key = d.key();
    std::shared_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }

  // Walk from the basepoints; the first crossing met first as an under-pass
  // is switched. With none left the diagram is descending, hence trivial.
  std::set<int> met;
  int bad = 0;
  for (const auto& comp : d.components()) {
    for (const auto& v : comp) {
      if (met.insert(v.id).second && v.role == Role::Under) {
        bad = v.id;
        break;
      }
    }
    if (bad) break;
  }

  LaurentPoly result;
  if (!bad) {
    result = LaurentPoly(d.component_count() == 1 ? 1 : 0);
  } else {
    int sign = d.crossing_sign(bad);
    LaurentPoly switched = evaluate(switch_crossing(d, bad).canonical());
    LaurentPoly smoothed = evaluate(smooth(d, bad).canonical());
    // conway(L+) - conway(L-) = z conway(L0)
    result = switched + LaurentPoly(sign) * LaurentPoly::z() * smoothed;
  }

  if (use_cache_) {
    std::unique_lock lock(mutex_);
    cache_.emplace(std::move(key), result);
  }
  return result;
}

LaurentPoly conway(const SingularDiagram& d) {
  static ConwayEvaluator evaluator;
  return evaluator(d);
}

std::int64_t v2(const SingularDiagram& d) {
  if (d.node_count() != 0) throw Error("skein_engine", "v2 requires a diagram without nodes");
  if (d.component_count() > 1) throw Error("skein_engine", "v2 requires a one-component diagram");
  return conway(d).coefficient(2);
}

}  // namespace vassiliev
