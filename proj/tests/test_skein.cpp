#include "catch_amalgamated.hpp"

#include <thread>

#include "vassiliev/samples.hpp"
#include "vassiliev/skein.hpp"

using namespace vassiliev;

namespace {

const LaurentPoly kZ = LaurentPoly::z();

Invariant<LaurentPoly> conway_invariant() {
  return [](const SingularDiagram& d) { return conway(d); };
}

Invariant<std::int64_t> v2_invariant() {
  return [](const SingularDiagram& d) { return v2(d); };
}

}  // namespace

TEST_CASE("Laurent polynomials", "[skein]") {
  auto p = LaurentPoly::parse("1 + z^2");
  CHECK(p.coefficient(0) == 1);
  CHECK(p.coefficient(2) == 1);
  CHECK(p.to_string() == "1 + z^2");
  CHECK(LaurentPoly::parse("-3z^-1 + 2*z").to_string() == "-3z^-1 + 2z");
  CHECK((p - p).is_zero());
  CHECK(p * p == LaurentPoly::parse("1 + 2z^2 + z^4"));
  CHECK(LaurentPoly(0).terms().empty());
  CHECK(LaurentPoly::parse("0").is_zero());
}

TEST_CASE("Conway polynomial of standard knots and links", "[skein]") {
  CHECK(conway(SingularDiagram::unknot()) == LaurentPoly(1));
  CHECK(conway(parse_gauss("O1+U2+O3+U1+O2+U3+")) == LaurentPoly::parse("1 + z^2"));
  CHECK(conway(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")) == LaurentPoly::parse("1 + z^2"));
  CHECK(conway(parse_gauss("U1-O2-U3+O4+U2-O1-U4+O3+")) == LaurentPoly::parse("1 - z^2"));
  CHECK(conway(parse_gauss("O1+U2+|U1+O2+")) == kZ);
  CHECK(conway(parse_gauss("O1-U2-|U1-O2-")) == -kZ);
  CHECK(conway(parse_gauss("()|()")).is_zero());
  CHECK(conway(parse_gauss("O1+U2+O3+U4+|U1+O2+U3+O4+")) == LaurentPoly::parse("2z + z^3"));
  CHECK(conway(parse_gauss("O1+U1+")) == LaurentPoly(1));
  CHECK_THROWS_AS(conway(parse_gauss("N1+N1+")), Error);
}

TEST_CASE("Conway polynomial is invariant under Reidemeister moves", "[skein]") {
  auto trefoil = conway(parse_gauss("O1+U2+O3+U1+O2+U3+"));
  // Reidemeister I curl inserted into the trefoil.
  CHECK(conway(parse_gauss("O1+U2+O3+U1+O4-U4-O2+U3+")) == trefoil);
  using K = BraidLetter::Kind;
  // Reidemeister I through a Markov stabilization.
  CHECK(conway(braid_closure(3, {{1, K::Positive}, {1, K::Positive}, {1, K::Positive}, {2, K::Negative}})) == trefoil);
  // Reidemeister II bigon.
  CHECK(conway(braid_closure(2, {{1, K::Positive}, {1, K::Positive}, {1, K::Negative}, {1, K::Positive},
                                 {1, K::Positive}})) == trefoil);
  // Reidemeister III: sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2, closed with sigma2^-1 sigma1.
  auto left = braid_closure(3, {{1, K::Positive}, {2, K::Positive}, {1, K::Positive}, {2, K::Negative}, {1, K::Positive}});
  auto right = braid_closure(3, {{2, K::Positive}, {1, K::Positive}, {2, K::Positive}, {2, K::Negative}, {1, K::Positive}});
  CHECK(conway(left) == conway(right));
}

TEST_CASE("Conway cache does not change values", "[skein][property]") {
  ConwayEvaluator cached(true), uncached(false);
  for (const auto& g : random_singular_knots(11, 40, {0, 8, 2, 4})) {
    CHECK(cached(g) == uncached(g));
  }
  CHECK(cached.cache_size() > 0);
  CHECK(uncached.cache_size() == 0);

  std::vector<SingularDiagram> samples = random_singular_knots(12, 64, {0, 8, 2, 4});
  std::vector<LaurentPoly> serial, parallel(samples.size());
  for (const auto& g : samples) serial.push_back(uncached(g));
  ConwayEvaluator shared(true);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < samples.size(); i += 4) parallel[i] = shared(samples[i]);
    });
  for (auto& w : workers) w.join();
  CHECK(serial == parallel);
}

TEST_CASE("v2 is the z^2 coefficient on knots", "[skein]") {
  CHECK(v2(SingularDiagram::unknot()) == 0);
  CHECK(v2(parse_gauss("O1+U2+O3+U1+O2+U3+")) == 1);
  CHECK(v2(parse_gauss("O1-U2-O3-U1-O2-U3-")) == 1);
  CHECK(v2(parse_gauss("U1-O2-U3+O4+U2-O1-U4+O3+")) == -1);
  CHECK_THROWS_AS(v2(parse_gauss("O1+U2+|U1+O2+")), Error);
  for (const auto& k : random_singular_knots(13, 30, {0, 8, 2, 4})) {
    auto mirror = k;
    for (const auto& [id, sign] : k.crossings()) mirror = switch_crossing(mirror, id);
    CHECK(v2(k) == v2(mirror));
  }
}

TEST_CASE("extend_invariant sums weighted resolutions", "[skein]") {
  auto V = conway_invariant();
  auto trefoil = parse_gauss("O1+U2+O3+U1+O2+U3+");
  auto r0 = extend_invariant<LaurentPoly>(V, 2, 3, 5, trefoil);
  CHECK(r0.value == conway(trefoil));
  CHECK(r0.resolution_count == 1);

  auto g = parse_pd("V(1,1,2,2)");
  auto indicator = extend_invariant<LaurentPoly>(V, 1, 0, 0, g);
  CHECK(indicator.value == conway(resolve_node(g, 1, Resolution::Positive)));
  CHECK(indicator.resolution_count == 1);

  auto generic = extend_invariant<LaurentPoly>(V, 1, 1, 1, parse_gauss("N1+N2+N1+N2+"));
  CHECK(generic.resolution_count == 9);
  auto vassiliev = extend_invariant<LaurentPoly>(V, 1, -1, 0, parse_gauss("N1+N2+N1+N2+"));
  CHECK(vassiliev.resolution_count == 4);

  // One node in a one-node curl: both resolutions are unknots.
  CHECK(vassiliev_eval<LaurentPoly>(V, g).is_zero());
  auto expected = conway(resolve_node(g, 1, Resolution::Positive)) - conway(resolve_node(g, 1, Resolution::Negative));
  CHECK(vassiliev_eval<LaurentPoly>(V, g) == expected);
}

TEST_CASE("singular trefoil evaluates to z^2", "[skein]") {
  auto g = parse_gauss("N1+U2+O3+N1+O2+U3+");
  CHECK(isomorphic(resolve_node(g, 1, Resolution::Positive), parse_gauss("O1+U2+O3+U1+O2+U3+")));
  CHECK(vassiliev_eval<LaurentPoly>(conway_invariant(), g) == LaurentPoly::monomial(2));
  CHECK(vassiliev_eval<LaurentPoly>(conway_invariant(), SingularDiagram::unknot()) == LaurentPoly(1));
}

TEST_CASE("exchange identity holds node by node", "[skein][property]") {
  auto V = conway_invariant();
  for (int nodes = 1; nodes <= 2; ++nodes)
    for (const auto& g : random_singular_knots(21 + nodes, 30, {nodes, 8, 2, 4}))
      for (const auto& [id, orientation] : g.nodes()) {
        auto lhs = vassiliev_eval<LaurentPoly>(V, g);
        auto rhs = vassiliev_eval<LaurentPoly>(V, resolve_node(g, id, Resolution::Positive)) -
                   vassiliev_eval<LaurentPoly>(V, resolve_node(g, id, Resolution::Negative));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("finite type checks", "[skein]") {
  auto samples3 = random_singular_knots(31, 40, {3, 8, 2, 4});
  auto report = finite_type_check<std::int64_t>(v2_invariant(), 2, samples3);
  CHECK(report.entries.size() == samples3.size());
  CHECK(report.all_vanish());

  Invariant<std::int64_t> constant_term = [](const SingularDiagram& d) { return conway(d).coefficient(0); };
  CHECK(finite_type_check<std::int64_t>(constant_term, 0, random_singular_knots(32, 30, {1, 8, 2, 4})).all_vanish());
  CHECK(finite_type_check<std::int64_t>(v2_invariant(), 2, {}).all_vanish());
  CHECK_THROWS_AS(finite_type_check<std::int64_t>(v2_invariant(), 2, random_singular_knots(33, 1, {2, 8, 2, 4})),
                  Error);

  // v2 is not of type 1: some two-node graph has a nonzero value.
  bool found_nonzero = false;
  for (const auto& g : random_singular_knots(34, 40, {2, 8, 2, 4}))
    found_nonzero = found_nonzero || vassiliev_eval<std::int64_t>(v2_invariant(), g) != 0;
  CHECK(found_nonzero);
}

TEST_CASE("embedding independence at the top degree", "[skein]") {
  for (const auto& g : random_singular_knots(41, 20, {2, 8, 2, 4})) {
    std::vector<std::vector<int>> switches;
    for (const auto& [id, sign] : g.crossings()) switches.push_back({id});
    auto report = embedding_independence_check<std::int64_t>(v2_invariant(), 2, g, switches);
    CHECK(report.identical());
    CHECK(report.variants.size() == switches.size());
  }
  auto g = parse_gauss("N1+U2+O3+N1+O2+U3+");
  CHECK(embedding_independence_check<std::int64_t>(v2_invariant(), 1, g, {}).identical());
  CHECK_THROWS_AS(embedding_independence_check<std::int64_t>(v2_invariant(), 2, g, {}), Error);

  // Conway is not of finite type 1: switching a crossing of a one-node graph can change its value.
  auto report = embedding_independence_check<LaurentPoly>(conway_invariant(), 1, g, {{2}, {3}, {2, 3}});
  CHECK_FALSE(report.identical());
}
