#include "catch_amalgamated.hpp"

#include "vassiliev/chords.hpp"
#include "vassiliev/error.hpp"
#include "vassiliev/samples.hpp"

using namespace vassiliev;

namespace {

std::uint64_t double_factorial(int n) {
  std::uint64_t out = 1;
  for (int k = n; k > 1; k -= 2) out *= static_cast<std::uint64_t>(k);
  return out;
}

const ChordDiagram kParallel = ChordDiagram::from_word({0, 0, 1, 1});
const ChordDiagram kCrossed = ChordDiagram::from_word({0, 1, 0, 1});

}  // namespace

TEST_CASE("chord diagrams are canonical under rotation", "[chords]") {
  auto a = ChordDiagram::from_word({0, 1, 1, 0});
  CHECK(a == kParallel);
  CHECK(a.degree() == 2);
  CHECK(kCrossed != kParallel);
  CHECK(ChordDiagram::from_word({}).degree() == 0);
  for (const auto& partner : raw_matchings(3)) {
    ChordDiagram base(partner);
    for (std::size_t shift = 0; shift < partner.size(); ++shift) {
      ChordDiagram rotated(rotate_matching(partner, shift));
      CHECK(rotated == base);
      CHECK(ChordDiagram(rotated.partner()) == rotated);
    }
  }
  CHECK_THROWS_AS(ChordDiagram(std::vector<int>{0, 1}), Error);
  CHECK_THROWS_AS(ChordDiagram(std::vector<int>{1, 0, 2}), Error);
}

TEST_CASE("raw matching counts are double factorials", "[chords]") {
  CHECK(enumerate_chord_diagrams(0).raw_count == 1);
  CHECK(enumerate_chord_diagrams(0).classes.size() == 1);
  CHECK(enumerate_chord_diagrams(1).classes.size() == 1);
  for (int m = 0; m <= 6; ++m) {
    auto e = enumerate_chord_diagrams(m);
    CHECK(e.raw_count == double_factorial(2 * m - 1));
    CHECK(raw_matchings(m).size() == e.raw_count);
  }
  CHECK(enumerate_chord_diagrams(2).classes == std::set<ChordDiagram>{kParallel, kCrossed});
  CHECK(enumerate_chord_diagrams(3).classes.size() == 5);
  CHECK(enumerate_chord_diagrams(4).classes.size() == 18);
  CHECK_THROWS_AS(enumerate_chord_diagrams(-1), Error);
}

TEST_CASE("chord diagram of a singular knot", "[chords]") {
  CHECK(chord_diagram_of(SingularDiagram::unknot()).degree() == 0);
  CHECK(chord_diagram_of(parse_pd("V(1,1,2,2)")) == ChordDiagram::from_word({0, 0}));
  CHECK(chord_diagram_of(parse_gauss("N1+N2+N1+N2+")) == kCrossed);
  CHECK(chord_diagram_of(parse_gauss("N1+O3+N1+N2+U3+N2+")) == kParallel);
  CHECK_THROWS_AS(chord_diagram_of(parse_pd("V(1,2,1,2)")), Error);
  for (const auto& g : random_singular_knots(5, 30, {3, 8, 2, 4})) {
    auto c = chord_diagram_of(g);
    CHECK(c.degree() == g.node_count());
    auto switched = g;
    for (const auto& [id, sign] : g.crossings()) switched = switch_crossing(switched, id);
    CHECK(chord_diagram_of(switched) == c);
  }
}

TEST_CASE("four-term relations", "[chords]") {
  CHECK_THROWS_AS(four_term_relations(1), Error);
  auto rel2 = four_term_relations(2);
  CHECK_FALSE(rel2.empty());
  for (const auto& r : rel2)
    for (const auto& d : r.diagrams) CHECK(d.degree() == 2);
  auto rel3 = four_term_relations(3);
  CHECK_FALSE(rel3.empty());
  for (const auto& r : rel3) {
    CHECK(r.signs == std::array<int, 4>{1, -1, 1, -1});
    for (const auto& d : r.diagrams) CHECK(d.degree() == 3);
  }
}

TEST_CASE("satisfies_4T on exact and floating weights", "[chords]") {
  for (int m = 2; m <= 4; ++m) {
    auto zero = satisfies_4T([](const ChordDiagram&) { return std::int64_t{0}; }, m);
    CHECK(zero.satisfied);
  }
  // Counting chord intersections violates 4T at degree 3.
  auto intersections = [](const ChordDiagram& d) {
    const auto& p = d.partner();
    std::int64_t count = 0;
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      for (int j = i + 1; j < static_cast<int>(p.size()); ++j)
        if (i < p[i] && j < p[j] && j < p[i] && p[i] < p[j]) ++count;
    return count * count;
  };
  auto check = satisfies_4T(intersections, 3);
  CHECK_FALSE(check.satisfied);
  REQUIRE(check.counterexample.has_value());
  CHECK(check.residual != 0);

  auto constant = satisfies_4T([](const ChordDiagram&) { return std::complex<double>(1.5, 0.0); }, 3);
  CHECK(constant.satisfied);
}
