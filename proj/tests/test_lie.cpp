#include "catch_amalgamated.hpp"

#include "vassiliev/error.hpp"
#include "vassiliev/lie.hpp"

using namespace vassiliev;
using Catch::Matchers::WithinAbs;

namespace {

const ChordDiagram kParallel = ChordDiagram::from_word({0, 0, 1, 1});
const ChordDiagram kCrossed = ChordDiagram::from_word({0, 1, 0, 1});

}  // namespace

TEST_CASE("su(2) fundamental representation", "[lie]") {
  auto su2 = su2_fundamental();
  CHECK(su2.dimension == 3);
  CHECK(su2.representation == 2);
  const auto& T = su2.generators;
  CHECK_THAT(std::abs((T[0] * T[0]).trace() - Complex(0.5, 0.0)), WithinAbs(0.0, 1e-15));
  CMatrix comm = T[0] * T[1] - T[1] * T[0] - Complex(0, 1) * T[2];
  CHECK_THAT(comm.cwiseAbs().maxCoeff(), WithinAbs(0.0, 1e-15));
  CMatrix casimir = T[0] * T[0] + T[1] * T[1] + T[2] * T[2];
  CHECK_THAT((casimir - 0.75 * CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), WithinAbs(0.0, 1e-15));
  CHECK(check_axioms(su2).ok());
  auto derived = structure_constants_of(su2.generators);
  for (std::size_t k = 0; k < derived.size(); ++k) CHECK_THAT(derived[k] - su2.structure_constants[k], WithinAbs(0.0, 1e-12));
}

TEST_CASE("gl(N) fundamental representations", "[lie]") {
  for (int n = 2; n <= 4; ++n) {
    auto gl = gl_fundamental(n);
    CHECK(gl.dimension == n * n);
    CHECK(gl.representation == n);
    auto report = check_axioms(gl);
    CHECK(report.ok(1e-12));
    CHECK(commutator_4T_witness(gl));
  }
  CHECK_THROWS_AS(gl_fundamental(1), Error);
  CHECK(lie_algebra_by_name("gl3").dimension == 9);
  CHECK(lie_algebra_by_name("su2").dimension == 3);
  CHECK_THROWS_AS(lie_algebra_by_name("so5"), Error);
}

TEST_CASE("commutator witness detects broken generators", "[lie]") {
  CHECK(commutator_4T_witness(su2_fundamental()));
  CHECK(commutator_4T_witness(gl_fundamental(3)));
  auto broken = su2_fundamental();
  broken.generators[0] *= 2.0;
  CHECK_FALSE(commutator_4T_witness(broken));
  CHECK_FALSE(check_axioms(broken).ok());
}

TEST_CASE("su(2) weights of small chord diagrams", "[lie]") {
  auto su2 = su2_fundamental();
  CHECK_THAT(std::abs(weight(su2, ChordDiagram::from_word({})) - Complex(2, 0)), WithinAbs(0.0, 1e-12));
  CHECK_THAT(std::abs(weight(su2, ChordDiagram::from_word({0, 0})) - Complex(1.5, 0)), WithinAbs(0.0, 1e-12));
  CHECK_THAT(std::abs(weight(su2, kParallel) - Complex(9.0 / 8.0, 0)), WithinAbs(0.0, 1e-12));
  CHECK_THAT(std::abs(weight(su2, kCrossed) - Complex(-3.0 / 8.0, 0)), WithinAbs(0.0, 1e-12));

  auto ws0 = weight_system(su2, 0);
  REQUIRE(ws0.table.size() == 1);
  CHECK_THAT(std::abs(ws0.table.begin()->second - Complex(2, 0)), WithinAbs(0.0, 1e-12));
  auto ws2 = weight_system(su2, 2);
  CHECK(ws2.table.size() == 2);
  CHECK_THROWS_AS(weight_system(su2, 5), Error);
  for (const auto& [d, w] : weight_system(su2, 3).table) CHECK_THAT(w.imag(), WithinAbs(0.0, 1e-12));
}

TEST_CASE("weights are rotation invariant", "[lie][property]") {
  auto gl2 = gl_fundamental(2);
  for (const auto& partner : raw_matchings(3)) {
    // Evaluate the raw matching directly by tracing its chord labels.
    std::vector<int> word(partner.size(), -1);
    int next = 0;
    for (std::size_t p = 0; p < partner.size(); ++p)
      if (word[p] < 0) word[p] = word[partner[p]] = next++;
    Complex reference = weight(gl2, ChordDiagram(partner));
    for (std::size_t shift = 1; shift < partner.size(); ++shift) {
      std::vector<int> rotated(word.size());
      for (std::size_t p = 0; p < word.size(); ++p) rotated[p] = word[(p + shift) % word.size()];
      CHECK_THAT(std::abs(weight(gl2, ChordDiagram::from_word(rotated)) - reference), WithinAbs(0.0, 1e-12));
    }
  }
}

TEST_CASE("Lie weight systems satisfy the four-term relations", "[lie][chords]") {
  for (const auto& lie : {su2_fundamental(), gl_fundamental(2), gl_fundamental(3)}) {
    for (int m = 2; m <= 3; ++m) {
      auto ws = weight_system(lie, m);
      auto check = satisfies_4T([&](const ChordDiagram& d) { return ws.table.at(d); }, m, 1e-9);
      INFO(lie.name << " degree " << m);
      CHECK(check.satisfied);
    }
  }
}

TEST_CASE("the (+,-,-,+) sign pattern is not satisfied by Lie weights", "[lie][chords]") {
  auto su2 = su2_fundamental();
  auto ws = weight_system(su2, 3);
  bool all_zero = true;
  for (const auto& r : detail::four_term_relations_with(3, {1, -1, -1, 1})) {
    Complex sum = 0;
    for (int k = 0; k < 4; ++k) sum += static_cast<double>(r.signs[k]) * ws.table.at(r.diagrams[k]);
    all_zero = all_zero && std::abs(sum) < 1e-9;
  }
  CHECK_FALSE(all_zero);
}
