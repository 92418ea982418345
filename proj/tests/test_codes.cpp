#include "catch_amalgamated.hpp"

#include <nlohmann/json.hpp>

#include "vassiliev/codes.hpp"
#include "vassiliev/error.hpp"
#include "vassiliev/samples.hpp"

using namespace vassiliev;

namespace {

std::size_t error_position(std::string_view text) {
  try {
    parse_gauss(text);
  } catch (const Error& e) {
    REQUIRE(e.module() == "knot_codes");
    REQUIRE(e.position().has_value());
    return *e.position();
  }
  FAIL("expected a parse error");
  return 0;
}

}  // namespace

TEST_CASE("parse_gauss reads knots, links and nodes", "[codes]") {
  auto trefoil = parse_gauss("O1+U2+O3+U1+O2+U3+");
  CHECK(trefoil.component_count() == 1);
  CHECK(trefoil.crossing_count() == 3);
  CHECK(trefoil.node_count() == 0);
  CHECK(writhe(trefoil) == 3);

  auto spaced = parse_gauss("O1+ U2+ O3+\nU1+ O2+ U3+");
  CHECK(spaced == trefoil);

  auto empty = parse_gauss("");
  CHECK(empty.component_count() == 0);
  CHECK(writhe(empty) == 0);

  auto curl = parse_gauss("O1+U1+");
  CHECK(curl.crossing_count() == 1);
  CHECK(writhe(curl) == 1);

  auto hopf = parse_gauss("O1+U2+|U1+O2+");
  CHECK(hopf.component_count() == 2);
  CHECK(linking_number(hopf, 0, 1) == 1);

  auto unlink = parse_gauss("()|()");
  CHECK(unlink.component_count() == 2);
  CHECK(unlink.crossing_count() == 0);

  auto singular = parse_gauss("N1+O2+N1+U2+");
  CHECK(singular.node_count() == 1);
  CHECK(singular.crossing_count() == 1);
  CHECK(singular.node_orientation(1) == 1);
}

TEST_CASE("parse_gauss rejects malformed codes with positions", "[codes]") {
  CHECK(error_position("Q1+") == 0);
  CHECK(error_position("O1+U1") == 5);
  CHECK(error_position("O1+U1-") == 3);
  CHECK_THROWS_AS(parse_gauss("O1+U2+"), Error);
  CHECK_THROWS_AS(parse_gauss("O1+O1+"), Error);
  CHECK_THROWS_AS(parse_gauss("O1+U1+O1+"), Error);
  CHECK_THROWS_AS(parse_gauss("N1+"), Error);
}

TEST_CASE("parse_pd reads crossings and nodes", "[codes]") {
  auto trefoil = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  CHECK(trefoil.component_count() == 1);
  CHECK(trefoil.crossing_count() == 3);
  CHECK(writhe(trefoil) == -3);
  CHECK(isomorphic(trefoil, parse_gauss("O1-U2-O3-U1-O2-U3-")));

  auto curl = parse_pd("X(1,1,2,2)");
  CHECK(curl.crossing_count() == 1);
  CHECK(curl.component_count() == 1);

  auto node = parse_pd("V(1,1,2,2)");
  CHECK(node.node_count() == 1);
  CHECK(node.component_count() == 1);

  // Legs 0 and 2 carry strand A, so this code closes each strand on itself.
  auto two_loops = parse_pd("V(1,2,1,2)");
  CHECK(two_loops.node_count() == 1);
  CHECK(two_loops.component_count() == 2);

  CHECK_THROWS_AS(parse_pd("X(1,2,3,4)"), Error);
  CHECK_THROWS_AS(parse_pd("X(1,1,2)"), Error);
  CHECK_THROWS_AS(parse_pd("Y(1,1,2,2)"), Error);
  CHECK(parse_code("X(1,1,2,2)").crossing_count() == 1);
  CHECK(parse_code("O1+U1+").crossing_count() == 1);
}

TEST_CASE("text formats round-trip up to isomorphism", "[codes][property]") {
  std::vector<SingularDiagram> diagrams = {
      parse_gauss("O1+U2+O3+U1+O2+U3+"), parse_gauss("U1-O2-U3+O4+U2-O1-U4+O3+"),
      parse_gauss("O1+U2+|U1+O2+"), parse_gauss("O1+U2+O3+U4+|U1+O2+U3+O4+"), parse_gauss("()|()"),
      parse_gauss("N1+O2+N1+U2+")};
  for (int nodes = 0; nodes <= 3; ++nodes) {
    auto samples = random_singular_knots(100 + nodes, 25, {nodes, 8, 2, 4});
    diagrams.insert(diagrams.end(), samples.begin(), samples.end());
  }
  for (const auto& d : diagrams) {
    INFO(to_gauss(d));
    CHECK(isomorphic(parse_gauss(to_gauss(d)), d));
    CHECK(isomorphic(diagram_from_json(to_json(d)), d));
    if (d.crossing_count() + d.node_count() > 0) CHECK(isomorphic(parse_pd(to_pd(d)), d));
    CHECK(d.canonical().canonical() == d.canonical());
  }
}

TEST_CASE("canonical form ignores labels and basepoints", "[codes]") {
  auto a = parse_gauss("O1+U2+O3+U1+O2+U3+");
  auto b = parse_gauss("U7+O5+U9+O7+U5+O9+");
  CHECK(a.key() == b.key());
  CHECK_FALSE(isomorphic(a, parse_gauss("O1-U2-O3-U1-O2-U3-")));
  CHECK(isomorphic(parse_gauss("O1+U2+|U1+O2+"), parse_gauss("U2+O1+|O2+U1+")));
}

TEST_CASE("switch_crossing negates one sign and is an involution", "[codes]") {
  auto trefoil = parse_gauss("O1+U2+O3+U1+O2+U3+");
  auto once = switch_crossing(trefoil, 2);
  CHECK(once.crossing_sign(2) == -1);
  CHECK(once.crossing_sign(1) == 1);
  CHECK(writhe(once) == 1);
  CHECK(switch_crossing(once, 2) == trefoil);

  auto mirror = trefoil;
  for (int id : {1, 2, 3}) mirror = switch_crossing(mirror, id);
  CHECK(isomorphic(mirror, parse_gauss("U1-O2-U3-O1-U2-O3-")));
  CHECK_THROWS_AS(switch_crossing(trefoil, 9), Error);
}

TEST_CASE("resolve_node replaces a node by a crossing or a smoothing", "[codes]") {
  auto g = parse_pd("V(1,1,2,2)");
  auto positive = resolve_node(g, 1, Resolution::Positive);
  CHECK(positive.node_count() == 0);
  CHECK(positive.crossing_count() == 1);
  CHECK(writhe(positive) == 1);
  auto negative = resolve_node(g, 1, Resolution::Negative);
  CHECK(writhe(negative) == -1);
  CHECK_THROWS_AS(resolve_node(SingularDiagram::unknot(), 1, Resolution::Positive), Error);
  CHECK_THROWS_AS(resolve_node(g, 2, Resolution::Smooth), Error);
}

TEST_CASE("node resolutions agree with crossing switches and smoothing changes components", "[codes][property]") {
  for (int nodes = 1; nodes <= 3; ++nodes) {
    for (const auto& g : random_singular_knots(7 * nodes, 40, {nodes, 8, 2, 4})) {
      INFO(to_gauss(g));
      for (const auto& [id, orientation] : g.nodes()) {
        auto positive = resolve_node(g, id, Resolution::Positive);
        auto negative = resolve_node(g, id, Resolution::Negative);
        auto smoothed = resolve_node(g, id, Resolution::Smooth);
        CHECK(positive.node_count() == g.node_count() - 1);
        CHECK(smoothed.node_count() == g.node_count() - 1);
        CHECK(positive.crossing_sign(id) == 1);
        CHECK(negative.crossing_sign(id) == -1);
        CHECK(switch_crossing(positive, id) == negative);
        auto before = g.components_of(id);
        if (before[0] == before[1]) {
          long diff = static_cast<long>(smoothed.component_count()) - static_cast<long>(positive.component_count());
          CHECK(std::abs(diff) == 1);
        }
      }
    }
  }
}

TEST_CASE("JSON serialization carries crossings, nodes and components", "[codes]") {
  auto g = parse_gauss("N1+O2+N1+U2+");
  auto j = to_json(g);
  CHECK(j.contains("crossings"));
  CHECK(j.contains("nodes"));
  CHECK(j.contains("components"));
  CHECK(j["crossings"].size() == 1);
  CHECK(j["nodes"].size() == 1);
  CHECK(j["components"].size() == 1);
}

TEST_CASE("braid closures", "[codes]") {
  using K = BraidLetter::Kind;
  auto trefoil = braid_closure(2, {{1, K::Positive}, {1, K::Positive}, {1, K::Positive}});
  CHECK(trefoil.component_count() == 1);
  CHECK(isomorphic(trefoil, parse_gauss("O1+U2+O3+U1+O2+U3+")));
  auto hopf = braid_closure(2, {{1, K::Positive}, {1, K::Positive}});
  CHECK(hopf.component_count() == 2);
  CHECK(linking_number(hopf, 0, 1) == 1);
  auto singular = braid_closure(2, {{1, K::Singular}, {1, K::Positive}, {1, K::Negative}});
  CHECK(singular.node_count() == 1);
  CHECK(writhe(braid_closure(3, {{1, K::Positive}, {2, K::Negative}})) == 0);
}
