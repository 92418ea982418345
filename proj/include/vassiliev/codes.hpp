#pragma once

// Combinatorial knot, link and rigid-vertex graph diagrams.
//
// A diagram is stored as a Gauss diagram: every component is a cyclic
// sequence of visits to crossings (over or under) and to 4-valent nodes
// (strand A or strand B). The first visit of a component is its basepoint.
// Realizability is not checked, so virtual diagrams are representable.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace vassiliev {

enum class Role : std::uint8_t { Over, Under, NodeA, NodeB };

struct Visit {
  int id = 0;
  Role role = Role::Over;
  friend bool operator==(const Visit&, const Visit&) = default;
};

using Component = std::vector<Visit>;

enum class Resolution { Positive, Negative, Smooth };

/// One crossing or node in planar-diagram form. Arcs are listed
/// counterclockwise starting from the incoming under-strand (crossings) or the
/// incoming strand A (nodes).
struct PDEntry {
  int id = 0;
  bool is_node = false;
  int sign = 0;  // crossing sign, or for nodes the sign obtained when strand A passes over
  std::array<int, 4> arcs{};
};

class SingularDiagram {
 public:
  SingularDiagram() = default;

  /// `crossing_signs` maps crossing id to ±1. `node_orientations` maps node id
  /// to the sign of the crossing that results when strand A is placed over
  /// strand B. Throws Error("knot_codes") when the visits are inconsistent.
  SingularDiagram(std::vector<Component> components, std::map<int, int> crossing_signs,
                  std::map<int, int> node_orientations = {});

  /// The crossing-free one-component diagram.
  static SingularDiagram unknot();

  const std::vector<Component>& components() const noexcept { return components_; }
  const std::map<int, int>& crossings() const noexcept { return crossings_; }
  const std::map<int, int>& nodes() const noexcept { return nodes_; }

  std::size_t component_count() const noexcept { return components_.size(); }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  bool has_crossing(int id) const { return crossings_.count(id) != 0; }
  bool has_node(int id) const { return nodes_.count(id) != 0; }
  int crossing_sign(int id) const;
  int node_orientation(int id) const;

  /// Component index containing each visit of `id`, in component order.
  std::array<std::size_t, 2> components_of(int id) const;

  /// Relabels ids 1..n by first appearance, rotates and orders components
  /// so that isomorphic diagrams map to identical values.
  SingularDiagram canonical() const;
  /// Compact text encoding of canonical(); equal keys mean isomorphic diagrams.
  std::string key() const;

  /// Planar-diagram view with arcs numbered consecutively along components
  /// from their basepoints (1-based). Crossing-free components carry no arcs.
  std::vector<PDEntry> pd_entries() const;
  /// Arc labels of each component in traversal order, matching pd_entries().
  std::vector<std::vector<int>> component_arcs() const;

  friend bool operator==(const SingularDiagram&, const SingularDiagram&) = default;

 private:
  std::vector<Component> components_;
  std::map<int, int> crossings_;
  std::map<int, int> nodes_;
};

bool isomorphic(const SingularDiagram& a, const SingularDiagram& b);

// ---- text formats --------------------------------------------------------

/// Gauss code: tokens `[OUN]<digits><+->`, optionally whitespace separated.
/// Components are separated by `|`; `()` denotes a crossing-free component.
/// `N` tokens are rigid-vertex visits; the first one read is strand A and the
/// sign is the crossing sign obtained when that strand passes over.
SingularDiagram parse_gauss(std::string_view text);
std::string to_gauss(const SingularDiagram& d);

/// Planar-diagram code: `X(a,b,c,d)` crossings and `V(a,b,c,d)` nodes, arcs
/// counterclockwise from the incoming under-strand (or incoming strand A).
/// Over-strand direction is inferred by tracing; when tracing leaves it open,
/// consecutive arc numbering decides (over strand d -> b means positive).
SingularDiagram parse_pd(std::string_view text);
std::string to_pd(const SingularDiagram& d);

/// Dispatches on content: PD when the text contains `X(` or `V(`.
SingularDiagram parse_code(std::string_view text);

nlohmann::json to_json(const SingularDiagram& d);
SingularDiagram diagram_from_json(const nlohmann::json& j);

// ---- braid closures --------------------------------------------------------

struct BraidLetter {
  enum class Kind { Positive, Negative, Singular };
  int generator = 1;  // sigma_i exchanges positions i and i+1 (1-based)
  Kind kind = Kind::Positive;
};

/// Closure of a (possibly singular) braid. Letter k receives id k+1. In a
/// positive letter the strand moving left to right passes over; in a
/// singular letter that strand is strand A with orientation +1.
SingularDiagram braid_closure(int strands, const std::vector<BraidLetter>& word);

// ---- operations ------------------------------------------------------------

SingularDiagram resolve_node(const SingularDiagram& d, int node_id, Resolution r);
SingularDiagram switch_crossing(const SingularDiagram& d, int crossing_id);
/// Oriented smoothing of a crossing or node.
SingularDiagram smooth(const SingularDiagram& d, int id);
int writhe(const SingularDiagram& d);
/// Half the signed count of crossings between two different components.
int linking_number(const SingularDiagram& d, std::size_t first, std::size_t second);

}  // namespace vassiliev
