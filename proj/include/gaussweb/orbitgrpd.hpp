#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gaussweb {

/// Multigraph on vertices 0..vertex_count-1; loops and parallel edges allowed.
struct FiniteGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  void validate() const;
  /// Component index of every vertex, numbered in order of first vertex.
  std::vector<int> component_of() const;
  int component_count() const;
  /// Sum over components of E - V + 1.
  int cycle_rank() const { return static_cast<int>(edges.size()) - vertex_count + component_count(); }
  int euler_characteristic() const { return vertex_count - static_cast<int>(edges.size()); }
};

/// Finite group acting on a graph, stored as the full list of elements,
/// each a (vertex permutation, edge permutation) pair; element 0 is the identity.
struct GraphAction {
  std::vector<std::vector<int>> vertex_perm;
  std::vector<std::vector<int>> edge_perm;

  int order() const noexcept { return static_cast<int>(vertex_perm.size()); }

  /// Closure of the generators by breadth-first composition. Missing edge
  /// generators are derived from the vertex action, matching parallel edges
  /// in order. Throws Error(Precondition) if an edge permutation does not
  /// respect endpoints.
  static GraphAction from_generators(const FiniteGraph& x, const std::vector<std::vector<int>>& vertex_generators,
                                     const std::vector<std::vector<int>>& edge_generators = {});

  /// Description of a non-identity element fixing a vertex or an edge, if any.
  std::optional<std::string> fixed_element() const;
  bool is_free() const { return !fixed_element().has_value(); }
};

/// Free groupoid presentation from a spanning forest.
struct GroupoidPresentation {
  std::vector<int> objects;                 // base vertices
  std::vector<int> generators;              // edges outside the spanning forest
  std::vector<int> rank_per_component;      // E - V + 1 for each component
  int connectors = 0;                       // tree arrows joining extra base points

  int rank() const;
  /// Size of a free basis of the groupoid: generators plus connectors.
  int basis_size() const { return static_cast<int>(generators.size()) + connectors; }
};

GroupoidPresentation pi1_presentation(const FiniteGraph& x, const std::vector<int>& base);

struct QuotientGraph {
  FiniteGraph graph;
  std::vector<int> vertex_orbit;  // vertex of X -> vertex of X/G
  std::vector<int> edge_orbit;    // edge of X -> edge of X/G
};

/// Orbit graph of a free action; throws Error(Precondition) naming a fixed element otherwise.
QuotientGraph quotient_graph(const FiniteGraph& x, const GraphAction& act);

struct OrbitGroupoidReport {
  int quotient_rank = 0;      // E - V + C of X/G
  int groupoid_rank = 0;      // from the free basis of the orbit groupoid
  int cover_rank = 0;         // cycle rank of X
  bool euler_multiplicative = false;
  bool surjective = false;
  bool passed = false;
};

/// Compares the quotient graph's cycle rank with the rank read off the
/// orbit groupoid of the fundamental groupoid on a G-stable base set.
OrbitGroupoidReport orbit_groupoid_report(const FiniteGraph& x, const GraphAction& act, const std::vector<int>& base);
bool orbit_groupoid_check(const FiniteGraph& x, const GraphAction& act, const std::vector<int>& base);

/// Subgraph given by vertex and edge subsets of an ambient graph.
struct Subgraph {
  std::vector<int> vertices;
  std::vector<int> edges;
};

struct VanKampenReport {
  GroupoidPresentation first, second, overlap;
  int rank_first = 0, rank_second = 0, rank_overlap = 0;
  int correction = 0;  // C(X) - C(X1) - C(X2) + C(X1 n X2)
  int pushout_rank = 0;
  int direct_rank = 0;
  bool agrees = false;
};

VanKampenReport van_kampen_pushout(const FiniteGraph& x, const Subgraph& x1, const Subgraph& x2, const std::vector<int>& base);

struct ClubsuitReport {
  bool free = false;
  std::string fixed_witness;
  bool walks_lift = false;         // every quotient edge lifts from every preimage of its start
  bool homotopic_lifts = false;    // homotopic walk pairs have lifts related by a stabilizer element
  int walk_pairs = 0;
  std::string to_string() const;
};

/// Discrete shadow of the path-lifting and homotopy-lifting conditions.
ClubsuitReport check_clubsuit(const FiniteGraph& x, const GraphAction& act, std::uint64_t seed = 1);

/// `u v` per line; `#` comments; an optional `vertices N` line adds isolated vertices.
FiniteGraph parse_graph(std::string_view text);
std::string format_graph(const FiniteGraph& x);

/// One generator per line: vertex images, optionally followed by a line
/// `e: ...` with the edge images of the same generator.
GraphAction parse_action(const FiniteGraph& x, std::string_view text);

struct ActionInstance {
  FiniteGraph graph;
  GraphAction action;
  std::vector<int> base;  // one full vertex orbit
  std::string group_name;
};

/// Random free action: a random voltage graph over a group of order at most
/// max_order (cyclic, Klein four or S3), lifted to its derived cover.
ActionInstance random_free_action(std::uint64_t seed, int max_order = 6, int max_vertices = 30);

/// Cycle graph C_6 with the Z/3 rotation, and two triangles swapped by Z/2.
ActionInstance hexagon_example();
ActionInstance triangles_example();

}  // namespace gaussweb
