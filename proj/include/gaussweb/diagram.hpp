#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaussweb/webtrace.hpp"

namespace gaussweb {

struct DiagramEdge {
  Color color = Color::Re;
  std::array<EndRef, 2> ends{};
  bool operator==(const DiagramEdge&) const = default;
};

struct DiagramNode {
  NodeKind kind = NodeKind::Root;
  Color color = Color::Re;         // Critical nodes: color of all incident edges
  std::vector<EdgeEnd> cyclic;     // counterclockwise rotation
  bool operator==(const DiagramNode&) const = default;
};

/// Two-colored embedded forest in a disc with leaves on the boundary.
/// Full diagrams have 4n leaves with leaf_color(k); single-color forests
/// have 2n leaves of one color.
struct ChordDiagram {
  int n = 0;
  std::vector<Color> leaf_colors;
  std::vector<DiagramNode> nodes;
  std::vector<DiagramEdge> edges;
  std::optional<std::string> source_polynomial;

  int leaf_count() const noexcept { return static_cast<int>(leaf_colors.size()); }
};

using CanonicalCode = std::string;

using ChordPairs = std::vector<std::pair<int, int>>;

/// Leaf colors of the full 4n-slot circle.
std::vector<Color> full_leaf_colors(int n);

/// Throws Error(Invariant) naming the first violated clause.
void validate(const ChordDiagram& d);

/// Recomputes every node's rotation from the leaf order, which determines
/// it for a planar forest. Requires an acyclic diagram.
void assign_rotations(ChordDiagram& d);

ChordDiagram web_to_diagram(const Web& w);

CanonicalCode canonical_form(const ChordDiagram& d);

/// Same diagram with nodes and edges renumbered in canonical traversal order.
ChordDiagram canonicalize(const ChordDiagram& d);

bool is_generic(const ChordDiagram& d);

/// Restriction to one color on the 2n leaves of that color (slot k maps to
/// k/2); ROOT nodes become interior points of chords.
ChordDiagram single_color_forest(const ChordDiagram& d, Color c);

/// Leaf pairs joined through ROOT nodes only, in slot numbering of d.
/// Requires a diagram without CRITICAL nodes of color c.
ChordPairs chords(const ChordDiagram& d, Color c);

/// Generic diagram from an IM matching on even slots and an RE matching on
/// odd slots, with a ROOT at every crossing. Throws Error(Precondition) if
/// some chord does not cross exactly one chord of the other color.
ChordDiagram diagram_from_chords(int n, const ChordPairs& im, const ChordPairs& re);

/// Relabels leaf slots: leaf k moves to perm[k]; colors are swapped when
/// swap_colors holds; rotations reversed when reverse holds.
ChordDiagram relabel(const ChordDiagram& d, const std::vector<int>& perm, bool swap_colors, bool reverse);

/// Interchange object (JSON), arrays in canonical order.
std::string to_json(const ChordDiagram& d);
ChordDiagram from_json(std::string_view text);

}  // namespace gaussweb
