#pragma once

#include <algorithm>
#include <bitset>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "gaussweb/diagram.hpp"
#include "gaussweb/orbitgrpd.hpp"

namespace gaussweb::testing {

/// Independent structural check of a full diagram; empty string when valid.
/// Leaves 0..4n-1, then nodes, as vertices of one graph per color.
inline std::string diagram_violation(const ChordDiagram& d) {
  const int leaves = d.leaf_count();
  if (leaves != 4 * d.n) return "leaf count " + std::to_string(leaves) + " != 4n";
  for (int k = 0; k < leaves; ++k) {
    if (d.leaf_colors[k] != (k % 2 == 0 ? Color::Im : Color::Re)) return "leaf " + std::to_string(k) + " has the wrong color";
  }
  const int vertices = leaves + static_cast<int>(d.nodes.size());
  auto vertex = [&](const EndRef& r) { return r.kind == EndRef::Kind::Leaf ? r.index : leaves + r.index; };

  std::vector<int> leaf_degree(leaves, 0);
  std::vector<std::map<Color, int>> node_degree(d.nodes.size());
  for (const Color c : {Color::Re, Color::Im}) {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const DiagramEdge& e : d.edges) {
      if (e.color != c) continue;
      const int a = find(vertex(e.ends[0])), b = find(vertex(e.ends[1]));
      if (a == b) return "cycle in the color forest";
      parent[a] = b;
      for (const EndRef& r : e.ends) {
        if (r.kind == EndRef::Kind::Leaf) {
          ++leaf_degree[r.index];
          if (d.leaf_colors[r.index] != c) return "edge color differs from its leaf";
        } else {
          ++node_degree[r.index][c];
        }
      }
    }
  }
  for (int k = 0; k < leaves; ++k) {
    if (leaf_degree[k] != 1) return "leaf " + std::to_string(k) + " has degree " + std::to_string(leaf_degree[k]);
  }
  int roots = 0;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const DiagramNode& nd = d.nodes[i];
    const int re = node_degree[i][Color::Re], im = node_degree[i][Color::Im];
    if (static_cast<int>(nd.cyclic.size()) != re + im) return "rotation size differs from valency";
    if (nd.kind == NodeKind::Root) {
      ++roots;
      if (re != 2 || im != 2) return "root node without valency 2+2";
      // transversal crossing: colors alternate around the node
      for (std::size_t j = 0; j < 4; ++j) {
        if (d.edges[nd.cyclic[j].edge].color == d.edges[nd.cyclic[(j + 1) % 4].edge].color) return "root colors do not alternate";
      }
    } else {
      const int own = nd.color == Color::Re ? re : im;
      const int other = nd.color == Color::Re ? im : re;
      if (other != 0 || own < 4 || own % 2 != 0) return "critical node with odd or mixed valency";
    }
  }
  if (roots != d.n) return "root count " + std::to_string(roots) + " != n";
  return {};
}

/// E - rank of the vertex-edge incidence matrix over GF(2); at most 512 vertices.
inline int gf2_cycle_rank(int vertices, const std::vector<std::pair<int, int>>& edges) {
  if (vertices > 512) throw Error(ErrorKind::Precondition, "gf2_cycle_rank: too many vertices");
  std::vector<std::bitset<512>> rows;
  for (const auto& [u, v] : edges) {
    std::bitset<512> col;
    if (u != v) {
      col.set(u);
      col.set(v);
    }
    rows.push_back(col);
  }
  int rank = 0;
  for (int bit = 0; bit < vertices; ++bit) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r.test(bit); });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) != rank && rows[i].test(bit)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return static_cast<int>(edges.size()) - rank;
}

inline int gf2_cycle_rank(const FiniteGraph& x) { return gf2_cycle_rank(x.vertex_count, x.edges); }

/// Cycle rank of X/G with orbits taken as minimal images, independent of the library's quotient.
inline int gf2_quotient_rank(const FiniteGraph& x, const GraphAction& act) {
  std::vector<int> vmin(x.vertex_count), emin(x.edges.size());
  for (int v = 0; v < x.vertex_count; ++v) {
    vmin[v] = v;
    for (const auto& g : act.vertex_perm) vmin[v] = std::min(vmin[v], g[v]);
  }
  for (std::size_t e = 0; e < x.edges.size(); ++e) {
    emin[e] = static_cast<int>(e);
    for (const auto& g : act.edge_perm) emin[e] = std::min(emin[e], g[e]);
  }
  std::map<int, int> vid;
  for (const int v : vmin) vid.emplace(v, static_cast<int>(vid.size()));
  std::vector<std::pair<int, int>> qe;
  for (std::size_t e = 0; e < x.edges.size(); ++e) {
    if (emin[e] == static_cast<int>(e)) qe.emplace_back(vid[vmin[x.edges[e].first]], vid[vmin[x.edges[e].second]]);
  }
  return gf2_cycle_rank(static_cast<int>(vid.size()), qe);
}

}  // namespace gaussweb::testing
