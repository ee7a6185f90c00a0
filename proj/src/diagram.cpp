#include "gaussweb/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "json.hpp"

namespace gaussweb {

namespace {

[[noreturn]] void violated(const std::string& clause) { throw Error(ErrorKind::Invariant, "diagram invariant: " + clause); }

struct Step {
  int edge;
  int from_end;
  EndRef target;
};

class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<EdgeEnd> leaf_incidences(const ChordDiagram& d) {
  std::vector<EdgeEnd> at(d.leaf_count(), EdgeEnd{-1, -1});
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    for (int x = 0; x < 2; ++x) {
      const EndRef& r = d.edges[e].ends[x];
      if (r.kind == EndRef::Kind::Leaf) at[r.index] = {static_cast<int>(e), x};
    }
  }
  return at;
}

int position_in(const DiagramNode& node, EdgeEnd ee) {
  const auto it = std::find(node.cyclic.begin(), node.cyclic.end(), ee);
  if (it == node.cyclic.end()) violated("edge end missing from node rotation");
  return static_cast<int>(it - node.cyclic.begin());
}

// Walk around the boundary face of the component containing leaf `start`:
// after arriving at a node through slot j, leave through slot j+1.
std::vector<Step> boundary_walk(const ChordDiagram& d, const std::vector<EdgeEnd>& leaf_at, int start) {
  std::vector<Step> steps;
  EdgeEnd cur = leaf_at[start];
  const std::size_t limit = 2 * d.edges.size() + 2;
  while (true) {
    const int to = 1 - cur.end;
    const EndRef target = d.edges[cur.edge].ends[to];
    steps.push_back({cur.edge, cur.end, target});
    if (steps.size() > limit) violated("rotation system does not close up");
    if (target.kind == EndRef::Kind::Leaf) {
      if (target.index == start) break;
      cur = {cur.edge, to};
    } else {
      const DiagramNode& node = d.nodes[target.index];
      const int j = position_in(node, {cur.edge, to});
      cur = node.cyclic[(j + 1) % node.cyclic.size()];
    }
  }
  return steps;
}

std::vector<int> leaf_components(const ChordDiagram& d) {
  UnionFind uf(d.leaf_count() + static_cast<int>(d.nodes.size()));
  auto vertex = [&](const EndRef& r) { return r.kind == EndRef::Kind::Leaf ? r.index : d.leaf_count() + r.index; };
  for (const DiagramEdge& e : d.edges) uf.unite(vertex(e.ends[0]), vertex(e.ends[1]));
  std::vector<int> comp(d.leaf_count());
  for (int k = 0; k < d.leaf_count(); ++k) comp[k] = uf.find(k);
  return comp;
}

std::string color_name(Color c) { return c == Color::Re ? "RE" : "IM"; }

Color parse_color(const std::string& s) {
  if (s == "RE") return Color::Re;
  if (s == "IM") return Color::Im;
  throw Error(ErrorKind::Usage, "diagram file: unknown color '" + s + "'");
}

}  // namespace

std::vector<Color> full_leaf_colors(int n) {
  std::vector<Color> out(4 * n);
  for (int k = 0; k < 4 * n; ++k) out[k] = leaf_color(k);
  return out;
}

void validate(const ChordDiagram& d) {
  const int leaves = d.leaf_count();
  if (d.n < 1) violated("degree must be positive");
  if (leaves == 4 * d.n) {
    if (d.leaf_colors != full_leaf_colors(d.n)) violated("leaf colors must alternate IM, RE starting at slot 0");
  } else if (leaves == 2 * d.n) {
    if (std::adjacent_find(d.leaf_colors.begin(), d.leaf_colors.end(), std::not_equal_to<>()) != d.leaf_colors.end()) {
      violated("single-color forest with mixed leaf colors");
    }
  } else {
    violated("exactly 4n leaves");
  }

  std::vector<int> leaf_uses(leaves, 0);
  std::vector<int> node_uses(d.nodes.size(), 0);
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const DiagramEdge& edge = d.edges[e];
    for (int x = 0; x < 2; ++x) {
      const EndRef& r = edge.ends[x];
      if (r.kind == EndRef::Kind::Leaf) {
        if (r.index < 0 || r.index >= leaves) violated("edge end refers to a missing leaf");
        if (d.leaf_colors[r.index] != edge.color) violated("edge color differs from its leaf color");
        ++leaf_uses[r.index];
      } else {
        if (r.index < 0 || r.index >= static_cast<int>(d.nodes.size())) violated("edge end refers to a missing node");
        const DiagramNode& node = d.nodes[r.index];
        if (std::count(node.cyclic.begin(), node.cyclic.end(), EdgeEnd{static_cast<int>(e), x}) != 1) {
          violated("edge end listed exactly once in its node rotation");
        }
        ++node_uses[r.index];
      }
    }
  }
  for (int k = 0; k < leaves; ++k) {
    if (leaf_uses[k] != 1) violated("each leaf has degree 1 (leaf " + std::to_string(k) + ")");
  }
  for (std::size_t v = 0; v < d.nodes.size(); ++v) {
    const DiagramNode& node = d.nodes[v];
    const int val = static_cast<int>(node.cyclic.size());
    if (node_uses[v] != val) violated("node rotation lists foreign edge ends");
    for (const EdgeEnd& ee : node.cyclic) {
      if (ee.edge < 0 || ee.edge >= static_cast<int>(d.edges.size()) || ee.end < 0 || ee.end > 1 ||
          d.edges[ee.edge].ends[ee.end] != EndRef::node(static_cast<int>(v))) {
        violated("node rotation lists foreign edge ends");
      }
    }
    if (val < 4 || val % 2 != 0) violated("inner nodes have even valency >= 4");
    if (node.kind == NodeKind::Root) {
      if (val != 4) violated("ROOT nodes have valency 4");
      for (int i = 0; i < 4; ++i) {
        if (d.edges[node.cyclic[i].edge].color == d.edges[node.cyclic[(i + 1) % 4].edge].color) {
          violated("ROOT node colors alternate RE, IM");
        }
      }
    } else {
      for (const EdgeEnd& ee : node.cyclic) {
        if (d.edges[ee.edge].color != node.color) violated("CRITICAL node edges share the node color");
      }
    }
  }

  UnionFind uf(leaves + static_cast<int>(d.nodes.size()));
  auto vertex = [&](const EndRef& r) { return r.kind == EndRef::Kind::Leaf ? r.index : leaves + r.index; };
  for (const DiagramEdge& e : d.edges) {
    if (!uf.unite(vertex(e.ends[0]), vertex(e.ends[1]))) violated("chords do not form any cycle");
  }

  // Planarity: each component's boundary walk meets its leaves in
  // counterclockwise order, and components do not interleave.
  const auto leaf_at = leaf_incidences(d);
  const auto comp = leaf_components(d);
  std::vector<bool> done(leaves, false);
  std::size_t edges_walked = 0;
  for (int k = 0; k < leaves; ++k) {
    if (done[k]) continue;
    const auto steps = boundary_walk(d, leaf_at, k);
    edges_walked += steps.size();
    int last = k;
    done[k] = true;
    for (const Step& s : steps) {
      if (s.target.kind != EndRef::Kind::Leaf || s.target.index == k) continue;
      if (s.target.index <= last) violated("rotation system is not planar with leaves in boundary order");
      last = s.target.index;
      done[s.target.index] = true;
    }
  }
  if (edges_walked != 2 * d.edges.size()) violated("every inner node is connected to the boundary");
  for (int k = 0; k < leaves; ++k) {
    // leaves of another component between two consecutive leaves of this one
    std::map<int, int> gap_of;
    int gap = 0;
    for (int j = 1; j < leaves; ++j) {
      const int leaf = (k + j) % leaves;
      if (comp[leaf] == comp[k]) {
        ++gap;
        continue;
      }
      const auto [it, inserted] = gap_of.emplace(comp[leaf], gap);
      if (!inserted && it->second != gap) violated("components interleave on the boundary");
    }
  }
}

void assign_rotations(ChordDiagram& d) {
  const int leaves = d.leaf_count();
  // adjacency: for each node, edge ends at it
  std::vector<std::vector<EdgeEnd>> at(d.nodes.size());
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    for (int x = 0; x < 2; ++x) {
      if (d.edges[e].ends[x].kind == EndRef::Kind::Node) at[d.edges[e].ends[x].index].push_back({static_cast<int>(e), x});
    }
  }
  // smallest leaf reached from node v by leaving through ee
  auto min_leaf = [&](int v, EdgeEnd ee) {
    int best = leaves;
    std::vector<std::pair<EdgeEnd, int>> stack{{ee, v}};
    std::size_t guard = 0;
    while (!stack.empty()) {
      if (++guard > 4 * d.edges.size() + 4) violated("chords do not form any cycle");
      const auto [cur, from] = stack.back();
      stack.pop_back();
      const EndRef t = d.edges[cur.edge].ends[1 - cur.end];
      if (t.kind == EndRef::Kind::Leaf) {
        best = std::min(best, t.index);
        continue;
      }
      for (const EdgeEnd& next : at[t.index]) {
        if (next.edge != cur.edge) stack.push_back({next, t.index});
      }
      (void)from;
    }
    return best;
  };
  for (std::size_t v = 0; v < d.nodes.size(); ++v) {
    std::vector<std::pair<int, EdgeEnd>> keyed;
    for (const EdgeEnd& ee : at[v]) keyed.emplace_back(min_leaf(static_cast<int>(v), ee), ee);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    d.nodes[v].cyclic.clear();
    for (const auto& [key, ee] : keyed) d.nodes[v].cyclic.push_back(ee);
  }
}

ChordDiagram web_to_diagram(const Web& w) {
  ChordDiagram d;
  d.n = w.degree;
  if (static_cast<int>(w.leaves.size()) != 4 * w.degree) violated("exactly 4n leaves");
  d.leaf_colors = full_leaf_colors(w.degree);
  for (const WebNode& node : w.nodes) {
    DiagramNode dn;
    dn.kind = node.kind;
    dn.color = node.kind == NodeKind::Root ? Color::Re : node.color;
    dn.cyclic = node.incidences;
    d.nodes.push_back(std::move(dn));
  }
  for (const TracedCurve& c : w.curves) d.edges.push_back({c.color, c.ends});
  validate(d);
  return d;
}

namespace {

struct Traversal {
  std::string code;
  ChordDiagram relabeled;
};

Traversal traverse(const ChordDiagram& d) {
  const auto leaf_at = leaf_incidences(d);
  std::vector<int> node_id(d.nodes.size(), -1);
  std::vector<int> edge_id(d.edges.size(), -1);
  std::vector<bool> flipped(d.edges.size(), false);
  std::vector<bool> done(d.leaf_count(), false);
  Traversal out;
  ChordDiagram& r = out.relabeled;
  r.n = d.n;
  r.leaf_colors = d.leaf_colors;
  r.source_polynomial = d.source_polynomial;
  r.nodes.resize(d.nodes.size());
  r.edges.resize(d.edges.size());
  std::vector<int> node_start(d.nodes.size(), 0);  // rotation offset of first arrival

  std::string code = "n=" + std::to_string(d.n) + ";";
  for (const Color c : d.leaf_colors) code += color_char(c);
  int next_node = 0, next_edge = 0;
  for (int k = 0; k < d.leaf_count(); ++k) {
    if (done[k]) continue;
    done[k] = true;
    code += "|L" + std::to_string(k) + ":";
    bool first_token = true;
    for (const Step& s : boundary_walk(d, leaf_at, k)) {
      if (edge_id[s.edge] < 0) {
        edge_id[s.edge] = next_edge++;
        flipped[s.edge] = s.from_end == 1;
        DiagramEdge& ne = r.edges[edge_id[s.edge]];
        ne.color = d.edges[s.edge].color;
        ne.ends = {d.edges[s.edge].ends[s.from_end], d.edges[s.edge].ends[1 - s.from_end]};
      }
      if (!first_token) code += ',';
      first_token = false;
      code += color_char(d.edges[s.edge].color);
      if (s.target.kind == EndRef::Kind::Leaf) {
        done[s.target.index] = true;
        code += "L" + std::to_string(s.target.index);
      } else if (node_id[s.target.index] < 0) {
        const DiagramNode& node = d.nodes[s.target.index];
        node_id[s.target.index] = next_node++;
        node_start[s.target.index] = position_in(node, {s.edge, 1 - s.from_end});
        code += "N" + std::to_string(node_id[s.target.index]) + (node.kind == NodeKind::Root ? "r" : "c") +
                std::to_string(node.cyclic.size());
      } else {
        code += "N" + std::to_string(node_id[s.target.index]);
      }
    }
  }
  out.code = code;

  // Renumber ends and rotations.
  for (DiagramEdge& e : r.edges) {
    for (EndRef& ref : e.ends) {
      if (ref.kind == EndRef::Kind::Node) ref.index = node_id[ref.index];
    }
  }
  for (std::size_t v = 0; v < d.nodes.size(); ++v) {
    const DiagramNode& old = d.nodes[v];
    DiagramNode& nn = r.nodes[node_id[v]];
    nn.kind = old.kind;
    nn.color = old.kind == NodeKind::Root ? Color::Re : old.color;
    const std::size_t val = old.cyclic.size();
    for (std::size_t i = 0; i < val; ++i) {
      const EdgeEnd ee = old.cyclic[(node_start[v] + i) % val];
      const int ne = edge_id[ee.edge];
      const int end = flipped[ee.edge] ? 1 - ee.end : ee.end;
      nn.cyclic.push_back({ne, end});
    }
  }
  return out;
}

}  // namespace

CanonicalCode canonical_form(const ChordDiagram& d) { return traverse(d).code; }

ChordDiagram canonicalize(const ChordDiagram& d) { return traverse(d).relabeled; }

bool is_generic(const ChordDiagram& d) {
  int roots = 0;
  for (const DiagramNode& node : d.nodes) {
    if (node.kind != NodeKind::Root || node.cyclic.size() != 4) return false;
    ++roots;
  }
  return d.leaf_count() == 4 * d.n && roots == d.n;
}

namespace {

// Strands of color c between terminals (leaves and CRITICAL nodes), passing
// straight through ROOT nodes.
struct Strand {
  EdgeEnd first;  // old edge end at the starting terminal
  EdgeEnd last;   // old edge end at the final terminal
  EndRef from, to;
};

std::vector<Strand> strands(const ChordDiagram& d, Color c) {
  std::vector<Strand> out;
  std::vector<bool> used(d.edges.size(), false);
  auto run = [&](EdgeEnd start, EndRef from) {
    EdgeEnd cur = start;
    while (true) {
      used[cur.edge] = true;
      const int to = 1 - cur.end;
      const EndRef t = d.edges[cur.edge].ends[to];
      if (t.kind == EndRef::Kind::Node && d.nodes[t.index].kind == NodeKind::Root) {
        const DiagramNode& node = d.nodes[t.index];
        const int j = position_in(node, {cur.edge, to});
        cur = node.cyclic[(j + 2) % 4];
        continue;
      }
      out.push_back({start, {cur.edge, to}, from, t});
      return;
    }
  };
  for (int k = 0; k < d.leaf_count(); ++k) {
    if (d.leaf_colors[k] != c) continue;
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
      for (int x = 0; x < 2; ++x) {
        if (!used[e] && d.edges[e].ends[x] == EndRef::leaf(k)) run({static_cast<int>(e), x}, EndRef::leaf(k));
      }
    }
  }
  for (std::size_t v = 0; v < d.nodes.size(); ++v) {
    const DiagramNode& node = d.nodes[v];
    if (node.kind != NodeKind::Critical || node.color != c) continue;
    for (const EdgeEnd& ee : node.cyclic) {
      if (!used[ee.edge]) run(ee, EndRef::node(static_cast<int>(v)));
    }
  }
  return out;
}

}  // namespace

ChordDiagram single_color_forest(const ChordDiagram& d, Color c) {
  ChordDiagram out;
  out.n = d.n;
  out.source_polynomial = d.source_polynomial;
  std::vector<int> leaf_map(d.leaf_count(), -1);
  for (int k = 0; k < d.leaf_count(); ++k) {
    if (d.leaf_colors[k] == c) {
      leaf_map[k] = out.leaf_count();
      out.leaf_colors.push_back(c);
    }
  }
  std::vector<int> node_map(d.nodes.size(), -1);
  for (std::size_t v = 0; v < d.nodes.size(); ++v) {
    if (d.nodes[v].kind == NodeKind::Critical && d.nodes[v].color == c) {
      node_map[v] = static_cast<int>(out.nodes.size());
      out.nodes.push_back({NodeKind::Critical, c, {}});
    }
  }
  std::map<std::pair<int, int>, EdgeEnd> incidence;  // old edge end at a critical node -> new
  auto map_ref = [&](const EndRef& r) {
    return r.kind == EndRef::Kind::Leaf ? EndRef::leaf(leaf_map[r.index]) : EndRef::node(node_map[r.index]);
  };
  for (const Strand& s : strands(d, c)) {
    const int e = static_cast<int>(out.edges.size());
    out.edges.push_back({c, {map_ref(s.from), map_ref(s.to)}});
    if (s.from.kind == EndRef::Kind::Node) incidence[{s.first.edge, s.first.end}] = {e, 0};
    if (s.to.kind == EndRef::Kind::Node) incidence[{s.last.edge, s.last.end}] = {e, 1};
  }
  for (std::size_t v = 0; v < d.nodes.size(); ++v) {
    if (node_map[v] < 0) continue;
    for (const EdgeEnd& ee : d.nodes[v].cyclic) out.nodes[node_map[v]].cyclic.push_back(incidence.at({ee.edge, ee.end}));
  }
  return out;
}

ChordPairs chords(const ChordDiagram& d, Color c) {
  ChordPairs out;
  for (const Strand& s : strands(d, c)) {
    if (s.from.kind != EndRef::Kind::Leaf || s.to.kind != EndRef::Kind::Leaf) {
      throw Error(ErrorKind::Precondition, "chords: diagram has a CRITICAL node of this color");
    }
    out.emplace_back(std::min(s.from.index, s.to.index), std::max(s.from.index, s.to.index));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool interleaved(std::pair<int, int> a, std::pair<int, int> b) {
  const auto [lo, hi] = std::minmax(a.first, a.second);
  const bool in1 = lo < b.first && b.first < hi;
  const bool in2 = lo < b.second && b.second < hi;
  return in1 != in2;
}

}  // namespace

ChordDiagram diagram_from_chords(int n, const ChordPairs& im, const ChordPairs& re) {
  if (static_cast<int>(im.size()) != n || static_cast<int>(re.size()) != n) {
    throw Error(ErrorKind::Precondition, "diagram_from_chords: need n chords of each color");
  }
  ChordDiagram d;
  d.n = n;
  d.leaf_colors = full_leaf_colors(n);
  std::vector<int> re_partner(n, -1);
  std::vector<int> im_partner(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!interleaved(im[i], re[j])) continue;
      if (im_partner[i] >= 0 || re_partner[j] >= 0) {
        throw Error(ErrorKind::Precondition, "diagram_from_chords: a chord crosses more than one chord");
      }
      im_partner[i] = j;
      re_partner[j] = i;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (im_partner[i] < 0 || re_partner[i] < 0) {
      throw Error(ErrorKind::Precondition, "diagram_from_chords: a chord crosses no chord of the other color");
    }
  }
  for (int i = 0; i < n; ++i) {
    const int root = static_cast<int>(d.nodes.size());
    d.nodes.push_back({NodeKind::Root, Color::Re, {}});
    const auto [a, b] = im[i];
    const auto [c, e] = re[im_partner[i]];
    d.edges.push_back({Color::Im, {EndRef::leaf(a), EndRef::node(root)}});
    d.edges.push_back({Color::Im, {EndRef::node(root), EndRef::leaf(b)}});
    d.edges.push_back({Color::Re, {EndRef::leaf(c), EndRef::node(root)}});
    d.edges.push_back({Color::Re, {EndRef::node(root), EndRef::leaf(e)}});
  }
  assign_rotations(d);
  validate(d);
  return d;
}

ChordDiagram relabel(const ChordDiagram& d, const std::vector<int>& perm, bool swap_colors, bool reverse) {
  ChordDiagram out = d;
  auto col = [&](Color c) { return swap_colors ? other(c) : c; };
  for (int k = 0; k < d.leaf_count(); ++k) out.leaf_colors[perm[k]] = col(d.leaf_colors[k]);
  for (DiagramEdge& e : out.edges) {
    e.color = col(e.color);
    for (EndRef& r : e.ends) {
      if (r.kind == EndRef::Kind::Leaf) r.index = perm[r.index];
    }
  }
  for (DiagramNode& node : out.nodes) {
    if (node.kind == NodeKind::Critical) node.color = col(node.color);
    if (reverse) std::reverse(node.cyclic.begin(), node.cyclic.end());
  }
  return out;
}

std::string to_json(const ChordDiagram& input) {
  const ChordDiagram d = canonicalize(input);
  using nlohmann::ordered_json;
  ordered_json j;
  j["n"] = d.n;
  j["leaves"] = ordered_json::array();
  for (int k = 0; k < d.leaf_count(); ++k) j["leaves"].push_back({{"index", k}, {"color", color_name(d.leaf_colors[k])}});
  j["nodes"] = ordered_json::array();
  for (std::size_t v = 0; v < d.nodes.size(); ++v) {
    ordered_json cyc = ordered_json::array();
    for (const EdgeEnd& ee : d.nodes[v].cyclic) cyc.push_back({{"edge", ee.edge}, {"end", ee.end}});
    j["nodes"].push_back(
        {{"id", v}, {"kind", d.nodes[v].kind == NodeKind::Root ? "ROOT" : "CRITICAL"}, {"cyclic", cyc}});
  }
  j["edges"] = ordered_json::array();
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    ordered_json ends = ordered_json::array();
    for (const EndRef& r : d.edges[e].ends) {
      ends.push_back({{r.kind == EndRef::Kind::Leaf ? "leaf" : "node", r.index}});
    }
    j["edges"].push_back({{"id", e}, {"color", color_name(d.edges[e].color)}, {"ends", ends}});
  }
  if (d.source_polynomial) j["source_polynomial"] = *d.source_polynomial;
  return j.dump(2);
}

ChordDiagram from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Usage, std::string("diagram file: ") + ex.what());
  }
  try {
    ChordDiagram d;
    d.n = j.at("n").get<int>();
    const auto& leaves = j.at("leaves");
    d.leaf_colors.resize(leaves.size());
    for (const auto& leaf : leaves) {
      const int index = leaf.at("index").get<int>();
      if (index < 0 || index >= static_cast<int>(leaves.size())) throw Error(ErrorKind::Usage, "diagram file: leaf index out of range");
      d.leaf_colors[index] = parse_color(leaf.at("color").get<std::string>());
    }
    const auto& edges = j.at("edges");
    d.edges.resize(edges.size());
    for (const auto& e : edges) {
      const int id = e.at("id").get<int>();
      if (id < 0 || id >= static_cast<int>(edges.size())) throw Error(ErrorKind::Usage, "diagram file: edge id out of range");
      DiagramEdge& de = d.edges[id];
      de.color = parse_color(e.at("color").get<std::string>());
      const auto& ends = e.at("ends");
      if (ends.size() != 2) throw Error(ErrorKind::Usage, "diagram file: edge needs two ends");
      for (int x = 0; x < 2; ++x) {
        if (ends[x].contains("leaf")) {
          de.ends[x] = EndRef::leaf(ends[x].at("leaf").get<int>());
        } else {
          de.ends[x] = EndRef::node(ends[x].at("node").get<int>());
        }
      }
    }
    const auto& nodes = j.at("nodes");
    d.nodes.resize(nodes.size());
    for (const auto& v : nodes) {
      const int id = v.at("id").get<int>();
      if (id < 0 || id >= static_cast<int>(nodes.size())) throw Error(ErrorKind::Usage, "diagram file: node id out of range");
      DiagramNode& dn = d.nodes[id];
      const std::string kind = v.at("kind").get<std::string>();
      if (kind != "ROOT" && kind != "CRITICAL") throw Error(ErrorKind::Usage, "diagram file: unknown node kind " + kind);
      dn.kind = kind == "ROOT" ? NodeKind::Root : NodeKind::Critical;
      for (const auto& ee : v.at("cyclic")) dn.cyclic.push_back({ee.at("edge").get<int>(), ee.at("end").get<int>()});
      if (dn.kind == NodeKind::Critical && !dn.cyclic.empty()) {
        const int e = dn.cyclic.front().edge;
        if (e >= 0 && e < static_cast<int>(d.edges.size())) dn.color = d.edges[e].color;
      }
    }
    if (j.contains("source_polynomial")) d.source_polynomial = j.at("source_polynomial").get<std::string>();
    validate(d);
    return d;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Usage, std::string("diagram file: ") + ex.what());
  }
}

}  // namespace gaussweb
