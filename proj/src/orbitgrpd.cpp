#include "gaussweb/orbitgrpd.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "gaussweb/poly.hpp"

namespace gaussweb {

namespace {

using Perm = std::vector<int>;

bool is_permutation_of(const Perm& p, int size) {
  if (static_cast<int>(p.size()) != size) return false;
  std::vector<bool> seen(size, false);
  for (const int v : p) {
    if (v < 0 || v >= size || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

std::string perm_text(const Perm& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " " : "") + std::to_string(p[i]);
  return out + "]";
}

std::pair<int, int> unordered(std::pair<int, int> e) { return {std::min(e.first, e.second), std::max(e.first, e.second)}; }

FiniteGraph induced(const FiniteGraph& x, const Subgraph& s, std::vector<int>& local) {
  local.assign(x.vertex_count, -1);
  FiniteGraph g;
  for (const int v : s.vertices) {
    if (v < 0 || v >= x.vertex_count) throw Error(ErrorKind::Precondition, "subgraph: vertex out of range");
    if (local[v] < 0) local[v] = g.vertex_count++;
  }
  for (const int e : s.edges) {
    if (e < 0 || e >= static_cast<int>(x.edges.size())) throw Error(ErrorKind::Precondition, "subgraph: edge out of range");
    const auto [u, v] = x.edges[e];
    if (local[u] < 0 || local[v] < 0) {
      throw Error(ErrorKind::Precondition, "subgraph: edge " + std::to_string(e) + " has an endpoint outside the subgraph");
    }
    g.edges.emplace_back(local[u], local[v]);
  }
  return g;
}

std::vector<int> localize(const std::vector<int>& base, const std::vector<int>& local) {
  std::vector<int> out;
  for (const int v : base) {
    if (v >= 0 && v < static_cast<int>(local.size()) && local[v] >= 0) out.push_back(local[v]);
  }
  return out;
}

std::vector<int> orbit_ids(const std::vector<Perm>& perms, int size) {
  std::vector<int> id(size, -1);
  int next = 0;
  for (int i = 0; i < size; ++i) {
    if (id[i] >= 0) continue;
    for (const Perm& p : perms) id[p[i]] = next;
    ++next;
  }
  return id;
}

}  // namespace

void FiniteGraph::validate() const {
  if (vertex_count < 0) throw Error(ErrorKind::Precondition, "graph: negative vertex count");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorKind::Precondition, "graph: edge " + std::to_string(e) + " has an endpoint outside the vertex set");
    }
  }
}

std::vector<int> FiniteGraph::component_of() const {
  std::vector<int> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [u, v] : edges) parent[find(u)] = find(v);
  std::map<int, int> number;
  std::vector<int> out(vertex_count);
  for (int v = 0; v < vertex_count; ++v) {
    const auto [it, _] = number.emplace(find(v), static_cast<int>(number.size()));
    out[v] = it->second;
  }
  return out;
}

int FiniteGraph::component_count() const {
  const auto c = component_of();
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

GraphAction GraphAction::from_generators(const FiniteGraph& x, const std::vector<Perm>& vertex_generators,
                                         const std::vector<Perm>& edge_generators) {
  x.validate();
  const int nv = x.vertex_count;
  const int ne = static_cast<int>(x.edges.size());
  if (!edge_generators.empty() && edge_generators.size() != vertex_generators.size()) {
    throw Error(ErrorKind::Precondition, "action: edge generators must match vertex generators");
  }
  std::map<std::pair<int, int>, std::vector<int>> bucket;
  for (int e = 0; e < ne; ++e) bucket[unordered(x.edges[e])].push_back(e);

  std::vector<Perm> gens;
  for (std::size_t g = 0; g < vertex_generators.size(); ++g) {
    const Perm& vp = vertex_generators[g];
    if (!is_permutation_of(vp, nv)) throw Error(ErrorKind::Precondition, "action: generator " + std::to_string(g) + " is not a vertex permutation");
    Perm ep;
    if (!edge_generators.empty() && !edge_generators[g].empty()) {
      ep = edge_generators[g];
      if (!is_permutation_of(ep, ne)) throw Error(ErrorKind::Precondition, "action: generator " + std::to_string(g) + " is not an edge permutation");
    } else {
      ep.assign(ne, -1);
      for (const auto& [ends, list] : bucket) {
        const auto target = bucket.find(unordered({vp[ends.first], vp[ends.second]}));
        if (target == bucket.end() || target->second.size() != list.size()) {
          throw Error(ErrorKind::Precondition, "action: generator " + std::to_string(g) + " does not map edges to edges");
        }
        for (std::size_t i = 0; i < list.size(); ++i) ep[list[i]] = target->second[i];
      }
    }
    for (int e = 0; e < ne; ++e) {
      const auto [u, v] = x.edges[e];
      if (unordered(x.edges[ep[e]]) != unordered({vp[u], vp[v]})) {
        throw Error(ErrorKind::Precondition, "action: generator " + std::to_string(g) + " moves edge " + std::to_string(e) +
                                                 " off its endpoints' images");
      }
    }
    Perm combined = vp;
    for (const int e : ep) combined.push_back(nv + e);
    gens.push_back(std::move(combined));
  }

  Perm id(nv + ne);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elements{id};
  std::set<Perm> seen{id};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Perm& g : gens) {
      Perm next = compose(g, elements[i]);
      if (seen.insert(next).second) elements.push_back(std::move(next));
    }
  }
  GraphAction act;
  for (const Perm& p : elements) {
    act.vertex_perm.emplace_back(p.begin(), p.begin() + nv);
    Perm ep(p.begin() + nv, p.end());
    for (int& e : ep) e -= nv;
    act.edge_perm.push_back(std::move(ep));
  }
  return act;
}

std::optional<std::string> GraphAction::fixed_element() const {
  for (int g = 1; g < order(); ++g) {
    for (std::size_t v = 0; v < vertex_perm[g].size(); ++v) {
      if (vertex_perm[g][v] == static_cast<int>(v)) {
        return "group element " + perm_text(vertex_perm[g]) + " fixes vertex " + std::to_string(v);
      }
    }
    for (std::size_t e = 0; e < edge_perm[g].size(); ++e) {
      if (edge_perm[g][e] == static_cast<int>(e)) {
        return "group element " + perm_text(vertex_perm[g]) + " fixes edge " + std::to_string(e);
      }
    }
  }
  return std::nullopt;
}

int GroupoidPresentation::rank() const { return std::accumulate(rank_per_component.begin(), rank_per_component.end(), 0); }

GroupoidPresentation pi1_presentation(const FiniteGraph& x, const std::vector<int>& base) {
  x.validate();
  const auto comp = x.component_of();
  const int count = x.component_count();
  std::vector<int> root(count, -1);
  std::set<int> objects;
  std::vector<int> per_component(count, 0);
  for (const int v : base) {
    if (v < 0 || v >= x.vertex_count) throw Error(ErrorKind::Precondition, "pi1_presentation: base vertex out of range");
    if (!objects.insert(v).second) continue;
    ++per_component[comp[v]];
    if (root[comp[v]] < 0 || v < root[comp[v]]) root[comp[v]] = v;
  }
  for (int c = 0; c < count; ++c) {
    if (root[c] < 0) throw Error(ErrorKind::Precondition, "pi1_presentation: component " + std::to_string(c) + " has no base point");
  }

  std::vector<std::vector<std::pair<int, int>>> adj(x.vertex_count);  // (neighbor, edge)
  for (std::size_t e = 0; e < x.edges.size(); ++e) {
    adj[x.edges[e].first].emplace_back(x.edges[e].second, static_cast<int>(e));
    adj[x.edges[e].second].emplace_back(x.edges[e].first, static_cast<int>(e));
  }
  std::vector<bool> tree(x.edges.size(), false);
  std::vector<bool> seen(x.vertex_count, false);
  for (int c = 0; c < count; ++c) {
    std::deque<int> queue{root[c]};
    seen[root[c]] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (const auto& [w, e] : adj[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        tree[e] = true;
        queue.push_back(w);
      }
    }
  }

  GroupoidPresentation p;
  p.objects.assign(objects.begin(), objects.end());
  std::vector<int> vertices(count, 0), edges(count, 0);
  for (int v = 0; v < x.vertex_count; ++v) ++vertices[comp[v]];
  for (std::size_t e = 0; e < x.edges.size(); ++e) {
    ++edges[comp[x.edges[e].first]];
    if (!tree[e]) p.generators.push_back(static_cast<int>(e));
  }
  for (int c = 0; c < count; ++c) {
    p.rank_per_component.push_back(edges[c] - vertices[c] + 1);
    p.connectors += per_component[c] - 1;
  }
  if (static_cast<int>(p.generators.size()) != p.rank()) {
    throw Error(ErrorKind::Invariant, "pi1_presentation: generator count differs from E - V + 1");
  }
  return p;
}

QuotientGraph quotient_graph(const FiniteGraph& x, const GraphAction& act) {
  x.validate();
  if (const auto witness = act.fixed_element()) {
    throw Error(ErrorKind::Precondition, "quotient_graph: action is not free: " + *witness);
  }
  QuotientGraph q;
  q.vertex_orbit = orbit_ids(act.vertex_perm, x.vertex_count);
  q.edge_orbit = orbit_ids(act.edge_perm, static_cast<int>(x.edges.size()));
  q.graph.vertex_count = x.vertex_count == 0 ? 0 : *std::max_element(q.vertex_orbit.begin(), q.vertex_orbit.end()) + 1;
  const int edge_orbits = x.edges.empty() ? 0 : *std::max_element(q.edge_orbit.begin(), q.edge_orbit.end()) + 1;
  q.graph.edges.assign(edge_orbits, {-1, -1});
  for (std::size_t e = 0; e < x.edges.size(); ++e) {
    auto& out = q.graph.edges[q.edge_orbit[e]];
    if (out.first < 0) out = {q.vertex_orbit[x.edges[e].first], q.vertex_orbit[x.edges[e].second]};
  }
  return q;
}

OrbitGroupoidReport orbit_groupoid_report(const FiniteGraph& x, const GraphAction& act, const std::vector<int>& base) {
  const QuotientGraph q = quotient_graph(x, act);  // refuses non-free actions
  const std::set<int> base_set(base.begin(), base.end());
  for (const int v : base_set) {
    if (v < 0 || v >= x.vertex_count) throw Error(ErrorKind::Precondition, "orbit_groupoid_check: base vertex out of range");
    for (const Perm& g : act.vertex_perm) {
      if (!base_set.count(g[v])) throw Error(ErrorKind::Precondition, "orbit_groupoid_check: base set is not G-stable");
    }
  }
  const GroupoidPresentation cover = pi1_presentation(x, std::vector<int>(base_set.begin(), base_set.end()));
  const int order = act.order();

  OrbitGroupoidReport r;
  r.cover_rank = cover.rank();
  r.quotient_rank = q.graph.cycle_rank();

  // orbit groupoid: G permutes a free basis and the objects freely, so both
  // counts divide by |G|; its components are the G-orbits of components of X.
  const int basis = cover.basis_size();
  const int objects = static_cast<int>(cover.objects.size());
  const auto comp = x.component_of();
  const int comps = x.component_count();
  std::vector<Perm> comp_perm;
  for (const Perm& g : act.vertex_perm) {
    Perm p(comps, -1);
    for (int v = 0; v < x.vertex_count; ++v) p[comp[v]] = comp[g[v]];
    comp_perm.push_back(std::move(p));
  }
  const auto comp_orbit = orbit_ids(comp_perm, comps);
  const int comp_orbits = comps == 0 ? 0 : *std::max_element(comp_orbit.begin(), comp_orbit.end()) + 1;
  if (basis % order != 0 || objects % order != 0) {
    throw Error(ErrorKind::Invariant, "orbit_groupoid_check: basis or object count not divisible by |G|");
  }
  r.groupoid_rank = basis / order - objects / order + comp_orbits;
  r.euler_multiplicative = x.euler_characteristic() == order * q.graph.euler_characteristic();

  std::vector<bool> hit(q.graph.edges.size(), false);
  for (const int e : q.edge_orbit) hit[e] = true;
  std::vector<bool> vhit(q.graph.vertex_count, false);
  for (const int v : q.vertex_orbit) vhit[v] = true;
  r.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }) &&
                 std::all_of(vhit.begin(), vhit.end(), [](bool b) { return b; });
  r.passed = r.quotient_rank == r.groupoid_rank && r.euler_multiplicative && r.surjective;
  return r;
}

bool orbit_groupoid_check(const FiniteGraph& x, const GraphAction& act, const std::vector<int>& base) {
  return orbit_groupoid_report(x, act, base).passed;
}

VanKampenReport van_kampen_pushout(const FiniteGraph& x, const Subgraph& x1, const Subgraph& x2, const std::vector<int>& base) {
  x.validate();
  std::set<int> v1(x1.vertices.begin(), x1.vertices.end()), v2(x2.vertices.begin(), x2.vertices.end());
  std::set<int> e1(x1.edges.begin(), x1.edges.end()), e2(x2.edges.begin(), x2.edges.end());
  for (int v = 0; v < x.vertex_count; ++v) {
    if (!v1.count(v) && !v2.count(v)) throw Error(ErrorKind::Precondition, "van_kampen_pushout: vertex " + std::to_string(v) + " not covered");
  }
  for (int e = 0; e < static_cast<int>(x.edges.size()); ++e) {
    if (!e1.count(e) && !e2.count(e)) throw Error(ErrorKind::Precondition, "van_kampen_pushout: edge " + std::to_string(e) + " not covered");
  }
  Subgraph x0;
  std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(x0.vertices));
  std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(x0.edges));

  std::vector<int> l1, l2, l0;
  const FiniteGraph g1 = induced(x, {std::vector<int>(v1.begin(), v1.end()), std::vector<int>(e1.begin(), e1.end())}, l1);
  const FiniteGraph g2 = induced(x, {std::vector<int>(v2.begin(), v2.end()), std::vector<int>(e2.begin(), e2.end())}, l2);
  const FiniteGraph g0 = induced(x, x0, l0);

  VanKampenReport r;
  r.first = pi1_presentation(g1, localize(base, l1));
  r.second = pi1_presentation(g2, localize(base, l2));
  r.overlap = pi1_presentation(g0, localize(base, l0));
  pi1_presentation(x, base);  // base must also meet every component of X
  r.rank_first = r.first.rank();
  r.rank_second = r.second.rank();
  r.rank_overlap = r.overlap.rank();
  r.correction = x.component_count() - g1.component_count() - g2.component_count() + g0.component_count();
  r.pushout_rank = r.rank_first + r.rank_second - r.rank_overlap + r.correction;
  r.direct_rank = x.cycle_rank();
  r.agrees = r.pushout_rank == r.direct_rank;
  return r;
}

std::string ClubsuitReport::to_string() const {
  std::ostringstream out;
  out << "clubsuit (discrete shadow)\n";
  out << "free " << (free ? "yes" : "no") << "\n";
  if (!free) out << "fixed " << fixed_witness << "\n";
  out << "walks_lift " << (walks_lift ? "yes" : "no") << "\n";
  out << "homotopic_lifts " << (homotopic_lifts ? "yes" : "no") << " (" << walk_pairs << " walk pairs)\n";
  return out.str();
}

ClubsuitReport check_clubsuit(const FiniteGraph& x, const GraphAction& act, std::uint64_t seed) {
  x.validate();
  ClubsuitReport r;
  const auto witness = act.fixed_element();
  r.free = !witness;
  if (witness) r.fixed_witness = *witness;

  const int ne = static_cast<int>(x.edges.size());
  const auto vorb = orbit_ids(act.vertex_perm, x.vertex_count);
  const auto eorb = orbit_ids(act.edge_perm, ne);
  const int edge_orbits = ne == 0 ? 0 : *std::max_element(eorb.begin(), eorb.end()) + 1;

  // orient each edge orbit by its first edge; record every oriented copy g.rep
  std::vector<int> rep(edge_orbits, -1);
  for (int e = 0; e < ne; ++e) {
    if (rep[eorb[e]] < 0) rep[eorb[e]] = e;
  }
  std::vector<std::set<std::pair<int, int>>> oriented(edge_orbits);  // (tail, head) in X
  for (int o = 0; o < edge_orbits; ++o) {
    const auto [u, v] = x.edges[rep[o]];
    for (const Perm& g : act.vertex_perm) oriented[o].emplace(g[u], g[v]);
  }
  auto step_from = [&](int o, int dir, int at, bool last) -> int {
    int found = -1;
    for (const auto& [tail, head] : oriented[o]) {
      const int from = dir > 0 ? tail : head;
      const int to = dir > 0 ? head : tail;
      if (from != at) continue;
      if (found < 0 || last) found = to;
    }
    return found;
  };

  // every quotient edge lifts at every preimage of either end
  r.walks_lift = true;
  for (int o = 0; o < edge_orbits && r.walks_lift; ++o) {
    const auto [u, v] = x.edges[rep[o]];
    for (int w = 0; w < x.vertex_count; ++w) {
      if (vorb[w] == vorb[u] && step_from(o, +1, w, false) < 0) r.walks_lift = false;
      if (vorb[w] == vorb[v] && step_from(o, -1, w, false) < 0) r.walks_lift = false;
    }
  }

  // homotopic pairs: a walk and the same walk with a backtrack inserted
  const int vertex_orbits = vorb.empty() ? 0 : *std::max_element(vorb.begin(), vorb.end()) + 1;
  std::vector<std::vector<std::pair<int, int>>> incident(vertex_orbits);
  for (int o = 0; o < edge_orbits; ++o) {
    const auto [u, v] = x.edges[rep[o]];
    incident[vorb[u]].emplace_back(o, +1);
    incident[vorb[v]].emplace_back(o, -1);
  }
  auto target = [&](int o, int dir) { return dir > 0 ? vorb[x.edges[rep[o]].second] : vorb[x.edges[rep[o]].first]; };
  auto reduce = [](std::vector<std::pair<int, int>> w) {
    std::vector<std::pair<int, int>> out;
    for (const auto& s : w) {
      if (!out.empty() && out.back().first == s.first && out.back().second == -s.second) out.pop_back();
      else out.push_back(s);
    }
    return out;
  };
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  r.homotopic_lifts = true;
  if (x.vertex_count > 0 && edge_orbits > 0) {
    for (int sample = 0; sample < 64; ++sample) {
      const int start = static_cast<int>(pick(x.vertex_count));
      int at = vorb[start];
      std::vector<std::pair<int, int>> walk;
      const int length = 1 + static_cast<int>(pick(8));
      for (int i = 0; i < length && !incident[at].empty(); ++i) {
        const auto s = incident[at][pick(incident[at].size())];
        walk.push_back(s);
        at = target(s.first, s.second);
      }
      // insert a backtrack at a random position
      const std::size_t pos = pick(walk.size() + 1);
      const int there = pos == 0 ? vorb[start] : target(walk[pos - 1].first, walk[pos - 1].second);
      if (incident[there].empty()) continue;
      const auto b = incident[there][pick(incident[there].size())];
      auto other = walk;
      other.insert(other.begin() + static_cast<long>(pos), {b, {b.first, -b.second}});
      if (reduce(walk) != reduce(other)) continue;
      ++r.walk_pairs;
      auto lift = [&](const std::vector<std::pair<int, int>>& w, bool last) {
        int v = start;
        for (const auto& [o, dir] : w) {
          v = step_from(o, dir, v, last);
          if (v < 0) return -1;
        }
        return v;
      };
      const int end1 = lift(walk, false);
      const int end2 = lift(other, true);
      bool related = false;
      if (end1 >= 0 && end2 >= 0) {
        for (const Perm& g : act.vertex_perm) {
          if (g[start] == start && g[end1] == end2) related = true;
        }
      }
      if (!related) r.homotopic_lifts = false;
    }
  }
  return r;
}

FiniteGraph parse_graph(std::string_view text) {
  FiniteGraph g;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&] { throw Error(ErrorKind::Usage, "graph line " + std::to_string(line_no) + ": expected 'u v'"); };
    auto as_int = [&](const std::string& s) {
      if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) fail();
      return std::stoi(s);
    };
    std::string second, extra;
    if (first == "vertices") {
      if (!(ls >> second) || (ls >> extra)) fail();
      g.vertex_count = std::max(g.vertex_count, as_int(second));
      continue;
    }
    if (!(ls >> second) || (ls >> extra)) fail();
    const int u = as_int(first), v = as_int(second);
    g.edges.emplace_back(u, v);
    g.vertex_count = std::max({g.vertex_count, u + 1, v + 1});
  }
  return g;
}

std::string format_graph(const FiniteGraph& x) {
  std::string out = "vertices " + std::to_string(x.vertex_count) + "\n";
  for (const auto& [u, v] : x.edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

GraphAction parse_action(const FiniteGraph& x, std::string_view text) {
  std::vector<Perm> vg, eg;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    bool edge = false;
    if (toks[0] == "e:" || toks[0] == "v:") {
      edge = toks[0] == "e:";
      toks.erase(toks.begin());
    }
    Perm p;
    for (const auto& t : toks) {
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw Error(ErrorKind::Usage, "action line " + std::to_string(line_no) + ": expected integers");
      }
      p.push_back(std::stoi(t));
    }
    if (edge) {
      if (vg.empty() || !eg.back().empty()) throw Error(ErrorKind::Usage, "action line " + std::to_string(line_no) + ": edge images without a generator");
      eg.back() = std::move(p);
    } else {
      vg.push_back(std::move(p));
      eg.emplace_back();
    }
  }
  if (vg.empty()) throw Error(ErrorKind::Usage, "action: no generators");
  return GraphAction::from_generators(x, vg, eg);
}

namespace {

struct SmallGroup {
  std::string name;
  std::vector<std::vector<int>> mult;  // mult[a][b] = a*b
};

SmallGroup small_group(int kind, int order) {
  SmallGroup g;
  if (kind == 1 && order == 4) {
    g.name = "Z2xZ2";
    g.mult.assign(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) g.mult[a][b] = a ^ b;
    }
    return g;
  }
  if (kind == 1 && order == 6) {
    g.name = "S3";
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    g.mult.assign(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        g.mult[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    }
    return g;
  }
  g.name = "Z" + std::to_string(order);
  g.mult.assign(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) g.mult[a][b] = (a + b) % order;
  }
  return g;
}

}  // namespace

ActionInstance random_free_action(std::uint64_t seed, int max_order, int max_vertices) {
  if (max_order < 1 || max_vertices < max_order) throw Error(ErrorKind::Precondition, "random_free_action: bad bounds");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int order = uniform(1, max_order);
  const SmallGroup group = small_group((order == 4 || order == 6) ? uniform(0, 1) : 0, order);
  const int m = uniform(1, max_vertices / order);

  // connected base graph with a voltage on every edge
  std::vector<std::tuple<int, int, int>> base_edges;
  for (int v = 1; v < m; ++v) base_edges.emplace_back(uniform(0, v - 1), v, uniform(0, order - 1));
  const int extra = uniform(0, m + 2);
  for (int i = 0; i < extra; ++i) base_edges.emplace_back(uniform(0, m - 1), uniform(0, m - 1), uniform(0, order - 1));

  ActionInstance inst;
  inst.group_name = group.name;
  inst.graph.vertex_count = m * order;
  for (const auto& [u, v, g] : base_edges) {
    for (int h = 0; h < order; ++h) inst.graph.edges.emplace_back(u * order + h, v * order + group.mult[h][g]);
  }
  std::vector<Perm> vg, eg;
  for (int a = 0; a < order; ++a) {
    Perm vp(inst.graph.vertex_count), ep(inst.graph.edges.size());
    for (int v = 0; v < m; ++v) {
      for (int h = 0; h < order; ++h) vp[v * order + h] = v * order + group.mult[a][h];
    }
    for (std::size_t e = 0; e < base_edges.size(); ++e) {
      for (int h = 0; h < order; ++h) ep[e * order + h] = static_cast<int>(e) * order + group.mult[a][h];
    }
    vg.push_back(std::move(vp));
    eg.push_back(std::move(ep));
  }
  inst.action = GraphAction::from_generators(inst.graph, vg, eg);
  for (int h = 0; h < order; ++h) inst.base.push_back(h);
  return inst;
}

ActionInstance hexagon_example() {
  ActionInstance inst;
  inst.group_name = "Z3";
  inst.graph.vertex_count = 6;
  for (int i = 0; i < 6; ++i) inst.graph.edges.emplace_back(i, (i + 1) % 6);
  inst.action = GraphAction::from_generators(inst.graph, {{2, 3, 4, 5, 0, 1}});
  inst.base = {0, 2, 4};
  return inst;
}

ActionInstance triangles_example() {
  ActionInstance inst;
  inst.group_name = "Z2";
  inst.graph.vertex_count = 6;
  inst.graph.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  inst.action = GraphAction::from_generators(inst.graph, {{3, 4, 5, 0, 1, 2}});
  inst.base = {0, 3};
  return inst;
}

}  // namespace gaussweb
