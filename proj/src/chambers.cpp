#include "gaussweb/chambers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "gaussweb/strata.hpp"

namespace gaussweb {

ChordDiagram real_locus_diagram(int n) {
  if (n < 1) throw Error(ErrorKind::Precondition, "real_locus_diagram: n must be positive");
  ChordDiagram d;
  d.n = n;
  d.leaf_colors = full_leaf_colors(n);
  const int slots = 4 * n;
  // axis nodes from +infinity to -infinity: x_n, c_{n-1}, x_{n-1}, ..., c_1, x_1
  std::vector<int> axis;
  for (int j = 0; j < 2 * n - 1; ++j) {
    const bool root = j % 2 == 0;
    axis.push_back(static_cast<int>(d.nodes.size()));
    d.nodes.push_back({root ? NodeKind::Root : NodeKind::Critical, root ? Color::Re : Color::Im, {}});
    // vertical chord through this node: upper leaf j+1, lower leaf 4n-(j+1)
    const int upper = j + 1;
    const Color c = root ? Color::Re : Color::Im;
    d.edges.push_back({c, {EndRef::leaf(upper), EndRef::node(axis.back())}});
    d.edges.push_back({c, {EndRef::node(axis.back()), EndRef::leaf(slots - upper)}});
  }
  d.edges.push_back({Color::Im, {EndRef::leaf(0), EndRef::node(axis.front())}});
  for (std::size_t j = 0; j + 1 < axis.size(); ++j) {
    d.edges.push_back({Color::Im, {EndRef::node(axis[j]), EndRef::node(axis[j + 1])}});
  }
  d.edges.push_back({Color::Im, {EndRef::node(axis.back()), EndRef::leaf(2 * n)}});
  assign_rotations(d);
  validate(d);
  return d;
}

std::vector<ChordDiagram> chamber_diagram_set(int n) {
  std::vector<ChordDiagram> out = enumerate_generic(n);
  std::set<CanonicalCode> seen;
  for (const ChordDiagram& d : out) seen.insert(canonical_form(d));
  const ChordDiagram real = real_locus_diagram(n);
  for (const DihedralElement& g : group_elements(n)) {
    ChordDiagram gd = act_on_diagram(g, real);
    if (seen.insert(canonical_form(gd)).second) out.push_back(canonicalize(gd));
  }
  return out;
}

ChamberDecomposition chamber_decomposition(int n, const std::vector<ChordDiagram>& diagrams) {
  ChamberDecomposition dec;
  dec.n = n;
  const auto elements = group_elements(n);
  dec.group_order = static_cast<int>(elements.size());
  dec.nominal_chambers = 4 * n;

  std::map<CanonicalCode, int> index;
  std::vector<ChordDiagram> ds;
  for (const ChordDiagram& d : diagrams) {
    CanonicalCode code = canonical_form(d);
    if (index.emplace(code, static_cast<int>(ds.size())).second) {
      dec.classes.push_back(code);
      ds.push_back(d);
    }
  }
  const int count = static_cast<int>(ds.size());

  // generator tables, then every element as s^k t^e
  auto table = [&](const DihedralElement& g) {
    std::vector<int> out(count);
    std::vector<std::string> escapees;
    for (int i = 0; i < count; ++i) {
      const CanonicalCode code = canonical_form(act_on_diagram(g, ds[i]));
      const auto it = index.find(code);
      if (it == index.end()) {
        escapees.push_back(code);
        out[i] = -1;
      } else {
        out[i] = it->second;
      }
    }
    if (!escapees.empty()) {
      std::string msg = "chamber_decomposition: diagram set is not closed under " + g.to_string() + "; escapees:";
      for (const auto& e : escapees) msg += "\n  " + e;
      throw Error(ErrorKind::Precondition, msg);
    }
    return out;
  };
  const auto s_table = table(DihedralElement::s(n));
  const auto t_table = table(DihedralElement::t(n));
  for (const DihedralElement& g : elements) {
    std::vector<int> perm(count);
    for (int i = 0; i < count; ++i) {
      int j = g.reflection() ? t_table[i] : i;
      for (int k = 0; k < g.rotation(); ++k) j = s_table[j];
      perm[i] = j;
    }
    dec.action.push_back(std::move(perm));
  }
  auto element_index = [&](const DihedralElement& g) { return g.reflection() * 4 * n + g.rotation(); };

  // orbits and stabilizers
  dec.orbit_of.assign(count, -1);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < count; ++i) {
    if (dec.orbit_of[i] >= 0) continue;
    std::set<int> orbit;
    for (const auto& perm : dec.action) orbit.insert(perm[i]);
    for (const int j : orbit) dec.orbit_of[j] = static_cast<int>(orbits.size());
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  auto stabilizer = [&](int i) {
    std::set<int> out;
    for (int g = 0; g < dec.group_order; ++g) {
      if (dec.action[g][i] == i) out.insert(g);
    }
    return out;
  };

  // fundamental domain: the real-locus diagram, then greedily the member of
  // each orbit that shrinks the common stabilizer most
  const auto real_it = index.find(canonical_form(real_locus_diagram(n)));
  dec.real_locus_class = real_it == index.end() ? -1 : real_it->second;
  std::set<int> common;
  for (int g = 0; g < dec.group_order; ++g) common.insert(g);
  std::vector<int> rep_of_orbit(orbits.size(), -1);
  auto take = [&](int orbit, int cls) {
    rep_of_orbit[orbit] = cls;
    std::set<int> next;
    const auto st = stabilizer(cls);
    std::set_intersection(common.begin(), common.end(), st.begin(), st.end(), std::inserter(next, next.begin()));
    common = std::move(next);
  };
  if (dec.real_locus_class >= 0) take(dec.orbit_of[dec.real_locus_class], dec.real_locus_class);
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    if (rep_of_orbit[o] >= 0) continue;
    int best = -1;
    std::size_t best_size = 0;
    for (const int cls : orbits[o]) {
      const auto st = stabilizer(cls);
      std::size_t size = 0;
      for (const int g : st) size += common.count(g);
      if (best < 0 || size < best_size || (size == best_size && dec.classes[cls] < dec.classes[best])) {
        best = cls;
        best_size = size;
      }
    }
    take(static_cast<int>(o), best);
  }
  dec.fundamental_domain = rep_of_orbit;
  for (const int g : common) dec.domain_stabilizer.push_back(elements[g]);
  {
    int best = -1;
    std::size_t best_size = 0;
    for (const int cls : dec.fundamental_domain) {
      const std::size_t size = stabilizer(cls).size();
      if (best < 0 || size < best_size) {
        best = cls;
        best_size = size;
      }
    }
    dec.fundamental_representative = best;
  }

  // chambers: cosets g * Stab(F), labeled by their minimal element
  std::vector<int> chamber_of_element(dec.group_order, -1);
  for (int g = 0; g < dec.group_order; ++g) {
    if (chamber_of_element[g] >= 0) continue;
    const int id = static_cast<int>(dec.chambers.size());
    for (const int h : common) chamber_of_element[element_index(elements[g] * elements[h])] = id;
    Chamber c{elements[g], dec.classes[dec.action[g][dec.fundamental_representative]], {}, {}};
    std::set<CanonicalCode> closed;
    for (const int r : dec.fundamental_domain) closed.insert(dec.classes[dec.action[g][r]]);
    c.closed_members.assign(closed.begin(), closed.end());
    dec.chambers.push_back(std::move(c));
  }

  // home chamber: smallest g with g * rep = class
  dec.home.assign(count, -1);
  for (int i = 0; i < count; ++i) {
    const int rep = rep_of_orbit[dec.orbit_of[i]];
    for (int g = 0; g < dec.group_order; ++g) {
      if (dec.action[g][rep] == i) {
        dec.home[i] = chamber_of_element[g];
        break;
      }
    }
    dec.chambers[dec.home[i]].members.push_back(dec.classes[i]);
  }
  for (Chamber& c : dec.chambers) std::sort(c.members.begin(), c.members.end());

  std::size_t total = 0;
  for (const Chamber& c : dec.chambers) total += c.members.size();
  dec.partition = total == static_cast<std::size_t>(count) &&
                  std::none_of(dec.home.begin(), dec.home.end(), [](int h) { return h < 0; });

  // transitivity of the action on closed chambers, from the fundamental one
  std::set<std::vector<CanonicalCode>> reached{dec.chambers[chamber_of_element[0]].closed_members};
  std::deque<int> queue{0};
  std::set<int> seen_elements{0};
  while (!queue.empty()) {
    const int g = queue.front();
    queue.pop_front();
    for (const DihedralElement& gen : {DihedralElement::s(n), DihedralElement::t(n)}) {
      const int h = element_index(gen * elements[g]);
      if (!seen_elements.insert(h).second) continue;
      std::set<CanonicalCode> closed;
      for (const int r : dec.fundamental_domain) closed.insert(dec.classes[dec.action[h][r]]);
      reached.insert(std::vector<CanonicalCode>(closed.begin(), closed.end()));
      queue.push_back(h);
    }
  }
  dec.transitive = reached.size() == dec.chambers.size();
  dec.simply_transitive = dec.transitive && dec.domain_stabilizer.size() == 1;
  return dec;
}

int fundamental_chamber(const ChamberDecomposition& dec) {
  if (dec.real_locus_class < 0) throw Error(ErrorKind::Invariant, "fundamental_chamber: real-locus diagram missing");
  const CanonicalCode& real = dec.classes[dec.real_locus_class];
  int found = -1;
  for (std::size_t c = 0; c < dec.chambers.size(); ++c) {
    const auto& m = dec.chambers[c].members;
    if (std::binary_search(m.begin(), m.end(), real)) {
      if (found >= 0) throw Error(ErrorKind::Invariant, "fundamental_chamber: several chambers contain the real-locus diagram");
      found = static_cast<int>(c);
    }
  }
  if (found < 0) throw Error(ErrorKind::Invariant, "fundamental_chamber: no chamber contains the real-locus diagram");
  return found;
}

Gallery gallery(const ChamberDecomposition& dec, int from, int to) {
  const int n = dec.n;
  auto chamber_of = [&](const DihedralElement& g) {
    // chamber whose coset contains g
    for (std::size_t c = 0; c < dec.chambers.size(); ++c) {
      for (const DihedralElement& h : dec.domain_stabilizer) {
        if (dec.chambers[c].label * h == g) return static_cast<int>(c);
      }
    }
    throw Error(ErrorKind::Invariant, "gallery: element outside every chamber");
  };
  const std::vector<std::pair<std::string, DihedralElement>> moves{
      {"s", DihedralElement::s(n)}, {"s^-1", DihedralElement::s(n).inverse()}, {"t", DihedralElement::t(n)}};
  std::vector<int> prev(dec.chambers.size(), -1);
  std::vector<int> prev_move(dec.chambers.size(), -1);
  std::vector<bool> seen(dec.chambers.size(), false);
  std::deque<int> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    if (c == to) break;
    for (std::size_t m = 0; m < moves.size(); ++m) {
      const int next = chamber_of(dec.chambers[c].label * moves[m].second);
      if (seen[next]) continue;
      seen[next] = true;
      prev[next] = c;
      prev_move[next] = static_cast<int>(m);
      queue.push_back(next);
    }
  }
  Gallery g;
  for (int c = to; c != from; c = prev[c]) {
    g.chambers.push_back(c);
    g.moves.push_back(moves[prev_move[c]].first);
  }
  g.chambers.push_back(from);
  std::reverse(g.chambers.begin(), g.chambers.end());
  std::reverse(g.moves.begin(), g.moves.end());
  return g;
}

std::vector<std::vector<int>> reconnection_graph(const ChamberDecomposition& dec) {
  const int count = static_cast<int>(dec.classes.size());
  std::map<std::pair<ChordPairs, ChordPairs>, int> by_chords;
  std::vector<std::pair<ChordPairs, ChordPairs>> chords_of(count);
  // rebuild diagrams from their canonical codes via the generic enumeration
  std::map<CanonicalCode, int> index;
  for (int i = 0; i < count; ++i) index[dec.classes[i]] = i;
  for (const ChordDiagram& d : enumerate_generic(dec.n)) {
    const auto it = index.find(canonical_form(d));
    if (it == index.end()) continue;
    chords_of[it->second] = {chords(d, Color::Im), chords(d, Color::Re)};
    by_chords[chords_of[it->second]] = it->second;
  }
  std::vector<std::vector<int>> adj(count);
  for (const auto& [key, i] : by_chords) {
    std::set<int> nb;
    for (int side = 0; side < 2; ++side) {
      const ChordPairs& mine = side == 0 ? key.first : key.second;
      for (std::size_t a = 0; a < mine.size(); ++a) {
        for (std::size_t b = a + 1; b < mine.size(); ++b) {
          const auto [p, q] = mine[a];
          const auto [r, s] = mine[b];
          for (const auto& [x, y] : {std::pair{std::pair{p, r}, std::pair{q, s}}, std::pair{std::pair{p, s}, std::pair{q, r}}}) {
            ChordPairs next = mine;
            next[a] = {std::min(x.first, x.second), std::max(x.first, x.second)};
            next[b] = {std::min(y.first, y.second), std::max(y.first, y.second)};
            std::sort(next.begin(), next.end());
            const auto other = side == 0 ? std::pair{next, key.second} : std::pair{key.first, next};
            const auto it = by_chords.find(other);
            if (it != by_chords.end() && it->second != i) nb.insert(it->second);
          }
        }
      }
    }
    adj[i].assign(nb.begin(), nb.end());
  }
  return adj;
}

PathLiftingReport check_path_lifting(const ChamberDecomposition& dec, int samples, int length, std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorKind::Precondition, "check_path_lifting: samples must be positive");
  const auto adj = reconnection_graph(dec);
  const int count = static_cast<int>(dec.classes.size());
  int orbit_count = 0;
  for (const int o : dec.orbit_of) orbit_count = std::max(orbit_count, o + 1);
  std::vector<std::set<int>> quotient(orbit_count);
  std::vector<std::vector<int>> members(orbit_count);
  for (int i = 0; i < count; ++i) {
    members[dec.orbit_of[i]].push_back(i);
    for (const int j : adj[i]) quotient[dec.orbit_of[i]].insert(dec.orbit_of[j]);
  }
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t size) { return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng); };

  PathLiftingReport r;
  r.samples = samples;
  for (int sample = 0; sample < samples; ++sample) {
    std::vector<int> walk{static_cast<int>(pick(orbit_count))};
    for (int step = 0; step < length; ++step) {
      const auto& nb = quotient[walk.back()];
      if (nb.empty()) {
        walk.push_back(walk.back());  // isolated orbit: constant path
        continue;
      }
      walk.push_back(*std::next(nb.begin(), static_cast<long>(pick(nb.size()))));
    }
    int cur = members[walk[0]][pick(members[walk[0]].size())];
    bool ok = true;
    for (std::size_t step = 1; step < walk.size() && ok; ++step) {
      if (walk[step] == walk[step - 1] && quotient[walk[step]].empty()) continue;
      const auto& nb = adj[cur];
      const auto it = std::find_if(nb.begin(), nb.end(), [&](int j) { return dec.orbit_of[j] == walk[step]; });
      if (it == nb.end()) ok = false;
      else cur = *it;
    }
    if (ok) ++r.lifted;
  }
  r.all_lift = r.lifted == r.samples;
  return r;
}

bool check_path_lifting(int samples) {
  for (int n = 2; n <= 4; ++n) {
    const auto dec = chamber_decomposition(n, chamber_diagram_set(n));
    if (!check_path_lifting(dec, samples, 10, 0x5eed + n).all_lift) return false;
  }
  return true;
}

std::string chamber_report(const ChamberDecomposition& dec) {
  std::string out;
  out += "degree " + std::to_string(dec.n) + "\n";
  out += "classes " + std::to_string(dec.classes.size()) + "\n";
  out += "group_order " + std::to_string(dec.group_order) + " (nominal " + std::to_string(dec.nominal_chambers) + ")\n";
  out += "chambers " + std::to_string(dec.chambers.size()) + " (nominal " + std::to_string(dec.nominal_chambers) + ")" +
         (static_cast<int>(dec.chambers.size()) != dec.nominal_chambers ? " MISMATCH" : "") + "\n";
  std::string stab;
  for (const auto& g : dec.domain_stabilizer) stab += (stab.empty() ? "" : ", ") + g.to_string();
  out += "fundamental_domain_stabilizer {" + stab + "}\n";
  out += std::string("partition ") + (dec.partition ? "yes" : "no") + "\n";
  out += std::string("transitive ") + (dec.transitive ? "yes" : "no") + "\n";
  out += std::string("simply_transitive ") + (dec.simply_transitive ? "yes" : "no") + "\n";
  for (std::size_t c = 0; c < dec.chambers.size(); ++c) {
    const Chamber& ch = dec.chambers[c];
    out += "chamber " + std::to_string(c) + " label " + ch.label.to_string() + " members " +
           std::to_string(ch.members.size()) + "\n";
    for (const auto& m : ch.members) out += "  " + m + "\n";
  }
  return out;
}

}  // namespace gaussweb
