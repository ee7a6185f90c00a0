#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "gaussweb/chambers.hpp"
#include "gaussweb/strata.hpp"
#include "support.hpp"

using namespace gaussweb;

namespace {

const ChamberDecomposition& decomposition(int n) {
  static std::map<int, ChamberDecomposition> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, chamber_decomposition(n, chamber_diagram_set(n))).first;
  return it->second;
}

int chamber_with_label(const ChamberDecomposition& dec, const DihedralElement& g) {
  for (std::size_t c = 0; c < dec.chambers.size(); ++c) {
    for (const auto& h : dec.domain_stabilizer) {
      if (dec.chambers[c].label * h == g) return static_cast<int>(c);
    }
  }
  return -1;
}

}  // namespace

TEST_CASE("real-locus diagram matches traced real-rooted polynomials") {
  CHECK(canonical_form(real_locus_diagram(2)) == canonical_form(web_to_diagram(extract_web(parse_polynomial("z^2-z")))));
  for (int n = 1; n <= 6; ++n) {
    const ChordDiagram d = real_locus_diagram(n);
    CHECK(testing::diagram_violation(d) == "");
    int critical = 0;
    for (const auto& nd : d.nodes) critical += nd.kind == NodeKind::Critical;
    CHECK(critical == n - 1);
    for (std::uint64_t s = 0; s < 3; ++s) {
      const ChordDiagram t = web_to_diagram(extract_web(random_real_rooted_polynomial(n, 10 * n + s)));
      CHECK(canonical_form(t) == canonical_form(d));
    }
  }
}

TEST_CASE("real-locus diagram is fixed by t and by the half turn") {
  for (int n = 1; n <= 6; ++n) {
    const ChordDiagram d = real_locus_diagram(n);
    CHECK(canonical_form(act_on_diagram(DihedralElement::t(n), d)) == canonical_form(d));
    CHECK(canonical_form(act_on_diagram(DihedralElement(n, 2 * n, 0), d)) == canonical_form(d));
    if (n > 1) CHECK(canonical_form(act_on_diagram(DihedralElement::s(n), d)) != canonical_form(d));
  }
}

TEST_CASE("degree one: one class, one chamber") {
  const auto& dec = decomposition(1);
  CHECK(dec.classes.size() == 1);
  CHECK(dec.chambers.size() == static_cast<std::size_t>(dec.group_order) / dec.domain_stabilizer.size());
  CHECK(dec.chambers.size() == 1);
}

TEST_CASE("chambers partition the classes") {
  for (int n = 1; n <= 4; ++n) {
    const auto& dec = decomposition(n);
    CHECK(dec.partition);
    std::map<CanonicalCode, int> count;
    for (const Chamber& c : dec.chambers) {
      CHECK(std::set<CanonicalCode>(c.members.begin(), c.members.end()).size() == c.members.size());
      for (const auto& m : c.members) ++count[m];
    }
    CHECK(count.size() == dec.classes.size());
    for (const auto& [code, k] : count) CHECK(k == 1);
  }
}

TEST_CASE("orbit-stabilizer counts") {
  for (int n = 1; n <= 4; ++n) {
    const auto& dec = decomposition(n);
    // independent stabilizer sizes from the action table
    std::map<int, int> orbit_size;
    for (const int o : dec.orbit_of) ++orbit_size[o];
    for (std::size_t i = 0; i < dec.classes.size(); ++i) {
      int stab = 0;
      for (const auto& perm : dec.action) stab += perm[i] == static_cast<int>(i);
      CHECK(stab * orbit_size[dec.orbit_of[i]] == dec.group_order);
    }
    CHECK(dec.chambers.size() * dec.domain_stabilizer.size() == static_cast<std::size_t>(dec.group_order));
    CHECK(dec.fundamental_domain.size() == orbit_size.size());
  }
}

TEST_CASE("chamber labels carry the fundamental representative into the chamber") {
  for (int n = 1; n <= 4; ++n) {
    const auto& dec = decomposition(n);
    int rep_stabilizer = 0;
    for (const auto& perm : dec.action) rep_stabilizer += perm[dec.fundamental_representative] == dec.fundamental_representative;
    const int sharing = rep_stabilizer / static_cast<int>(dec.domain_stabilizer.size());
    std::map<CanonicalCode, std::vector<const Chamber*>> by_representative;
    for (const Chamber& c : dec.chambers) {
      CHECK(std::binary_search(c.closed_members.begin(), c.closed_members.end(), c.representative));
      CHECK(c.closed_members.size() == dec.fundamental_domain.size());
      by_representative[c.representative].push_back(&c);
    }
    // chambers whose labels differ by a stabilizer element of the representative share it;
    // a partition can place it in only one of them
    CAPTURE(n);
    for (const auto& [code, group] : by_representative) {
      CHECK(static_cast<int>(group.size()) == sharing);
      int holding = 0;
      for (const Chamber* c : group) holding += std::binary_search(c->members.begin(), c->members.end(), code);
      CHECK(holding == 1);
    }
    if (sharing == 1) {
      for (const Chamber& c : dec.chambers) CHECK(std::binary_search(c.members.begin(), c.members.end(), c.representative));
    }
  }
  // no domain class has a stabilizer as small as the domain's at n = 2, 3
  CHECK(decomposition(4).domain_stabilizer.size() == 1);
  int free_in_domain = 0;
  for (const int r : decomposition(4).fundamental_domain) {
    int s = 0;
    for (const auto& perm : decomposition(4).action) s += perm[r] == r;
    free_in_domain += s == 1;
  }
  CHECK(free_in_domain > 0);
}

TEST_CASE("action on chambers is transitive; stabilizer measured") {
  for (int n = 1; n <= 4; ++n) {
    const auto& dec = decomposition(n);
    CHECK(dec.transitive);
    // translates of the fundamental chamber cover every chamber
    std::set<int> covered;
    for (const auto& g : group_elements(n)) covered.insert(chamber_with_label(dec, g));
    CHECK(covered.size() == dec.chambers.size());
    CHECK(covered.count(-1) == 0);
  }
  // every quadratic is a translate of an even one, so the half turn fixes every class
  CHECK(decomposition(1).domain_stabilizer.size() == 8);
  CHECK(decomposition(2).domain_stabilizer.size() == 2);
  CHECK(decomposition(2).domain_stabilizer[1] == DihedralElement(2, 4, 0));
  for (int n = 3; n <= 4; ++n) {
    CHECK(decomposition(n).domain_stabilizer.size() == 1);
    CHECK(decomposition(n).simply_transitive);
    CHECK(static_cast<int>(decomposition(n).chambers.size()) == 8 * n);
  }
}

TEST_CASE("fundamental chamber") {
  for (int n = 1; n <= 4; ++n) {
    const auto& dec = decomposition(n);
    const int f = fundamental_chamber(dec);
    CHECK(dec.chambers[f].label == DihedralElement::identity(n));
    const CanonicalCode real = canonical_form(real_locus_diagram(n));
    CHECK(std::binary_search(dec.chambers[f].members.begin(), dec.chambers[f].members.end(), real));
    int holders = 0;
    for (const Chamber& c : dec.chambers) holders += std::binary_search(c.members.begin(), c.members.end(), real);
    CHECK(holders == 1);
  }
}

TEST_CASE("open set that is not action-closed is refused with escapees") {
  std::vector<ChordDiagram> ds = enumerate_generic(3);
  ds.push_back(real_locus_diagram(3));
  try {
    chamber_decomposition(3, ds);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
    CHECK(std::string(e.what()).find("escapees") != std::string::npos);
  }
}

TEST_CASE("galleries") {
  for (int n = 2; n <= 4; ++n) {
    const auto& dec = decomposition(n);
    const int f = fundamental_chamber(dec);
    CHECK(gallery(dec, f, f).length() == 0);
    const int next = chamber_with_label(dec, DihedralElement::s(n));
    CHECK(gallery(dec, f, next).length() == 1);
    const int antipode = chamber_with_label(dec, DihedralElement(n, 2 * n, 0));
    if (antipode != f) CHECK(gallery(dec, f, antipode).length() == 2 * n);

    const int count = static_cast<int>(dec.chambers.size());
    std::mt19937_64 rng(n);
    for (int k = 0; k < 30; ++k) {
      const int a = static_cast<int>(rng() % count), b = static_cast<int>(rng() % count), c = static_cast<int>(rng() % count);
      const Gallery ab = gallery(dec, a, b);
      CHECK(ab.length() == gallery(dec, b, a).length());
      CHECK(ab.length() <= gallery(dec, a, c).length() + gallery(dec, c, b).length());
      REQUIRE(ab.chambers.size() == ab.moves.size() + 1);
      CHECK(ab.chambers.front() == a);
      CHECK(ab.chambers.back() == b);
      for (std::size_t i = 0; i < ab.moves.size(); ++i) {
        const DihedralElement gen = ab.moves[i] == "t" ? DihedralElement::t(n)
                                    : ab.moves[i] == "s" ? DihedralElement::s(n)
                                                         : DihedralElement::s(n).inverse();
        CHECK(chamber_with_label(dec, dec.chambers[ab.chambers[i]].label * gen) == ab.chambers[i + 1]);
      }
    }
  }
}

TEST_CASE("reconnection graph is symmetric and respects the action") {
  for (int n = 2; n <= 4; ++n) {
    const auto& dec = decomposition(n);
    const auto adj = reconnection_graph(dec);
    std::set<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < adj.size(); ++i) {
      for (const int j : adj[i]) edges.emplace(static_cast<int>(i), j);
    }
    for (const auto& [a, b] : edges) {
      CHECK(edges.count({b, a}) == 1);
      for (const auto& perm : dec.action) CHECK(edges.count({perm[a], perm[b]}) == 1);
    }
  }
}

TEST_CASE("path lifting") {
  for (int n = 2; n <= 4; ++n) {
    const auto& dec = decomposition(n);
    const auto r = check_path_lifting(dec, 100, 10, 42 + n);
    CHECK(r.lifted == 100);
    CHECK(r.all_lift);
    // constant paths
    CHECK(check_path_lifting(dec, 5, 0, 1).all_lift);
  }
  // a single wall crossing lifts to an edge between the corresponding classes
  const auto& dec = decomposition(3);
  const auto adj = reconnection_graph(dec);
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (const int j : adj[i]) {
      if (dec.home[i] == dec.home[j]) continue;
      // the lift from any other preimage of i's orbit crosses into j's orbit
      for (const auto& perm : dec.action) {
        const auto& nb = adj[perm[i]];
        CHECK(std::find(nb.begin(), nb.end(), perm[j]) != nb.end());
      }
      break;
    }
  }
  CHECK(check_path_lifting(5));
}

TEST_CASE("real-locus single-color forests") {
  for (int n = 1; n <= 5; ++n) {
    const ChordDiagram d = real_locus_diagram(n);
    // the real axis lies in the zero set of the imaginary part
    const ChordDiagram re = single_color_forest(d, Color::Re);
    const ChordDiagram im = single_color_forest(d, Color::Im);
    CHECK(std::none_of(re.nodes.begin(), re.nodes.end(), [](const DiagramNode& x) { return x.kind == NodeKind::Critical; }));
    CHECK(static_cast<int>(re.edges.size()) == n);
    CHECK(std::count_if(im.nodes.begin(), im.nodes.end(), [](const DiagramNode& x) { return x.kind == NodeKind::Critical; }) == n - 1);
  }
}

TEST_CASE("chamber count times fundamental size equals the class count exactly for free orbits") {
  for (int n = 1; n <= 4; ++n) {
    const auto& dec = decomposition(n);
    const std::size_t fundamental = dec.chambers[fundamental_chamber(dec)].members.size();
    bool free_orbits = true;
    for (std::size_t i = 0; i < dec.classes.size(); ++i) {
      std::size_t stab = 0;
      for (const auto& perm : dec.action) stab += perm[i] == static_cast<int>(i);
      free_orbits = free_orbits && stab == dec.domain_stabilizer.size();
    }
    CAPTURE(n);
    CHECK((dec.chambers.size() * fundamental == dec.classes.size()) == free_orbits);
  }
  // the real-locus orbit is never free for n >= 2: t fixes it
  CHECK(decomposition(3).chambers.size() * decomposition(3).chambers[0].members.size() != decomposition(3).classes.size());
}
