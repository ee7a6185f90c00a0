#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "gaussweb/mgt.hpp"
#include "gaussweb/poly.hpp"

using namespace gaussweb;

namespace {

int phi_by_gcd(int q) {
  int count = 0;
  for (int a = 1; a <= q; ++a) count += std::gcd(a, q) == 1;
  return count;
}

// Closure of every unit multiplication and a -> 1 - a, on raw tables.
std::set<std::vector<int>> brute_closure(int q) {
  std::vector<std::vector<int>> gens;
  for (int d = 1; d < q; ++d) {
    if (std::gcd(d, q) != 1) continue;
    std::vector<int> m(q);
    for (int a = 0; a < q; ++a) m[a] = d * a % q;
    gens.push_back(m);
  }
  std::vector<int> th(q);
  for (int a = 0; a < q; ++a) th[a] = ((1 - a) % q + q) % q;
  gens.push_back(th);
  std::vector<int> id(q);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      std::vector<int> next(q);
      for (int a = 0; a < q; ++a) next[a] = g[queue[i][a]];
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

MgtWord theta_word() { return {MgtGenerator{MgtGenerator::Kind::Theta, 1}}; }
MgtWord mult_word(int d) { return {MgtGenerator{MgtGenerator::Kind::Multiply, d}}; }

}  // namespace

TEST_CASE("small groups") {
  CHECK(mgt_group(2).elements.size() == 2);
  CHECK(mgt_group(5).elements.size() == 20);
  CHECK(mgt_group(12).elements.size() == 48);
  CHECK_THROWS_AS(mgt_group(1), Error);
  CHECK_THROWS_AS(mgt_group(201), Error);
}

TEST_CASE("group order is q times phi(q)") {
  for (int q = 2; q <= 50; ++q) {
    CAPTURE(q);
    CHECK(euler_phi(q) == phi_by_gcd(q));
    const MgtGroup g = mgt_group(q);
    CHECK(static_cast<int>(g.elements.size()) == q * phi_by_gcd(q));
    CHECK(g.elements.front() == ModularPermutation::identity(q));
    CHECK(std::set<ModularPermutation>(g.elements.begin(), g.elements.end()).size() == g.elements.size());
    REQUIRE(g.words.size() == g.elements.size());
    for (std::size_t i = 0; i < g.elements.size(); ++i) CHECK(evaluate(q, g.words[i]) == g.elements[i]);
  }
}

TEST_CASE("closure matches a brute-force closure over all generators") {
  for (int q = 2; q <= 16; ++q) {
    const auto brute = brute_closure(q);
    std::set<std::vector<int>> ours;
    for (const auto& e : mgt_group(q).elements) ours.insert(e.table);
    CHECK(ours == brute);
  }
}

TEST_CASE("permutation arithmetic") {
  for (int q : {2, 7, 12}) {
    const auto th = ModularPermutation::theta(q);
    CHECK(th * th == ModularPermutation::identity(q));
    CHECK(th.order() == 2);
    const auto m = ModularPermutation::multiplication(q, q - 1);
    CHECK(m == ModularPermutation::negation(q));
    for (const auto& e : mgt_group(q).elements) {
      CHECK(e.is_bijection());
      CHECK(e * e.inverse() == ModularPermutation::identity(q));
    }
  }
  // composition order: (f*g)(a) = f(g(a))
  const auto f = ModularPermutation::theta(7);
  const auto g = ModularPermutation::multiplication(7, 3);
  CHECK((f * g)(2) == f(g(2)));
  CHECK((f * g)(2) == 2);  // 1 - 6 = -5 = 2
}

TEST_CASE("affine normal forms") {
  for (int q = 2; q <= 30; ++q) {
    const auto th = affine_normal_form(ModularPermutation::theta(q));
    REQUIRE(th.has_value());
    CHECK(th->d == q - 1);
    CHECK(th->e == 1 % q);
    for (int d = 1; d < q; ++d) {
      if (std::gcd(d, q) != 1) continue;
      const auto m = affine_normal_form(ModularPermutation::multiplication(q, d));
      REQUIRE(m.has_value());
      CHECK(*m == AffineNormalForm{q, d, 0});
    }
    for (const auto& e : mgt_group(q).elements) {
      const auto a = affine_normal_form(e);
      REQUIRE(a.has_value());
      CHECK(from_affine(*a) == e);
      CHECK(std::gcd(a->d, q) == 1);
    }
  }
  // two disjoint transpositions are not affine mod 5
  const ModularPermutation swap{5, {1, 0, 3, 2, 4}};
  CHECK_FALSE(affine_normal_form(swap).has_value());
}

TEST_CASE("dihedral subgroup") {
  CHECK(dihedral_subgroup(3).size() == 6);
  CHECK(dihedral_subgroup(4).size() == 8);
  for (int q = 3; q <= 50; ++q) {
    CAPTURE(q);
    const auto d = dihedral_subgroup(q);
    CHECK(static_cast<int>(d.size()) == 2 * q);
    const auto all = mgt_group(q).elements;
    const std::set<ModularPermutation> members(all.begin(), all.end());
    for (const auto& e : d) CHECK(members.count(e) == 1);
    // -a followed by 1 - a is a -> a + 1, of order q
    const auto r = ModularPermutation::theta(q) * ModularPermutation::negation(q);
    CHECK(r(0) == 1);
    CHECK(r.order() == q);
    CHECK(dihedral_presentation_holds(q));
    const MgtRow row = mgt_row(q);
    CHECK(row.ok());
    CHECK(row.dihedral_order == 2 * q);
  }
  CHECK_THROWS_AS(dihedral_subgroup(2), Error);
  CHECK(mgt_row(2).ok());
  CHECK(mgt_row(2).dihedral_order == 0);
}

TEST_CASE("tower maps on generators") {
  CHECK(tower_map(6, 3, theta_word()) == ModularPermutation::theta(3));
  CHECK(tower_map(12, 4, mult_word(5)) == ModularPermutation::identity(4));
  CHECK(tower_map(12, 4, mult_word(7)) == ModularPermutation::negation(4));
  for (int q = 2; q <= 12; ++q) {
    for (const auto& w : mgt_group(q).words) CHECK(tower_map(q, q, w) == evaluate(q, w));
  }
  CHECK_THROWS_AS(tower_map(12, 5, theta_word()), Error);
  CHECK_THROWS_AS(tower_map(5, AffineNormalForm{12, 1, 0}), Error);
}

TEST_CASE("tower map is reduction of affine forms") {
  for (int q = 2; q <= 36; ++q) {
    const MgtGroup g = mgt_group(q);
    for (int p = 1; p <= q; ++p) {
      if (q % p != 0 || p < 2) continue;
      for (std::size_t i = 0; i < g.elements.size(); ++i) {
        const auto a = *affine_normal_form(g.elements[i]);
        ModularPermutation expect = ModularPermutation::identity(p);
        for (int x = 0; x < p; ++x) expect.table[x] = ((a.d * x + a.e) % p + p) % p;
        CHECK(tower_map(q, p, g.words[i]) == expect);
        CHECK(tower_map(p, a) == AffineNormalForm{p, a.d % p, a.e % p});
      }
      CHECK_NOTHROW(check_tower_well_defined(g, p));
    }
  }
}

TEST_CASE("tower maps are homomorphisms and compose") {
  for (int q = 2; q <= 24; ++q) {
    const MgtGroup g = mgt_group(q);
    for (int p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      CHECK(tower_is_homomorphism(g, p));
      for (int r = 2; r <= p; ++r) {
        if (p % r == 0) CHECK(tower_compatibility(q, p, r));
      }
    }
  }
  CHECK(tower_compatibility(12, 6, 3));
  CHECK(tower_compatibility(8, 4, 2));
  CHECK_THROWS_AS(tower_compatibility(12, 5, 1), Error);
}

TEST_CASE("table formats") {
  std::vector<MgtRow> rows;
  for (int q = 2; q <= 6; ++q) rows.push_back(mgt_row(q));
  const std::string table = format_mgt_table(rows);
  CHECK(std::count(table.begin(), table.end(), '\n') == 6);
  const std::string tsv = format_mgt_tsv(rows);
  CHECK(tsv.find("5\t20\t20\t10\t1\t1\n") != std::string::npos);
}
