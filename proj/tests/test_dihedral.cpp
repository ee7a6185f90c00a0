#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "gaussweb/dihedral.hpp"
#include "gaussweb/strata.hpp"

using namespace gaussweb;

TEST_CASE("group axioms") {
  for (int n = 1; n <= 3; ++n) {
    const auto g = group_elements(n);
    CHECK(static_cast<int>(g.size()) == 8 * n);
    CHECK(std::set<DihedralElement>(g.begin(), g.end()).size() == g.size());
    const auto e = DihedralElement::identity(n);
    for (const auto& a : g) {
      CHECK(a * e == a);
      CHECK(e * a == a);
      CHECK(a * a.inverse() == e);
      for (const auto& b : g) {
        for (const auto& c : g) CHECK((a * b) * c == a * (b * c));
      }
    }
    const auto s = DihedralElement::s(n);
    const auto t = DihedralElement::t(n);
    CHECK(t * t == e);
    CHECK(t * s * t == s.inverse());
    DihedralElement p = s;
    int order = 1;
    while (!(p == e)) {
      p = p * s;
      ++order;
    }
    CHECK(order == 4 * n);
  }
}

TEST_CASE("element text round trips") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : group_elements(n)) CHECK(DihedralElement::parse(n, g.to_string()) == g);
  }
  CHECK(DihedralElement::parse(3, "s^-1") == DihedralElement(3, 11, 0));
  CHECK(DihedralElement::parse(3, "t s") == DihedralElement(3, -1, 1));
  CHECK_THROWS_AS(DihedralElement::parse(3, "x"), Error);
  CHECK_THROWS_AS(DihedralElement::parse(3, "s^"), Error);
}

TEST_CASE("polynomial action matches its pointwise definition") {
  // s: P(z) -> i P(w^-1 z), t: P(z) -> conj P(conj z), w = exp(i pi / 2n)
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int n = 1; n <= 5; ++n) {
    const MonicPolynomial p = random_polynomial(n, 400 + n);
    const Complex w = std::polar(1.0, std::numbers::pi / (2 * n));
    const MonicPolynomial ps = act_on_poly(DihedralElement::s(n), p);
    const MonicPolynomial pt = act_on_poly(DihedralElement::t(n), p);
    for (int k = 0; k < 5; ++k) {
      const Complex z{u(rng), u(rng)};
      CHECK(std::abs(ps(z) - Complex{0, 1} * p(z / w)) < 1e-10 * (1 + std::abs(p(z / w))));
      CHECK(std::abs(pt(z) - std::conj(p(std::conj(z)))) < 1e-12 * (1 + std::abs(p(z))));
    }
  }
}

TEST_CASE("polynomial action is a group action") {
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 5; ++n) {
    const auto g = group_elements(n);
    const MonicPolynomial p = random_polynomial(n, 500 + n);
    for (int k = 0; k < 20; ++k) {
      const auto& a = g[rng() % g.size()];
      const auto& b = g[rng() % g.size()];
      const MonicPolynomial lhs = act_on_poly(a, act_on_poly(b, p));
      const MonicPolynomial rhs = act_on_poly(a * b, p);
      for (int j = 0; j < n; ++j) CHECK(std::abs(lhs.coefficient(j) - rhs.coefficient(j)) < 1e-12);
    }
    const MonicPolynomial same = act_on_poly(DihedralElement::identity(n), p);
    for (int j = 0; j < n; ++j) CHECK(same.coefficient(j) == p.coefficient(j));
  }
}

TEST_CASE("rotation by 2n quarter-slots is z -> -z up to sign") {
  const MonicPolynomial p = parse_polynomial("z^3-(0.2+0.1i)z^2+0.3z-0.4i");
  const MonicPolynomial q = act_on_poly(DihedralElement(3, 6, 0), p);
  // exact units: coefficients pick up +-1 with no rounding
  CHECK(q.coefficient(2) == -p.coefficient(2));
  CHECK(q.coefficient(1) == p.coefficient(1));
  CHECK(q.coefficient(0) == -p.coefficient(0));
}

TEST_CASE("diagram action is a group action on classes") {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 4; ++n) {
    const auto g = group_elements(n);
    for (const ChordDiagram& d : enumerate_generic(n)) {
      const auto& a = g[rng() % g.size()];
      const auto& b = g[rng() % g.size()];
      CHECK(canonical_form(act_on_diagram(a, act_on_diagram(b, d))) == canonical_form(act_on_diagram(a * b, d)));
      CHECK(canonical_form(act_on_diagram(DihedralElement::identity(n), d)) == canonical_form(d));
    }
  }
}

TEST_CASE("slot permutations are bijections preserving or swapping colors") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : group_elements(n)) {
      const auto perm = slot_permutation(g);
      CHECK(std::set<int>(perm.begin(), perm.end()).size() == perm.size());
      const bool swap = g.rotation() % 2 == 1;
      for (int j = 0; j < 4 * n; ++j) CHECK(((perm[j] % 2) != (j % 2)) == swap);
    }
  }
}

TEST_CASE("measured group order and its mismatch with 4n are reported") {
  for (int n = 1; n <= 6; ++n) {
    const GroupOrderReport r = measured_group_order(n);
    CHECK(r.measured == 8 * n);
    CHECK(r.rotation_order == 4 * n);
    CHECK(r.nominal == 4 * n);
    CHECK(r.mismatch);
  }
}

TEST_CASE("tracing commutes with the generators") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const MonicPolynomial p = random_polynomial(n, 600 + 10 * n + seed);
      try {
        CHECK(check_equivariance(p, DihedralElement::s(n)));
        CHECK(check_equivariance(p, DihedralElement::t(n)));
        CHECK(check_equivariance(p, DihedralElement(n, 3, 1)));
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonGeneric);
      }
    }
  }
}

TEST_CASE("canonical codes are a congruence for the action") {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 4; ++n) {
    const auto g = group_elements(n);
    for (const ChordDiagram& d : enumerate_generic(n)) {
      const ChordDiagram c = canonicalize(d);
      const auto& a = g[rng() % g.size()];
      CHECK(canonical_form(act_on_diagram(a, d)) == canonical_form(act_on_diagram(a, c)));
    }
  }
}

TEST_CASE("action moves chords by the slot permutation") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& g : group_elements(n)) {
      const auto perm = slot_permutation(g);
      const bool swap = g.rotation() % 2 == 1;
      for (const ChordDiagram& d : enumerate_generic(n)) {
        const ChordDiagram gd = act_on_diagram(g, d);
        for (const Color c : {Color::Im, Color::Re}) {
          const Color image = swap ? (c == Color::Im ? Color::Re : Color::Im) : c;
          std::set<std::pair<int, int>> expect, got;
          for (const auto& [a, b] : chords(d, c)) expect.emplace(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
          for (const auto& [a, b] : chords(gd, image)) got.emplace(std::min(a, b), std::max(a, b));
          CHECK(got == expect);
        }
      }
    }
  }
}
