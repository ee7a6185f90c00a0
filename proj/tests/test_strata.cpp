#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gaussweb/strata.hpp"
#include "support.hpp"

using namespace gaussweb;

namespace {

// Catalan numbers by the convolution recurrence.
std::vector<long long> catalan_table(int m) {
  std::vector<long long> c(m + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= m; ++k) {
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  }
  return c;
}

bool crossing(std::pair<int, int> a, std::pair<int, int> b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

}  // namespace

TEST_CASE("noncrossing matchings are counted by the Catalan numbers") {
  const auto table = catalan_table(12);
  for (int m = 1; m <= 10; ++m) {
    const auto all = noncrossing_matchings(m);
    CHECK(static_cast<long long>(all.size()) == table[m]);
    CHECK(catalan(m) == table[m]);
    std::set<NoncrossingMatching> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    if (m > 6) continue;
    for (const auto& mt : all) {
      std::set<int> pts;
      for (const auto& [a, b] : mt) {
        CHECK(a < b);
        pts.insert(a);
        pts.insert(b);
      }
      CHECK(static_cast<int>(pts.size()) == 2 * m);
      for (const auto& x : mt) {
        for (const auto& y : mt) CHECK_FALSE(crossing(x, y));
      }
    }
  }
  CHECK_THROWS_AS(noncrossing_matchings(0), Error);
  CHECK_THROWS_AS(noncrossing_matchings(13), Error);
}

TEST_CASE("generic enumeration is sorted, distinct and valid") {
  const std::vector<std::size_t> expected{1, 4, 22, 140};
  for (int n = 1; n <= 4; ++n) {
    const auto ds = enumerate_generic(n);
    CHECK(ds.size() == expected[n - 1]);
    std::vector<CanonicalCode> codes;
    for (const auto& d : ds) {
      codes.push_back(canonical_form(d));
      CHECK(is_generic(d));
      CHECK(testing::diagram_violation(d) == "");
    }
    CHECK(std::is_sorted(codes.begin(), codes.end()));
    CHECK(std::set<CanonicalCode>(codes.begin(), codes.end()).size() == codes.size());
  }
  CHECK_THROWS_AS(enumerate_generic(7), Error);
}

TEST_CASE("base diagram") {
  for (int n = 1; n <= 5; ++n) {
    const ChordDiagram d = base_diagram(n);
    CHECK(is_generic(d));
    const auto im = chords(d, Color::Im);
    const auto re = chords(d, Color::Re);
    for (int k = 0; k < n; ++k) {
      CHECK(im[k] == std::pair{4 * k, 4 * k + 2});
      CHECK(re[k] == std::pair{4 * k + 1, 4 * k + 3});
    }
  }
}

TEST_CASE("parenthesized words") {
  const auto w = ParenthesizedWord::parse("((ab)c)de");
  CHECK(w.letters == "abcde");
  CHECK(w.parenthesis_count() == 2);
  CHECK(w.to_string() == "((ab)c)de");
  auto mult = w.multiplicities();
  std::sort(mult.begin(), mult.end());
  CHECK(mult == std::vector<int>{2, 3});
  CHECK(ParenthesizedWord::parse(w.to_string()) == w);
  for (const char* bad : {"(a)bc", "(ab", "ab)", "a(b1)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ParenthesizedWord::parse(bad), Error);
  }
}

TEST_CASE("merges produce valid forests and the matching words") {
  auto f = start_merges(5);
  CHECK(forest_to_word(f).to_string() == "abcde");
  f = merge_letters(f, "ab");
  CHECK(forest_to_word(f).to_string() == "(ab)cde");
  CHECK_NOTHROW(validate(f.diagram));
  f = merge_letters(f, "abc");
  CHECK(forest_to_word(f).to_string() == "((ab)c)de");
  f = merge_letters(f, "de");
  CHECK(forest_to_word(f).to_string() == "((ab)c)(de)");
  CHECK_NOTHROW(validate(f.diagram));
  int critical = 0;
  for (const auto& nd : f.diagram.nodes) critical += nd.kind == NodeKind::Critical;
  CHECK(critical == 3);

  // a ternary merge gives one pair of multiplicity 3
  auto g = merge(start_merges(4), MergeStep{1, 3});
  CHECK(forest_to_word(g).to_string() == "a(bcd)");
  CHECK(forest_to_word(g).multiplicities() == std::vector<int>{3});

  CHECK_THROWS_AS(merge(start_merges(3), MergeStep{2, 2}), Error);
  CHECK_THROWS_AS(merge_letters(start_merges(3), "ac"), Error);
}

TEST_CASE("RE merges are supported too") {
  auto f = merge_letters(start_merges(3, Color::Re), "bc");
  CHECK(forest_to_word(f).to_string() == "a(bc)");
  CHECK_NOTHROW(validate(f.diagram));
}

TEST_CASE("different association orders of three letters give the same diagram") {
  auto f = merge_letters(merge_letters(start_merges(4), "ab"), "abc");
  auto g = merge_letters(merge_letters(start_merges(4), "bc"), "abc");
  CHECK(canonical_form(f.diagram) == canonical_form(g.diagram));
  CHECK_FALSE(forest_to_word(f) == forest_to_word(g));
}

TEST_CASE("lettered curves of the base diagram") {
  const ChordDiagram d = base_diagram(3);
  const auto im = lettered_curves(d, Color::Im);
  REQUIRE(im.size() == 3);
  CHECK(im[0] == std::pair{0, 2});
  CHECK(im[2] == std::pair{8, 10});
}

TEST_CASE("dissipation crosses a codimension-one wall") {
  const std::vector<Complex> roots{{0.3, 0.5}, {-0.4, -0.1}};
  const MonicPolynomial p = MonicPolynomial::from_roots(roots);
  const DissipationEvent ev = dissipate(p, "ab", 0.1);
  CHECK(ev.letters == "ab");
  CHECK(std::abs(ev.degenerate(ev.critical_point).imag()) < 1e-9);
  CHECK(std::abs(ev.degenerate.derivative_at(ev.critical_point)) < 1e-9);
  CHECK(ev.before != ev.at);
  CHECK(ev.after != ev.at);
  CHECK(ev.before != ev.after);
  CHECK(ev.at.find('c') != std::string::npos);  // a critical node appears
  CHECK(ev.at == canonical_form(web_to_diagram(extract_web(parse_polynomial("z^2-1")))));
}

TEST_CASE("maximal parenthesizations are binary bracketings") {
  CHECK(maximal_parenthesizations(3).size() == 2);
  CHECK(maximal_parenthesizations(4).size() == 5);
  CHECK(maximal_parenthesizations(5).size() == 14);
  for (const auto& fam : maximal_parenthesizations(5)) CHECK(fam.size() == 4);
}

TEST_CASE("pentagon") {
  const PentagonReport r = pentagon_report();
  CHECK(r.vertices == 5);
  CHECK(r.edges == 5);
  CHECK(r.is_cycle);
  CHECK(r.words_realized);
  std::vector<int> degree(5, 0);
  for (const auto& [a, b] : r.edge_list) {
    ++degree[a];
    ++degree[b];
  }
  for (const int d : degree) CHECK(d == 2);
  CHECK(pentagon_check());
}
