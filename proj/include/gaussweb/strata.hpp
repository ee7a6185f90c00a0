#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaussweb/diagram.hpp"

namespace gaussweb {

/// Perfect noncrossing matching on points 0..2m-1, pairs (a, b) with a < b.
using NoncrossingMatching = std::vector<std::pair<int, int>>;

/// All Catalan(m) matchings, 1 <= m <= 12.
std::vector<NoncrossingMatching> noncrossing_matchings(int m);

/// Closed-form Catalan number (2m choose m)/(m+1).
long long catalan(int m);

/// Generic diagrams of degree n (1 <= n <= 6), sorted by canonical code.
std::vector<ChordDiagram> enumerate_generic(int n);

/// IM chords (4k, 4k+2) and RE chords (4k+1, 4k+3); curves are lettered
/// a, b, c, ... counterclockwise.
ChordDiagram base_diagram(int n);

/// Letters with parentheses; every interval covers at least two letters.
struct ParenthesizedWord {
  std::string letters;
  std::vector<std::pair<int, int>> intervals;  // inclusive letter positions

  int parenthesis_count() const noexcept { return static_cast<int>(intervals.size()); }
  /// Letters enclosed by each pair (the multiplicity of the pair).
  std::vector<int> multiplicities() const;
  std::string to_string() const;
  static ParenthesizedWord parse(std::string_view text);
  bool operator==(const ParenthesizedWord& o) const;
};

/// One merge event: `count` consecutive curve groups starting at group
/// position `first` are joined at a new CRITICAL node of valency 2*count.
struct MergeStep {
  int first = 0;
  int count = 2;
};

/// A diagram reached from base_diagram by recorded merges.
struct MergedForest {
  int n = 0;
  Color color = Color::Im;
  ChordDiagram diagram;
  std::vector<MergeStep> history;
  std::vector<std::pair<int, int>> groups;  // letter intervals of current groups
};

MergedForest start_merges(int n, Color color = Color::Im);

/// Applies a merge; throws Error(Precondition) on an invalid step.
MergedForest merge(const MergedForest& f, MergeStep step);

/// Merges the groups containing exactly the given letters, e.g. "ab".
MergedForest merge_letters(const MergedForest& f, std::string_view letters);

/// Replays the history from base_diagram to check reachability, then
/// writes one parenthesis pair per merge.
ParenthesizedWord forest_to_word(const MergedForest& f);

/// Letter of each curve of color c in a generic diagram: curves ordered
/// by their first leaf. Returns leaf pairs in letter order.
ChordPairs lettered_curves(const ChordDiagram& d, Color c);

struct DissipationEvent {
  std::string letters;
  Color color = Color::Im;
  Complex critical_point;
  Complex critical_value;           // of P before steering
  MonicPolynomial degenerate{std::vector<Complex>{0.0}};  // critical value driven to 0
  MonicPolynomial past{std::vector<Complex>{0.0}};        // continued by eps beyond it
  CanonicalCode before, at, after;
};

/// Drives the chosen harmonic part's critical value at the critical point
/// whose merged tree joins exactly `letters` to zero by moving a_0.
DissipationEvent dissipate(const MonicPolynomial& p, std::string_view letters, double eps, Color color = Color::Im,
                           const TraceParams& params = {});

/// Interval families on n letters containing the full interval.
/// Maximal ones are the binary bracketings.
std::vector<std::vector<std::pair<int, int>>> maximal_parenthesizations(int n);

struct PentagonReport {
  int vertices = 0;
  int edges = 0;
  bool is_cycle = false;
  std::vector<std::string> vertex_words;
  std::vector<std::pair<int, int>> edge_list;
  std::vector<std::string> edge_words;  // the codimension-one word of each edge
  bool words_realized = false;          // every word reproduced by forest_to_word
};

PentagonReport pentagon_report();
bool pentagon_check();

}  // namespace gaussweb
