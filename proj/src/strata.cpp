#include "gaussweb/strata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace gaussweb {

namespace {

void matchings_rec(std::vector<int>& free_points, NoncrossingMatching& cur, std::vector<NoncrossingMatching>& out) {
  if (free_points.empty()) {
    NoncrossingMatching m = cur;
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
    return;
  }
  // match the first free point with one that leaves an even block inside
  const int a = free_points.front();
  for (std::size_t k = 1; k < free_points.size(); k += 2) {
    const int b = free_points[k];
    std::vector<int> inside(free_points.begin() + 1, free_points.begin() + static_cast<long>(k));
    std::vector<int> outside(free_points.begin() + static_cast<long>(k) + 1, free_points.end());
    cur.emplace_back(a, b);
    // enumerate inside then outside independently
    std::vector<NoncrossingMatching> inner;
    NoncrossingMatching scratch;
    matchings_rec(inside, scratch, inner);
    for (const NoncrossingMatching& in : inner) {
      NoncrossingMatching with = cur;
      with.insert(with.end(), in.begin(), in.end());
      matchings_rec(outside, with, out);
    }
    cur.pop_back();
  }
}

}  // namespace

long long catalan(int m) {
  long long c = 1;  // C(2m, m) / (m+1) via the product formula
  for (int k = 0; k < m; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::vector<NoncrossingMatching> noncrossing_matchings(int m) {
  if (m < 1 || m > 12) throw Error(ErrorKind::Precondition, "noncrossing_matchings: m must be in 1..12");
  std::vector<int> points(2 * m);
  for (int i = 0; i < 2 * m; ++i) points[i] = i;
  std::vector<NoncrossingMatching> out;
  NoncrossingMatching cur;
  matchings_rec(points, cur, out);
  return out;
}

std::vector<ChordDiagram> enumerate_generic(int n) {
  if (n < 1 || n > 6) throw Error(ErrorKind::Precondition, "enumerate_generic: n must be in 1..6");
  const auto matchings = noncrossing_matchings(n);
  std::map<CanonicalCode, ChordDiagram> found;
  for (const NoncrossingMatching& mi : matchings) {
    ChordPairs im;
    for (const auto& [a, b] : mi) im.emplace_back(2 * a, 2 * b);
    for (const NoncrossingMatching& mr : matchings) {
      ChordPairs re;
      for (const auto& [a, b] : mr) re.emplace_back(2 * a + 1, 2 * b + 1);
      try {
        ChordDiagram d = diagram_from_chords(n, im, re);
        found.emplace(canonical_form(d), std::move(d));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Precondition) throw;
      }
    }
  }
  std::vector<ChordDiagram> out;
  for (auto& [code, d] : found) out.push_back(canonicalize(d));
  return out;
}

ChordDiagram base_diagram(int n) {
  if (n < 1) throw Error(ErrorKind::Precondition, "base_diagram: n must be positive");
  ChordPairs im, re;
  for (int k = 0; k < n; ++k) {
    im.emplace_back(4 * k, 4 * k + 2);
    re.emplace_back(4 * k + 1, 4 * k + 3);
  }
  return diagram_from_chords(n, im, re);
}

// ---- words ----

std::vector<int> ParenthesizedWord::multiplicities() const {
  std::vector<int> out;
  for (const auto& [a, b] : intervals) out.push_back(b - a + 1);
  return out;
}

std::string ParenthesizedWord::to_string() const {
  std::string out;
  const int len = static_cast<int>(letters.size());
  for (int i = 0; i < len; ++i) {
    // longer intervals open first
    std::vector<int> opening;
    for (const auto& [a, b] : intervals) {
      if (a == i) opening.push_back(b);
    }
    std::sort(opening.rbegin(), opening.rend());
    out.append(opening.size(), '(');
    out += letters[i];
    int closing = 0;
    for (const auto& [a, b] : intervals) {
      if (b == i) ++closing;
    }
    out.append(closing, ')');
  }
  return out;
}

ParenthesizedWord ParenthesizedWord::parse(std::string_view text) {
  ParenthesizedWord w;
  std::vector<int> open;
  for (const char c : text) {
    if (c == ' ') continue;
    if (c == '(') {
      open.push_back(static_cast<int>(w.letters.size()));
    } else if (c == ')') {
      if (open.empty()) throw Error(ErrorKind::Usage, "word: unbalanced ')'");
      const int start = open.back();
      open.pop_back();
      const int end = static_cast<int>(w.letters.size()) - 1;
      if (end - start + 1 < 2) throw Error(ErrorKind::Usage, "word: parentheses must enclose at least two letters");
      w.intervals.emplace_back(start, end);
    } else if (c >= 'a' && c <= 'z') {
      w.letters += c;
    } else {
      throw Error(ErrorKind::Usage, std::string("word: unexpected character '") + c + "'");
    }
  }
  if (!open.empty()) throw Error(ErrorKind::Usage, "word: unbalanced '('");
  std::sort(w.intervals.begin(), w.intervals.end());
  return w;
}

bool ParenthesizedWord::operator==(const ParenthesizedWord& o) const {
  auto a = intervals, b = o.intervals;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return letters == o.letters && a == b;
}

// ---- symbolic merges ----

namespace {

struct LetterChord {
  int first, second, pendant;
};

LetterChord letter_chord(Color c, int k) {
  if (c == Color::Im) return {4 * k, 4 * k + 2, 4 * k + 2};
  return {4 * k + 1, 4 * k + 3, 4 * k + 1};
}

int edge_at_leaf(const ChordDiagram& d, int leaf) {
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    for (const EndRef& r : d.edges[e].ends) {
      if (r == EndRef::leaf(leaf)) return static_cast<int>(e);
    }
  }
  throw Error(ErrorKind::Invariant, "merge: leaf without edge");
}

int nonpendant_edge(const ChordDiagram& d, int root, Color c, int pendant) {
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const DiagramEdge& edge = d.edges[e];
    if (edge.color != c) continue;
    for (int x = 0; x < 2; ++x) {
      if (edge.ends[x] == EndRef::node(root) && edge.ends[1 - x] != EndRef::leaf(pendant)) return static_cast<int>(e);
    }
  }
  throw Error(ErrorKind::Invariant, "merge: root without inner edge");
}

// Edge of a group facing the next group counterclockwise.
int right_contact(const MergedForest& f, std::pair<int, int> group) {
  const LetterChord lc = letter_chord(f.color, group.second);
  if (lc.pendant == lc.second) return nonpendant_edge(f.diagram, group.second, f.color, lc.pendant);
  return edge_at_leaf(f.diagram, lc.second);
}

// Edge of a group facing the previous group.
int left_contact(const MergedForest& f, std::pair<int, int> group) {
  const LetterChord lc = letter_chord(f.color, group.first);
  if (lc.pendant == lc.first) return nonpendant_edge(f.diagram, group.first, f.color, lc.pendant);
  return edge_at_leaf(f.diagram, lc.first);
}

}  // namespace

MergedForest start_merges(int n, Color color) {
  MergedForest f;
  f.n = n;
  f.color = color;
  f.diagram = base_diagram(n);
  for (int k = 0; k < n; ++k) f.groups.emplace_back(k, k);
  return f;
}

MergedForest merge(const MergedForest& f, MergeStep step) {
  const int groups = static_cast<int>(f.groups.size());
  if (step.count < 2 || step.first < 0 || step.first + step.count > groups) {
    throw Error(ErrorKind::Precondition, "merge: needs at least two consecutive groups");
  }
  MergedForest out = f;
  std::vector<int> contacts;
  contacts.push_back(right_contact(f, f.groups[step.first]));
  for (int g = step.first + 1; g < step.first + step.count; ++g) contacts.push_back(left_contact(f, f.groups[g]));

  ChordDiagram& d = out.diagram;
  const int x = static_cast<int>(d.nodes.size());
  d.nodes.push_back({NodeKind::Critical, f.color, {}});
  for (const int e : contacts) {
    const EndRef far = d.edges[e].ends[1];
    d.edges[e].ends[1] = EndRef::node(x);
    d.edges.push_back({f.color, {EndRef::node(x), far}});
  }
  assign_rotations(d);
  validate(d);

  const std::pair<int, int> joined{f.groups[step.first].first, f.groups[step.first + step.count - 1].second};
  out.groups.erase(out.groups.begin() + step.first, out.groups.begin() + step.first + step.count);
  out.groups.insert(out.groups.begin() + step.first, joined);
  out.history.push_back(step);
  return out;
}

MergedForest merge_letters(const MergedForest& f, std::string_view letters) {
  std::set<int> wanted;
  for (const char c : letters) {
    const int k = c - 'a';
    if (k < 0 || k >= f.n) throw Error(ErrorKind::Precondition, std::string("merge: unknown letter '") + c + "'");
    wanted.insert(k);
  }
  int first = -1, count = 0;
  std::set<int> covered;
  for (std::size_t g = 0; g < f.groups.size(); ++g) {
    const auto [a, b] = f.groups[g];
    const bool hit = std::any_of(wanted.begin(), wanted.end(), [&](int k) { return a <= k && k <= b; });
    if (!hit) continue;
    if (first >= 0 && first + count != static_cast<int>(g)) throw Error(ErrorKind::Precondition, "merge: letters are not consecutive groups");
    if (first < 0) first = static_cast<int>(g);
    ++count;
    for (int k = a; k <= b; ++k) covered.insert(k);
  }
  if (covered != wanted) throw Error(ErrorKind::Precondition, "merge: letters split an existing group");
  return merge(f, {first, count});
}

ParenthesizedWord forest_to_word(const MergedForest& f) {
  MergedForest replay = start_merges(f.n, f.color);
  ParenthesizedWord w;
  for (int k = 0; k < f.n; ++k) w.letters += static_cast<char>('a' + k);
  for (const MergeStep& step : f.history) {
    replay = merge(replay, step);
    w.intervals.push_back(replay.groups[step.first]);
  }
  if (canonical_form(replay.diagram) != canonical_form(f.diagram)) {
    throw Error(ErrorKind::Precondition, "forest_to_word: diagram is not reached by its recorded merges");
  }
  std::sort(w.intervals.begin(), w.intervals.end());
  return w;
}

ChordPairs lettered_curves(const ChordDiagram& d, Color c) { return chords(d, c); }

// ---- dissipation ----

namespace {

std::set<int> tree_leaves(const ChordDiagram& d, int node, Color c) {
  std::set<int> leaves;
  std::vector<int> stack{node};
  std::set<int> seen{node};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const DiagramEdge& e : d.edges) {
      if (e.color != c) continue;
      for (int x = 0; x < 2; ++x) {
        if (e.ends[x] != EndRef::node(v)) continue;
        const EndRef o = e.ends[1 - x];
        if (o.kind == EndRef::Kind::Leaf) leaves.insert(o.index);
        else if (seen.insert(o.index).second) stack.push_back(o.index);
      }
    }
  }
  return leaves;
}

MonicPolynomial steer(const MonicPolynomial& p, Complex shift) {
  std::vector<Complex> a(p.coefficients().begin(), p.coefficients().end());
  a[0] -= shift;
  return MonicPolynomial(std::move(a));
}

}  // namespace

DissipationEvent dissipate(const MonicPolynomial& p, std::string_view letters, double eps, Color color,
                           const TraceParams& params) {
  if (!(eps > 0)) throw Error(ErrorKind::Precondition, "dissipate: eps must be positive");
  if (p.degree() < 2) throw Error(ErrorKind::Precondition, "dissipate: degree must be at least 2");
  const ChordDiagram d = web_to_diagram(extract_web(p, params));
  if (!is_generic(d)) throw Error(ErrorKind::Precondition, "dissipate: polynomial is not generic");
  const ChordPairs curves = lettered_curves(d, color);
  std::set<int> target;
  for (const char ch : letters) {
    const int k = ch - 'a';
    if (k < 0 || k >= static_cast<int>(curves.size())) {
      throw Error(ErrorKind::Precondition, std::string("dissipate: unknown letter '") + ch + "'");
    }
    target.insert(curves[k].first);
    target.insert(curves[k].second);
  }

  const double radius = cauchy_radius(p) + 1.0;
  const auto crits = cluster_roots(critical_points(p, params.root_tol), 1e-6, radius);
  std::string last_failure = "no critical point merges exactly these curves";
  for (const RootCluster& c : crits) {
    const Complex value = p(c.center);
    // a_0 moves every critical value rigidly; one Newton step is exact
    const Complex shift = color == Color::Im ? Complex{0.0, value.imag()} : Complex{value.real(), 0.0};
    const MonicPolynomial at = steer(p, shift);
    try {
      const Web w = extract_web(at, params);
      const ChordDiagram dd = web_to_diagram(w);
      int node = -1;
      double best = radius;
      for (std::size_t v = 0; v < w.nodes.size(); ++v) {
        if (w.nodes[v].kind != NodeKind::Critical || w.nodes[v].color != color) continue;
        const double dist = std::abs(w.nodes[v].position - c.center);
        if (dist < best) {
          best = dist;
          node = static_cast<int>(v);
        }
      }
      if (node < 0 || tree_leaves(dd, node, color) != target) continue;
      DissipationEvent ev;
      ev.letters = std::string(letters);
      ev.color = color;
      ev.critical_point = c.center;
      ev.critical_value = value;
      ev.degenerate = at;
      ev.past = steer(p, (1.0 + eps) * shift);
      ev.before = canonical_form(d);
      ev.at = canonical_form(dd);
      ev.after = canonical_form(web_to_diagram(extract_web(ev.past, params)));
      return ev;
    } catch (const Error& e) {
      last_failure = std::string("continuation failed at parameter 1 for critical point (") +
                     std::to_string(c.center.real()) + ", " + std::to_string(c.center.imag()) + "): " + e.what();
    }
  }
  throw Error(ErrorKind::Numeric, "dissipate: " + last_failure);
}

// ---- pentagon ----

namespace {

using Family = std::vector<std::pair<int, int>>;

// Planar trees with internal nodes of arity >= 2 over letters [i, j].
std::vector<Family> trees(int i, int j) {
  if (i == j) return {Family{}};
  std::vector<Family> out;
  // split [i, j] into consecutive parts (at least two)
  std::function<void(int, std::vector<std::pair<int, int>>&)> parts = [&](int start, std::vector<std::pair<int, int>>& cur) {
    if (start > j) {
      if (cur.size() < 2) return;
      std::vector<Family> acc{Family{{i, j}}};
      for (const auto& [a, b] : cur) {
        std::vector<Family> next;
        for (const Family& base : acc) {
          for (const Family& sub : trees(a, b)) {
            Family f = base;
            f.insert(f.end(), sub.begin(), sub.end());
            next.push_back(std::move(f));
          }
        }
        acc = std::move(next);
      }
      for (Family& f : acc) {
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
      }
      return;
    }
    for (int end = start; end <= j; ++end) {
      cur.emplace_back(start, end);
      parts(end + 1, cur);
      cur.pop_back();
    }
  };
  std::vector<std::pair<int, int>> cur;
  parts(i, cur);
  return out;
}

// Children (maximal proper sub-units) of interval iv within family f.
std::vector<std::pair<int, int>> children(const Family& f, std::pair<int, int> iv) {
  std::vector<std::pair<int, int>> out;
  int pos = iv.first;
  while (pos <= iv.second) {
    std::pair<int, int> best{pos, pos};
    for (const auto& g : f) {
      if (g != iv && g.first == pos && g.second <= iv.second && g.second > best.second) best = g;
    }
    out.push_back(best);
    pos = best.second + 1;
  }
  return out;
}

std::string family_word(int n, const Family& f) {
  ParenthesizedWord w;
  for (int k = 0; k < n; ++k) w.letters += static_cast<char>('a' + k);
  w.intervals = f;
  return w.to_string();
}

// Realizes a family by merges, innermost first.
bool realized(int n, const Family& f) {
  Family order = f;
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return (a.second - a.first) < (b.second - b.first) || ((a.second - a.first) == (b.second - b.first) && a < b);
  });
  MergedForest m = start_merges(n);
  for (const auto& [a, b] : order) {
    std::string letters;
    for (int k = a; k <= b; ++k) letters += static_cast<char>('a' + k);
    m = merge_letters(m, letters);
  }
  return family_word(n, f) == forest_to_word(m).to_string();
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> maximal_parenthesizations(int n) {
  if (n < 1) throw Error(ErrorKind::Precondition, "maximal_parenthesizations: n must be positive");
  std::vector<Family> out;
  for (Family& f : trees(0, n - 1)) {
    if (static_cast<int>(f.size()) == n - 1) out.push_back(std::move(f));
  }
  return out;
}

PentagonReport pentagon_report() {
  const int n = 4;
  PentagonReport r;
  const auto all = trees(0, n - 1);
  std::vector<Family> maximal;
  std::vector<Family> codim_one;
  for (const Family& f : all) {
    if (static_cast<int>(f.size()) == n - 1) maximal.push_back(f);
    else if (static_cast<int>(f.size()) == n - 2) {
      int ternary = 0;
      for (const auto& iv : f) {
        if (children(f, iv).size() == 3) ++ternary;
      }
      if (ternary == 1) codim_one.push_back(f);
    }
  }
  std::map<Family, int> index;
  for (const Family& f : maximal) {
    index[f] = static_cast<int>(r.vertex_words.size());
    r.vertex_words.push_back(family_word(n, f));
  }
  bool ok = true;
  for (const Family& f : maximal) ok = ok && realized(n, f);
  for (const Family& f : codim_one) {
    ok = ok && realized(n, f);
    for (const auto& iv : f) {
      const auto ch = children(f, iv);
      if (ch.size() != 3) continue;
      Family left = f, right = f;
      left.emplace_back(ch[0].first, ch[1].second);
      right.emplace_back(ch[1].first, ch[2].second);
      std::sort(left.begin(), left.end());
      std::sort(right.begin(), right.end());
      r.edge_list.emplace_back(index.at(left), index.at(right));
      r.edge_words.push_back(family_word(n, f));
    }
  }
  r.vertices = static_cast<int>(maximal.size());
  r.edges = static_cast<int>(r.edge_list.size());
  r.words_realized = ok;

  std::vector<std::vector<int>> adj(r.vertices);
  for (const auto& [a, b] : r.edge_list) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  bool cycle = r.vertices >= 3 && r.vertices == r.edges;
  for (const auto& nb : adj) cycle = cycle && nb.size() == 2;
  if (cycle) {
    std::vector<bool> seen(r.vertices, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    cycle = count == r.vertices;
  }
  r.is_cycle = cycle;
  return r;
}

bool pentagon_check() {
  const PentagonReport r = pentagon_report();
  return r.vertices == 5 && r.edges == 5 && r.is_cycle && r.words_realized;
}

}  // namespace gaussweb
