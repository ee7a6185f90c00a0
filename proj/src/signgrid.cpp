// Independent web extraction: sign analysis of Re P and Im P on a uniform
// grid. Shares only node classification policy with the tracer.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <unordered_map>

#include "gaussweb/webtrace.hpp"

namespace gaussweb {

namespace {

constexpr double kPi = std::numbers::pi;

// Weierstrass (Durand-Kerner) iteration, deliberately distinct from the
// Aberth solver used by extract_web.
std::vector<Complex> weierstrass_roots(const MonicPolynomial& p) {
  const int n = p.degree();
  const double r0 = cauchy_radius(p);
  std::vector<Complex> z(n);
  Complex seed{0.4, 0.9};
  Complex w{1.0, 0.0};
  for (int k = 0; k < n; ++k) {
    z[k] = r0 * 0.5 * w;
    w *= seed;
  }
  for (int it = 0; it < 5000; ++it) {
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      Complex denom{1.0, 0.0};
      for (int j = 0; j < n; ++j) {
        if (j != k) denom *= z[k] - z[j];
      }
      if (denom == Complex{}) denom = Complex{1e-300, 0.0};
      const Complex delta = p(z[k]) / denom;
      z[k] -= delta;
      worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(z[k])));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

struct Hole {
  int i0, i1, j0, j1;  // cell range, inclusive
  Complex center;
  enum class Kind { Root, Node, Saddle } kind;
  int node = -1;          // Web node index for Root / Node
  Color color = Color::Re;  // for Node: the degenerate part
  int multiplicity = 1;
  Complex value;          // P(center)
};

struct Link {
  bool to_node = false;
  int id = -1;
};

struct Crossing {
  Complex pos;
  std::vector<Link> links;
  bool boundary = false;
  bool visited = false;
};

// Sign bits of Re P and Im P at every lattice vertex; values are
// recomputed on demand for interpolation.
class Grid {
 public:
  Grid(const MonicPolynomial& p, double half, int cells) : p_(p), n_(cells) {
    h_ = 2.0 * half / (cells - 1);
    x0_ = -half - 0.6180339887 * h_;
    y0_ = -half - 0.7071067812 * h_;
    signs_.resize(static_cast<std::size_t>(cells + 1) * (cells + 1));
    for (int j = 0; j <= cells; ++j) {
      for (int i = 0; i <= cells; ++i) {
        const Complex v = p(point(i, j));
        signs_[idx(i, j)] = static_cast<unsigned char>((v.real() >= 0.0 ? 1 : 0) | (v.imag() >= 0.0 ? 2 : 0));
      }
    }
  }

  int cells() const { return n_; }
  Complex point(int i, int j) const { return {x0_ + i * h_, y0_ + j * h_}; }
  double f(Color c, int i, int j) const {
    const Complex v = p_(point(i, j));
    return c == Color::Re ? v.real() : v.imag();
  }
  int sign(Color c, int i, int j) const { return (signs_[idx(i, j)] & (c == Color::Re ? 1 : 2)) ? 1 : -1; }
  int cell_of(double x, double origin) const { return static_cast<int>(std::floor((x - origin) / h_)); }
  int cell_x(Complex z) const { return cell_of(z.real(), x0_); }
  int cell_y(Complex z) const { return cell_of(z.imag(), y0_); }

  // Lattice edge ids: horizontal (i,j)-(i+1,j) then vertical (i,j)-(i,j+1).
  std::int64_t h_edge(int i, int j) const { return static_cast<std::int64_t>(j) * n_ + i; }
  std::int64_t v_edge(int i, int j) const {
    return static_cast<std::int64_t>(n_ + 1) * n_ + static_cast<std::int64_t>(j) * (n_ + 1) + i;
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * (n_ + 1) + i; }
  const MonicPolynomial& p_;
  int n_;
  double h_, x0_, y0_;
  std::vector<unsigned char> signs_;
};

struct Invalid {
  int line;
};

class Extractor {
 public:
  Extractor(const MonicPolynomial& p, const Grid& grid, std::vector<NodeCandidate> nodes,
            std::vector<RootCluster> saddles, double radius)
      : p_(p), grid_(grid), nodes_(std::move(nodes)), saddles_(std::move(saddles)), radius_(radius) {}

  Web run() {
    build_holes();
    for (const Color color : {Color::Re, Color::Im}) march(color);
    for (const Hole& hole : holes_) resolve_hole(hole);
    return assemble();
  }

 private:
  struct ArmRef {
    Color color;
    int crossing;
  };

  int crossing_at(Color c, std::int64_t edge, Complex a, Complex b, double fa, double fb, bool boundary) {
    const auto [it, inserted] = edge_crossing_[static_cast<int>(c)].try_emplace(edge, -1);
    int& slot = it->second;
    if (inserted) {
      const double t = fa / (fa - fb);
      slot = static_cast<int>(crossings_[static_cast<int>(c)].size());
      crossings_[static_cast<int>(c)].push_back({a + t * (b - a), {}, boundary, false});
    }
    return slot;
  }

  // Crossing on the lattice edge between vertices (i,j) and (k,l), or -1.
  int edge_crossing(Color c, int i, int j, int k, int l) {
    if (grid_.sign(c, i, j) == grid_.sign(c, k, l)) return -1;
    const int last = grid_.cells();
    std::int64_t edge;
    bool boundary;
    if (j == l) {
      edge = grid_.h_edge(std::min(i, k), j);
      boundary = j == 0 || j == last;
    } else {
      edge = grid_.v_edge(i, std::min(j, l));
      boundary = i == 0 || i == last;
    }
    return crossing_at(c, edge, grid_.point(i, j), grid_.point(k, l), grid_.f(c, i, j), grid_.f(c, k, l), boundary);
  }

  void connect(Color c, int a, int b) {
    auto& xs = crossings_[static_cast<int>(c)];
    xs[a].links.push_back({false, b});
    xs[b].links.push_back({false, a});
  }

  // Box half-width shrinks from 3 cells to 1 when another hole is close.
  void build_holes() {
    const int last = grid_.cells();
    std::vector<Hole> pending;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const NodeCandidate& nd = nodes_[k];
      Hole hole{};
      hole.center = nd.position;
      hole.kind = nd.kind == NodeKind::Root ? Hole::Kind::Root : Hole::Kind::Node;
      hole.node = static_cast<int>(k);
      hole.color = nd.color;
      hole.multiplicity = nd.multiplicity;
      hole.value = p_(nd.position);
      pending.push_back(hole);
    }
    for (const RootCluster& s : saddles_) {
      Hole hole{};
      hole.center = s.center;
      hole.kind = Hole::Kind::Saddle;
      hole.multiplicity = s.multiplicity;
      hole.value = p_(s.center);
      pending.push_back(hole);
    }
    std::vector<std::pair<int, int>> cell(pending.size());
    for (std::size_t k = 0; k < pending.size(); ++k) cell[k] = {grid_.cell_x(pending[k].center), grid_.cell_y(pending[k].center)};
    for (std::size_t k = 0; k < pending.size(); ++k) {
      int nearest = 1 << 20;
      for (std::size_t l = 0; l < pending.size(); ++l) {
        if (l == k) continue;
        nearest = std::min(nearest, std::max(std::abs(cell[k].first - cell[l].first), std::abs(cell[k].second - cell[l].second)));
      }
      const int w = std::min(3, (nearest - 2) / 2);
      if (w < 1) throw Invalid{__LINE__};
      Hole& hole = pending[k];
      hole.i0 = cell[k].first - w;
      hole.i1 = cell[k].first + w;
      hole.j0 = cell[k].second - w;
      hole.j1 = cell[k].second + w;
      if (hole.i0 < 1 || hole.j0 < 1 || hole.i1 > last - 2 || hole.j1 > last - 2) throw Invalid{__LINE__};
    }
    holes_ = std::move(pending);
  }

  bool in_hole(int i, int j) const {
    return std::any_of(holes_.begin(), holes_.end(),
                       [&](const Hole& h) { return h.i0 <= i && i <= h.i1 && h.j0 <= j && j <= h.j1; });
  }

  void march(Color c) {
    const int last = grid_.cells();
    for (int j = 0; j < last; ++j) {
      for (int i = 0; i < last; ++i) {
        if (in_hole(i, j)) continue;
        const int bottom = edge_crossing(c, i, j, i + 1, j);
        const int right = edge_crossing(c, i + 1, j, i + 1, j + 1);
        const int top = edge_crossing(c, i + 1, j + 1, i, j + 1);
        const int left = edge_crossing(c, i, j + 1, i, j);
        std::vector<int> present;
        for (const int e : {bottom, right, top, left}) {
          if (e >= 0) present.push_back(e);
        }
        if (present.size() == 2) {
          connect(c, present[0], present[1]);
        } else if (present.size() == 4) {
          const double f00 = grid_.f(c, i, j), f10 = grid_.f(c, i + 1, j);
          const double f11 = grid_.f(c, i + 1, j + 1), f01 = grid_.f(c, i, j + 1);
          const double denom = f00 + f11 - f10 - f01;
          const double center = denom != 0.0 ? (f00 * f11 - f10 * f01) / denom : 0.25 * (f00 + f10 + f11 + f01);
          if ((center >= 0) == (f00 >= 0)) {
            // diagonal 00-11 connected: cut off corners 10 and 01
            connect(c, bottom, right);
            connect(c, top, left);
          } else {
            connect(c, left, bottom);
            connect(c, right, top);
          }
        }
      }
    }
  }

  struct PerimeterCrossing {
    int crossing;
    int after_sign;
  };

  std::vector<PerimeterCrossing> perimeter(const Hole& hole, Color c) {
    std::vector<std::pair<int, int>> verts;
    const int I0 = hole.i0, I1 = hole.i1 + 1, J0 = hole.j0, J1 = hole.j1 + 1;
    for (int i = I0; i < I1; ++i) verts.emplace_back(i, J0);
    for (int j = J0; j < J1; ++j) verts.emplace_back(I1, j);
    for (int i = I1; i > I0; --i) verts.emplace_back(i, J1);
    for (int j = J1; j > J0; --j) verts.emplace_back(I0, j);
    std::vector<PerimeterCrossing> out;
    for (std::size_t k = 0; k < verts.size(); ++k) {
      const auto [i, j] = verts[k];
      const auto [a, b] = verts[(k + 1) % verts.size()];
      const int x = edge_crossing(c, i, j, a, b);
      if (x >= 0) out.push_back({x, grid_.sign(c, a, b)});
    }
    return out;
  }

  // Level set of a part with nonzero value v at the hole's critical point:
  // each sector of sign opposite to v is cut off by one arc.
  void sector_rule(const Hole& hole, Color c, double v) {
    const auto xs = perimeter(hole, c);
    if (xs.size() > static_cast<std::size_t>(2 * (hole.multiplicity + 1))) throw Invalid{__LINE__};
    const int against = v >= 0 ? -1 : 1;
    for (std::size_t t = 0; t < xs.size(); ++t) {
      if (xs[t].after_sign == against) connect(c, xs[t].crossing, xs[(t + 1) % xs.size()].crossing);
    }
  }

  void attach(const Hole& hole, Color c, const std::vector<PerimeterCrossing>& xs) {
    for (const PerimeterCrossing& x : xs) {
      crossings_[static_cast<int>(c)][x.crossing].links.push_back({true, hole.node});
      arms_[hole.node].push_back({c, x.crossing});
    }
  }

  void resolve_hole(const Hole& hole) {
    switch (hole.kind) {
      case Hole::Kind::Root: {
        const auto re = perimeter(hole, Color::Re);
        const auto im = perimeter(hole, Color::Im);
        if (re.size() != 2 || im.size() != 2) throw Invalid{__LINE__};
        attach(hole, Color::Re, re);
        attach(hole, Color::Im, im);
        break;
      }
      case Hole::Kind::Node: {
        const auto xs = perimeter(hole, hole.color);
        if (xs.size() != static_cast<std::size_t>(2 * (hole.multiplicity + 1))) throw Invalid{__LINE__};
        attach(hole, hole.color, xs);
        const Color g = other(hole.color);
        sector_rule(hole, g, g == Color::Re ? hole.value.real() : hole.value.imag());
        break;
      }
      case Hole::Kind::Saddle:
        sector_rule(hole, Color::Re, hole.value.real());
        sector_rule(hole, Color::Im, hole.value.imag());
        break;
    }
  }

  Web assemble() {
    const int n = p_.degree();
    Web web;
    web.degree = n;
    web.radius = radius_;
    web.leaves.resize(4 * n);
    std::vector<bool> leaf_seen(4 * n, false);
    for (const NodeCandidate& c : nodes_) {
      WebNode node;
      node.kind = c.kind;
      node.position = c.position;
      node.color = c.color;
      node.multiplicity = c.multiplicity;
      web.nodes.push_back(node);
    }
    for (int c = 0; c < 2; ++c) {
      for (const Crossing& x : crossings_[c]) {
        if (x.links.size() != (x.boundary ? 1u : 2u)) throw Invalid{__LINE__};
      }
    }

    auto leaf_for = [&](Color c, Complex pos) {
      const double angle = std::arg(pos);
      int best = -1;
      double best_d = 1e9;
      for (int k = 0; k < 4 * n; ++k) {
        if (leaf_color(k) != c) continue;
        double d = std::fmod(std::abs(angle - k * kPi / (2 * n)), 2 * kPi);
        d = std::min(d, 2 * kPi - d);
        if (d < best_d) {
          best_d = d;
          best = k;
        }
      }
      if (best < 0 || leaf_seen[best]) throw Invalid{__LINE__};
      leaf_seen[best] = true;
      double a = std::fmod(angle, 2 * kPi);
      if (a < 0) a += 2 * kPi;
      web.leaves[best] = {best, a, c, pos};
      return best;
    };

    struct PendingEnd {
      int node, edge, end;
      double angle;
    };
    std::vector<PendingEnd> pending;
    std::vector<std::vector<bool>> arm_used(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) arm_used[k].assign(arms_[k].size(), false);

    auto walk = [&](Color c, int first, EndRef start, Complex start_pos) {
      auto& xs = crossings_[static_cast<int>(c)];
      TracedCurve curve;
      curve.color = c;
      curve.ends[0] = start;
      curve.polyline.push_back(start_pos);
      int prev = -1;
      int cur = first;
      while (true) {
        Crossing& x = xs[cur];
        if (x.visited) throw Invalid{__LINE__};
        x.visited = true;
        if (start.kind == EndRef::Kind::Leaf && cur == first) {
          // leaf exit already recorded as start_pos
        } else {
          curve.polyline.push_back(x.pos);
        }
        const Link* next = nullptr;
        for (const Link& l : x.links) {
          if (l.to_node && prev == -1 && start.kind == EndRef::Kind::Node && start.index == l.id && cur == first) {
            continue;  // the link back to the starting node
          }
          if (!l.to_node && l.id == prev) continue;
          next = &l;
          break;
        }
        if (next == nullptr) {
          if (!x.boundary || cur == first) throw Invalid{__LINE__};
          const int leaf = leaf_for(c, x.pos);
          curve.ends[1] = EndRef::leaf(leaf);
          break;
        }
        if (next->to_node) {
          const int node = next->id;
          bool found = false;
          for (std::size_t a = 0; a < arms_[node].size(); ++a) {
            if (arms_[node][a].color == c && arms_[node][a].crossing == cur) {
              if (arm_used[node][a]) throw Invalid{__LINE__};
              arm_used[node][a] = true;
              found = true;
            }
          }
          if (!found) throw Invalid{__LINE__};
          curve.ends[1] = EndRef::node(node);
          curve.polyline.push_back(nodes_[node].position);
          break;
        }
        prev = cur;
        cur = next->id;
      }
      const int edge = static_cast<int>(web.curves.size());
      for (int end = 0; end < 2; ++end) {
        if (curve.ends[end].kind != EndRef::Kind::Node) continue;
        const int node = curve.ends[end].index;
        const Complex near = end == 0 ? curve.polyline[1] : curve.polyline[curve.polyline.size() - 2];
        pending.push_back({node, edge, end, std::arg(near - nodes_[node].position)});
      }
      web.curves.push_back(std::move(curve));
    };

    for (const Color c : {Color::Re, Color::Im}) {
      auto& xs = crossings_[static_cast<int>(c)];
      for (std::size_t k = 0; k < xs.size(); ++k) {
        if (!xs[k].boundary || xs[k].visited) continue;
        const int leaf = leaf_for(c, xs[k].pos);
        walk(c, static_cast<int>(k), EndRef::leaf(leaf), xs[k].pos);
      }
    }
    for (std::size_t node = 0; node < nodes_.size(); ++node) {
      for (std::size_t a = 0; a < arms_[node].size(); ++a) {
        if (arm_used[node][a]) continue;
        arm_used[node][a] = true;
        walk(arms_[node][a].color, arms_[node][a].crossing, EndRef::node(static_cast<int>(node)),
             nodes_[node].position);
      }
    }
    for (int c = 0; c < 2; ++c) {
      for (const Crossing& x : crossings_[c]) {
        if (!x.visited) throw Invalid{__LINE__};  // closed loop
      }
    }
    if (std::find(leaf_seen.begin(), leaf_seen.end(), false) != leaf_seen.end()) throw Invalid{__LINE__};

    std::stable_sort(pending.begin(), pending.end(), [](const PendingEnd& x, const PendingEnd& y) {
      return x.node != y.node ? x.node < y.node : x.angle < y.angle;
    });
    for (const PendingEnd& pe : pending) web.nodes[pe.node].incidences.push_back({pe.edge, pe.end});
    return web;
  }

  const MonicPolynomial& p_;
  const Grid& grid_;
  std::vector<NodeCandidate> nodes_;
  std::vector<RootCluster> saddles_;
  double radius_;
  std::vector<Hole> holes_;
  std::array<std::unordered_map<std::int64_t, int>, 2> edge_crossing_;
  std::array<std::vector<Crossing>, 2> crossings_;
  std::unordered_map<int, std::vector<ArmRef>> arms_;
};

}  // namespace

Web sign_grid_oracle(const MonicPolynomial& p, int resolution, const TraceParams& params) {
  if (resolution < 64) throw Error(ErrorKind::Precondition, "sign_grid_oracle: resolution must be at least 64");
  const int n = p.degree();
  const double radius = cauchy_radius(p) + 1.0;
  const double cluster_rel = params.merge_tol_rel;

  const auto root_clusters = cluster_roots(weierstrass_roots(p), cluster_rel, radius);
  std::vector<RootCluster> crit_clusters;
  if (n >= 2) crit_clusters = cluster_roots(weierstrass_roots(p.normalized_derivative()), cluster_rel, radius);
  const auto nodes = classify_nodes(p, root_clusters, crit_clusters, radius, params);

  std::vector<RootCluster> saddles;
  for (const RootCluster& c : crit_clusters) {
    const bool is_node = std::any_of(nodes.begin(), nodes.end(), [&](const NodeCandidate& nd) {
      return nd.kind == NodeKind::Critical && nd.position == c.center;
    });
    if (!is_node) saddles.push_back(c);
  }

  const int max_resolution = std::max(resolution, 8192);
  int last_line = 0;
  for (int cells = resolution; cells <= max_resolution; cells *= 2) {
    const Grid grid(p, 1.02 * radius, cells);
    try {
      Extractor extractor(p, grid, nodes, saddles, radius);
      return extractor.run();
    } catch (const Invalid& inv) {
      last_line = inv.line;
    }
  }
  throw Error(ErrorKind::Numeric, "sign_grid_oracle: ambiguous cells unresolved at resolution " +
                                      std::to_string(max_resolution) +
                                      " (check at line " + std::to_string(last_line) + ")");
}

}  // namespace gaussweb
