#include "gaussweb/webtrace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

namespace gaussweb {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a < 0) a += 2.0 * kPi;
  return a;
}

double angular_distance(double a, double b) {
  const double d = wrap_angle(a - b);
  return std::min(d, 2.0 * kPi - d);
}

double poly_scale(const MonicPolynomial& p, double radius) {
  return std::max(1.0, std::pow(radius, p.degree()));
}

// Distance from c to the segment [a, b].
double segment_distance(Complex c, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(c - a);
  const double t = std::clamp(((c - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(c - (a + t * ab));
}

int sign_of(double v, int previous) {
  if (v > 0) return 1;
  if (v < 0) return -1;
  return previous;
}

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

std::vector<Leaf> leaves(const MonicPolynomial& p, double radius) {
  if (!(radius >= cauchy_radius(p))) {
    throw Error(ErrorKind::Precondition, "leaves: radius must be at least the Cauchy radius");
  }
  const int n = p.degree();
  const double half = kPi / (2.0 * n);
  std::vector<Leaf> out;
  out.reserve(4 * n);
  for (int k = 0; k < 4 * n; ++k) {
    const HarmonicPart f{&p, leaf_color(k)};
    const double nominal = k * half;
    double lo = nominal - half;
    double hi = nominal + half;
    double flo = f.value(std::polar(radius, lo));
    const double fhi = f.value(std::polar(radius, hi));
    if (!(flo * fhi < 0.0)) {
      throw Error(ErrorKind::Numeric, "leaves: no sign change bracketing angle " + fmt9(nominal));
    }
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f.value(std::polar(radius, mid));
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    const double angle = 0.5 * (lo + hi);
    out.push_back({k, angle, leaf_color(k), std::polar(radius, angle)});
  }
  return out;
}

TraceResult trace_curve(const HarmonicPart& f, Complex start, double radius,
                        const TraceParams& params, std::span<const NodeDisc> discs,
                        std::optional<Complex> direction) {
  const MonicPolynomial& p = *f.poly;
  const double scale = poly_scale(p, radius);
  if (!(std::abs(f.value(start)) < params.trace_tol * scale)) {
    throw Error(ErrorKind::Precondition, "trace_curve: start point is not on the zero set");
  }
  const HarmonicPart g{f.poly, other(f.color)};
  const double h_max = params.initial_step_rel * radius;
  const double h_min = params.min_step_rel * radius;
  const double dist_tol = 1e-10 * radius;
  const double abs_floor = 1e-14 * scale;
  const double cos_limit = std::cos(0.3);

  auto tangent_at = [&](Complex z) -> std::optional<Complex> {
    const Complex grad = f.gradient(z);
    const double norm = std::abs(grad);
    if (!(norm > 0.0) || !std::isfinite(norm)) return std::nullopt;
    return Complex{0.0, 1.0} * grad / norm;
  };

  TraceResult result;
  result.curve.color = f.color;
  Complex z = start;
  auto t0 = tangent_at(z);
  if (!t0) throw Error(ErrorKind::Numeric, "trace_curve: vanishing gradient at start");
  Complex t = *t0;
  const Complex want = direction.value_or(-z);
  if ((std::conj(t) * want).real() < 0) t = -t;

  result.curve.polyline.push_back(z);
  int other_sign = sign_of(g.value(z), 1);
  double h = h_max;

  for (int step = 0;; ++step) {
    if (step >= params.max_steps) {
      throw Error(ErrorKind::Numeric, "trace_curve: step budget exceeded near (" + fmt9(z.real()) +
                                          ", " + fmt9(z.imag()) + ")");
    }
    const Complex predicted = z + h * t;
    Complex zc = predicted;
    bool converged = false;
    int iterations = 0;
    for (; iterations <= 5; ++iterations) {
      const double fv = f.value(zc);
      const Complex grad = f.gradient(zc);
      const double gn2 = std::norm(grad);
      if (std::abs(fv) <= abs_floor || (gn2 > 0.0 && std::abs(fv) <= dist_tol * std::sqrt(gn2))) {
        converged = true;
        break;
      }
      if (!(gn2 > 0.0) || iterations == 5) break;
      zc -= fv * grad / gn2;
    }
    std::optional<Complex> tn = converged ? tangent_at(zc) : std::nullopt;
    bool accept = converged && tn.has_value() && std::abs(zc - predicted) <= 0.3 * h;
    if (accept) {
      if ((std::conj(t) * *tn).real() < 0) *tn = -*tn;
      accept = (std::conj(t) * *tn).real() >= cos_limit;
    }
    if (!accept) {
      h *= 0.5;
      if (h < h_min) {
        throw Error(ErrorKind::Numeric, "trace_curve: step fell below floor near (" + fmt9(z.real()) +
                                            ", " + fmt9(z.imag()) + "); unresolved singular region");
      }
      continue;
    }

    // Node discs: pin to the first disc the new segment touches.
    for (const NodeDisc& disc : discs) {
      if (segment_distance(disc.center, z, zc) < disc.radius) {
        const int s = sign_of(g.value(disc.center), other_sign);
        if (s != other_sign) {
          result.crossings.push_back({result.curve.polyline.size() - 1, 0.5 * (z + disc.center)});
        }
        result.curve.polyline.push_back(disc.center);
        result.stop = {TraceStop::Kind::Node, disc.node, z};
        return result;
      }
    }

    const double gv = g.value(zc);
    const int s = sign_of(gv, other_sign);
    if (s != other_sign) {
      const double g0 = g.value(z);
      const double w = (g0 == gv) ? 0.5 : g0 / (g0 - gv);
      result.crossings.push_back({result.curve.polyline.size() - 1, z + std::clamp(w, 0.0, 1.0) * (zc - z)});
      other_sign = s;
    }

    if (std::abs(zc) >= radius && step > 0) {
      // intersect the segment with the circle
      const Complex d = zc - z;
      const double a = std::norm(d);
      const double b = 2.0 * (std::conj(z) * d).real();
      const double c = std::norm(z) - radius * radius;
      const double disc = std::max(0.0, b * b - 4 * a * c);
      const double s_hit = std::clamp((-b + std::sqrt(disc)) / (2 * a), 0.0, 1.0);
      const Complex hit = z + s_hit * d;
      result.curve.polyline.push_back(hit);
      result.stop = {TraceStop::Kind::Boundary, -1, hit};
      return result;
    }

    z = zc;
    t = *tn;
    result.curve.polyline.push_back(z);
    if (iterations <= 1) h = std::min(h * 1.5, h_max);
  }
}

std::vector<NodeCandidate> classify_nodes(const MonicPolynomial& p,
                                          std::span<const RootCluster> root_clusters,
                                          std::span<const RootCluster> critical_clusters,
                                          double radius, const TraceParams& params) {
  const double merge = params.merge_tol_rel * radius;
  const double exact_gap = 1e-6 * radius;
  std::vector<NodeCandidate> nodes;
  for (const RootCluster& r : root_clusters) {
    if (r.multiplicity > 1) {
      throw Error(ErrorKind::NonGeneric, "non-generic within tolerance: multiple root near (" +
                                             fmt9(r.center.real()) + ", " + fmt9(r.center.imag()) + ")");
    }
    nodes.push_back({NodeKind::Root, Color::Re, r.center, 1, p.taylor_coefficient(r.center, 1)});
  }
  for (const RootCluster& c : critical_clusters) {
    const Complex value = p(c.center);
    const Complex lead = p.taylor_coefficient(c.center, c.multiplicity + 1);
    int degenerate_colors = 0;
    for (const Color color : {Color::Re, Color::Im}) {
      const double fv = color == Color::Re ? value.real() : value.imag();
      const double gap = std::pow(std::abs(fv) / std::abs(lead), 1.0 / (c.multiplicity + 1));
      if (gap <= exact_gap) {
        nodes.push_back({NodeKind::Critical, color, c.center, c.multiplicity, lead});
        ++degenerate_colors;
      } else if (gap < 10.0 * merge) {
        throw Error(ErrorKind::NonGeneric,
                    std::string("non-generic within tolerance: critical value of ") +
                        (color == Color::Re ? "Re" : "Im") + " part nearly zero at (" +
                        fmt9(c.center.real()) + ", " + fmt9(c.center.imag()) + ")");
      }
    }
    if (degenerate_colors == 2) {
      throw Error(ErrorKind::NonGeneric, "non-generic within tolerance: multiple root at a critical point");
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (std::abs(nodes[i].position - nodes[j].position) < 10.0 * merge) {
        throw Error(ErrorKind::NonGeneric, "non-generic within tolerance: nodes closer than 10*merge_tol near (" +
                                               fmt9(nodes[i].position.real()) + ", " +
                                               fmt9(nodes[i].position.imag()) + ")");
      }
    }
  }
  return nodes;
}

std::vector<double> arm_angles(const NodeCandidate& node) {
  const int k = node.multiplicity + 1;
  const double target = node.color == Color::Re ? kPi / 2.0 : 0.0;
  std::vector<double> out;
  for (int j = 0; j < 2 * k; ++j) out.push_back(wrap_angle((target - std::arg(node.leading) + j * kPi) / k));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Endpoint {
  Color color;
  EndRef ref;
  int arm = -1;  // arm index at a critical node
  Complex start;
  Complex direction;
};

// Newton projection perpendicular to the level set.
Complex project_onto(const HarmonicPart& f, Complex z) {
  for (int i = 0; i < 8; ++i) {
    const Complex grad = f.gradient(z);
    const double gn2 = std::norm(grad);
    if (!(gn2 > 0)) break;
    const Complex dz = f.value(z) * grad / gn2;
    z -= dz;
    if (std::abs(dz) < 1e-15 * (1 + std::abs(z))) break;
  }
  return z;
}

}  // namespace

namespace {

Web extract_web_once(const MonicPolynomial& p, const TraceParams& params) {
  const int n = p.degree();
  const double radius = cauchy_radius(p) + 1.0;
  const double merge = params.merge_tol_rel * radius;

  const std::vector<Complex> root_values = roots(p, params.root_tol);
  const auto root_clusters = cluster_roots(root_values, 1e-6, radius);
  std::vector<RootCluster> crit_clusters;
  if (n >= 2) {
    const auto crit_values = critical_points(p, params.root_tol);
    crit_clusters = cluster_roots(crit_values, 1e-6, radius);
  }
  const std::vector<NodeCandidate> candidates = classify_nodes(p, root_clusters, crit_clusters, radius, params);

  Web web;
  web.degree = n;
  web.radius = radius;
  web.leaves = leaves(p, radius);
  for (const NodeCandidate& c : candidates) {
    WebNode node;
    node.kind = c.kind;
    node.position = c.position;
    node.color = c.color;
    node.multiplicity = c.multiplicity;
    web.nodes.push_back(node);
  }

  // Endpoints: every leaf, then every arm of every critical node.
  std::vector<Endpoint> endpoints;
  for (const Leaf& leaf : web.leaves) {
    endpoints.push_back({leaf.color, EndRef::leaf(leaf.index), -1, leaf.point, -leaf.point});
  }
  std::vector<std::vector<double>> arms(candidates.size());
  std::vector<std::vector<int>> arm_endpoint(candidates.size());
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    if (candidates[j].kind != NodeKind::Critical) continue;
    arms[j] = arm_angles(candidates[j]);
    const HarmonicPart f{&p, candidates[j].color};
    for (std::size_t a = 0; a < arms[j].size(); ++a) {
      const Complex dir = std::polar(1.0, arms[j][a]);
      const Complex guess = candidates[j].position + 2.5 * merge * dir;
      arm_endpoint[j].push_back(static_cast<int>(endpoints.size()));
      endpoints.push_back({candidates[j].color, EndRef::node(static_cast<int>(j)), static_cast<int>(a),
                           project_onto(f, guess), dir});
    }
  }

  std::array<std::vector<NodeDisc>, 2> discs;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    if (candidates[j].kind == NodeKind::Critical) {
      discs[static_cast<int>(candidates[j].color)].push_back({candidates[j].position, merge, static_cast<int>(j)});
    }
  }

  // Trace from every endpoint and resolve where it lands.
  const double half = kPi / (2.0 * n);
  std::vector<TraceResult> traces;
  std::vector<int> partner(endpoints.size(), -1);
  for (std::size_t e = 0; e < endpoints.size(); ++e) {
    const Endpoint& ep = endpoints[e];
    const HarmonicPart f{&p, ep.color};
    TraceResult tr = trace_curve(f, ep.start, radius, params, discs[static_cast<int>(ep.color)], ep.direction);
    if (tr.stop.kind == TraceStop::Kind::Boundary) {
      const double angle = std::arg(tr.stop.point);
      int best = -1;
      double best_d = 1e9;
      for (const Leaf& leaf : web.leaves) {
        if (leaf.color != ep.color) continue;
        const double d = angular_distance(angle, leaf.angle);
        if (d < best_d) {
          best_d = d;
          best = leaf.index;
        }
      }
      if (best < 0 || best_d > half) {
        throw Error(ErrorKind::Numeric, "extract_web: boundary exit at angle " + fmt9(angle) + " matches no leaf");
      }
      partner[e] = best;
    } else {
      const int node = tr.stop.node;
      const double angle = std::arg(tr.stop.point - candidates[node].position);
      std::size_t best = 0;
      for (std::size_t a = 1; a < arms[node].size(); ++a) {
        if (angular_distance(angle, arms[node][a]) < angular_distance(angle, arms[node][best])) best = a;
      }
      partner[e] = arm_endpoint[node][best];
    }
    traces.push_back(std::move(tr));
  }
  for (std::size_t e = 0; e < endpoints.size(); ++e) {
    const int q = partner[e];
    if (q == static_cast<int>(e) || partner[q] != static_cast<int>(e)) {
      const int culprit = q;
      const std::string what = culprit < 4 * n ? "leaf " + std::to_string(culprit)
                                               : "node arm endpoint " + std::to_string(culprit);
      throw Error(ErrorKind::Numeric, "extract_web: leaf pairing inconsistency at " + what);
    }
  }

  // Strands (one per endpoint pair) split at root crossings.
  std::vector<int> root_hits_re(web.nodes.size(), 0), root_hits_im(web.nodes.size(), 0);
  double root_sep = radius;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (candidates[i].kind == NodeKind::Root && candidates[j].kind == NodeKind::Root) {
        root_sep = std::min(root_sep, std::abs(candidates[i].position - candidates[j].position));
      }
    }
  }
  const double assign_tol = std::min(0.45 * root_sep, 0.05 * radius);

  struct PendingEnd {
    int node;
    int edge;
    int end;
    double angle;
  };
  std::vector<PendingEnd> pending;

  for (std::size_t e = 0; e < endpoints.size(); ++e) {
    const int q = partner[e];
    if (q < static_cast<int>(e)) continue;
    const Endpoint& a = endpoints[e];
    const Endpoint& b = endpoints[q];
    TraceResult& tr = traces[e];
    std::vector<Complex>& line = tr.curve.polyline;
    if (a.ref.kind == EndRef::Kind::Node) line.insert(line.begin(), web.nodes[a.ref.index].position);
    const std::size_t shift = a.ref.kind == EndRef::Kind::Node ? 1 : 0;

    // Cut points: (polyline index after which the root is inserted, root node).
    std::vector<std::pair<std::size_t, int>> cuts;
    for (const OtherCrossing& c : tr.crossings) {
      int best = -1;
      double best_d = assign_tol;
      for (std::size_t j = 0; j < candidates.size(); ++j) {
        if (candidates[j].kind != NodeKind::Root) continue;
        const double d = std::abs(candidates[j].position - c.point);
        if (d < best_d) {
          best_d = d;
          best = static_cast<int>(j);
        }
      }
      if (best < 0) {
        throw Error(ErrorKind::Numeric, "extract_web: sign change of the other part away from every root near (" +
                                            fmt9(c.point.real()) + ", " + fmt9(c.point.imag()) + ")");
      }
      (a.color == Color::Re ? root_hits_re : root_hits_im)[best]++;
      cuts.emplace_back(c.segment + shift, best);
    }

    EndRef current_start = a.ref;
    std::vector<Complex> piece{line.front()};
    std::size_t cut_i = 0;
    auto close_piece = [&](EndRef end_ref) {
      const int edge_id = static_cast<int>(web.curves.size());
      TracedCurve curve{a.color, piece, {current_start, end_ref}};
      for (int end = 0; end < 2; ++end) {
        const EndRef& r = curve.ends[end];
        if (r.kind != EndRef::Kind::Node) continue;
        const Complex here = end == 0 ? curve.polyline.front() : curve.polyline.back();
        const Complex next = end == 0 ? curve.polyline[1] : curve.polyline[curve.polyline.size() - 2];
        double angle = std::arg(next - here);
        if (web.nodes[r.index].kind == NodeKind::Critical) {
          // arm angle is exact; identify by the endpoint arm
          const Endpoint& ep = end == 0 ? a : b;
          if (ep.arm >= 0 && ep.ref == r) angle = arms[r.index][ep.arm];
        }
        pending.push_back({r.index, edge_id, end, wrap_angle(angle)});
      }
      web.curves.push_back(std::move(curve));
    };
    for (std::size_t i = 1; i < line.size(); ++i) {
      while (cut_i < cuts.size() && cuts[cut_i].first == i - 1) {
        const Complex root = web.nodes[cuts[cut_i].second].position;
        piece.push_back(root);
        close_piece(EndRef::node(cuts[cut_i].second));
        current_start = EndRef::node(cuts[cut_i].second);
        piece = {root};
        ++cut_i;
      }
      piece.push_back(line[i]);
    }
    if (b.ref.kind == EndRef::Kind::Leaf) piece.back() = web.leaves[b.ref.index].point;
    close_piece(b.ref);
  }

  for (std::size_t j = 0; j < candidates.size(); ++j) {
    if (candidates[j].kind != NodeKind::Root) continue;
    if (root_hits_re[j] != 1 || root_hits_im[j] != 1) {
      throw Error(ErrorKind::Numeric, "extract_web: root at (" + fmt9(candidates[j].position.real()) + ", " +
                                          fmt9(candidates[j].position.imag()) + ") crossed " +
                                          std::to_string(root_hits_re[j]) + " Re / " +
                                          std::to_string(root_hits_im[j]) + " Im times");
    }
  }

  std::stable_sort(pending.begin(), pending.end(), [](const PendingEnd& x, const PendingEnd& y) {
    if (x.node != y.node) return x.node < y.node;
    return x.angle < y.angle;
  });
  for (const PendingEnd& pe : pending) web.nodes[pe.node].incidences.push_back({pe.edge, pe.end});
  return web;
}

}  // namespace

Web extract_web(const MonicPolynomial& p, const TraceParams& params) {
  // a curve that hops onto a neighbour shows up as a numeric failure; retrace with finer steps
  TraceParams finer = params;
  for (int attempt = 0;; ++attempt) {
    try {
      return extract_web_once(p, finer);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Numeric || attempt == 2) throw;
    }
    finer.initial_step_rel /= 4;
    finer.min_step_rel /= 4;
    finer.max_steps *= 4;
  }
}

std::string dump_web(const Web& web) {
  std::string out = "WEB degree " + std::to_string(web.degree) + " radius " + fmt9(web.radius) + "\n";
  auto end_text = [](const EndRef& r) {
    return std::string(r.kind == EndRef::Kind::Leaf ? "L" : "N") + std::to_string(r.index);
  };
  out += "LEAVES " + std::to_string(web.leaves.size()) + "\n";
  for (const Leaf& l : web.leaves) {
    out += std::to_string(l.index) + " " + color_char(l.color) + " " + fmt9(l.angle) + " " + fmt9(l.point.real()) +
           " " + fmt9(l.point.imag()) + "\n";
  }
  out += "CURVES " + std::to_string(web.curves.size()) + "\n";
  for (std::size_t i = 0; i < web.curves.size(); ++i) {
    const TracedCurve& c = web.curves[i];
    out += std::to_string(i) + " " + color_char(c.color) + " " + end_text(c.ends[0]) + " " + end_text(c.ends[1]) +
           " " + std::to_string(c.polyline.size()) + "\n";
    for (const Complex z : c.polyline) out += "  " + fmt9(z.real()) + " " + fmt9(z.imag()) + "\n";
  }
  out += "NODES " + std::to_string(web.nodes.size()) + "\n";
  for (std::size_t i = 0; i < web.nodes.size(); ++i) {
    const WebNode& nd = web.nodes[i];
    out += std::to_string(i) + (nd.kind == NodeKind::Root ? " ROOT" : " CRITICAL") + " " + color_char(nd.color) +
           " " + std::to_string(nd.multiplicity) + " " + fmt9(nd.position.real()) + " " + fmt9(nd.position.imag()) +
           " :";
    for (const EdgeEnd& ee : nd.incidences) out += " " + std::to_string(ee.edge) + "." + std::to_string(ee.end);
    out += "\n";
  }
  return out;
}

}  // namespace gaussweb
