#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaussweb/poly.hpp"

namespace gaussweb {

/// Which harmonic part a curve, leaf or node belongs to.
enum class Color : unsigned char { Re, Im };

constexpr Color other(Color c) noexcept { return c == Color::Re ? Color::Im : Color::Re; }
constexpr char color_char(Color c) noexcept { return c == Color::Re ? 'R' : 'I'; }

/// Boundary slot k of the 4n-leaf circle: even slots carry Im leaves, odd slots Re leaves.
constexpr Color leaf_color(int slot) noexcept { return slot % 2 == 0 ? Color::Im : Color::Re; }

/// Re P or Im P viewed as a real function of the plane.
struct HarmonicPart {
  const MonicPolynomial* poly;
  Color color;

  double value(Complex z) const noexcept {
    const Complex v = (*poly)(z);
    return color == Color::Re ? v.real() : v.imag();
  }
  /// Gradient (dF/dx, dF/dy) packed as a complex number.
  Complex gradient(Complex z) const noexcept {
    const Complex d = poly->derivative_at(z);
    return color == Color::Re ? std::conj(d) : Complex{0.0, 1.0} * std::conj(d);
  }
};

struct Leaf {
  int index = 0;
  double angle = 0.0;
  Color color = Color::Im;
  Complex point;
};

struct TraceParams {
  double trace_tol = 1e-8;          // polyline residual bound, relative to R^n
  double merge_tol_rel = 1e-4;      // node disc radius / R
  double initial_step_rel = 1.0 / 200.0;
  double min_step_rel = 1.0 / 20000.0;
  int max_steps = 400000;
  double root_tol = 1e-9;
};

enum class NodeKind : unsigned char { Root, Critical };

/// Curve end: either boundary leaf `index`, or node `index`.
struct EndRef {
  enum class Kind : unsigned char { Leaf, Node } kind = Kind::Leaf;
  int index = 0;

  static EndRef leaf(int i) { return {Kind::Leaf, i}; }
  static EndRef node(int i) { return {Kind::Node, i}; }
  bool operator==(const EndRef&) const = default;
};

struct TracedCurve {
  Color color = Color::Re;
  std::vector<Complex> polyline;
  std::array<EndRef, 2> ends{};
};

/// Incidence of an edge end at a node: polyline end `end` (0 = front, 1 = back) of edge `edge`.
struct EdgeEnd {
  int edge = 0;
  int end = 0;
  bool operator==(const EdgeEnd&) const = default;
};

struct WebNode {
  NodeKind kind = NodeKind::Root;
  Complex position;
  Color color = Color::Re;  // meaningful for Critical nodes only
  int multiplicity = 1;     // critical point multiplicity as a zero of P'
  std::vector<EdgeEnd> incidences;  // counterclockwise
};

struct Web {
  int degree = 0;
  double radius = 0.0;
  std::vector<Leaf> leaves;
  std::vector<TracedCurve> curves;  // edges of the web, split at nodes
  std::vector<WebNode> nodes;
};

/// Where a single trace stopped.
struct TraceStop {
  enum class Kind : unsigned char { Boundary, Node } kind = Kind::Boundary;
  int node = -1;         // for Kind::Node
  Complex point;         // boundary crossing or node-disc entry
};

/// Points along the traced polyline where the other harmonic part changes sign.
struct OtherCrossing {
  std::size_t segment = 0;  // crossing lies between polyline[segment] and polyline[segment+1]
  Complex point;
};

struct TraceResult {
  TracedCurve curve;
  TraceStop stop;
  std::vector<OtherCrossing> crossings;
};

struct NodeDisc {
  Complex center;
  double radius = 0.0;
  int node = -1;
};

/// 4n leaves; slot k sits near angle k*pi/(2n), refined by bisection on the circle |z| = R.
std::vector<Leaf> leaves(const MonicPolynomial& p, double radius);

/// Predictor-corrector continuation of {F = 0} from `start` until the curve
/// leaves the disc of radius R or enters one of `discs`. `direction` is the
/// initial travel direction (only its sign relative to the tangent matters);
/// when absent the curve heads inward.
TraceResult trace_curve(const HarmonicPart& f, Complex start, double radius,
                        const TraceParams& params, std::span<const NodeDisc> discs = {},
                        std::optional<Complex> direction = std::nullopt);

/// Full harmonic web of P traced numerically.
Web extract_web(const MonicPolynomial& p, const TraceParams& params = {});

/// Independent extraction by sign analysis on a uniform grid.
Web sign_grid_oracle(const MonicPolynomial& p, int resolution, const TraceParams& params = {});

/// Plain-text LEAVES / CURVES / NODES dump, 9 significant digits.
std::string dump_web(const Web& web);

/// Node classification shared by both extractors.
struct NodeCandidate {
  NodeKind kind = NodeKind::Root;
  Color color = Color::Re;
  Complex position;
  int multiplicity = 1;
  Complex leading;  // Taylor coefficient of order multiplicity+1 (critical nodes)
};

/// Roots and degenerate critical points of P for web assembly. Throws
/// Error(NonGeneric) when the configuration is within tolerance of a
/// degenerate stratum that cannot be resolved.
std::vector<NodeCandidate> classify_nodes(const MonicPolynomial& p,
                                          std::span<const RootCluster> root_clusters,
                                          std::span<const RootCluster> critical_clusters,
                                          double radius, const TraceParams& params);

/// Arm directions (angles) of the zero set of F at a critical node, counterclockwise.
std::vector<double> arm_angles(const NodeCandidate& node);

}  // namespace gaussweb
