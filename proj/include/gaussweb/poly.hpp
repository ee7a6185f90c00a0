#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gaussweb {

using Complex = std::complex<double>;

/// Failure categories. The command-line front end maps these onto exit codes.
enum class ErrorKind {
  Numeric,        // iteration budget exhausted, tracing failure
  NonGeneric,     // input lies too close to a degenerate stratum
  Precondition,   // caller violated a documented precondition
  Usage,          // malformed input text
  Invariant,      // a structural invariant does not hold
  OracleMismatch  // two independent pipelines disagree
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Monic polynomial z^n + a_{n-1} z^{n-1} + ... + a_0 with the leading
/// coefficient kept implicit.
class MonicPolynomial {
 public:
  explicit MonicPolynomial(std::vector<Complex> lower_coefficients);

  static MonicPolynomial from_roots(std::span<const Complex> roots);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()); }
  /// a_0 .. a_{n-1}.
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }
  Complex coefficient(int k) const { return k == degree() ? Complex{1.0, 0.0} : coeffs_.at(k); }

  Complex operator()(Complex z) const noexcept;
  Complex derivative_at(Complex z) const noexcept;
  /// Value of the k-th derivative divided by k!, i.e. the Taylor coefficient at z.
  Complex taylor_coefficient(Complex z, int k) const;

  /// P'(z)/n, which is again monic.
  MonicPolynomial normalized_derivative() const;

  bool operator==(const MonicPolynomial&) const = default;

 private:
  std::vector<Complex> coeffs_;
};

Complex evaluate(const MonicPolynomial& p, Complex z) noexcept;

/// R = 1 + max |a_k|; every root and critical point lies strictly inside.
double cauchy_radius(const MonicPolynomial& p) noexcept;

/// Aberth-Ehrlich simultaneous iteration. Returns all n roots with
/// multiplicity. Throws Error(Numeric) when the residual test
/// |P(r)| < tol (1 + |r|)^n fails after the iteration budget.
std::vector<Complex> roots(const MonicPolynomial& p, double tol = 1e-9);

/// Roots of P'. Requires degree >= 2.
std::vector<Complex> critical_points(const MonicPolynomial& p, double tol = 1e-9);

struct RootCluster {
  Complex center;
  int multiplicity = 1;
};

/// Groups values closer than rel_tol * scale; centers are cluster means.
/// Output is sorted by (real, imag) of the center.
std::vector<RootCluster> cluster_roots(std::span<const Complex> values, double rel_tol,
                                       double scale);

/// Real bivariate polynomial sum c_{ij} x^i y^j of total degree <= n.
class BivariatePolynomial {
 public:
  explicit BivariatePolynomial(int degree);

  int degree() const noexcept { return degree_; }
  double coefficient(int i, int j) const;
  void add(int i, int j, double value);

  double operator()(double x, double y) const noexcept;
  BivariatePolynomial laplacian() const;
  bool is_zero(double tol = 0.0) const noexcept;

 private:
  int degree_;
  std::vector<double> coeffs_;  // (degree+1)^2 dense, index i*(degree+1)+j
};

struct HarmonicPair {
  BivariatePolynomial re_part;
  BivariatePolynomial im_part;
};

HarmonicPair harmonic_parts(const MonicPolynomial& p);

/// "n; re0,im0; re1,im1; ..." with coefficients a_0..a_{n-1}.
std::string format_polynomial_line(const MonicPolynomial& p);
MonicPolynomial parse_polynomial_line(std::string_view line);

/// Sums of monomials in z with complex coefficients, e.g. "z^3 - (1+2i)z + 0.5".
/// The highest-degree coefficient must be 1. Whitespace-insensitive.
MonicPolynomial parse_polynomial_expression(std::string_view text);

/// Accepts either of the two text forms above.
MonicPolynomial parse_polynomial(std::string_view text);

/// Roots uniform in the square [-1, 1]^2; deterministic in the seed.
MonicPolynomial random_polynomial(int n, std::uint64_t seed);

/// n real roots in [-1, 1], pairwise at least 0.1 apart.
MonicPolynomial random_real_rooted_polynomial(int n, std::uint64_t seed);

}  // namespace gaussweb
