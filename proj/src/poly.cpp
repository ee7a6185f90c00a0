#include "gaussweb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>

namespace gaussweb {

MonicPolynomial::MonicPolynomial(std::vector<Complex> lower_coefficients)
    : coeffs_(std::move(lower_coefficients)) {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::Precondition, "monic polynomial needs degree >= 1");
  }
}

MonicPolynomial MonicPolynomial::from_roots(std::span<const Complex> roots) {
  // full coefficient list, highest first is awkward; keep ascending with explicit leading 1
  std::vector<Complex> c{Complex{1.0, 0.0}};
  for (const Complex r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex{});
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  c.pop_back();
  return MonicPolynomial(std::move(c));
}

Complex MonicPolynomial::operator()(Complex z) const noexcept {
  Complex acc{1.0, 0.0};
  for (int k = degree() - 1; k >= 0; --k) acc = acc * z + coeffs_[k];
  return acc;
}

Complex MonicPolynomial::derivative_at(Complex z) const noexcept {
  const int n = degree();
  Complex acc{static_cast<double>(n), 0.0};
  for (int k = n - 1; k >= 1; --k) acc = acc * z + static_cast<double>(k) * coeffs_[k];
  return acc;
}

Complex MonicPolynomial::taylor_coefficient(Complex z, int k) const {
  // sum_j C(j,k) a_j z^{j-k}
  const int n = degree();
  if (k > n) return {};
  Complex acc{};
  for (int j = n; j >= k; --j) {
    double binom = 1.0;
    for (int i = 0; i < k; ++i) binom = binom * (j - i) / (i + 1);
    acc = acc * z + binom * coefficient(j);
  }
  return acc;
}

MonicPolynomial MonicPolynomial::normalized_derivative() const {
  const int n = degree();
  if (n < 2) throw Error(ErrorKind::Precondition, "derivative of a degree-1 polynomial is constant");
  std::vector<Complex> d(n - 1);
  for (int k = 0; k < n - 1; ++k) d[k] = coefficient(k + 1) * static_cast<double>(k + 1) / static_cast<double>(n);
  return MonicPolynomial(std::move(d));
}

Complex evaluate(const MonicPolynomial& p, Complex z) noexcept { return p(z); }

double cauchy_radius(const MonicPolynomial& p) noexcept {
  double m = 0.0;
  for (const Complex a : p.coefficients()) m = std::max(m, std::abs(a));
  return 1.0 + m;
}

std::vector<Complex> roots(const MonicPolynomial& p, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::Precondition, "roots: tol must be positive");
  const int n = p.degree();
  if (n == 1) return {-p.coefficients()[0]};

  constexpr int kBudget = 200;
  const double radius = cauchy_radius(p);
  // Fixed seed: the perturbation only breaks symmetry, results must be reproducible.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    const double angle = (2.0 * std::numbers::pi * (k + jitter(rng)) + 0.4) / n;
    z[k] = std::polar(radius * (1.0 + 0.05 * jitter(rng)), angle);
  }

  std::vector<bool> done(n, false);
  for (int iter = 0; iter < kBudget; ++iter) {
    bool all_done = true;
    for (int k = 0; k < n; ++k) {
      if (done[k]) continue;
      const Complex value = p(z[k]);
      if (value == Complex{}) {
        done[k] = true;
        continue;
      }
      const Complex ratio = value / p.derivative_at(z[k]);
      Complex repulsion{};
      for (int j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
      z[k] -= step;
      if (std::abs(step) <= 4e-16 * (1.0 + std::abs(z[k]))) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }

  for (const Complex r : z) {
    const double bound = tol * std::pow(1.0 + std::abs(r), n);
    if (!(std::abs(p(r)) < bound)) {
      throw Error(ErrorKind::Numeric, "roots: Aberth iteration did not converge within budget");
    }
  }
  return z;
}

std::vector<Complex> critical_points(const MonicPolynomial& p, double tol) {
  if (p.degree() < 2) throw Error(ErrorKind::Precondition, "critical_points: degree must be >= 2");
  return roots(p.normalized_derivative(), tol);
}

std::vector<RootCluster> cluster_roots(std::span<const Complex> values, double rel_tol,
                                       double scale) {
  const double radius = rel_tol * scale;
  const std::size_t m = values.size();
  std::vector<std::size_t> parent(m);
  for (std::size_t i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (std::abs(values[i] - values[j]) <= radius) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::vector<Complex>> groups;
  for (std::size_t i = 0; i < m; ++i) groups[find(i)].push_back(values[i]);
  std::vector<RootCluster> out;
  for (const auto& [_, members] : groups) {
    Complex sum{};
    for (const Complex v : members) sum += v;
    out.push_back({sum / static_cast<double>(members.size()), static_cast<int>(members.size())});
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  return out;
}

BivariatePolynomial::BivariatePolynomial(int degree)
    : degree_(degree), coeffs_(static_cast<std::size_t>((degree + 1) * (degree + 1)), 0.0) {}

double BivariatePolynomial::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i > degree_ || j > degree_) return 0.0;
  return coeffs_[i * (degree_ + 1) + j];
}

void BivariatePolynomial::add(int i, int j, double value) {
  coeffs_.at(static_cast<std::size_t>(i * (degree_ + 1) + j)) += value;
}

double BivariatePolynomial::operator()(double x, double y) const noexcept {
  double total = 0.0;
  for (int i = degree_; i >= 0; --i) {
    double row = 0.0;
    for (int j = degree_; j >= 0; --j) row = row * y + coeffs_[i * (degree_ + 1) + j];
    total = total * x + row;
  }
  return total;
}

BivariatePolynomial BivariatePolynomial::laplacian() const {
  BivariatePolynomial out(degree_);
  for (int i = 0; i <= degree_; ++i) {
    for (int j = 0; j <= degree_; ++j) {
      const double c = coefficient(i, j);
      if (c == 0.0) continue;
      if (i >= 2) out.add(i - 2, j, c * i * (i - 1));
      if (j >= 2) out.add(i, j - 2, c * j * (j - 1));
    }
  }
  return out;
}

bool BivariatePolynomial::is_zero(double tol) const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [tol](double c) { return std::abs(c) <= tol; });
}

HarmonicPair harmonic_parts(const MonicPolynomial& p) {
  const int n = p.degree();
  HarmonicPair out{BivariatePolynomial(n), BivariatePolynomial(n)};
  for (int k = 0; k <= n; ++k) {
    const Complex a = p.coefficient(k);
    double binom = 1.0;
    for (int j = 0; j <= k; ++j) {
      // a * C(k,j) x^{k-j} (i y)^j
      static constexpr Complex kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      const Complex term = a * kPowI[j % 4] * binom;
      out.re_part.add(k - j, j, term.real());
      out.im_part.add(k - j, j, term.imag());
      binom = binom * (k - j) / (j + 1);
    }
  }
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

[[noreturn]] void usage_error(const std::string& what) { throw Error(ErrorKind::Usage, what); }

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) usage_error("bad number '" + std::string(s) + "'");
  return v;
}

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string text) : s_(std::move(text)) {}

  std::map<int, Complex> parse() {
    if (s_.empty()) usage_error("empty polynomial expression");
    std::map<int, Complex> terms;
    while (pos_ < s_.size()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
      } else if (pos_ != 0) {
        usage_error("expected '+' or '-' at position " + std::to_string(pos_));
      }
      auto [coef, power] = term();
      terms[power] += sign * coef;
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  std::pair<Complex, int> term() {
    Complex coef{1.0, 0.0};
    bool have_coef = false;
    if (peek() == '(') {
      ++pos_;
      const std::size_t close = s_.find(')', pos_);
      if (close == std::string::npos) usage_error("unbalanced parenthesis");
      coef = complex_literal(std::string_view(s_).substr(pos_, close - pos_));
      pos_ = close + 1;
      have_coef = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == 'e' ||
             ((peek() == '+' || peek() == '-') && pos_ > start && (s_[pos_ - 1] == 'e'))) {
        ++pos_;
      }
      coef = parse_double(std::string_view(s_).substr(start, pos_ - start));
      if (peek() == 'i') {
        coef = Complex{0.0, coef.real()};
        ++pos_;
      }
      have_coef = true;
    } else if (peek() == 'i') {
      coef = Complex{0.0, 1.0};
      ++pos_;
      have_coef = true;
    }
    if (peek() == '*') {
      if (!have_coef) usage_error("dangling '*'");
      ++pos_;
      if (peek() != 'z') usage_error("expected 'z' after '*'");
    }
    int power = 0;
    if (peek() == 'z') {
      ++pos_;
      power = 1;
      if (peek() == '^') {
        ++pos_;
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) usage_error("expected exponent after '^'");
        power = std::stoi(s_.substr(start, pos_ - start));
      }
    } else if (!have_coef) {
      usage_error("expected a term at position " + std::to_string(pos_));
    }
    return {coef, power};
  }

  static Complex complex_literal(std::string_view body) {
    if (body.empty()) usage_error("empty coefficient");
    Complex total{};
    std::size_t i = 0;
    while (i < body.size()) {
      std::size_t j = i + 1;
      while (j < body.size() && !((body[j] == '+' || body[j] == '-') && body[j - 1] != 'e')) ++j;
      std::string_view piece = body.substr(i, j - i);
      double sign = 1.0;
      if (!piece.empty() && (piece[0] == '+' || piece[0] == '-')) {
        sign = piece[0] == '-' ? -1.0 : 1.0;
        piece.remove_prefix(1);
      }
      if (piece.empty()) usage_error("bad complex coefficient");
      if (piece.back() == 'i') {
        piece.remove_suffix(1);
        total += Complex{0.0, sign * (piece.empty() ? 1.0 : parse_double(piece))};
      } else {
        total += sign * parse_double(piece);
      }
      i = j;
    }
    return total;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_polynomial_line(const MonicPolynomial& p) {
  std::string out = std::to_string(p.degree());
  for (const Complex a : p.coefficients()) {
    out += "; " + format_double(a.real()) + "," + format_double(a.imag());
  }
  return out;
}

MonicPolynomial parse_polynomial_line(std::string_view line) {
  const std::string s = strip_spaces(line);
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = s.find(';', start);
    fields.push_back(s.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (fields.size() < 2) usage_error("polynomial line needs a degree and coefficients");
  int n = 0;
  const auto [ptr, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), n);
  if (ec != std::errc{} || ptr != fields[0].data() + fields[0].size() || n < 1) {
    usage_error("bad degree field '" + fields[0] + "'");
  }
  if (static_cast<int>(fields.size()) != n + 1) usage_error("coefficient count does not match degree");
  std::vector<Complex> coeffs;
  for (int k = 1; k <= n; ++k) {
    const std::string& f = fields[k];
    const std::size_t comma = f.find(',');
    if (comma == std::string::npos) usage_error("coefficient '" + f + "' must be re,im");
    coeffs.emplace_back(parse_double(std::string_view(f).substr(0, comma)),
                        parse_double(std::string_view(f).substr(comma + 1)));
  }
  return MonicPolynomial(std::move(coeffs));
}

MonicPolynomial parse_polynomial_expression(std::string_view text) {
  const auto terms = ExpressionParser(strip_spaces(text)).parse();
  int n = 0;
  for (const auto& [power, coef] : terms) {
    if (coef != Complex{}) n = std::max(n, power);
  }
  if (n < 1) usage_error("polynomial must have degree >= 1");
  const auto lead = terms.find(n);
  if (std::abs(lead->second - Complex{1.0, 0.0}) > 1e-15) usage_error("polynomial must be monic");
  std::vector<Complex> coeffs(n, Complex{});
  for (const auto& [power, coef] : terms) {
    if (power < n) coeffs[power] += coef;
  }
  return MonicPolynomial(std::move(coeffs));
}

MonicPolynomial parse_polynomial(std::string_view text) {
  if (text.find(';') != std::string_view::npos) return parse_polynomial_line(text);
  return parse_polynomial_expression(text);
}

MonicPolynomial random_polynomial(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::Precondition, "random_polynomial: degree must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> r(n);
  for (Complex& z : r) z = {u(rng), u(rng)};
  return MonicPolynomial::from_roots(r);
}

MonicPolynomial random_real_rooted_polynomial(int n, std::uint64_t seed) {
  if (n < 1 || n > 20) throw Error(ErrorKind::Precondition, "random_real_rooted_polynomial: degree must lie in 1..20");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> xs;
  while (static_cast<int>(xs.size()) < n) {
    const double x = u(rng);
    if (std::all_of(xs.begin(), xs.end(), [&](double y) { return std::abs(x - y) >= 0.1; })) xs.push_back(x);
  }
  std::vector<Complex> r(xs.begin(), xs.end());
  return MonicPolynomial::from_roots(r);
}

}  // namespace gaussweb
