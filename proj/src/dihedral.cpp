#include "gaussweb/dihedral.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <set>

namespace gaussweb {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

DihedralElement::DihedralElement(int n, int k, int e) : n_(n), k_(0), e_(mod(e, 2)) {
  if (n < 1) throw Error(ErrorKind::Precondition, "dihedral element: degree must be positive");
  k_ = mod(k, 4 * n);
}

DihedralElement DihedralElement::operator*(const DihedralElement& h) const {
  if (h.n_ != n_) throw Error(ErrorKind::Precondition, "dihedral element: degree mismatch");
  // s^a t^e s^b t^f = s^(a + (-1)^e b) t^(e+f)
  return {n_, k_ + (e_ ? -h.k_ : h.k_), e_ + h.e_};
}

DihedralElement DihedralElement::inverse() const {
  if (e_) return *this;  // reflections are involutions
  return {n_, -k_, 0};
}

std::string DihedralElement::to_string() const {
  if (k_ == 0 && e_ == 0) return "e";
  std::string out;
  if (k_ == 1) out = "s";
  else if (k_ > 1) out = "s^" + std::to_string(k_);
  if (e_) out += out.empty() ? "t" : " t";
  return out;
}

DihedralElement DihedralElement::parse(int n, std::string_view text) {
  DihedralElement g = identity(n);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '*' || text[i] == '.')) ++i;
  };
  skip();
  if (text.substr(i) == "e") return g;
  while (i < text.size()) {
    const char c = text[i++];
    int power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw Error(ErrorKind::Usage, "group element: missing exponent in '" + std::string(text) + "'");
      }
      power = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) power = power * 10 + (text[i++] - '0');
      if (neg) power = -power;
    }
    DihedralElement gen = identity(n);
    if (c == 's') gen = {n, power, 0};
    else if (c == 't') gen = {n, 0, power};
    else if (c == 'e') gen = identity(n);
    else throw Error(ErrorKind::Usage, "group element: unexpected '" + std::string(1, c) + "'");
    g = g * gen;
    skip();
  }
  return g;
}

std::vector<DihedralElement> group_elements(int n) {
  std::vector<DihedralElement> out;
  for (int e = 0; e < 2; ++e) {
    for (int k = 0; k < 4 * n; ++k) out.emplace_back(n, k, e);
  }
  return out;
}

MonicPolynomial act_on_poly(const DihedralElement& g, const MonicPolynomial& p) {
  const int n = p.degree();
  if (g.degree() != n) throw Error(ErrorKind::Precondition, "act_on_poly: degree mismatch");
  std::vector<Complex> a(p.coefficients().begin(), p.coefficients().end());
  // t first (rightmost factor), then s^k.
  if (g.reflection()) {
    for (Complex& c : a) c = std::conj(c);
  }
  // s^k: P(z) -> i^k P(w^-k z), w = exp(i pi / 2n); coefficient j picks up
  // i^k w^(-kj) and the leading one i^k w^(-kn) = 1.
  const int k = g.rotation();
  for (int j = 0; j < n; ++j) {
    const int quarter_turns = k * (n - j);  // i^k w^(-kj) = w^(k(n-j))
    const int m = quarter_turns % (4 * n);
    const double angle = std::numbers::pi * m / (2.0 * n);
    // exact values at multiples of pi/2
    Complex phase;
    if (m % n == 0) {
      static const Complex units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      phase = units[(m / n) % 4];
    } else {
      phase = std::polar(1.0, angle);
    }
    a[j] *= phase;
  }
  return MonicPolynomial(std::move(a));
}

std::vector<int> slot_permutation(const DihedralElement& g) {
  const int slots = 4 * g.degree();
  std::vector<int> perm(slots);
  for (int j = 0; j < slots; ++j) {
    const int reflected = g.reflection() ? mod(-j, slots) : j;
    perm[j] = mod(reflected + g.rotation(), slots);
  }
  return perm;
}

ChordDiagram act_on_diagram(const DihedralElement& g, const ChordDiagram& d) {
  if (d.leaf_count() != 4 * g.degree()) throw Error(ErrorKind::Precondition, "act_on_diagram: degree mismatch");
  return relabel(d, slot_permutation(g), g.rotation() % 2 == 1, g.reflection() == 1);
}

bool check_equivariance(const MonicPolynomial& p, const DihedralElement& g, const TraceParams& params) {
  const ChordDiagram d = web_to_diagram(extract_web(p, params));
  const ChordDiagram gd = web_to_diagram(extract_web(act_on_poly(g, p), params));
  return canonical_form(act_on_diagram(g, d)) == canonical_form(gd);
}

GroupOrderReport measured_group_order(int n) {
  if (n < 1) throw Error(ErrorKind::Precondition, "measured_group_order: n must be positive");
  const int slots = 4 * n;
  // A colored-slot map is a permutation of (slot, color) pairs.
  using Perm = std::vector<int>;
  auto as_perm = [&](const DihedralElement& g) {
    const auto sp = slot_permutation(g);
    const bool swap = g.rotation() % 2 == 1;
    Perm p(2 * slots);
    for (int j = 0; j < slots; ++j) {
      for (int c = 0; c < 2; ++c) p[2 * j + c] = 2 * sp[j] + (swap ? 1 - c : c);
    }
    return p;
  };
  auto compose = [&](const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
    return out;
  };
  const Perm s = as_perm(DihedralElement::s(n));
  const Perm t = as_perm(DihedralElement::t(n));
  Perm id(2 * slots);
  for (int i = 0; i < 2 * slots; ++i) id[i] = i;

  std::set<Perm> seen{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    const Perm cur = queue.front();
    queue.pop_front();
    for (const Perm* gen : {&s, &t}) {
      Perm next = compose(*gen, cur);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  int order = 1;
  for (Perm p = s; p != id; p = compose(s, p)) ++order;

  GroupOrderReport r;
  r.n = n;
  r.measured = static_cast<int>(seen.size());
  r.rotation_order = order;
  r.nominal = 4 * n;
  r.mismatch = r.measured != r.nominal;
  return r;
}

}  // namespace gaussweb
