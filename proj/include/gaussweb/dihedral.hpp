#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gaussweb/diagram.hpp"

namespace gaussweb {

/// s^k t^e acting on degree-n objects. s has order 4n (one-slot rotation
/// with color swap), t is the reflection slot k -> -k.
class DihedralElement {
 public:
  DihedralElement(int n, int k = 0, int e = 0);

  static DihedralElement identity(int n) { return {n, 0, 0}; }
  static DihedralElement s(int n) { return {n, 1, 0}; }
  static DihedralElement t(int n) { return {n, 0, 1}; }

  int degree() const noexcept { return n_; }
  int rotation() const noexcept { return k_; }
  int reflection() const noexcept { return e_; }
  int rotation_order() const noexcept { return 4 * n_; }

  /// Composition: (g*h) acts as g after h.
  DihedralElement operator*(const DihedralElement& h) const;
  DihedralElement inverse() const;
  bool operator==(const DihedralElement&) const = default;
  /// Total order on normal forms: (e, k).
  bool operator<(const DihedralElement& o) const noexcept { return e_ != o.e_ ? e_ < o.e_ : k_ < o.k_; }

  /// "e", "s^3", "t", "s^2 t".
  std::string to_string() const;
  static DihedralElement parse(int n, std::string_view text);

 private:
  int n_, k_, e_;
};

/// All 8n elements in normal-form order.
std::vector<DihedralElement> group_elements(int n);

MonicPolynomial act_on_poly(const DihedralElement& g, const MonicPolynomial& p);

ChordDiagram act_on_diagram(const DihedralElement& g, const ChordDiagram& d);

/// Leaf permutation of g on the 4n slots and whether colors swap.
std::vector<int> slot_permutation(const DihedralElement& g);

/// Compares the diagram of g.P with g applied to the diagram of P.
bool check_equivariance(const MonicPolynomial& p, const DihedralElement& g, const TraceParams& params = {});

struct GroupOrderReport {
  int n = 0;
  int measured = 0;       // |<s, t>| acting on colored slots
  int rotation_order = 0; // order of s alone
  int nominal = 0;        // 4n
  bool mismatch = false;
};

/// Orders computed by closure over colored-slot permutations.
GroupOrderReport measured_group_order(int n);

}  // namespace gaussweb
