#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gaussweb {

/// Bijection of Z/qZ stored as its table of images.
struct ModularPermutation {
  int q = 0;
  std::vector<int> table;

  static ModularPermutation identity(int q);
  static ModularPermutation multiplication(int q, int d);
  static ModularPermutation theta(int q);  // a -> 1 - a
  static ModularPermutation negation(int q);

  int operator()(int a) const { return table[a]; }
  /// (f * g)(a) = f(g(a))
  ModularPermutation operator*(const ModularPermutation& g) const;
  ModularPermutation inverse() const;
  bool operator==(const ModularPermutation&) const = default;
  bool operator<(const ModularPermutation& o) const { return table < o.table; }
  int order() const;
  bool is_bijection() const;
};

/// a -> d*a + e with gcd(d, q) = 1.
struct AffineNormalForm {
  int q = 0;
  int d = 1;
  int e = 0;
  bool operator==(const AffineNormalForm&) const = default;
};

/// Generators of mGT_q: multiplication by a unit, or theta.
struct MgtGenerator {
  enum class Kind { Multiply, Theta } kind = Kind::Theta;
  int d = 1;
};
using MgtWord = std::vector<MgtGenerator>;  // applied left to right

struct MgtGroup {
  int q = 0;
  std::vector<ModularPermutation> elements;  // breadth-first order, identity first
  std::vector<MgtWord> words;                // a generator word for each element
};

int euler_phi(int q);

/// Closure of the unit multiplications and theta; 2 <= q <= 200.
MgtGroup mgt_group(int q);

std::optional<AffineNormalForm> affine_normal_form(const ModularPermutation& p);
ModularPermutation from_affine(const AffineNormalForm& a);

/// Closure of a -> -a and a -> 1 - a; q >= 3.
std::vector<ModularPermutation> dihedral_subgroup(int q);
/// Two involutions whose product has order q, generating a group of order 2q.
bool dihedral_presentation_holds(int q);

ModularPermutation evaluate(int q, const MgtWord& w);

/// Generator-wise image in mGT_p of a word of mGT_q. Throws Error(Precondition)
/// if p does not divide q.
ModularPermutation tower_map(int q, int p, const MgtWord& x);
/// The same map on affine normal forms: (d, e) -> (d mod p, e mod p).
AffineNormalForm tower_map(int p, const AffineNormalForm& x);

/// Checks that equal permutations mod q have equal images mod p over every
/// relation of the Cayley graph; throws Error(Invariant) with the witness pair.
void check_tower_well_defined(const MgtGroup& g, int p);

/// Image of a composition equals the composition of images, over all pairs.
bool tower_is_homomorphism(const MgtGroup& g, int p);

/// u_{p,r} o u_{q,p} = u_{q,r} on all of mGT_q.
bool tower_compatibility(int q, int p, int r);

struct MgtRow {
  int q = 0;
  int order = 0;
  int q_phi = 0;
  int dihedral_order = 0;  // 0 when q < 3
  bool all_affine = false;
  bool dihedral_ok = false;  // contained, order 2q, presentation holds
  bool ok() const { return order == q_phi && all_affine && (q < 3 || dihedral_ok); }
};

MgtRow mgt_row(int q);
std::string format_mgt_table(const std::vector<MgtRow>& rows);
std::string format_mgt_tsv(const std::vector<MgtRow>& rows);

}  // namespace gaussweb
