#include "gaussweb/mgt.hpp"

#include <cstdio>
#include <numeric>
#include <set>
#include <unordered_map>

#include "gaussweb/poly.hpp"

namespace gaussweb {

namespace {

int mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

std::string key(const ModularPermutation& p) {
  std::string k(p.table.size(), '\0');
  for (std::size_t i = 0; i < p.table.size(); ++i) k[i] = static_cast<char>(p.table[i]);
  return k;
}

ModularPermutation generator_perm(int q, const MgtGenerator& g) {
  return g.kind == MgtGenerator::Kind::Theta ? ModularPermutation::theta(q) : ModularPermutation::multiplication(q, g.d);
}

std::vector<MgtGenerator> generators(int q) {
  std::vector<MgtGenerator> out;
  for (int d = 1; d < q; ++d) {
    if (std::gcd(d, q) == 1) out.push_back({MgtGenerator::Kind::Multiply, d});
  }
  if (q == 1) out.push_back({MgtGenerator::Kind::Multiply, 0});
  out.push_back({MgtGenerator::Kind::Theta, 1});
  return out;
}

// Units whose products already give every unit, chosen greedily; the
// closure of these and theta equals the closure of all generators.
std::vector<MgtGenerator> reduced_generators(int q) {
  std::vector<bool> reached(q, false);
  reached[1 % q] = true;
  std::vector<int> subgroup{1 % q};
  std::vector<MgtGenerator> out;
  for (int d = 1; d < q; ++d) {
    if (std::gcd(d, q) != 1 || reached[d]) continue;
    out.push_back({MgtGenerator::Kind::Multiply, d});
    for (std::size_t i = 0; i < subgroup.size(); ++i) {
      for (const auto& g : out) {
        const int next = mod(static_cast<long long>(subgroup[i]) * g.d, q);
        if (!reached[next]) {
          reached[next] = true;
          subgroup.push_back(next);
        }
      }
    }
  }
  out.push_back({MgtGenerator::Kind::Theta, 1});
  return out;
}

}  // namespace

ModularPermutation ModularPermutation::identity(int q) {
  ModularPermutation p{q, std::vector<int>(q)};
  std::iota(p.table.begin(), p.table.end(), 0);
  return p;
}

ModularPermutation ModularPermutation::multiplication(int q, int d) {
  ModularPermutation p{q, std::vector<int>(q)};
  for (int a = 0; a < q; ++a) p.table[a] = mod(static_cast<long long>(d) * a, q);
  return p;
}

ModularPermutation ModularPermutation::theta(int q) {
  ModularPermutation p{q, std::vector<int>(q)};
  for (int a = 0; a < q; ++a) p.table[a] = mod(1 - a, q);
  return p;
}

ModularPermutation ModularPermutation::negation(int q) { return multiplication(q, -1); }

ModularPermutation ModularPermutation::operator*(const ModularPermutation& g) const {
  if (g.q != q) throw Error(ErrorKind::Precondition, "modular permutation: modulus mismatch");
  ModularPermutation out{q, std::vector<int>(q)};
  for (int a = 0; a < q; ++a) out.table[a] = table[g.table[a]];
  return out;
}

ModularPermutation ModularPermutation::inverse() const {
  ModularPermutation out{q, std::vector<int>(q)};
  for (int a = 0; a < q; ++a) out.table[table[a]] = a;
  return out;
}

int ModularPermutation::order() const {
  const ModularPermutation id = identity(q);
  int k = 1;
  for (ModularPermutation p = *this; p != id; p = p * *this) ++k;
  return k;
}

bool ModularPermutation::is_bijection() const {
  if (static_cast<int>(table.size()) != q) return false;
  std::vector<bool> seen(q, false);
  for (const int v : table) {
    if (v < 0 || v >= q || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

int euler_phi(int q) {
  int count = 0;
  for (int d = 1; d <= q; ++d) count += std::gcd(d, q) == 1;
  return count;
}

MgtGroup mgt_group(int q) {
  if (q < 2 || q > 200) throw Error(ErrorKind::Precondition, "mgt_group: q must lie in 2..200");
  const auto gens = reduced_generators(q);
  MgtGroup g;
  g.q = q;
  g.elements.push_back(ModularPermutation::identity(q));
  g.words.emplace_back();
  std::unordered_map<std::string, int> seen{{key(g.elements[0]), 0}};
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (const MgtGenerator& gen : gens) {
      // word applied left to right: the new generator acts last
      ModularPermutation next = generator_perm(q, gen) * g.elements[i];
      if (seen.emplace(key(next), static_cast<int>(g.elements.size())).second) {
        MgtWord w = g.words[i];
        w.push_back(gen);
        g.elements.push_back(std::move(next));
        g.words.push_back(std::move(w));
      }
    }
  }
  return g;
}

std::optional<AffineNormalForm> affine_normal_form(const ModularPermutation& p) {
  const int q = p.q;
  if (q < 1 || !p.is_bijection()) return std::nullopt;
  const int e = p(0);
  const int d = q == 1 ? 0 : mod(p(1) - e, q);
  if (std::gcd(d, q) != 1 && q != 1) return std::nullopt;
  for (int a = 0; a < q; ++a) {
    if (p(a) != mod(static_cast<long long>(d) * a + e, q)) return std::nullopt;
  }
  return AffineNormalForm{q, d, e};
}

ModularPermutation from_affine(const AffineNormalForm& a) {
  ModularPermutation p{a.q, std::vector<int>(a.q)};
  for (int x = 0; x < a.q; ++x) p.table[x] = mod(static_cast<long long>(a.d) * x + a.e, a.q);
  return p;
}

std::vector<ModularPermutation> dihedral_subgroup(int q) {
  if (q < 3) throw Error(ErrorKind::Precondition, "dihedral_subgroup: q must be at least 3");
  const ModularPermutation gens[2] = {ModularPermutation::negation(q), ModularPermutation::theta(q)};
  std::vector<ModularPermutation> out{ModularPermutation::identity(q)};
  std::set<ModularPermutation> seen{out[0]};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      ModularPermutation next = g * out[i];
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

bool dihedral_presentation_holds(int q) {
  const ModularPermutation a = ModularPermutation::negation(q);
  const ModularPermutation b = ModularPermutation::theta(q);
  const ModularPermutation id = ModularPermutation::identity(q);
  return a != id && b != id && a * a == id && b * b == id && (a * b).order() == q &&
         static_cast<int>(dihedral_subgroup(q).size()) == 2 * q;
}

ModularPermutation evaluate(int q, const MgtWord& w) {
  ModularPermutation p = ModularPermutation::identity(q);
  for (const MgtGenerator& g : w) p = generator_perm(q, g) * p;
  return p;
}

ModularPermutation tower_map(int q, int p, const MgtWord& x) {
  if (p < 1 || q % p != 0) throw Error(ErrorKind::Precondition, "tower_map: " + std::to_string(p) + " does not divide " + std::to_string(q));
  MgtWord image;
  for (const MgtGenerator& g : x) {
    image.push_back(g.kind == MgtGenerator::Kind::Theta ? g : MgtGenerator{MgtGenerator::Kind::Multiply, mod(g.d, p)});
  }
  return evaluate(p, image);
}

AffineNormalForm tower_map(int p, const AffineNormalForm& x) {
  if (p < 1 || x.q % p != 0) throw Error(ErrorKind::Precondition, "tower_map: " + std::to_string(p) + " does not divide " + std::to_string(x.q));
  return {p, mod(x.d, p), mod(x.e, p)};
}

void check_tower_well_defined(const MgtGroup& g, int p) {
  if (p < 1 || g.q % p != 0) throw Error(ErrorKind::Precondition, "tower_map: " + std::to_string(p) + " does not divide " + std::to_string(g.q));
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < g.elements.size(); ++i) index.emplace(key(g.elements[i]), static_cast<int>(i));
  std::vector<ModularPermutation> image;
  for (const MgtWord& w : g.words) image.push_back(tower_map(g.q, p, w));
  // every Cayley-graph edge x -> gen*x is a relation between two words
  const auto gens = generators(g.q);
  std::vector<ModularPermutation> gen_q, gen_p;
  for (const MgtGenerator& gen : gens) {
    gen_q.push_back(generator_perm(g.q, gen));
    gen_p.push_back(tower_map(g.q, p, MgtWord{gen}));
  }
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int j = index.at(key(gen_q[k] * g.elements[i]));
      // image of words[i] followed by gens[k]
      if (gen_p[k] * image[i] != image[j]) {
        MgtWord w = g.words[i];
        w.push_back(gens[k]);
        std::string a, b;
        for (const auto& s : w) a += s.kind == MgtGenerator::Kind::Theta ? "T " : "m" + std::to_string(s.d) + " ";
        for (const auto& s : g.words[j]) b += s.kind == MgtGenerator::Kind::Theta ? "T " : "m" + std::to_string(s.d) + " ";
        throw Error(ErrorKind::Invariant, "tower_map not well defined: words [" + a + "] and [" + b + "] agree mod " +
                                              std::to_string(g.q) + " but not mod " + std::to_string(p));
      }
    }
  }
}

bool tower_is_homomorphism(const MgtGroup& g, int p) {
  std::vector<AffineNormalForm> forms;
  for (const auto& e : g.elements) {
    const auto f = affine_normal_form(e);
    if (!f) return false;
    forms.push_back(*f);
  }
  for (const auto& x : forms) {
    for (const auto& y : forms) {
      const auto xy = affine_normal_form(from_affine(x) * from_affine(y));
      if (!xy) return false;
      if (from_affine(tower_map(p, *xy)) != from_affine(tower_map(p, x)) * from_affine(tower_map(p, y))) return false;
    }
  }
  return true;
}

bool tower_compatibility(int q, int p, int r) {
  if (p < 1 || r < 1 || q % p != 0 || p % r != 0) throw Error(ErrorKind::Precondition, "tower_compatibility: need r | p | q");
  const MgtGroup g = mgt_group(q);
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    const auto f = affine_normal_form(g.elements[i]);
    if (!f) return false;
    if (tower_map(r, tower_map(p, *f)) != tower_map(r, *f)) return false;
    // word route: reduce the word to p, then to r
    const ModularPermutation via_p = tower_map(q, p, g.words[i]);
    const auto fp = affine_normal_form(via_p);
    if (!fp || from_affine(tower_map(r, *fp)) != tower_map(q, r, g.words[i])) return false;
  }
  return true;
}

MgtRow mgt_row(int q) {
  MgtRow row;
  row.q = q;
  const MgtGroup g = mgt_group(q);
  row.order = static_cast<int>(g.elements.size());
  row.q_phi = q * euler_phi(q);
  row.all_affine = true;
  std::set<ModularPermutation> members;
  for (const auto& e : g.elements) {
    if (!affine_normal_form(e)) row.all_affine = false;
    members.insert(e);
  }
  if (q >= 3) {
    const auto d = dihedral_subgroup(q);
    row.dihedral_order = static_cast<int>(d.size());
    bool contained = true;
    for (const auto& e : d) contained = contained && members.count(e);
    row.dihedral_ok = contained && row.dihedral_order == 2 * q && dihedral_presentation_holds(q);
  }
  return row;
}

std::string format_mgt_table(const std::vector<MgtRow>& rows) {
  std::string out = "    q  |mGT_q|  q*phi(q)  |D|  affine  ok\n";
  char buf[96];
  for (const MgtRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%5d  %7d  %8d  %3d  %-6s  %s\n", r.q, r.order, r.q_phi, r.dihedral_order,
                  r.all_affine ? "yes" : "no", r.ok() ? "yes" : "NO");
    out += buf;
  }
  return out;
}

std::string format_mgt_tsv(const std::vector<MgtRow>& rows) {
  std::string out = "q\torder\tq_phi\tdihedral_order\taffine\tok\n";
  for (const MgtRow& r : rows) {
    out += std::to_string(r.q) + "\t" + std::to_string(r.order) + "\t" + std::to_string(r.q_phi) + "\t" +
           std::to_string(r.dihedral_order) + "\t" + (r.all_affine ? "1" : "0") + "\t" + (r.ok() ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace gaussweb
