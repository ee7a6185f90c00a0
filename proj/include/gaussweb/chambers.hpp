#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaussweb/dihedral.hpp"

namespace gaussweb {

/// Diagram of a polynomial with n distinct real roots: the real axis is an
/// IM chord (leaf 0 to leaf 2n) through the n roots and the n-1 critical
/// points between them; every root carries a vertical RE chord and every
/// critical point a vertical IM chord.
ChordDiagram real_locus_diagram(int n);

struct Chamber {
  DihedralElement label;                      // minimal element of its coset
  CanonicalCode representative;               // label applied to the fundamental representative
  std::vector<CanonicalCode> members;         // classes homed here (a partition)
  std::vector<CanonicalCode> closed_members;  // label applied to the whole fundamental domain
};

struct ChamberDecomposition {
  int n = 0;
  int group_order = 0;
  int nominal_chambers = 0;  // 4n
  std::vector<CanonicalCode> classes;
  std::vector<std::vector<int>> action;        // action[g][class], g in group_elements order
  std::vector<int> orbit_of;                   // class -> orbit index
  std::vector<int> fundamental_domain;         // one class per orbit
  int fundamental_representative = -1;         // class with the smallest stabilizer in the domain
  std::vector<DihedralElement> domain_stabilizer;
  std::vector<Chamber> chambers;
  std::vector<int> home;                       // class -> chamber index
  bool partition = false;
  bool transitive = false;
  bool simply_transitive = false;
  int real_locus_class = -1;
};

/// Orbits, fundamental domain and chambers of a dihedral-closed diagram set.
/// Throws Error(Precondition) listing escapees if the set is not closed.
ChamberDecomposition chamber_decomposition(int n, const std::vector<ChordDiagram>& diagrams);

/// Generic diagrams together with the orbit of the real-locus diagram.
std::vector<ChordDiagram> chamber_diagram_set(int n);

/// The unique chamber whose classes include the real-locus diagram.
int fundamental_chamber(const ChamberDecomposition& dec);

struct Gallery {
  std::vector<int> chambers;
  std::vector<std::string> moves;  // "s", "s^-1" or "t", right multiplication
  int length() const noexcept { return static_cast<int>(moves.size()); }
};

/// Shortest gallery by breadth-first search over right multiplication.
Gallery gallery(const ChamberDecomposition& dec, int from, int to);

/// Reconnection graph on generic classes: two diagrams are adjacent when
/// one color's chords agree and the other's differ by reconnecting two chords.
std::vector<std::vector<int>> reconnection_graph(const ChamberDecomposition& dec);

struct PathLiftingReport {
  int samples = 0;
  int lifted = 0;
  bool all_lift = false;
};

/// Random walks of `length` steps on the orbit quotient of the reconnection
/// graph, each lifted step by step from a random preimage.
PathLiftingReport check_path_lifting(const ChamberDecomposition& dec, int samples, int length, std::uint64_t seed);
bool check_path_lifting(int samples);

/// Plain-text chamber report.
std::string chamber_report(const ChamberDecomposition& dec);

}  // namespace gaussweb
