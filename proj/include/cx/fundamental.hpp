#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cx/curvature.hpp"
#include "cx/homology.hpp"
#include "cx/simplexify.hpp"
#include "cx/square_complex.hpp"

namespace cx {

// ---------------------------------------------------------------------------
// Fundamental group presentations from a breadth-first spanning tree.

struct Letter {
  int32_t generator;  // index into Presentation::generators
  bool inverse;
};

struct Presentation {
  std::vector<Name> generators;             // non-tree edge ids
  std::vector<std::vector<Letter>> relators; // one per square, in square order
  Name basepoint;
  std::vector<Name> tree_edges;
};

/// Spanning tree by breadth-first search in edge-id order; the relator of a
/// square transports its boundary word to the basepoint through the tree and
/// drops tree edges. Throws NotConnected on disconnected complexes.
Presentation pi1_presentation(const SquareComplex& X, const Name& basepoint);

std::string format_presentation(const Presentation& P);

struct AbelianProfile {
  long free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};

bool operator==(const AbelianProfile& a, const AbelianProfile& b);

/// Smith normal form of the relator exponent matrix.
AbelianProfile abelianization(const Presentation& P);

// ---------------------------------------------------------------------------
// Finite covers from permutation edge labelings.

struct EdgeLabeling {
  int fiber = 1;
  std::vector<std::vector<int>> perm;  // per edge: images of 0..fiber-1
};

EdgeLabeling identity_labeling(const SquareComplex& X, int fiber);

/// The boundary word of every square must act trivially on the fiber.
/// Throws InvalidLabeling naming the first offending square.
void validate_labeling(const SquareComplex& X, const EdgeLabeling& L);

struct CoverResult {
  SquareComplex complex;
  CombinatorialMap projection;  // cover -> base
};

/// Degree-d cover with vertices (v, i), edges (e, i) from (tail e, i) to
/// (head e, L(e)(i)) and one square lift per (square, fiber point).
CoverResult finite_cover(const SquareComplex& X, const EdgeLabeling& L);

/// Deck motion shifting every fiber index by `shift`; only valid when every
/// edge permutation is a cyclic shift (validated).
CombinatorialMap fiber_shift_map(const SquareComplex& cover, const SquareComplex& base,
                                 const EdgeLabeling& L, int shift);

struct Z2CoverInfo {
  std::vector<int> labels;  // 0/1 per edge, edge-id order
  bool connected = false;
  bool vh = false;
};

/// All valid Z/2 labelings (square boundary exponent sums even), each with
/// connectivity and the vh verdict of its cover. Capped at |E| <= 20.
std::vector<Z2CoverInfo> enumerate_z2_covers(const SquareComplex& X);

EdgeLabeling z2_labeling(const SquareComplex& X, const std::vector<int>& bits);

}  // namespace cx
