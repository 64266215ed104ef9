#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cx/curvature.hpp"
#include "cx/delta_complex.hpp"
#include "cx/square_complex.hpp"

namespace cx {

// ---------------------------------------------------------------------------
// One vertical-side occurrence of an edge: a square together with the side
// position carrying the edge. A square with both vertical sides on the same
// edge contributes two occurrences.

struct Occurrence {
  int32_t square;
  int side;       // 0..3
  bool reversed;  // side traverses the edge head -> tail
};

enum class ProvTag {
  VertexStar,          // cell = vertex
  Midpoint,            // cell = vertical edge
  Center,              // cell = square
  HalfEdgeLower,       // (tail, mid) of a vertical edge
  HalfEdgeUpper,       // (mid, head)
  HorizontalEdge,      // copy of a horizontal edge
  CornerSpoke,         // cell = square, index = corner
  MidpointSpoke,       // cell = square, index = vertical side
  HorizontalTriangle,  // cell = square, index = horizontal side
  QuarterTriangleLower,// cell = square, index = vertical side
  QuarterTriangleUpper,
  SigmaFace,           // cell = vertical edge; see part/with_mid/occ
};

struct Provenance {
  ProvTag tag;
  Name cell;
  int index = -1;
  int part = 0;           // SigmaFace: -1 lower vertex, +1 upper vertex, 0 shared
  bool with_mid = false;  // SigmaFace: contains the midpoint slot
  std::vector<int> occ;   // SigmaFace: occurrence indices into A(e)
};

struct Simplexification {
  DeltaComplex complex;
  std::unordered_map<Name, Provenance> provenance;
  std::vector<std::vector<Occurrence>> occurrences;  // per edge index; empty unless vertical
  VHPartition partition;
  bool starred = false;  // false: triangulation only, true: sigma simplices attached
};

/// Subdivides every vertical edge in two and every square into six triangles
/// (two through the center along the horizontal sides, four quarter triangles
/// on the vertical half-edges). Cell counts: |V|+|E_V|+|S| vertices,
/// |E_H|+2|E_V|+6|S| edges, 6|S| triangles.
Simplexification triangulate_vh(const SquareComplex& X, const VHPartition& P);

/// Triangulation plus, for every vertical edge e with occurrence list
/// (o_1..o_n), n >= 2, the two top simplices with slot orders
/// (v_-, e, o_1..o_n) and (e, v_+, o_1..o_n) and all of their faces,
/// identified with existing cells wherever a face involves at most one
/// occurrence slot. For n <= 1 the attachment degenerates to cells already
/// present and nothing is added.
Simplexification simplexify(const SquareComplex& X, const VHPartition& P);

// ---------------------------------------------------------------------------
// Structural link checks.

struct StructuralCheck {
  bool pass = false;
  int m = 0, n = 0;     // piece sizes
  std::string detail;
};

/// The link at the midpoint vertex of a vertical edge with n >= 1 occurrences
/// must be the suspension of an (n-1)-simplex: two poles from the half-edge
/// slots, n equator vertices from the midpoint-spoke slots, all joins filled.
/// Emits the vertex role assignment in `detail` on success.
StructuralCheck verify_link_suspension(const SquareComplex& X, const Simplexification& S,
                                       const Name& vertical_edge);

/// The link at a center vertex must decompose as two suspensions of simplices
/// (piece sizes = the occurrence counts of the two vertical sides) joined by
/// exactly two vertex-disjoint pole-to-pole edges.
StructuralCheck verify_center_link(const SquareComplex& X, const Simplexification& S,
                                   const Name& square);

// ---------------------------------------------------------------------------
// Combinatorial maps between square complexes and the induced simplicial
// maps between their simplexifications.

struct CombinatorialMap {
  std::vector<int32_t> vmap;   // per source vertex
  std::vector<int32_t> emap;   // per source edge
  std::vector<int8_t> erev;    // 1 when the edge orientation reverses
  std::vector<int32_t> smap;   // per source square
  std::vector<int8_t> srot;    // side j maps to side (j + srot) mod 4
  std::vector<int8_t> srefl;   // 1 when the boundary word reflects
};

/// Checks vertex/edge incidence and that each square's sides match the target
/// square's sides under the recorded dihedral adjustment.
void validate_combinatorial_map(const SquareComplex& X, const SquareComplex& Y,
                                const CombinatorialMap& f);

CombinatorialMap identity_combinatorial_map(const SquareComplex& X);

/// f after g (g: A -> B, f: B -> C).
CombinatorialMap compose(const SquareComplex& A, const SquareComplex& B, const SquareComplex& C,
                         const CombinatorialMap& f, const CombinatorialMap& g);

bool combinatorial_maps_equal(const CombinatorialMap& a, const CombinatorialMap& b);

/// Distinct edge-end occurrences at every vertex map to distinct occurrences.
bool locally_injective(const SquareComplex& X, const SquareComplex& Y, const CombinatorialMap& f);

/// Induced simplicial map between simplexifications. Requires f to preserve
/// the partitions and edge orientations (no reflections) and to be injective
/// on the vertical-side occurrence list over every vertical edge; covering
/// maps, deck transformations and isomorphisms qualify. The result commutes
/// with all facet maps (validated).
SimplicialMap induced_map(const SquareComplex& X, const SquareComplex& Y,
                          const CombinatorialMap& f, const Simplexification& SX,
                          const Simplexification& SY);

}  // namespace cx
