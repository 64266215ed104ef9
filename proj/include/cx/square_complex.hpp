#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cx/error.hpp"

namespace cx {

using Name = std::string;

// ---------------------------------------------------------------------------
// Raw (parsed, unvalidated) description of a generalized square complex.

struct SqcSideDecl {
  Name edge;
  bool reversed = false;  // "-e": traverse head -> tail
};

struct SqcEdgeDecl {
  Name id, tail, head;
};

struct SqcSquareDecl {
  Name id;
  std::array<SqcSideDecl, 4> sides;
};

struct SqcDocument {
  std::vector<Name> vertices;
  std::vector<SqcEdgeDecl> edges;
  std::vector<SqcSquareDecl> squares;
  std::vector<Name> vclass;  // edges declared vertical, empty when absent
};

// ---------------------------------------------------------------------------
// Validated complex. Cells are sorted by identifier so that every index-based
// iteration is already in canonical (identifier) order.

struct Side {
  int32_t edge = -1;
  bool reversed = false;
};

struct EdgeCell {
  Name id;
  int32_t tail = -1, head = -1;
};

struct SquareCell {
  Name id;
  std::array<Side, 4> sides;
};

class SquareComplex {
 public:
  std::vector<Name> vertices;
  std::vector<EdgeCell> edges;
  std::vector<SquareCell> squares;

  int32_t vertex_index(const Name& id) const;
  int32_t edge_index(const Name& id) const;
  int32_t square_index(const Name& id) const;

  // Corner i of a square sits at initial(side_i); the boundary chain runs
  // terminal(side_i) == initial(side_{i+1 mod 4}).
  int32_t side_initial(const SquareCell& s, int i) const;
  int32_t side_terminal(const SquareCell& s, int i) const;
  int32_t corner_vertex(const SquareCell& s, int i) const { return side_initial(s, i); }

  std::unordered_map<Name, int32_t> vertex_lookup, edge_lookup, square_lookup;
};

/// Checks identifier uniqueness, reference resolution and the corner chain of
/// every square. Loops, repeated edges in one boundary word and squares using
/// one edge up to four times are all legal.
SquareComplex validate_square_complex(const SqcDocument& raw);

// ---------------------------------------------------------------------------
// Occurrence-indexed vertex link: a multigraph whose vertices are edge-end
// occurrences at the base vertex and whose edges are square corners there.

struct EdgeEnd {
  int32_t edge;
  bool head;  // false: tail end, true: head end
};

struct LinkCorner {
  int32_t square;
  int corner;       // 0..3
  int32_t from, to; // indices into LinkGraph::verts
};

struct LinkGraph {
  int32_t base_vertex;
  std::vector<EdgeEnd> verts;    // ordered by (edge index, tail end first)
  std::vector<LinkCorner> edges; // ordered by (square index, corner)
};

LinkGraph square_vertex_link(const SquareComplex& X, int32_t v);
LinkGraph square_vertex_link(const SquareComplex& X, const Name& v);

/// "a.t" / "a.h" labels for link vertices.
Name end_label(const SquareComplex& X, const EdgeEnd& e);

long euler_characteristic(const SquareComplex& X);

/// Connected components of the 1-skeleton; returns one component id per
/// vertex, numbered 0..n-1 in order of least member vertex.
std::vector<int32_t> components(const SquareComplex& X);
int component_count(const SquareComplex& X);

}  // namespace cx
