#pragma once

#include <optional>
#include <string>

#include "cx/curvature.hpp"
#include "cx/delta_complex.hpp"
#include "cx/square_complex.hpp"

namespace cx {

// ---------------------------------------------------------------------------
// SQC text format. Lines:
//   vertex <name>
//   edge <name> <tail> <head>
//   square <name> <s0> <s1> <s2> <s3>     (side "-e" traverses e reversed)
//   vclass <name>...                      (optional: the vertical edges)
// '#' starts a comment; names match [A-Za-z0-9_]+.

struct SqcParse {
  SquareComplex complex;
  std::optional<VHPartition> partition;
};

SqcParse parse_sqc(const std::string& text);
std::string serialize_sqc(const SquareComplex& X,
                          const std::optional<VHPartition>& P = std::nullopt);

// ---------------------------------------------------------------------------
// DSC text format. Lines:
//   simplex 0 <name>
//   simplex <k> <name> <f0> ... <fk>
// where f_i names the facet at slot i.

DeltaComplex parse_dsc(const std::string& text);
std::string serialize_dsc(const DeltaComplex& X);

// ---------------------------------------------------------------------------
// Builders.

/// Square complex of the product of two graphs: vertices V1 x V2, vertical
/// edges E1 x V2, horizontal edges V1 x E2, one square per edge pair. The
/// returned partition marks first-factor edges vertical.
SqcParse graph_product(const SquareComplex& G1, const SquareComplex& G2);

/// Wedge of m loops at one vertex (a graph, no squares).
SquareComplex rose(int m, const Name& vertex = "u", const Name& edge_prefix = "a");

/// Path with n edges (a graph, no squares).
SquareComplex path_graph(int n, const Name& vertex_prefix = "p", const Name& edge_prefix = "e");

/// Named complexes: "K" (two squares on three loops), "torus", "klein"
/// (with its vertical-edge partition), "disk", "rose_product(m,n)".
SqcParse standard_complex(const std::string& name);

/// Cone subdivision usable without any vertical/horizontal structure: one
/// center vertex and four triangles per square, original edges kept whole.
DeltaComplex generic_triangulation(const SquareComplex& X);

/// Boundary of the 3-simplex as a simple complex.
DeltaComplex boundary_of_3_simplex();

}  // namespace cx
