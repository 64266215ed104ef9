#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cx/delta_complex.hpp"
#include "cx/square_complex.hpp"

namespace cx {

// ---------------------------------------------------------------------------
// Vertical/horizontal edge classification. In every square opposite sides
// carry the same class and adjacent sides differ.

enum class EdgeClass : uint8_t { V, H };

struct VHPartition {
  std::vector<EdgeClass> cls;  // per edge index
  int free_components = 0;     // connected components of the constraint graph

  bool vertical(int32_t e) const { return cls[e] == EdgeClass::V; }
};

/// Throws PartitionMismatch unless every square alternates V/H.
void verify_partition(const SquareComplex& X, const VHPartition& P);

VHPartition swap_classes(VHPartition P);

// ---------------------------------------------------------------------------
// Certificates. Each one re-verifies against the original input in one pass.

struct ShortLinkCycle {
  Name vertex;
  struct Edge {
    Name square;
    int corner;
  };
  std::vector<Edge> corners;  // 1 = loop, 2 = parallel pair, 3 = triangle
};

struct VhStep {
  Name square;
  bool equality;         // true: opposite sides, false: adjacent sides
  int side_a, side_b;
  Name from_edge, to_edge;
};

struct VhContradiction {
  std::vector<VhStep> steps;  // closed walk with an odd number of inequalities
};

struct NotSimple {
  Name vertex;                // base vertex of the offending link
  std::vector<Name> cells;    // one cell with a repeated vertex, or two with equal vertex sets
};

struct MissingCliqueSimplex {
  Name vertex;
  std::vector<Name> clique;   // minimal unspanned clique, as link vertex names
};

struct ChordlessCycle {
  Name vertex;
  std::vector<Name> cycle;    // cyclic vertex list, canonical rotation/orientation
};

using Certificate =
    std::variant<ShortLinkCycle, VhContradiction, NotSimple, MissingCliqueSimplex, ChordlessCycle>;

enum class Verdict { Pass, Fail, Error };

struct CheckOutcome {
  Verdict verdict = Verdict::Pass;
  std::vector<Certificate> certificates;
  std::string error;

  bool passed() const { return verdict == Verdict::Pass; }
};

bool reverify(const SquareComplex& X, const ShortLinkCycle& c);
bool reverify(const SquareComplex& X, const VhContradiction& c);
bool reverify(const DeltaComplex& X, const NotSimple& c);
bool reverify(const DeltaComplex& X, const MissingCliqueSimplex& c);
bool reverify(const DeltaComplex& X, const ChordlessCycle& c);

// ---------------------------------------------------------------------------
// Checks on square complexes.

/// Shortest embedded cycle of length <= 3 in a vertex link (loop, parallel
/// pair or triangle), lexicographically least among the shortest; nullopt if
/// the link has girth >= 4.
std::optional<ShortLinkCycle> short_cycle_search(const SquareComplex& X, const LinkGraph& L);

/// Nonpositive curvature: no vertex link contains an embedded cycle of
/// length < 4. One ShortLinkCycle certificate per offending vertex.
CheckOutcome check_npc(const SquareComplex& X);

struct VhResult {
  std::optional<VHPartition> partition;
  std::optional<VhContradiction> contradiction;

  bool ok() const { return partition.has_value(); }
};

/// 2-colors the edge-constraint graph (equalities between opposite sides,
/// inequalities between adjacent sides) by BFS in edge-id order. On success
/// the least edge id of every constraint component is assigned V.
VhResult detect_vh(const SquareComplex& X);

// ---------------------------------------------------------------------------
// Checks on simplicial complexes (links in particular).

struct SimpleCheck {
  bool ok = true;
  std::vector<Name> offenders;
};

/// No simplex with two equal vertex occurrences, no two distinct simplices of
/// equal dimension with identical vertex sets.
SimpleCheck check_simple(const DeltaComplex& L);

struct FlagCheck {
  bool ok = true;
  std::vector<Name> missing_clique;  // minimal clique spanned by no simplex
};

constexpr size_t kDefaultCliqueBudget = 1000000;

/// Every clique of the 1-skeleton must span a simplex. Requires check_simple.
/// Throws CliqueBudgetExceeded when more than `budget` cliques are visited.
FlagCheck check_flag(const DeltaComplex& L, size_t budget = kDefaultCliqueBudget);

/// All embedded 4- and 5-cycles of the 1-skeleton with no edge joining two
/// nonconsecutive cycle vertices, one canonical representative each
/// (least starting vertex, least orientation). Requires check_simple.
std::vector<std::vector<Name>> chordless_cycle_search(const DeltaComplex& L);

/// Same search on a plain graph, used by the oracle tests.
std::vector<std::vector<int>> chordless_cycles_graph(
    int n, const std::vector<std::pair<int, int>>& edges);

struct SixLargeOptions {
  size_t clique_budget = kDefaultCliqueBudget;
  bool all_simplices = false;  // also check links of positive-dimensional simplices
};

/// Locally 6-large: every vertex link is simple, flag, and has no chordless
/// 4- or 5-cycles. Certificates are aggregated per vertex in id order.
CheckOutcome check_locally_6_large(const DeltaComplex& X, const SixLargeOptions& opts = {});

}  // namespace cx
