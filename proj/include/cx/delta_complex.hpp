#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cx/error.hpp"
#include "cx/square_complex.hpp"  // Name

namespace cx {

// ---------------------------------------------------------------------------
// Raw description of a dimension-graded generalized simplicial complex.
// A k-simplex (k >= 1) carries an ordered tuple of k+1 facet references;
// facet i is the (k-1)-simplex obtained by deleting vertex slot i.

struct DscSimplexDecl {
  int dim = 0;
  Name id;
  std::vector<Name> facets;  // size dim+1 for dim >= 1, empty for vertices
};

struct DscDocument {
  std::vector<DscSimplexDecl> simplices;
};

// ---------------------------------------------------------------------------

class DeltaComplex {
 public:
  struct Level {
    std::vector<Name> names;                       // sorted
    std::vector<std::vector<int32_t>> facets;      // facets[i] has dim+1 entries
    std::vector<std::vector<int32_t>> slot_vertex; // vertex reached by keeping one slot
    std::unordered_map<Name, int32_t> lookup;
  };

  std::vector<Level> levels;

  int top_dimension() const { return static_cast<int>(levels.size()) - 1; }
  size_t count(int k) const {
    return (k >= 0 && k <= top_dimension()) ? levels[k].names.size() : 0;
  }
  int32_t facet(int dim, int32_t idx, int i) const { return levels[dim].facets[idx][i]; }
  int32_t vertex_of_slot(int dim, int32_t idx, int slot) const {
    return levels[dim].slot_vertex[idx][slot];
  }
  const Name& name(int dim, int32_t idx) const { return levels[dim].names[idx]; }
  int32_t index_of(int dim, const Name& id) const;
  size_t total_cells() const;
};

/// Resolves facet references and checks the simplicial identities
/// facet_i(facet_j(s)) == facet_{j-1}(facet_i(s)) for all i < j exhaustively.
DeltaComplex validate_delta_complex(const DscDocument& raw);

/// Face reached by deleting every slot outside `keep` (descending slot
/// order; the simplicial identities make the result order-independent).
/// Returns the index at dimension |keep|-1.
int32_t iterated_face(const DeltaComplex& X, int dim, int32_t idx, std::vector<int> keep);

// ---------------------------------------------------------------------------
// Occurrence-indexed links. The link of a base simplex has one d-simplex per
// pair (ambient simplex, slot subset hitting the base); the complex itself is
// a valid DeltaComplex whose names are "<ambient>@<slots>".

struct LinkOccurrence {
  int32_t ambient;          // index at dimension base_dim + 1 + link_dim
  std::vector<int> slots;   // the base-occurrence slots inside the ambient simplex
};

struct LinkComplex {
  DeltaComplex complex;
  int base_dim = 0;
  int32_t base_index = 0;
  std::vector<std::vector<LinkOccurrence>> occurrences;  // per link dimension
};

LinkComplex delta_vertex_link(const DeltaComplex& X, int32_t v);
LinkComplex delta_vertex_link(const DeltaComplex& X, const Name& v);
LinkComplex delta_simplex_link(const DeltaComplex& X, int dim, int32_t idx);

long euler_characteristic(const DeltaComplex& X);
std::vector<int32_t> components(const DeltaComplex& X);
int component_count(const DeltaComplex& X);

/// Structural equality: same identifiers per dimension with the same facet
/// tuples (orderings are canonical, so this is plain equality).
bool same_complex(const DeltaComplex& a, const DeltaComplex& b);

// ---------------------------------------------------------------------------
// Dimension-preserving simplicial maps (slot-order preserving).

struct SimplicialMap {
  std::vector<std::vector<int32_t>> image;  // per dimension
};

SimplicialMap identity_simplicial_map(const DeltaComplex& X);

/// Checks facet compatibility: image(facet_i(s)) == facet_i(image(s)).
void validate_simplicial_map(const DeltaComplex& src, const DeltaComplex& dst,
                             const SimplicialMap& f);

/// f after g (g: A -> B, f: B -> C).
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);

bool operator==(const SimplicialMap& a, const SimplicialMap& b);

}  // namespace cx
