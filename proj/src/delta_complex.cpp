#include "cx/delta_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cx {

int32_t DeltaComplex::index_of(int dim, const Name& id) const {
  if (dim < 0 || dim > top_dimension())
    fail(ErrorKind::UnknownIdentifier, "no simplices of dimension " + std::to_string(dim));
  auto it = levels[dim].lookup.find(id);
  if (it == levels[dim].lookup.end())
    fail(ErrorKind::UnknownIdentifier, std::to_string(dim) + "-simplex '" + id + "'");
  return it->second;
}

size_t DeltaComplex::total_cells() const {
  size_t n = 0;
  for (const Level& l : levels) n += l.names.size();
  return n;
}

DeltaComplex validate_delta_complex(const DscDocument& raw) {
  int top = -1;
  for (const DscSimplexDecl& d : raw.simplices) {
    if (d.dim < 0) fail(ErrorKind::SyntaxError, "negative dimension for '" + d.id + "'");
    top = std::max(top, d.dim);
  }

  DeltaComplex X;
  X.levels.resize(top + 1);

  for (const DscSimplexDecl& d : raw.simplices) {
    if (d.dim >= 1 && d.facets.size() != static_cast<size_t>(d.dim) + 1)
      fail(ErrorKind::SyntaxError, "simplex '" + d.id + "' of dimension " + std::to_string(d.dim) +
                                       " needs " + std::to_string(d.dim + 1) + " facets");
    X.levels[d.dim].names.push_back(d.id);
  }

  for (int k = 0; k <= top; ++k) {
    DeltaComplex::Level& l = X.levels[k];
    if (l.names.empty())
      fail(ErrorKind::DimensionGap, "no simplices of dimension " + std::to_string(k) +
                                        " below dimension " + std::to_string(top));
    std::sort(l.names.begin(), l.names.end());
    for (size_t i = 0; i < l.names.size(); ++i) {
      if (!l.lookup.emplace(l.names[i], static_cast<int32_t>(i)).second)
        fail(ErrorKind::DuplicateIdentifier,
             std::to_string(k) + "-simplex '" + l.names[i] + "'");
    }
    l.facets.resize(l.names.size());
    l.slot_vertex.resize(l.names.size());
  }

  for (const DscSimplexDecl& d : raw.simplices) {
    if (d.dim == 0) continue;
    DeltaComplex::Level& l = X.levels[d.dim];
    const DeltaComplex::Level& below = X.levels[d.dim - 1];
    int32_t idx = l.lookup.at(d.id);
    std::vector<int32_t> fs;
    fs.reserve(d.facets.size());
    for (const Name& fname : d.facets) {
      auto it = below.lookup.find(fname);
      if (it == below.lookup.end())
        fail(ErrorKind::MissingFacet, "simplex '" + d.id + "' references unknown " +
                                          std::to_string(d.dim - 1) + "-simplex '" + fname + "'");
      fs.push_back(it->second);
    }
    l.facets[idx] = std::move(fs);
  }

  // Simplicial identities, exhaustively.
  for (int k = 2; k <= top; ++k) {
    const DeltaComplex::Level& l = X.levels[k];
    const DeltaComplex::Level& below = X.levels[k - 1];
    for (size_t s = 0; s < l.facets.size(); ++s) {
      for (int i = 0; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
          int32_t a = below.facets[l.facets[s][j]][i];
          int32_t b = below.facets[l.facets[s][i]][j - 1];
          if (a != b)
            fail(ErrorKind::IdentityViolation,
                 "simplex '" + l.names[s] + "' at slots (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
        }
      }
    }
  }

  // Vertex of each slot, with a second route as a well-definedness check.
  for (int k = 0; k <= top; ++k) {
    DeltaComplex::Level& l = X.levels[k];
    for (size_t s = 0; s < l.names.size(); ++s) {
      if (k == 0) {
        l.slot_vertex[s] = {static_cast<int32_t>(s)};
        continue;
      }
      std::vector<int32_t> sv(k + 1);
      for (int i = 0; i <= k; ++i) {
        int j = (i == 0) ? 1 : 0;
        sv[i] = X.levels[k - 1].slot_vertex[l.facets[s][j]][j < i ? i - 1 : i];
        int j2 = (i == k) ? k - 1 : k;
        int32_t alt = X.levels[k - 1].slot_vertex[l.facets[s][j2]][j2 < i ? i - 1 : i];
        if (alt != sv[i])
          fail(ErrorKind::IdentityViolation,
               "slot vertex of '" + l.names[s] + "' slot " + std::to_string(i) +
                   " depends on the deletion route");
      }
      l.slot_vertex[s] = std::move(sv);
    }
  }

  return X;
}

int32_t iterated_face(const DeltaComplex& X, int dim, int32_t idx, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) fail(ErrorKind::InvalidSlot, "empty slot set");
  for (int s : keep)
    if (s < 0 || s > dim)
      fail(ErrorKind::InvalidSlot, "slot " + std::to_string(s) + " outside 0.." +
                                       std::to_string(dim));

  int32_t cur = idx;
  int curdim = dim;
  for (int s = dim; s >= 0; --s) {
    if (std::binary_search(keep.begin(), keep.end(), s)) continue;
    cur = X.facet(curdim, cur, s);  // deleting from the top leaves lower slots in place
    --curdim;
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Links.

namespace {

struct SlotsKey {
  int32_t ambient;
  std::vector<int> slots;
  bool operator==(const SlotsKey&) const = default;
};

struct SlotsKeyHash {
  size_t operator()(const SlotsKey& k) const {
    size_t h = std::hash<int32_t>()(k.ambient);
    for (int s : k.slots) h = h * 1000003u + static_cast<size_t>(s) + 1;
    return h;
  }
};

Name occurrence_name(const DeltaComplex& X, int dim, int32_t idx, const std::vector<int>& slots) {
  Name n = X.name(dim, idx) + "@";
  for (size_t i = 0; i < slots.size(); ++i) {
    if (i) n += "_";
    n += std::to_string(slots[i]);
  }
  return n;
}

}  // namespace

LinkComplex delta_simplex_link(const DeltaComplex& X, int dim, int32_t idx) {
  if (dim < 0 || dim > X.top_dimension() || idx < 0 ||
      idx >= static_cast<int32_t>(X.count(dim)))
    fail(ErrorKind::UnknownIdentifier, "base simplex out of range");

  LinkComplex L;
  L.base_dim = dim;
  L.base_index = idx;

  int top = X.top_dimension();
  int link_top = top - dim - 1;
  if (link_top < 0) {
    // Isolated base: the link is empty. Represent it as a complex with no levels.
    L.complex = DeltaComplex{};
    return L;
  }

  // Occurrences per link dimension d: (ambient (dim+1+d)-simplex, slot subset S
  // of size dim+1 with iterated_face(ambient, S) == base).
  std::vector<std::unordered_map<SlotsKey, int32_t, SlotsKeyHash>> occ_index(link_top + 1);
  DscDocument doc;

  for (int d = 0; d <= link_top; ++d) {
    int adim = dim + 1 + d;
    size_t n = X.count(adim);
    for (size_t a = 0; a < n; ++a) {
      // Enumerate slot subsets of size dim+1.
      std::vector<int> subset(dim + 1);
      std::iota(subset.begin(), subset.end(), 0);
      while (true) {
        bool hit = (dim == 0)
                       ? X.vertex_of_slot(adim, static_cast<int32_t>(a), subset[0]) == idx
                       : iterated_face(X, adim, static_cast<int32_t>(a), subset) == idx;
        if (hit) {
          if (L.occurrences.size() <= static_cast<size_t>(d)) L.occurrences.resize(d + 1);
          int32_t li = static_cast<int32_t>(L.occurrences[d].size());
          occ_index[d].emplace(SlotsKey{static_cast<int32_t>(a), subset}, li);
          L.occurrences[d].push_back({static_cast<int32_t>(a), subset});

          DscSimplexDecl decl;
          decl.dim = d;
          decl.id = occurrence_name(X, adim, static_cast<int32_t>(a), subset);
          doc.simplices.push_back(std::move(decl));
        }
        // next subset
        int i = dim;
        while (i >= 0 && subset[i] == adim - (dim - i)) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j <= dim; ++j) subset[j] = subset[j - 1] + 1;
      }
    }
  }
  if (L.occurrences.empty()) {
    L.complex = DeltaComplex{};
    return L;
  }

  // Wire facets: facet j of (ambient, S) deletes the j-th slot outside S.
  size_t decl_pos = 0;
  for (int d = 0; d < static_cast<int>(L.occurrences.size()); ++d) {
    int adim = dim + 1 + d;
    for (const LinkOccurrence& o : L.occurrences[d]) {
      DscSimplexDecl& decl = doc.simplices[decl_pos++];
      if (d == 0) continue;
      std::vector<int> outside;
      for (int s = 0; s <= adim; ++s)
        if (!std::binary_search(o.slots.begin(), o.slots.end(), s)) outside.push_back(s);
      for (int j = 0; j <= d; ++j) {
        int del = outside[j];
        int32_t fa = X.facet(adim, o.ambient, del);
        std::vector<int> fs;
        fs.reserve(o.slots.size());
        for (int s : o.slots) fs.push_back(s > del ? s - 1 : s);
        auto it = occ_index[d - 1].find(SlotsKey{fa, fs});
        if (it == occ_index[d - 1].end())
          fail(ErrorKind::IdentityViolation, "link facet not found for " + decl.id);
        decl.facets.push_back(occurrence_name(X, adim - 1, fa, fs));
      }
    }
  }

  L.complex = validate_delta_complex(doc);
  return L;
}

LinkComplex delta_vertex_link(const DeltaComplex& X, int32_t v) {
  return delta_simplex_link(X, 0, v);
}

LinkComplex delta_vertex_link(const DeltaComplex& X, const Name& v) {
  return delta_simplex_link(X, 0, X.index_of(0, v));
}

long euler_characteristic(const DeltaComplex& X) {
  long chi = 0;
  for (int k = 0; k <= X.top_dimension(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(X.count(k));
  return chi;
}

std::vector<int32_t> components(const DeltaComplex& X) {
  size_t n = X.count(0);
  std::vector<int32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  if (X.top_dimension() >= 1) {
    for (size_t e = 0; e < X.count(1); ++e) {
      int32_t a = find(X.vertex_of_slot(1, static_cast<int32_t>(e), 0));
      int32_t b = find(X.vertex_of_slot(1, static_cast<int32_t>(e), 1));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int32_t> comp(n);
  std::unordered_map<int32_t, int32_t> renumber;
  for (size_t i = 0; i < n; ++i) {
    auto [it, fresh] = renumber.emplace(find(static_cast<int32_t>(i)),
                                        static_cast<int32_t>(renumber.size()));
    comp[i] = it->second;
    (void)fresh;
  }
  return comp;
}

int component_count(const DeltaComplex& X) {
  auto comp = components(X);
  int32_t m = -1;
  for (int32_t c : comp) m = std::max(m, c);
  return static_cast<int>(m) + 1;
}

bool same_complex(const DeltaComplex& a, const DeltaComplex& b) {
  if (a.top_dimension() != b.top_dimension()) return false;
  for (int k = 0; k <= a.top_dimension(); ++k) {
    if (a.levels[k].names != b.levels[k].names) return false;
    if (a.levels[k].facets != b.levels[k].facets) return false;
  }
  return true;
}

SimplicialMap identity_simplicial_map(const DeltaComplex& X) {
  SimplicialMap f;
  f.image.resize(X.top_dimension() + 1);
  for (int k = 0; k <= X.top_dimension(); ++k) {
    f.image[k].resize(X.count(k));
    std::iota(f.image[k].begin(), f.image[k].end(), 0);
  }
  return f;
}

void validate_simplicial_map(const DeltaComplex& src, const DeltaComplex& dst,
                             const SimplicialMap& f) {
  if (f.image.size() != static_cast<size_t>(src.top_dimension()) + 1)
    fail(ErrorKind::UsageError, "simplicial map has wrong number of levels");
  for (int k = 0; k <= src.top_dimension(); ++k) {
    if (f.image[k].size() != src.count(k))
      fail(ErrorKind::UsageError, "simplicial map level " + std::to_string(k) + " incomplete");
    for (size_t s = 0; s < src.count(k); ++s) {
      int32_t t = f.image[k][s];
      if (k > dst.top_dimension() || t < 0 || t >= static_cast<int32_t>(dst.count(k)))
        fail(ErrorKind::UsageError, "simplicial map image out of range");
      for (int i = 0; i <= k && k >= 1; ++i) {
        if (f.image[k - 1][src.facet(k, static_cast<int32_t>(s), i)] != dst.facet(k, t, i))
          fail(ErrorKind::UsageError,
               "simplicial map does not commute with facets at '" +
                   src.name(k, static_cast<int32_t>(s)) + "' slot " + std::to_string(i));
      }
    }
  }
}

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
  SimplicialMap h;
  h.image.resize(g.image.size());
  for (size_t k = 0; k < g.image.size(); ++k) {
    h.image[k].resize(g.image[k].size());
    for (size_t s = 0; s < g.image[k].size(); ++s) h.image[k][s] = f.image[k][g.image[k][s]];
  }
  return h;
}

bool operator==(const SimplicialMap& a, const SimplicialMap& b) { return a.image == b.image; }

}  // namespace cx
