#include "cx/simplexify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace cx {

namespace {

Name vstar(const SquareComplex& X, int32_t v) { return "v_" + X.vertices[v]; }
Name mid(const SquareComplex& X, int32_t e) { return "m_" + X.edges[e].id; }
Name center(const SquareComplex& X, int32_t s) { return "c_" + X.squares[s].id; }
Name hedge(const SquareComplex& X, int32_t e) { return "e_" + X.edges[e].id; }
Name half_lower(const SquareComplex& X, int32_t e) { return "ha_" + X.edges[e].id; }
Name half_upper(const SquareComplex& X, int32_t e) { return "hb_" + X.edges[e].id; }
Name spoke(const SquareComplex& X, int32_t s, int corner) {
  return "k_" + X.squares[s].id + "_" + std::to_string(corner);
}
Name mid_spoke(const SquareComplex& X, int32_t s, int side) {
  return "t_" + X.squares[s].id + "_" + std::to_string(side);
}
Name horiz_triangle(const SquareComplex& X, int32_t s, int side) {
  return "f_" + X.squares[s].id + "_" + std::to_string(side);
}
Name quarter_lower(const SquareComplex& X, int32_t s, int side) {
  return "qa_" + X.squares[s].id + "_" + std::to_string(side);
}
Name quarter_upper(const SquareComplex& X, int32_t s, int side) {
  return "qb_" + X.squares[s].id + "_" + std::to_string(side);
}

enum class VPart { None, Minus, Plus };

Name sigma_name(const SquareComplex& X, int32_t e, VPart part, bool with_mid,
                const std::vector<int>& occ) {
  Name n = "g_" + X.edges[e].id + "_";
  n += part == VPart::Minus ? "m" : part == VPart::Plus ? "p" : "s";
  n += with_mid ? "_e" : "_x";
  for (int i : occ) n += "_" + std::to_string(i);
  return n;
}

struct Builder {
  const SquareComplex& X;
  const VHPartition& P;
  DscDocument doc;
  std::unordered_map<Name, Provenance> prov;
  std::vector<std::vector<Occurrence>> occ;

  Builder(const SquareComplex& x, const VHPartition& p) : X(x), P(p) {
    verify_partition(X, P);
    occ.resize(X.edges.size());
    for (size_t s = 0; s < X.squares.size(); ++s) {
      const SquareCell& q = X.squares[s];
      int first_vertical = P.vertical(q.sides[0].edge) ? 0 : 1;
      for (int j = first_vertical; j < 4; j += 2)
        occ[q.sides[j].edge].push_back(
            {static_cast<int32_t>(s), j, q.sides[j].reversed});
    }
  }

  void add(int dim, Name id, std::vector<Name> facets, Provenance p) {
    prov.emplace(id, std::move(p));
    doc.simplices.push_back({dim, std::move(id), std::move(facets)});
  }

  // The corner of a vertical side occurrence where the edge's tail (lower)
  // and head (upper) vertex sit: for a forward side the tail is at the
  // side's initial corner, for a reversed side at its terminal corner.
  int lower_corner(const Occurrence& o) const { return o.reversed ? (o.side + 1) % 4 : o.side; }
  int upper_corner(const Occurrence& o) const { return o.reversed ? o.side : (o.side + 1) % 4; }

  void build_triangulation() {
    for (size_t v = 0; v < X.vertices.size(); ++v)
      add(0, vstar(X, static_cast<int32_t>(v)), {},
          {ProvTag::VertexStar, X.vertices[v]});
    for (size_t e = 0; e < X.edges.size(); ++e)
      if (P.vertical(static_cast<int32_t>(e)))
        add(0, mid(X, static_cast<int32_t>(e)), {}, {ProvTag::Midpoint, X.edges[e].id});
    for (size_t s = 0; s < X.squares.size(); ++s)
      add(0, center(X, static_cast<int32_t>(s)), {}, {ProvTag::Center, X.squares[s].id});

    for (size_t ei = 0; ei < X.edges.size(); ++ei) {
      int32_t e = static_cast<int32_t>(ei);
      const EdgeCell& ed = X.edges[ei];
      if (P.vertical(e)) {
        add(1, half_lower(X, e), {mid(X, e), vstar(X, ed.tail)},
            {ProvTag::HalfEdgeLower, ed.id});
        add(1, half_upper(X, e), {vstar(X, ed.head), mid(X, e)},
            {ProvTag::HalfEdgeUpper, ed.id});
      } else {
        add(1, hedge(X, e), {vstar(X, ed.head), vstar(X, ed.tail)},
            {ProvTag::HorizontalEdge, ed.id});
      }
    }

    for (size_t si = 0; si < X.squares.size(); ++si) {
      int32_t s = static_cast<int32_t>(si);
      const SquareCell& q = X.squares[si];
      for (int c = 0; c < 4; ++c)
        add(1, spoke(X, s, c), {center(X, s), vstar(X, X.corner_vertex(q, c))},
            {ProvTag::CornerSpoke, q.id, c});

      int first_vertical = P.vertical(q.sides[0].edge) ? 0 : 1;
      for (int j = 0; j < 4; ++j) {
        const Side& sd = q.sides[j];
        bool vertical = (j % 2) == (first_vertical % 2);
        if (vertical) {
          Occurrence o{s, j, sd.reversed};
          add(1, mid_spoke(X, s, j), {center(X, s), mid(X, sd.edge)},
              {ProvTag::MidpointSpoke, q.id, j});
          add(2, quarter_lower(X, s, j),
              {mid_spoke(X, s, j), spoke(X, s, lower_corner(o)), half_lower(X, sd.edge)},
              {ProvTag::QuarterTriangleLower, q.id, j});
          add(2, quarter_upper(X, s, j),
              {spoke(X, s, upper_corner(o)), mid_spoke(X, s, j), half_upper(X, sd.edge)},
              {ProvTag::QuarterTriangleUpper, q.id, j});
        } else {
          int tail_corner = sd.reversed ? (j + 1) % 4 : j;
          int head_corner = sd.reversed ? j : (j + 1) % 4;
          add(2, horiz_triangle(X, s, j),
              {spoke(X, s, head_corner), spoke(X, s, tail_corner), hedge(X, sd.edge)},
              {ProvTag::HorizontalTriangle, q.id, j});
        }
      }
    }
  }

  // Name of the face of the sigma attachment over edge e given by the slot
  // content; faces with at most one occurrence slot are triangulation cells.
  Name face_name(int32_t e, VPart part, bool with_mid, const std::vector<int>& idx) {
    const EdgeCell& ed = X.edges[e];
    if (idx.empty()) {
      if (part == VPart::Minus) return with_mid ? half_lower(X, e) : vstar(X, ed.tail);
      if (part == VPart::Plus) return with_mid ? half_upper(X, e) : vstar(X, ed.head);
      return mid(X, e);  // with_mid is implied
    }
    if (idx.size() == 1) {
      const Occurrence& o = occ[e][idx[0]];
      if (part == VPart::None)
        return with_mid ? mid_spoke(X, o.square, o.side) : center(X, o.square);
      if (part == VPart::Minus)
        return with_mid ? quarter_lower(X, o.square, o.side)
                        : spoke(X, o.square, lower_corner(o));
      return with_mid ? quarter_upper(X, o.square, o.side)
                      : spoke(X, o.square, upper_corner(o));
    }
    return sigma_name(X, e, part, with_mid, idx);
  }

  void attach_sigma(int32_t e) {
    int n = static_cast<int>(occ[e].size());
    if (n < 2) return;  // the attachment degenerates to cells already present

    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) < 2) continue;
      std::vector<int> idx;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) idx.push_back(i);

      for (VPart part : {VPart::None, VPart::Minus, VPart::Plus}) {
        for (bool with_mid : {false, true}) {
          // Slot order: minus (v-, e?, o...), plus (e?, v+, o...), shared (e?, o...).
          int dim = static_cast<int>(idx.size()) - 1 + (part != VPart::None ? 1 : 0) +
                    (with_mid ? 1 : 0);
          std::vector<Name> facets;
          if (part == VPart::Minus) {
            facets.push_back(face_name(e, VPart::None, with_mid, idx));  // delete v-
            if (with_mid) facets.push_back(face_name(e, VPart::Minus, false, idx));
          } else if (part == VPart::Plus) {
            if (with_mid) facets.push_back(face_name(e, VPart::Plus, false, idx));  // delete e
            facets.push_back(face_name(e, VPart::None, with_mid, idx));             // delete v+
          } else if (with_mid) {
            facets.push_back(face_name(e, VPart::None, false, idx));  // delete e
          }
          for (size_t r = 0; r < idx.size(); ++r) {
            std::vector<int> sub = idx;
            sub.erase(sub.begin() + static_cast<long>(r));
            facets.push_back(face_name(e, part, with_mid, sub));
          }
          Provenance p{ProvTag::SigmaFace, X.edges[e].id};
          p.part = part == VPart::Minus ? -1 : part == VPart::Plus ? 1 : 0;
          p.with_mid = with_mid;
          p.occ = idx;
          add(dim, sigma_name(X, e, part, with_mid, idx), std::move(facets), std::move(p));
        }
      }
    }
  }
};

Simplexification finish(Builder&& b, bool starred) {
  Simplexification S;
  S.complex = validate_delta_complex(b.doc);
  S.provenance = std::move(b.prov);
  S.occurrences = std::move(b.occ);
  S.partition = b.P;
  S.starred = starred;
  return S;
}

}  // namespace

Simplexification triangulate_vh(const SquareComplex& X, const VHPartition& P) {
  Builder b(X, P);
  b.build_triangulation();
  return finish(std::move(b), false);
}

Simplexification simplexify(const SquareComplex& X, const VHPartition& P) {
  Builder b(X, P);
  b.build_triangulation();
  for (size_t e = 0; e < X.edges.size(); ++e) b.attach_sigma(static_cast<int32_t>(e));
  return finish(std::move(b), true);
}

// ---------------------------------------------------------------------------
// Structural link checks.

namespace {

// Family of sorted vertex sets of all simplices; for simple complexes this
// determines the complex up to isomorphism.
std::set<std::vector<int>> vertex_set_family(const DeltaComplex& L,
                                             const std::vector<int>& vertex_role) {
  std::set<std::vector<int>> fam;
  for (int k = 0; k <= L.top_dimension(); ++k) {
    for (size_t s = 0; s < L.count(k); ++s) {
      std::vector<int> vs;
      vs.reserve(k + 1);
      for (int32_t v : L.levels[k].slot_vertex[s]) vs.push_back(vertex_role[v]);
      std::sort(vs.begin(), vs.end());
      fam.insert(std::move(vs));
    }
  }
  return fam;
}

// All faces of the suspension of a simplex: subsets of the equator, alone or
// joined with one of the two poles.
void suspension_family(const std::vector<int>& poles, const std::vector<int>& equator,
                       std::set<std::vector<int>>& fam) {
  int n = static_cast<int>(equator.size());
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> base;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) base.push_back(equator[i]);
    if (!base.empty()) {
      std::vector<int> s = base;
      std::sort(s.begin(), s.end());
      fam.insert(s);
    }
    for (int pole : poles) {
      std::vector<int> s = base;
      s.push_back(pole);
      std::sort(s.begin(), s.end());
      fam.insert(std::move(s));
    }
  }
}

}  // namespace

StructuralCheck verify_link_suspension(const SquareComplex& X, const Simplexification& S,
                                       const Name& vertical_edge) {
  if (!S.starred) fail(ErrorKind::NotSimplexified, "triangulation carries no sigma simplices");
  int32_t e = X.edge_index(vertical_edge);
  if (!S.partition.vertical(e)) fail(ErrorKind::UsageError, "'" + vertical_edge + "' is horizontal");
  int n = static_cast<int>(S.occurrences[e].size());
  if (n < 1) fail(ErrorKind::UsageError, "'" + vertical_edge + "' has no square occurrences");

  StructuralCheck res;
  res.n = n;
  LinkComplex L = delta_vertex_link(S.complex, "m_" + vertical_edge);

  SimpleCheck simple = check_simple(L.complex);
  if (!simple.ok) {
    res.detail = "link is not simple";
    return res;
  }

  // Roles: 0/1 the two poles (half edges), 2+i equator vertex of occurrence i.
  size_t nv = L.complex.count(0);
  std::vector<int> role(nv, -1);
  std::string mapping;
  for (size_t v = 0; v < nv; ++v) {
    const LinkOccurrence& o = L.occurrences[0][v];
    const Name& ambient = S.complex.name(1, o.ambient);
    auto it = S.provenance.find(ambient);
    if (it == S.provenance.end()) {
      res.detail = "unexpected link vertex " + L.complex.name(0, static_cast<int32_t>(v));
      return res;
    }
    const Provenance& p = it->second;
    if (p.tag == ProvTag::HalfEdgeLower && p.cell == vertical_edge && o.slots[0] == 0)
      role[v] = 0;
    else if (p.tag == ProvTag::HalfEdgeUpper && p.cell == vertical_edge && o.slots[0] == 1)
      role[v] = 1;
    else if (p.tag == ProvTag::MidpointSpoke && o.slots[0] == 1) {
      int k = -1;
      for (int i = 0; i < n; ++i) {
        const Occurrence& oc = S.occurrences[e][i];
        if (X.squares[oc.square].id == p.cell && oc.side == p.index) k = i;
      }
      if (k < 0) {
        res.detail = "midpoint spoke of a foreign edge in the link";
        return res;
      }
      role[v] = 2 + k;
    } else {
      res.detail = "unexpected link vertex " + L.complex.name(0, static_cast<int32_t>(v));
      return res;
    }
    mapping += (mapping.empty() ? "" : " ") + L.complex.name(0, static_cast<int32_t>(v)) + "->" +
               (role[v] == 0 ? "pole-" : role[v] == 1 ? "pole+" : "eq" + std::to_string(role[v] - 2));
  }
  for (size_t v = 0; v < nv; ++v)
    if (role[v] < 0) {
      res.detail = "unassigned link vertex";
      return res;
    }

  std::set<std::vector<int>> expected;
  std::vector<int> equator(n);
  std::iota(equator.begin(), equator.end(), 2);
  suspension_family({0, 1}, equator, expected);

  std::set<std::vector<int>> actual = vertex_set_family(L.complex, role);
  if (actual != expected) {
    res.detail = "link differs from the suspension of a " + std::to_string(n - 1) + "-simplex";
    return res;
  }
  res.pass = true;
  res.detail = mapping;
  return res;
}

StructuralCheck verify_center_link(const SquareComplex& X, const Simplexification& S,
                                   const Name& square) {
  if (!S.starred) fail(ErrorKind::NotSimplexified, "triangulation carries no sigma simplices");
  int32_t s = X.square_index(square);
  const SquareCell& q = X.squares[s];
  int j0 = S.partition.vertical(q.sides[0].edge) ? 0 : 1;
  int j1 = j0 + 2;

  auto occurrence_index = [&](int side) {
    int32_t e = q.sides[side].edge;
    for (size_t i = 0; i < S.occurrences[e].size(); ++i)
      if (S.occurrences[e][i].square == s && S.occurrences[e][i].side == side)
        return std::pair<int32_t, int>(e, static_cast<int>(i));
    fail(ErrorKind::NotSimplexified, "occurrence list misses side " + std::to_string(side));
  };
  auto [e0, k0] = occurrence_index(j0);
  auto [e1, k1] = occurrence_index(j1);

  StructuralCheck res;
  res.m = static_cast<int>(S.occurrences[e0].size());
  res.n = static_cast<int>(S.occurrences[e1].size());

  LinkComplex L = delta_vertex_link(S.complex, "c_" + square);
  SimpleCheck simple = check_simple(L.complex);
  if (!simple.ok) {
    res.detail = "link is not simple";
    return res;
  }

  // Roles. Piece of side j0: poles 0,1 (corners j0, j0+1), equator 4..4+m-1
  // (midpoint spoke first, then the other occurrences of e0 in order).
  // Piece of side j1: poles 2,3, equator 4+m..4+m+n-1.
  int m = res.m, n = res.n;
  auto corner_role = [&](int c) {
    if (c == j0) return 0;
    if (c == (j0 + 1) % 4) return 1;
    if (c == j1) return 2;
    return 3;
  };
  auto equator_role = [&](int32_t e, int k, int own) {
    // own = occurrence index of the square's side on e; role of the midpoint
    // spoke is the first slot, sigma partners follow in index order.
    int base = (e == e0 && own == k0) ? 4 : 4 + m;
    if (k == own) return base;
    return base + 1 + k - (k > own ? 1 : 0);
  };

  size_t nv = L.complex.count(0);
  std::vector<int> role(nv, -1);
  for (size_t v = 0; v < nv; ++v) {
    const LinkOccurrence& o = L.occurrences[0][v];
    const Name& ambient = S.complex.name(1, o.ambient);
    auto it = S.provenance.find(ambient);
    if (it == S.provenance.end()) {
      res.detail = "unexpected link vertex";
      return res;
    }
    const Provenance& p = it->second;
    if (p.tag == ProvTag::CornerSpoke && p.cell == square && o.slots[0] == 1) {
      role[v] = corner_role(p.index);
    } else if (p.tag == ProvTag::MidpointSpoke && p.cell == square && o.slots[0] == 1) {
      if (p.index == j0)
        role[v] = equator_role(e0, k0, k0);
      else if (p.index == j1)
        role[v] = equator_role(e1, k1, k1);
    } else if (p.tag == ProvTag::SigmaFace && !p.with_mid && p.part == 0 && p.occ.size() == 2) {
      int32_t e = X.edge_index(p.cell);
      int k = p.occ[o.slots[0]];  // the slot of the base occurrence
      const Occurrence& oc = S.occurrences[e][k];
      if (oc.square != s) {
        res.detail = "sigma edge attached to a foreign square";
        return res;
      }
      int other = p.occ[1 - o.slots[0]];
      if (oc.side == j0)
        role[v] = equator_role(e0, other, k0);
      else if (oc.side == j1)
        role[v] = equator_role(e1, other, k1);
    }
    if (role[v] < 0) {
      res.detail = "unexpected link vertex " + L.complex.name(0, static_cast<int32_t>(v));
      return res;
    }
  }

  std::set<std::vector<int>> expected;
  std::vector<int> eq0(m), eq1(n);
  std::iota(eq0.begin(), eq0.end(), 4);
  std::iota(eq1.begin(), eq1.end(), 4 + m);
  suspension_family({0, 1}, eq0, expected);
  suspension_family({2, 3}, eq1, expected);
  // Pole-to-pole edges from the two horizontal triangles: each horizontal
  // side joins its two corners, one on each vertical side.
  for (int h = 0; h < 4; ++h) {
    if (h == j0 || h == j1) continue;
    std::vector<int> edge{corner_role(h), corner_role((h + 1) % 4)};
    std::sort(edge.begin(), edge.end());
    expected.insert(std::move(edge));
  }

  std::set<std::vector<int>> actual = vertex_set_family(L.complex, role);
  if (actual != expected) {
    res.detail = "link is not two joined suspensions with piece sizes " + std::to_string(m) +
                 " and " + std::to_string(n);
    return res;
  }
  res.pass = true;
  res.detail = "pieces " + std::to_string(m) + "+" + std::to_string(n) +
               ", two pole-to-pole edges";
  return res;
}

// ---------------------------------------------------------------------------
// Combinatorial maps.

void validate_combinatorial_map(const SquareComplex& X, const SquareComplex& Y,
                                const CombinatorialMap& f) {
  if (f.vmap.size() != X.vertices.size() || f.emap.size() != X.edges.size() ||
      f.erev.size() != X.edges.size() || f.smap.size() != X.squares.size() ||
      f.srot.size() != X.squares.size() || f.srefl.size() != X.squares.size())
    fail(ErrorKind::UsageError, "combinatorial map tables have wrong sizes");

  for (int32_t v : f.vmap)
    if (v < 0 || v >= static_cast<int32_t>(Y.vertices.size()))
      fail(ErrorKind::UsageError, "vertex image out of range");
  for (size_t e = 0; e < X.edges.size(); ++e) {
    int32_t t = f.emap[e];
    if (t < 0 || t >= static_cast<int32_t>(Y.edges.size()))
      fail(ErrorKind::UsageError, "edge image out of range");
    int32_t tail = f.erev[e] ? Y.edges[t].head : Y.edges[t].tail;
    int32_t head = f.erev[e] ? Y.edges[t].tail : Y.edges[t].head;
    if (f.vmap[X.edges[e].tail] != tail || f.vmap[X.edges[e].head] != head)
      fail(ErrorKind::UsageError, "edge '" + X.edges[e].id + "' does not map over its endpoints");
  }
  for (size_t s = 0; s < X.squares.size(); ++s) {
    int32_t t = f.smap[s];
    if (t < 0 || t >= static_cast<int32_t>(Y.squares.size()))
      fail(ErrorKind::UsageError, "square image out of range");
    for (int j = 0; j < 4; ++j) {
      int tj = f.srefl[s] ? ((f.srot[s] - j) % 4 + 4) % 4 : (j + f.srot[s]) % 4;
      const Side& src = X.squares[s].sides[j];
      const Side& dst = Y.squares[t].sides[tj];
      bool want_rev = src.reversed ^ static_cast<bool>(f.erev[src.edge]) ^
                      static_cast<bool>(f.srefl[s]);
      if (dst.edge != f.emap[src.edge] || dst.reversed != want_rev)
        fail(ErrorKind::UsageError, "square '" + X.squares[s].id +
                                        "' boundary does not match its image at side " +
                                        std::to_string(j));
    }
  }
}

CombinatorialMap identity_combinatorial_map(const SquareComplex& X) {
  CombinatorialMap f;
  f.vmap.resize(X.vertices.size());
  std::iota(f.vmap.begin(), f.vmap.end(), 0);
  f.emap.resize(X.edges.size());
  std::iota(f.emap.begin(), f.emap.end(), 0);
  f.erev.assign(X.edges.size(), 0);
  f.smap.resize(X.squares.size());
  std::iota(f.smap.begin(), f.smap.end(), 0);
  f.srot.assign(X.squares.size(), 0);
  f.srefl.assign(X.squares.size(), 0);
  return f;
}

CombinatorialMap compose(const SquareComplex& A, const SquareComplex& B, const SquareComplex& C,
                         const CombinatorialMap& f, const CombinatorialMap& g) {
  validate_combinatorial_map(A, B, g);
  validate_combinatorial_map(B, C, f);
  CombinatorialMap h;
  h.vmap.resize(A.vertices.size());
  for (size_t v = 0; v < A.vertices.size(); ++v) h.vmap[v] = f.vmap[g.vmap[v]];
  h.emap.resize(A.edges.size());
  h.erev.resize(A.edges.size());
  for (size_t e = 0; e < A.edges.size(); ++e) {
    h.emap[e] = f.emap[g.emap[e]];
    h.erev[e] = g.erev[e] ^ f.erev[g.emap[e]];
  }
  h.smap.resize(A.squares.size());
  h.srot.resize(A.squares.size());
  h.srefl.resize(A.squares.size());
  for (size_t s = 0; s < A.squares.size(); ++s) {
    int32_t mid_sq = g.smap[s];
    h.smap[s] = f.smap[mid_sq];
    int rf = f.srot[mid_sq], rg = g.srot[s];
    bool ff = f.srefl[mid_sq], fg = g.srefl[s];
    h.srot[s] = static_cast<int8_t>((((ff ? rf - rg : rf + rg) % 4) + 4) % 4);
    h.srefl[s] = static_cast<int8_t>(ff ^ fg);
  }
  validate_combinatorial_map(A, C, h);
  return h;
}

bool combinatorial_maps_equal(const CombinatorialMap& a, const CombinatorialMap& b) {
  return a.vmap == b.vmap && a.emap == b.emap && a.erev == b.erev && a.smap == b.smap &&
         a.srot == b.srot && a.srefl == b.srefl;
}

bool locally_injective(const SquareComplex& X, const SquareComplex& Y,
                       const CombinatorialMap& f) {
  for (size_t v = 0; v < X.vertices.size(); ++v) {
    std::set<std::pair<int32_t, bool>> images;
    for (size_t e = 0; e < X.edges.size(); ++e) {
      auto push = [&](bool head) {
        return images.emplace(f.emap[e], head ^ static_cast<bool>(f.erev[e])).second;
      };
      if (X.edges[e].tail == static_cast<int32_t>(v) && !push(false)) return false;
      if (X.edges[e].head == static_cast<int32_t>(v) && !push(true)) return false;
    }
  }
  return true;
}

SimplicialMap induced_map(const SquareComplex& X, const SquareComplex& Y,
                          const CombinatorialMap& f, const Simplexification& SX,
                          const Simplexification& SY) {
  validate_combinatorial_map(X, Y, f);
  if (!SX.starred || !SY.starred)
    fail(ErrorKind::NotSimplexified, "induced maps need both sigma attachments");
  for (size_t e = 0; e < X.edges.size(); ++e)
    if (SX.partition.cls[e] != SY.partition.cls[f.emap[e]])
      fail(ErrorKind::NotVhPreserving, "edge '" + X.edges[e].id + "' changes class");
  for (size_t e = 0; e < X.edges.size(); ++e)
    if (f.erev[e])
      fail(ErrorKind::UsageError,
           "orientation-reversing edge images are not supported by the induced map");
  for (size_t s = 0; s < X.squares.size(); ++s)
    if (f.srefl[s])
      fail(ErrorKind::UsageError, "reflecting square images are not supported by the induced map");
  if (!locally_injective(X, Y, f))
    fail(ErrorKind::NotLocallyInjective, "edge ends collide at a vertex");

  // Occurrence index maps per vertical edge; they must stay injective.
  std::vector<std::vector<int>> occ_image(X.edges.size());
  for (size_t e = 0; e < X.edges.size(); ++e) {
    if (!SX.partition.vertical(static_cast<int32_t>(e))) continue;
    int32_t te = f.emap[e];
    const auto& src = SX.occurrences[e];
    const auto& dst = SY.occurrences[te];
    std::set<int> used;
    for (const Occurrence& o : src) {
      int tside = (o.side + f.srot[o.square]) % 4;
      int32_t tsq = f.smap[o.square];
      int found = -1;
      for (size_t i = 0; i < dst.size(); ++i)
        if (dst[i].square == tsq && dst[i].side == tside) found = static_cast<int>(i);
      if (found < 0)
        fail(ErrorKind::NotVhPreserving, "occurrence image missing over '" + Y.edges[te].id + "'");
      if (!used.insert(found).second)
        fail(ErrorKind::NotLocallyInjective,
             "occurrence list collapses over edge '" + X.edges[e].id + "'");
      occ_image[e].push_back(found);
    }
  }

  auto target_name = [&](const Provenance& p) -> Name {
    switch (p.tag) {
      case ProvTag::VertexStar:
        return "v_" + Y.vertices[f.vmap[X.vertex_index(p.cell)]];
      case ProvTag::Midpoint:
        return "m_" + Y.edges[f.emap[X.edge_index(p.cell)]].id;
      case ProvTag::Center:
        return "c_" + Y.squares[f.smap[X.square_index(p.cell)]].id;
      case ProvTag::HalfEdgeLower:
        return "ha_" + Y.edges[f.emap[X.edge_index(p.cell)]].id;
      case ProvTag::HalfEdgeUpper:
        return "hb_" + Y.edges[f.emap[X.edge_index(p.cell)]].id;
      case ProvTag::HorizontalEdge:
        return "e_" + Y.edges[f.emap[X.edge_index(p.cell)]].id;
      case ProvTag::CornerSpoke: {
        int32_t s = X.square_index(p.cell);
        return "k_" + Y.squares[f.smap[s]].id + "_" + std::to_string((p.index + f.srot[s]) % 4);
      }
      case ProvTag::MidpointSpoke: {
        int32_t s = X.square_index(p.cell);
        return "t_" + Y.squares[f.smap[s]].id + "_" + std::to_string((p.index + f.srot[s]) % 4);
      }
      case ProvTag::HorizontalTriangle: {
        int32_t s = X.square_index(p.cell);
        return "f_" + Y.squares[f.smap[s]].id + "_" + std::to_string((p.index + f.srot[s]) % 4);
      }
      case ProvTag::QuarterTriangleLower: {
        int32_t s = X.square_index(p.cell);
        return "qa_" + Y.squares[f.smap[s]].id + "_" + std::to_string((p.index + f.srot[s]) % 4);
      }
      case ProvTag::QuarterTriangleUpper: {
        int32_t s = X.square_index(p.cell);
        return "qb_" + Y.squares[f.smap[s]].id + "_" + std::to_string((p.index + f.srot[s]) % 4);
      }
      case ProvTag::SigmaFace: {
        int32_t e = X.edge_index(p.cell);
        int32_t te = f.emap[e];
        std::vector<int> idx;
        for (int i : p.occ) idx.push_back(occ_image[e][i]);
        std::sort(idx.begin(), idx.end());
        Name n = "g_" + Y.edges[te].id + "_";
        n += p.part < 0 ? "m" : p.part > 0 ? "p" : "s";
        n += p.with_mid ? "_e" : "_x";
        for (int i : idx) n += "_" + std::to_string(i);
        return n;
      }
    }
    fail(ErrorKind::UsageError, "unmapped provenance tag");
  };

  SimplicialMap g;
  g.image.resize(SX.complex.top_dimension() + 1);
  for (int k = 0; k <= SX.complex.top_dimension(); ++k) {
    g.image[k].resize(SX.complex.count(k));
    for (size_t i = 0; i < SX.complex.count(k); ++i) {
      const Name& nm = SX.complex.name(k, static_cast<int32_t>(i));
      auto it = SX.provenance.find(nm);
      if (it == SX.provenance.end())
        fail(ErrorKind::NotSimplexified, "cell '" + nm + "' has no provenance");
      g.image[k][i] = SY.complex.index_of(k, target_name(it->second));
    }
  }
  validate_simplicial_map(SX.complex, SY.complex, g);
  return g;
}

}  // namespace cx
