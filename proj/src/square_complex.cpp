#include "cx/square_complex.hpp"

#include <algorithm>
#include <numeric>

namespace cx {

namespace {

int32_t lookup(const std::unordered_map<Name, int32_t>& m, const Name& id, const char* kind) {
  auto it = m.find(id);
  if (it == m.end()) fail(ErrorKind::UnknownIdentifier, std::string(kind) + " '" + id + "'");
  return it->second;
}

}  // namespace

int32_t SquareComplex::vertex_index(const Name& id) const {
  return lookup(vertex_lookup, id, "vertex");
}
int32_t SquareComplex::edge_index(const Name& id) const { return lookup(edge_lookup, id, "edge"); }
int32_t SquareComplex::square_index(const Name& id) const {
  return lookup(square_lookup, id, "square");
}

int32_t SquareComplex::side_initial(const SquareCell& s, int i) const {
  const Side& sd = s.sides[i];
  return sd.reversed ? edges[sd.edge].head : edges[sd.edge].tail;
}

int32_t SquareComplex::side_terminal(const SquareCell& s, int i) const {
  const Side& sd = s.sides[i];
  return sd.reversed ? edges[sd.edge].tail : edges[sd.edge].head;
}

SquareComplex validate_square_complex(const SqcDocument& raw) {
  SquareComplex X;

  X.vertices = raw.vertices;
  std::sort(X.vertices.begin(), X.vertices.end());
  for (size_t i = 0; i < X.vertices.size(); ++i) {
    if (!X.vertex_lookup.emplace(X.vertices[i], static_cast<int32_t>(i)).second)
      fail(ErrorKind::DuplicateIdentifier, "vertex '" + X.vertices[i] + "'");
  }

  std::vector<SqcEdgeDecl> edecls = raw.edges;
  std::sort(edecls.begin(), edecls.end(),
            [](const SqcEdgeDecl& a, const SqcEdgeDecl& b) { return a.id < b.id; });
  for (const SqcEdgeDecl& d : edecls) {
    EdgeCell e;
    e.id = d.id;
    e.tail = X.vertex_index(d.tail);
    e.head = X.vertex_index(d.head);
    if (!X.edge_lookup.emplace(e.id, static_cast<int32_t>(X.edges.size())).second)
      fail(ErrorKind::DuplicateIdentifier, "edge '" + e.id + "'");
    X.edges.push_back(std::move(e));
  }

  std::vector<SqcSquareDecl> sdecls = raw.squares;
  std::sort(sdecls.begin(), sdecls.end(),
            [](const SqcSquareDecl& a, const SqcSquareDecl& b) { return a.id < b.id; });
  for (const SqcSquareDecl& d : sdecls) {
    SquareCell s;
    s.id = d.id;
    for (int i = 0; i < 4; ++i) {
      s.sides[i].edge = X.edge_index(d.sides[i].edge);
      s.sides[i].reversed = d.sides[i].reversed;
    }
    if (!X.square_lookup.emplace(s.id, static_cast<int32_t>(X.squares.size())).second)
      fail(ErrorKind::DuplicateIdentifier, "square '" + s.id + "'");
    X.squares.push_back(std::move(s));
  }

  for (const SquareCell& s : X.squares) {
    for (int i = 0; i < 4; ++i) {
      if (X.side_terminal(s, i) != X.side_initial(s, (i + 1) % 4))
        fail(ErrorKind::CornerMismatch,
             "square '" + s.id + "' corner " + std::to_string((i + 1) % 4));
    }
  }

  return X;
}

LinkGraph square_vertex_link(const SquareComplex& X, int32_t v) {
  if (v < 0 || v >= static_cast<int32_t>(X.vertices.size()))
    fail(ErrorKind::UnknownIdentifier, "vertex index " + std::to_string(v));

  LinkGraph L;
  L.base_vertex = v;

  // One link vertex per edge end at v; a loop contributes both ends.
  std::vector<std::vector<int32_t>> end_index(X.edges.size(), std::vector<int32_t>(2, -1));
  for (size_t e = 0; e < X.edges.size(); ++e) {
    if (X.edges[e].tail == v) {
      end_index[e][0] = static_cast<int32_t>(L.verts.size());
      L.verts.push_back({static_cast<int32_t>(e), false});
    }
    if (X.edges[e].head == v) {
      end_index[e][1] = static_cast<int32_t>(L.verts.size());
      L.verts.push_back({static_cast<int32_t>(e), true});
    }
  }

  // Corner i joins the terminal end of side_{i-1} to the initial end of side_i.
  for (size_t q = 0; q < X.squares.size(); ++q) {
    const SquareCell& s = X.squares[q];
    for (int i = 0; i < 4; ++i) {
      if (X.corner_vertex(s, i) != v) continue;
      const Side& prev = s.sides[(i + 3) % 4];
      const Side& cur = s.sides[i];
      int32_t from = end_index[prev.edge][prev.reversed ? 0 : 1];  // terminal end
      int32_t to = end_index[cur.edge][cur.reversed ? 1 : 0];      // initial end
      L.edges.push_back({static_cast<int32_t>(q), i, from, to});
    }
  }

  return L;
}

LinkGraph square_vertex_link(const SquareComplex& X, const Name& v) {
  return square_vertex_link(X, X.vertex_index(v));
}

Name end_label(const SquareComplex& X, const EdgeEnd& e) {
  return X.edges[e.edge].id + (e.head ? ".h" : ".t");
}

long euler_characteristic(const SquareComplex& X) {
  return static_cast<long>(X.vertices.size()) - static_cast<long>(X.edges.size()) +
         static_cast<long>(X.squares.size());
}

std::vector<int32_t> components(const SquareComplex& X) {
  std::vector<int32_t> parent(X.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const EdgeCell& e : X.edges) {
    int32_t a = find(e.tail), b = find(e.head);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int32_t> comp(X.vertices.size());
  std::unordered_map<int32_t, int32_t> renumber;
  for (size_t i = 0; i < parent.size(); ++i) {
    int32_t r = find(static_cast<int32_t>(i));
    auto [it, fresh] = renumber.emplace(r, static_cast<int32_t>(renumber.size()));
    comp[i] = it->second;
    (void)fresh;
  }
  return comp;
}

int component_count(const SquareComplex& X) {
  auto comp = components(X);
  int32_t m = -1;
  for (int32_t c : comp) m = std::max(m, c);
  return static_cast<int>(m) + 1;
}

}  // namespace cx
