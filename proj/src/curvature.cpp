#include "cx/curvature.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace cx {

void verify_partition(const SquareComplex& X, const VHPartition& P) {
  if (P.cls.size() != X.edges.size())
    fail(ErrorKind::PartitionMismatch, "partition covers " + std::to_string(P.cls.size()) +
                                           " of " + std::to_string(X.edges.size()) + " edges");
  for (const SquareCell& s : X.squares) {
    for (int i = 0; i < 4; ++i) {
      EdgeClass a = P.cls[s.sides[i].edge];
      EdgeClass b = P.cls[s.sides[(i + 1) % 4].edge];
      if (a == b)
        fail(ErrorKind::PartitionMismatch,
             "square '" + s.id + "' does not alternate at side " + std::to_string(i));
    }
  }
}

VHPartition swap_classes(VHPartition P) {
  for (EdgeClass& c : P.cls) c = (c == EdgeClass::V) ? EdgeClass::H : EdgeClass::V;
  return P;
}

// ---------------------------------------------------------------------------
// Short cycles in vertex links.

std::optional<ShortLinkCycle> short_cycle_search(const SquareComplex& X, const LinkGraph& L) {
  // Loops first, then parallel pairs, then triangles; ties by the smallest
  // involved link vertices, then corners. Link edges are already in
  // (square, corner) order.
  std::optional<ShortLinkCycle> best;
  std::vector<int32_t> best_key;
  auto consider = [&](ShortLinkCycle cand, const std::vector<int32_t>& key) {
    if (!best || key < best_key) {
      best = std::move(cand);
      best_key = key;
    }
  };

  for (const LinkCorner& c : L.edges) {
    if (c.from == c.to) {
      ShortLinkCycle cy;
      cy.vertex = X.vertices[L.base_vertex];
      cy.corners = {{X.squares[c.square].id, c.corner}};
      std::vector<int32_t> key{1, c.from, c.square, c.corner};
      consider(std::move(cy), key);
    }
  }
  if (best) return best;

  for (size_t i = 0; i < L.edges.size(); ++i) {
    const LinkCorner& a = L.edges[i];
    if (a.from == a.to) continue;
    for (size_t j = i + 1; j < L.edges.size(); ++j) {
      const LinkCorner& b = L.edges[j];
      if (b.from == b.to) continue;
      if (std::minmax(a.from, a.to) != std::minmax(b.from, b.to)) continue;
      ShortLinkCycle cy;
      cy.vertex = X.vertices[L.base_vertex];
      cy.corners = {{X.squares[a.square].id, a.corner}, {X.squares[b.square].id, b.corner}};
      std::vector<int32_t> key{2, std::min(a.from, a.to), std::max(a.from, a.to),
                               static_cast<int32_t>(i), static_cast<int32_t>(j)};
      consider(std::move(cy), key);
    }
  }
  if (best) return best;

  // Triangles on the underlying simple graph; pick the least corner per pair.
  int n = static_cast<int>(L.verts.size());
  std::vector<std::vector<int32_t>> corner_of(n, std::vector<int32_t>(n, -1));
  for (size_t i = 0; i < L.edges.size(); ++i) {
    const LinkCorner& c = L.edges[i];
    if (c.from == c.to) continue;
    int u = std::min(c.from, c.to), v = std::max(c.from, c.to);
    if (corner_of[u][v] < 0) corner_of[u][v] = static_cast<int32_t>(i);
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (corner_of[u][v] < 0) continue;
      for (int w = v + 1; w < n; ++w) {
        if (corner_of[u][w] < 0 || corner_of[v][w] < 0) continue;
        ShortLinkCycle cy;
        cy.vertex = X.vertices[L.base_vertex];
        for (int32_t ei : {corner_of[u][v], corner_of[v][w], corner_of[u][w]}) {
          const LinkCorner& c = L.edges[ei];
          cy.corners.push_back({X.squares[c.square].id, c.corner});
        }
        std::vector<int32_t> key{3, u, v, w};
        consider(std::move(cy), key);
      }
    }
  return best;
}

CheckOutcome check_npc(const SquareComplex& X) {
  CheckOutcome out;
  for (size_t v = 0; v < X.vertices.size(); ++v) {
    LinkGraph L = square_vertex_link(X, static_cast<int32_t>(v));
    if (auto cy = short_cycle_search(X, L)) {
      out.verdict = Verdict::Fail;
      out.certificates.push_back(std::move(*cy));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vertical/horizontal detection by 2-coloring the edge-constraint graph.

namespace {

struct Constraint {
  int32_t other;
  bool equality;
  int32_t square;
  int side_a, side_b;
};

}  // namespace

VhResult detect_vh(const SquareComplex& X) {
  size_t n = X.edges.size();
  std::vector<std::vector<Constraint>> adj(n);
  std::optional<VhContradiction> immediate;

  for (size_t q = 0; q < X.squares.size() && !immediate; ++q) {
    const SquareCell& s = X.squares[q];
    auto add = [&](int ia, int ib, bool eq) {
      int32_t a = s.sides[ia].edge, b = s.sides[ib].edge;
      if (a == b) {
        if (!eq && !immediate) {
          VhContradiction c;
          c.steps.push_back({s.id, false, ia, ib, X.edges[a].id, X.edges[b].id});
          immediate = std::move(c);
        }
        return;  // self-equalities carry no information
      }
      adj[a].push_back({b, eq, static_cast<int32_t>(q), ia, ib});
      adj[b].push_back({a, eq, static_cast<int32_t>(q), ia, ib});
    };
    add(0, 2, true);
    add(1, 3, true);
    for (int i = 0; i < 4; ++i) add(i, (i + 1) % 4, false);
  }
  if (immediate) return {std::nullopt, std::move(immediate)};

  for (auto& list : adj) {
    std::stable_sort(list.begin(), list.end(), [](const Constraint& a, const Constraint& b) {
      if (a.other != b.other) return a.other < b.other;
      return a.square < b.square;
    });
  }

  VHPartition P;
  P.cls.assign(n, EdgeClass::V);
  std::vector<int> color(n, -1);
  struct From {
    int32_t parent = -1;
    Constraint via{};
  };
  std::vector<From> from(n);

  for (size_t root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    ++P.free_components;
    color[root] = 0;  // the least edge id of the component becomes V
    std::deque<int32_t> queue{static_cast<int32_t>(root)};
    while (!queue.empty()) {
      int32_t u = queue.front();
      queue.pop_front();
      for (const Constraint& c : adj[u]) {
        int expected = c.equality ? color[u] : 1 - color[u];
        if (color[c.other] == -1) {
          color[c.other] = expected;
          from[c.other] = {u, c};
          queue.push_back(c.other);
        } else if (color[c.other] != expected) {
          // Odd closed walk: root..u, the conflicting constraint, other..root.
          VhContradiction cert;
          auto path_to_root = [&](int32_t x) {
            std::vector<VhStep> steps;
            while (from[x].parent != -1) {
              const Constraint& via = from[x].via;
              steps.push_back({X.squares[via.square].id, via.equality, via.side_a, via.side_b,
                               X.edges[x].id, X.edges[from[x].parent].id});
              x = from[x].parent;
            }
            return steps;
          };
          std::vector<VhStep> up = path_to_root(u);  // u -> root
          std::vector<VhStep> down = path_to_root(c.other);
          std::reverse(down.begin(), down.end());  // root -> other
          for (VhStep& s : down) std::swap(s.from_edge, s.to_edge);
          cert.steps = std::move(down);  // root -> other
          cert.steps.push_back({X.squares[c.square].id, c.equality, c.side_a, c.side_b,
                                X.edges[c.other].id, X.edges[u].id});
          for (VhStep& s : up) cert.steps.push_back(s);  // u -> root
          return {std::nullopt, std::move(cert)};
        }
      }
    }
  }

  for (size_t e = 0; e < n; ++e) P.cls[e] = color[e] == 0 ? EdgeClass::V : EdgeClass::H;
  verify_partition(X, P);
  return {std::move(P), std::nullopt};
}

// ---------------------------------------------------------------------------
// Simplicity / flagness / chordless cycles on simplicial complexes.

SimpleCheck check_simple(const DeltaComplex& L) {
  SimpleCheck res;
  for (int k = 1; k <= L.top_dimension(); ++k) {
    std::map<std::vector<int32_t>, int32_t> seen;
    for (size_t s = 0; s < L.count(k); ++s) {
      std::vector<int32_t> vs = L.levels[k].slot_vertex[s];
      std::sort(vs.begin(), vs.end());
      if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
        res.ok = false;
        res.offenders = {L.name(k, static_cast<int32_t>(s))};
        return res;
      }
      auto [it, fresh] = seen.emplace(std::move(vs), static_cast<int32_t>(s));
      if (!fresh) {
        res.ok = false;
        res.offenders = {L.name(k, it->second), L.name(k, static_cast<int32_t>(s))};
        return res;
      }
    }
  }
  return res;
}

namespace {

struct VecHash {
  size_t operator()(const std::vector<int32_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (int32_t x : v) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
    return h;
  }
};

struct CliqueSearch {
  const std::vector<std::vector<bool>>& adj;
  const std::unordered_set<std::vector<int32_t>, VecHash>& spanned;
  size_t budget;
  size_t visited = 0;
  std::vector<int32_t> missing;

  bool span_ok(const std::vector<int32_t>& clique) const {
    std::vector<int32_t> c = clique;
    std::sort(c.begin(), c.end());
    return spanned.count(c) > 0;
  }

  // Bron-Kerbosch with pivoting over the maximal cliques; every clique is a
  // subset of a maximal one, and faces of a spanning simplex span subsets.
  bool run(std::vector<int32_t>& r, std::vector<int32_t> p, std::vector<int32_t> x) {
    if (++visited > budget)
      fail(ErrorKind::CliqueBudgetExceeded,
           "more than " + std::to_string(budget) + " cliques in one link");
    if (p.empty() && x.empty()) return maximal(r);
    int32_t pivot = !p.empty() ? p.front() : x.front();
    size_t best = 0;
    for (int32_t cand : p) {
      size_t d = 0;
      for (int32_t w : p)
        if (adj[cand][w]) ++d;
      if (d >= best) {
        best = d;
        pivot = cand;
      }
    }
    std::vector<int32_t> ext;
    for (int32_t v : p)
      if (!adj[pivot][v]) ext.push_back(v);
    for (int32_t v : ext) {
      std::vector<int32_t> p2, x2;
      for (int32_t w : p)
        if (adj[v][w]) p2.push_back(w);
      for (int32_t w : x)
        if (adj[v][w]) x2.push_back(w);
      r.push_back(v);
      if (!run(r, std::move(p2), std::move(x2))) return false;
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
    return true;
  }

  bool maximal(const std::vector<int32_t>& clique) {
    if (span_ok(clique)) return true;
    // Shrink to a minimal unspanned clique.
    std::vector<int32_t> c = clique;
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      for (size_t i = 0; i < c.size(); ++i) {
        std::vector<int32_t> sub = c;
        sub.erase(sub.begin() + static_cast<long>(i));
        if (!span_ok(sub)) {
          c = std::move(sub);
          shrunk = true;
          break;
        }
      }
    }
    missing = std::move(c);
    return false;
  }
};

}  // namespace

FlagCheck check_flag(const DeltaComplex& L, size_t budget) {
  FlagCheck res;
  size_t n = L.count(0);
  if (n == 0) return res;

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (size_t e = 0; e < L.count(1); ++e) {
    int32_t a = L.vertex_of_slot(1, static_cast<int32_t>(e), 0);
    int32_t b = L.vertex_of_slot(1, static_cast<int32_t>(e), 1);
    adj[a][b] = adj[b][a] = true;
  }

  std::unordered_set<std::vector<int32_t>, VecHash> spanned;
  for (int k = 0; k <= L.top_dimension(); ++k) {
    for (size_t s = 0; s < L.count(k); ++s) {
      std::vector<int32_t> vs = L.levels[k].slot_vertex[s];
      std::sort(vs.begin(), vs.end());
      spanned.insert(std::move(vs));
    }
  }

  CliqueSearch search{adj, spanned, budget};
  std::vector<int32_t> r, p(n), x;
  std::iota(p.begin(), p.end(), 0);
  if (!search.run(r, std::move(p), std::move(x))) {
    res.ok = false;
    std::sort(search.missing.begin(), search.missing.end());
    for (int32_t v : search.missing) res.missing_clique.push_back(L.name(0, v));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Chordless 4- and 5-cycles. Cycles are produced directly in canonical form:
// least vertex first, second-least neighbor fixing the orientation.

std::vector<std::vector<int>> chordless_cycles_graph(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<std::vector<int>> nb(n);
  for (auto [a, b] : edges) {
    if (a == b || adj[a][b]) continue;
    adj[a][b] = adj[b][a] = true;
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  for (auto& list : nb) std::sort(list.begin(), list.end());

  std::vector<std::vector<int>> found;
  for (int v0 = 0; v0 < n; ++v0) {
    for (int v1 : nb[v0]) {
      if (v1 <= v0) continue;
      for (int v2 : nb[v1]) {
        if (v2 <= v0 || v2 == v1) continue;
        // length 4: v0 v1 v2 v3
        for (int v3 : nb[v2]) {
          if (v3 <= v0 || v3 == v1 || v3 == v2 || !adj[v3][v0]) continue;
          if (v3 < v1) continue;  // orientation: second entry < last entry
          if (adj[v0][v2] || adj[v1][v3]) continue;
          found.push_back({v0, v1, v2, v3});
        }
        // length 5: v0 v1 v2 v3 v4
        if (adj[v0][v2]) continue;  // would be a chord of any 5-cycle through v0 v1 v2
        for (int v3 : nb[v2]) {
          if (v3 <= v0 || v3 == v1 || v3 == v2 || adj[v3][v1]) continue;
          for (int v4 : nb[v3]) {
            if (v4 <= v0 || v4 == v1 || v4 == v2 || v4 == v3 || !adj[v4][v0]) continue;
            if (v4 < v1) continue;
            if (adj[v0][v3] || adj[v1][v4] || adj[v2][v4]) continue;
            found.push_back({v0, v1, v2, v3, v4});
          }
        }
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return found;
}

std::vector<std::vector<Name>> chordless_cycle_search(const DeltaComplex& L) {
  int n = static_cast<int>(L.count(0));
  std::vector<std::pair<int, int>> edges;
  for (size_t e = 0; e < L.count(1); ++e)
    edges.emplace_back(L.vertex_of_slot(1, static_cast<int32_t>(e), 0),
                       L.vertex_of_slot(1, static_cast<int32_t>(e), 1));
  std::vector<std::vector<Name>> out;
  for (const auto& cy : chordless_cycles_graph(n, edges)) {
    std::vector<Name> named;
    named.reserve(cy.size());
    for (int v : cy) named.push_back(L.name(0, v));
    out.push_back(std::move(named));
  }
  return out;
}

// ---------------------------------------------------------------------------

CheckOutcome check_locally_6_large(const DeltaComplex& X, const SixLargeOptions& opts) {
  CheckOutcome out;
  try {
    int max_base_dim = opts.all_simplices ? X.top_dimension() : 0;
    for (int bd = 0; bd <= max_base_dim; ++bd) {
      for (size_t v = 0; v < X.count(bd); ++v) {
        LinkComplex L = delta_simplex_link(X, bd, static_cast<int32_t>(v));
        const Name& base = X.name(bd, static_cast<int32_t>(v));
        SimpleCheck simple = check_simple(L.complex);
        if (!simple.ok) {
          out.verdict = Verdict::Fail;
          out.certificates.push_back(NotSimple{base, simple.offenders});
          continue;
        }
        FlagCheck flag = check_flag(L.complex, opts.clique_budget);
        if (!flag.ok) {
          out.verdict = Verdict::Fail;
          out.certificates.push_back(MissingCliqueSimplex{base, flag.missing_clique});
        }
        for (auto& cy : chordless_cycle_search(L.complex)) {
          out.verdict = Verdict::Fail;
          out.certificates.push_back(ChordlessCycle{base, std::move(cy)});
        }
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CliqueBudgetExceeded) throw;
    out.verdict = Verdict::Error;
    out.error = e.what();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Independent certificate re-verification.

bool reverify(const SquareComplex& X, const ShortLinkCycle& c) {
  if (c.corners.empty() || c.corners.size() > 3) return false;
  auto vit = X.vertex_lookup.find(c.vertex);
  if (vit == X.vertex_lookup.end()) return false;
  LinkGraph L = square_vertex_link(X, vit->second);

  std::vector<std::pair<int32_t, int32_t>> ends;
  for (const auto& step : c.corners) {
    auto sit = X.square_lookup.find(step.square);
    if (sit == X.square_lookup.end() || step.corner < 0 || step.corner > 3) return false;
    const LinkCorner* found = nullptr;
    for (const LinkCorner& lc : L.edges)
      if (lc.square == sit->second && lc.corner == step.corner) found = &lc;
    if (!found) return false;
    ends.emplace_back(found->from, found->to);
  }
  if (ends.size() == 1) return ends[0].first == ends[0].second;  // loop
  if (ends.size() == 2) {
    // Parallel pair: two distinct corners on the same two distinct vertices.
    if (ends[0].first == ends[0].second || ends[1].first == ends[1].second) return false;
    if (c.corners[0].square == c.corners[1].square && c.corners[0].corner == c.corners[1].corner)
      return false;
    return std::minmax(ends[0].first, ends[0].second) ==
           std::minmax(ends[1].first, ends[1].second);
  }
  // Triangle: the three edges must chain through three distinct vertices.
  std::set<int32_t> verts;
  for (auto [a, b] : ends) {
    if (a == b) return false;
    verts.insert(a);
    verts.insert(b);
  }
  if (verts.size() != 3) return false;
  // Each vertex must meet exactly two of the edges.
  std::map<int32_t, int> deg;
  for (auto [a, b] : ends) {
    deg[a]++;
    deg[b]++;
  }
  for (auto [v, d] : deg)
    if (d != 2) return false;
  return true;
}

bool reverify(const SquareComplex& X, const VhContradiction& c) {
  if (c.steps.empty()) return false;
  int inequalities = 0;
  for (size_t i = 0; i < c.steps.size(); ++i) {
    const VhStep& s = c.steps[i];
    auto sit = X.square_lookup.find(s.square);
    if (sit == X.square_lookup.end()) return false;
    const SquareCell& q = X.squares[sit->second];
    if (s.side_a < 0 || s.side_a > 3 || s.side_b < 0 || s.side_b > 3) return false;
    bool opposite = (s.side_a ^ s.side_b) == 2;
    bool adjacent = ((s.side_a - s.side_b) & 1) != 0;
    if (s.equality && !opposite) return false;
    if (!s.equality && !adjacent) return false;
    const Name& ea = X.edges[q.sides[s.side_a].edge].id;
    const Name& eb = X.edges[q.sides[s.side_b].edge].id;
    if (!((ea == s.from_edge && eb == s.to_edge) || (ea == s.to_edge && eb == s.from_edge)))
      return false;
    const VhStep& next = c.steps[(i + 1) % c.steps.size()];
    if (s.to_edge != next.from_edge) return false;
    if (!s.equality) ++inequalities;
  }
  return inequalities % 2 == 1;
}

bool reverify(const DeltaComplex& X, const NotSimple& c) {
  if (X.levels.empty()) return false;
  auto vit = X.levels[0].lookup.find(c.vertex);
  if (vit == X.levels[0].lookup.end()) return false;
  LinkComplex L = delta_vertex_link(X, vit->second);
  auto vset = [&](int dim, int32_t idx) {
    std::vector<int32_t> vs = L.complex.levels[dim].slot_vertex[idx];
    std::sort(vs.begin(), vs.end());
    return vs;
  };
  if (c.cells.size() == 1) {
    for (int k = 1; k <= L.complex.top_dimension(); ++k) {
      auto it = L.complex.levels[k].lookup.find(c.cells[0]);
      if (it == L.complex.levels[k].lookup.end()) continue;
      auto vs = vset(k, it->second);
      return std::adjacent_find(vs.begin(), vs.end()) != vs.end();
    }
    return false;
  }
  if (c.cells.size() == 2) {
    for (int k = 1; k <= L.complex.top_dimension(); ++k) {
      auto a = L.complex.levels[k].lookup.find(c.cells[0]);
      auto b = L.complex.levels[k].lookup.find(c.cells[1]);
      if (a == L.complex.levels[k].lookup.end() || b == L.complex.levels[k].lookup.end())
        continue;
      if (a->second == b->second) return false;
      return vset(k, a->second) == vset(k, b->second);
    }
  }
  return false;
}

namespace {

// Link 1-skeleton adjacency plus the set of spanned vertex sets.
struct LinkView {
  LinkComplex link;
  std::vector<std::vector<bool>> adj;
  std::set<std::vector<int32_t>> spanned;

  explicit LinkView(const DeltaComplex& X, const Name& base) {
    link = delta_vertex_link(X, base);
    size_t n = link.complex.count(0);
    adj.assign(n, std::vector<bool>(n, false));
    for (size_t e = 0; e < link.complex.count(1); ++e) {
      int32_t a = link.complex.vertex_of_slot(1, static_cast<int32_t>(e), 0);
      int32_t b = link.complex.vertex_of_slot(1, static_cast<int32_t>(e), 1);
      adj[a][b] = adj[b][a] = true;
    }
    for (int k = 0; k <= link.complex.top_dimension(); ++k)
      for (size_t s = 0; s < link.complex.count(k); ++s) {
        std::vector<int32_t> vs = link.complex.levels[k].slot_vertex[s];
        std::sort(vs.begin(), vs.end());
        spanned.insert(std::move(vs));
      }
  }

  std::optional<int32_t> vertex(const Name& n) const {
    if (link.complex.top_dimension() < 0) return std::nullopt;
    auto it = link.complex.levels[0].lookup.find(n);
    if (it == link.complex.levels[0].lookup.end()) return std::nullopt;
    return it->second;
  }
};

}  // namespace

bool reverify(const DeltaComplex& X, const MissingCliqueSimplex& c) {
  if (X.levels.empty() || !X.levels[0].lookup.count(c.vertex)) return false;
  LinkView view(X, c.vertex);
  std::vector<int32_t> clique;
  for (const Name& n : c.clique) {
    auto v = view.vertex(n);
    if (!v) return false;
    clique.push_back(*v);
  }
  for (size_t i = 0; i < clique.size(); ++i)
    for (size_t j = i + 1; j < clique.size(); ++j)
      if (!view.adj[clique[i]][clique[j]]) return false;
  std::sort(clique.begin(), clique.end());
  return view.spanned.count(clique) == 0;
}

bool reverify(const DeltaComplex& X, const ChordlessCycle& c) {
  if (c.cycle.size() != 4 && c.cycle.size() != 5) return false;
  if (X.levels.empty() || !X.levels[0].lookup.count(c.vertex)) return false;
  LinkView view(X, c.vertex);
  std::vector<int32_t> cy;
  for (const Name& n : c.cycle) {
    auto v = view.vertex(n);
    if (!v) return false;
    cy.push_back(*v);
  }
  size_t m = cy.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      if (cy[i] == cy[j]) return false;
      bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
      if (view.adj[cy[i]][cy[j]] != consecutive) return false;
    }
  return true;
}

}  // namespace cx
