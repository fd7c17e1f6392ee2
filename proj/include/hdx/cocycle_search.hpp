#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cochain.hpp"
#include "cover.hpp"

namespace hdx {

namespace detail {

/// Multiplication table of Sym(l) indexed by lexicographic rank.
struct SymTable {
  int l = 1;
  int order = 1;
  std::vector<Permutation> perms;
  std::vector<int> mul;  // mul[a*order+b] = rank(a ∘ b)
  std::vector<int> inv;

  explicit SymTable(int ell) : l(ell), order(factorial(ell)), perms(Permutation::all(ell)) {
    mul.resize(static_cast<std::size_t>(order) * order);
    inv.resize(order);
    for (int a = 0; a < order; ++a) {
      inv[a] = perms[a].inverse().rank();
      for (int b = 0; b < order; ++b) mul[a * order + b] = (perms[a] * perms[b]).rank();
    }
  }
  int operator()(int a, int b) const { return mul[a * order + b]; }
};

/// Edge/triangle incidence of the ascending triangles: (uv, vw, uw) with ψ(uw) = ψ(vw) ∘ ψ(uv) on cocycles.
struct TriangleIndex {
  std::vector<std::array<int, 3>> tri;
  std::vector<std::vector<int>> of_edge;

  explicit TriangleIndex(const SimplicialComplex& X) {
    of_edge.assign(X.count(1), {});
    if (X.dim() < 2) return;
    for (const Face& t : X.faces(2)) {
      std::array<int, 3> e{X.ordinal(Face{t[0], t[1]}), X.ordinal(Face{t[1], t[2]}), X.ordinal(Face{t[0], t[2]})};
      for (int x : e) of_edge[x].push_back(static_cast<int>(tri.size()));
      tri.push_back(e);
    }
  }
};

/// BFS spanning forest; returns per-vertex order, parent edge ordinal (-1 at roots) and component roots.
struct SpanningForest {
  std::vector<VertexId> order;
  std::vector<int> parent_edge;
  std::vector<VertexId> parent;
  std::vector<char> tree_edge;
  std::vector<VertexId> roots;

  explicit SpanningForest(const SimplicialComplex& X) {
    const int n = X.n_vertices();
    auto adj = X.adjacency();
    parent_edge.assign(n, -1);
    parent.assign(n, -1);
    tree_edge.assign(X.count(1), 0);
    std::vector<char> seen(n, 0);
    for (VertexId r = 0; r < n; ++r) {
      if (seen[r]) continue;
      roots.push_back(r);
      seen[r] = 1;
      std::size_t head = order.size();
      order.push_back(r);
      while (head < order.size()) {
        VertexId u = order[head++];
        for (VertexId v : adj[u]) {
          if (seen[v]) continue;
          seen[v] = 1;
          parent[v] = u;
          parent_edge[v] = X.ordinal(Face{u, v});
          tree_edge[parent_edge[v]] = 1;
          order.push_back(v);
        }
      }
    }
  }
};

inline Cochain1 cochain_from_ranks(const ComplexPtr& X, const SymTable& S, const std::vector<int>& ranks) {
  Cochain1 c(X, S.l);
  for (std::size_t e = 0; e < ranks.size(); ++e) c.set_at(static_cast<int>(e), S.perms[ranks[e]]);
  return c;
}

}  // namespace detail

/// Enumerates the cocycles that are the identity on a BFS spanning forest (one per cohomology class orbit
/// under gauges fixing the roots). Backtracking with triangle propagation; `fn` returns false to stop.
/// Returns the number of cocycles visited.
inline std::uint64_t for_each_normalized_cocycle(const ComplexPtr& X, int ell, std::uint64_t node_budget, const std::function<bool(const Cochain1&)>& fn) {
  detail::SymTable S(ell);
  detail::TriangleIndex T(*X);
  detail::SpanningForest F(*X);
  const int m = static_cast<int>(X->count(1));
  std::vector<int> val(m, -1);
  std::vector<int> trail;
  std::uint64_t nodes = 0, found = 0;
  bool stop = false;

  auto assign = [&](int e, int v, std::vector<int>& queue) {
    val[e] = v;
    trail.push_back(e);
    queue.push_back(e);
  };
  // Propagates forced values; false on contradiction.
  auto propagate = [&](std::vector<int>& queue) {
    while (!queue.empty()) {
      int e = queue.back();
      queue.pop_back();
      for (int t : T.of_edge[e]) {
        auto [a, b, c] = T.tri[t];
        int va = val[a], vb = val[b], vc = val[c];
        int unknown = (va < 0) + (vb < 0) + (vc < 0);
        if (unknown == 0) {
          if (S(vb, va) != vc) return false;
        } else if (unknown == 1) {
          if (vc < 0) assign(c, S(vb, va), queue);
          else if (vb < 0) assign(b, S(vc, S.inv[va]), queue);
          else assign(a, S(S.inv[vb], vc), queue);
        }
      }
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      val[trail.back()] = -1;
      trail.pop_back();
    }
  };

  std::vector<int> queue;
  for (int e = 0; e < m; ++e)
    if (F.tree_edge[e]) assign(e, 0, queue);
  if (!propagate(queue)) return 0;

  std::function<void(int)> rec = [&](int start) {
    if (stop) return;
    if (++nodes > node_budget) fail(ErrorKind::BudgetExceeded, "cocycle enumeration exceeds the node budget");
    int e = start;
    while (e < m && val[e] >= 0) ++e;
    if (e == m) {
      ++found;
      if (!fn(detail::cochain_from_ranks(X, S, val))) stop = true;
      return;
    }
    for (int v = 0; v < S.order && !stop; ++v) {
      std::size_t mark = trail.size();
      std::vector<int> q;
      assign(e, v, q);
      if (propagate(q)) rec(e + 1);
      undo(mark);
    }
  };
  rec(0);
  return found;
}

enum class CocycleStrategy { Exhaustive, GaugeTree, LocalSearch };

inline const char* to_string(CocycleStrategy s) {
  switch (s) {
    case CocycleStrategy::Exhaustive: return "exhaustive";
    case CocycleStrategy::GaugeTree: return "gauge_tree";
    case CocycleStrategy::LocalSearch: return "local_search";
  }
  return "?";
}

struct NearestCocycle {
  Cochain1 phi;
  double dist = 0;
  bool exact = true;              ///< minimum over all of Z¹ (false for gauge_tree on non-simply-connected bases and for local_search)
  bool coboundaries_only = false;  ///< only coboundaries were searched
  std::string strategy;
  std::uint64_t evaluated = 0;
};

namespace detail {

/// Best gauge h (h(root) = Id per component) minimizing dist(ψ, h·c), by branch and bound over the BFS order.
inline double best_gauge(const Cochain1& psi, const std::vector<int>& c, const SymTable& S, const SpanningForest& F,
                         std::uint64_t& budget_left, std::vector<int>& best_h, double best) {
  const SimplicialComplex& X = psi.complex();
  const int n = X.n_vertices();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[F.order[i]] = i;
  const auto& E = X.faces(1);
  const auto& w = X.weights(1);
  std::vector<int> target(E.size());
  for (std::size_t e = 0; e < E.size(); ++e) target[e] = psi.at(static_cast<int>(e)).rank();
  // back[i]: edges from order[i] to earlier vertices.
  std::vector<std::vector<int>> back(n);
  auto adj = X.adjacency();
  for (int i = 0; i < n; ++i)
    for (VertexId u : adj[F.order[i]])
      if (pos[u] < i) back[i].push_back(X.ordinal(Face{u, F.order[i]}));
  std::vector<char> is_root(n, 0);
  for (VertexId r : F.roots) is_root[r] = 1;
  std::vector<int> h(n, 0);
  std::function<void(int, double)> rec = [&](int i, double cost) {
    if (cost >= best - 1e-15) return;
    if (i == n) {
      best = cost;
      best_h = h;
      return;
    }
    if (budget_left == 0) fail(ErrorKind::BudgetExceeded, "gauge enumeration exceeds the budget");
    --budget_left;
    VertexId v = F.order[i];
    int choices = is_root[v] ? 1 : S.order;
    for (int g = 0; g < choices; ++g) {
      h[v] = g;
      double add = 0;
      for (int e : back[i]) {
        VertexId a = E[e][0], b = E[e][1];
        int val = S(S(h[b], c[e]), S.inv[h[a]]);
        if (val != target[e]) add += w[e];
      }
      rec(i + 1, cost + add);
    }
  };
  rec(0, 0.0);
  return best;
}

}  // namespace detail

/// A cocycle close to ψ. Exhaustive searches all of Z¹; gauge_tree searches coboundaries only;
/// local_search descends on the violated-triangle mass and is heuristic.
inline NearestCocycle nearest_cocycle(const Cochain1& psi, CocycleStrategy strategy, std::uint64_t budget = 10'000'000) {
  NearestCocycle out;
  out.strategy = to_string(strategy);
  const ComplexPtr& X = psi.base();
  if (is_cocycle(psi)) {
    out.phi = psi;
    out.dist = 0;
    out.evaluated = 1;
    out.coboundaries_only = strategy == CocycleStrategy::GaugeTree;
    return out;
  }
  const int l = psi.ell();
  detail::SymTable S(l);
  detail::SpanningForest F(*X);

  if (strategy == CocycleStrategy::LocalSearch) {
    detail::TriangleIndex T(*X);
    const int m = static_cast<int>(psi.size());
    std::vector<int> val(m);
    for (int e = 0; e < m; ++e) val[e] = psi.at(e).rank();
    const auto& tw = X->weights(2);
    auto bad = [&](int t) {
      auto [a, b, c] = T.tri[t];
      return S(val[b], val[a]) != val[c];
    };
    std::vector<char> violated(T.tri.size(), 0);
    std::vector<int> active;
    for (std::size_t t = 0; t < T.tri.size(); ++t)
      if (bad(static_cast<int>(t))) violated[t] = 1, active.push_back(static_cast<int>(t));
    std::uint64_t steps = 0;
    while (true) {
      int best_e = -1, best_v = -1;
      double best_gain = 1e-15;
      std::vector<int> edges;
      for (int t : active)
        if (violated[t])
          for (int e : T.tri[t]) edges.push_back(e);
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      if (edges.empty()) break;
      for (int e : edges) {
        int old = val[e];
        double before = 0;
        for (int t : T.of_edge[e]) before += violated[t] ? tw[t] : 0;
        for (int v = 0; v < S.order; ++v) {
          if (v == old) continue;
          val[e] = v;
          double after = 0;
          for (int t : T.of_edge[e]) after += bad(t) ? tw[t] : 0;
          if (before - after > best_gain) best_gain = before - after, best_e = e, best_v = v;
        }
        val[e] = old;
      }
      if (best_e < 0 || ++steps > budget) break;
      val[best_e] = best_v;
      for (int t : T.of_edge[best_e]) {
        bool b = bad(t);
        if (b && !violated[t]) active.push_back(t);
        violated[t] = b;
      }
      std::vector<int> keep;
      for (int t : active)
        if (violated[t]) keep.push_back(t);
      active.swap(keep);
    }
    out.exact = false;
    out.evaluated = steps;
    Cochain1 phi = detail::cochain_from_ranks(X, S, val);
    if (!is_cocycle(phi)) {
      // Stuck: fall back to the coboundary that agrees with ψ on the spanning forest.
      std::vector<Permutation> h(X->n_vertices(), Permutation::identity(l));
      for (VertexId v : F.order)
        if (F.parent[v] >= 0) h[v] = psi.get(F.parent[v], v) * h[F.parent[v]];
      phi = coboundary(X, h);
    }
    out.dist = dist(psi, phi);
    out.phi = std::move(phi);
    return out;
  }

  const double gauges = std::pow(static_cast<double>(S.order), X->n_vertices());
  require(gauges <= static_cast<double>(budget), ErrorKind::BudgetExceeded, "gauge enumeration (l!)^|X(0)| exceeds the budget");
  std::uint64_t left = budget;
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_h, best_c;
  auto consider = [&](const std::vector<int>& c) {
    std::vector<int> h;
    double before = best;
    best = detail::best_gauge(psi, c, S, F, left, h, best);
    if (best < before) best_h = h, best_c = c;
    ++out.evaluated;
  };
  if (strategy == CocycleStrategy::GaugeTree) {
    out.coboundaries_only = true;
    out.exact = false;
    consider(std::vector<int>(psi.size(), 0));
  } else {
    for_each_normalized_cocycle(X, l, budget, [&](const Cochain1& c) {
      std::vector<int> r(c.size());
      for (std::size_t e = 0; e < c.size(); ++e) r[e] = c.at(static_cast<int>(e)).rank();
      consider(r);
      return true;
    });
  }
  std::vector<Permutation> h;
  for (int g : best_h) h.push_back(S.perms[g]);
  out.phi = gauge(detail::cochain_from_ranks(X, S, best_c), h);
  out.dist = dist(psi, out.phi);
  return out;
}

struct SimplyConnectedReport {
  bool simply_connected = true;
  int ell_max = 0;  ///< verified up to this ℓ
  std::optional<Cochain1> witness_cocycle;
  std::optional<CoverMap> witness_cover;  ///< connected nontrivial cover when not simply connected
};

/// True iff every cocycle with ℓ ≤ ℓ_max is a coboundary. Checks smallest ℓ first so the witness cover is connected.
inline SimplyConnectedReport is_simply_connected(const ComplexPtr& X, int ell_max, std::uint64_t budget = 10'000'000) {
  require(X->is_connected(), ErrorKind::NotConnected, "simple connectivity needs a connected complex");
  SimplyConnectedReport rep;
  rep.ell_max = ell_max;
  for (int l = 2; l <= ell_max; ++l) {
    std::optional<Cochain1> hit;
    for_each_normalized_cocycle(X, l, budget, [&](const Cochain1& c) {
      if (wt(c) > 0) {
        hit = c;
        return false;
      }
      return true;
    });
    if (hit) {
      rep.simply_connected = false;
      rep.ell_max = l;
      rep.witness_cover = induced_cover(*hit);
      rep.witness_cocycle = std::move(hit);
      return rep;
    }
  }
  return rep;
}

struct CosystolicEstimate {
  double beta_hat = std::numeric_limits<double>::infinity();  ///< min wt(δψ)/dist(ψ, Z¹) over non-cocycles seen
  std::optional<Cochain1> witness;
  double witness_wt_delta = 0;
  double witness_dist = 0;
  std::uint64_t evaluated = 0;
  bool exhaustive = false;
  int ell = 0;
};

/// Lower envelope of wt(δψ)/dist(ψ, Z¹). Enumerates every ψ supported on `support` (all edges if empty) when
/// (ℓ!)^|support| ≤ budget, else evaluates `samples` seeded random cochains (a prefix-stable stream).
inline CosystolicEstimate cosystolic_expansion_estimate(const ComplexPtr& X, int ell, std::uint64_t budget, std::uint64_t samples, Rng& rng,
                                                        std::vector<int> support = {}) {
  CosystolicEstimate est;
  est.ell = ell;
  if (support.empty())
    for (int e = 0; e < static_cast<int>(X->count(1)); ++e) support.push_back(e);
  detail::SymTable S(ell);
  auto evaluate = [&](const Cochain1& psi) {
    ++est.evaluated;
    double wd = wt_delta(psi);
    if (wd == 0) return;
    NearestCocycle nc = nearest_cocycle(psi, CocycleStrategy::Exhaustive, budget);
    double ratio = wd / nc.dist;
    if (ratio < est.beta_hat) {
      est.beta_hat = ratio;
      est.witness = psi;
      est.witness_wt_delta = wd;
      est.witness_dist = nc.dist;
    }
  };
  double total = std::pow(static_cast<double>(S.order), static_cast<double>(support.size()));
  if (total <= static_cast<double>(budget)) {
    est.exhaustive = true;
    std::vector<int> digits(support.size(), 0);
    while (true) {
      Cochain1 psi(X, ell);
      for (std::size_t i = 0; i < support.size(); ++i) psi.set_at(support[i], S.perms[digits[i]]);
      evaluate(psi);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == S.order) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    return est;
  }
  for (std::uint64_t s = 0; s < samples; ++s) {
    Rng r = rng.stream(s);
    Cochain1 psi(X, ell);
    for (int e : support) psi.set_at(e, Permutation::random(ell, r));
    evaluate(psi);
  }
  return est;
}

}  // namespace hdx
