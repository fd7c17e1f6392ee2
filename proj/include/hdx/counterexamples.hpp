#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "agreement.hpp"
#include "cover.hpp"
#include "spectral.hpp"

namespace hdx {

// ---------------------------------------------------------------------------------------------
// Cover counterexample

struct PlantedEnsemble {
  Ensemble ensemble;
  std::vector<int> choice;  ///< chosen preimage index per k-face
};

/// Planted ensemble from explicit per-face lift choices.
inline Ensemble planted_from_choices(const CoverMap& cm, int k, const std::vector<int>& choice) {
  Ensemble F{cm.base, k, cover_degree(cm), {}};
  const auto& R = cm.base->faces(k);
  for (std::size_t j = 0; j < R.size(); ++j) {
    Face lift = face_preimages(cm, R[j])[choice[j]];
    std::vector<int> row;
    for (VertexId v : R[j]) {
      for (VertexId y : lift)
        if (cm.rho[y] == v) row.push_back(cm.fiber_index[y]);
    }
    F.table.push_back(std::move(row));
  }
  return F;
}

/// f_r(v) = i where (v, i) lies on a uniformly chosen lift of r, i.e. H(v, i) = i pulled back through that lift.
inline PlantedEnsemble planted_cover_ensemble(const CoverMap& cm, int k, Rng& rng) {
  const int l = cover_degree(cm);
  PlantedEnsemble P;
  for (std::size_t j = 0; j < cm.base->count(k); ++j) P.choice.push_back(rng.index(l));
  P.ensemble = planted_from_choices(cm, k, P.choice);
  return P;
}

/// E over independent uniform lift choices of Agree_D: per tuple, the fraction of joint choices on its distinct faces
/// that agree on every shared vertex.
inline double planted_agreement_expected(const CoverMap& cm, AgreementDistribution D) {
  if (!D.host) D = extend(D, cm.base);
  const int l = cover_degree(cm);
  double acc = 0;
  for_each_tuple(D, [&](double p, const std::vector<Face>& tup) {
    std::vector<Face> distinct = tup;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::vector<Face>> lifts;
    for (const Face& r : distinct) lifts.push_back(face_preimages(cm, r));
    std::vector<int> idx(distinct.size(), 0);
    std::uint64_t good = 0, total = 0;
    while (true) {
      bool ok = true;
      for (std::size_t a = 0; a < distinct.size() && ok; ++a)
        for (std::size_t b = a + 1; b < distinct.size() && ok; ++b)
          for (VertexId y : lifts[a][idx[a]]) {
            // The lifts agree at x iff they share the vertex over x.
            VertexId x = cm.rho[y];
            if (!distinct[b].contains(x)) continue;
            if (!lifts[b][idx[b]].contains(y)) ok = false;
          }
      good += ok;
      ++total;
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == l) idx[i++] = 0;
      if (i == idx.size()) break;
    }
    acc += p * static_cast<double>(good) / static_cast<double>(total);
  });
  return acc;
}

struct BestGlobal {
  GlobalFunction G;
  double value = 0;
  std::uint64_t evaluated = 0;
};

/// max_G Pr_{r ∼ Pr_k}[f_r ≈^{1-ζ} G|_r] by exhaustive search with incremental updates.
inline BestGlobal best_global_bruteforce(const Ensemble& F, double zeta, std::uint64_t budget = std::uint64_t{1} << 24) {
  const SimplicialComplex& X = *F.host;
  const int n = X.n_vertices();
  require(std::pow(static_cast<double>(F.sigma), n) <= static_cast<double>(budget), ErrorKind::BudgetExceeded, "|Σ|^|X(0)| exceeds the budget");
  const int tol = static_cast<int>(std::floor(zeta * (F.k + 1) + 1e-9));
  std::vector<std::vector<std::pair<int, int>>> inc(n);  // vertex -> (face, position)
  for (std::size_t j = 0; j < F.size(); ++j) {
    const Face& r = F.face(static_cast<int>(j));
    for (std::size_t i = 0; i < r.size(); ++i) inc[r[i]].emplace_back(static_cast<int>(j), static_cast<int>(i));
  }
  const auto& w = X.weights(F.k);
  std::vector<int> G(n, 0), mism(F.size(), 0);
  double value = 0;
  for (std::size_t j = 0; j < F.size(); ++j) {
    for (int x : F.table[j]) mism[j] += x != 0;
    if (mism[j] <= tol) value += w[j];
  }
  BestGlobal best{GlobalFunction{F.host, G}, value, 1};
  auto set = [&](int v, int a) {
    for (auto [j, i] : inc[v]) {
      bool was = mism[j] <= tol;
      mism[j] += (F.table[j][i] != a) - (F.table[j][i] != G[v]);
      bool now = mism[j] <= tol;
      if (was != now) value += now ? w[j] : -w[j];
    }
    G[v] = a;
  };
  while (true) {
    int v = 0;
    while (v < n && G[v] == F.sigma - 1) set(v++, 0);
    if (v == n) break;
    set(v, G[v] + 1);
    ++best.evaluated;
    if (value > best.value + 1e-12) best.value = value, best.G.values = G;
  }
  best.value = std::min(best.value, 1.0);
  return best;
}

/// The all-transposition double cover of K_n: K_{n,n} minus a perfect matching over the complete graph. n = 3 is the
/// hexagon over the triangle.
inline CoverMap all_transposition_cover(int n) {
  auto X = share(complete_complex(n, 1));
  Cochain1 psi(X, 2);
  for (std::size_t e = 0; e < psi.size(); ++e) psi.set_at(static_cast<int>(e), Permutation::transposition(2, 0, 1));
  return induced_cover(psi);
}

struct CoverCounterexampleReport {
  int seeds = 0;
  int best_seed = 0;
  double best_exact = 0;  ///< exact Agree_D of the selected ensemble
  double agreement = 0;   ///< Monte-Carlo estimate on the selected ensemble
  double ci_low = 0, ci_high = 0;
  std::uint64_t trials = 0;
  double best_global_value = 0;
  double gap = 0;  ///< agreement - best_global_value
  bool total_connected = false;
  std::uint64_t evaluated = 0;
  PlantedEnsemble ensemble;
};

/// Best of `seeds` planted ensembles by exact agreement (stream s for seed s), measured on stream `seeds`, then
/// compared with the best global function at ζ.
inline CoverCounterexampleReport cover_counterexample(const CoverMap& cm, int k, AgreementDistribution D, int seeds, std::uint64_t trials,
                                                      double zeta, Rng& rng, std::uint64_t budget = std::uint64_t{1} << 24) {
  require(seeds >= 1, ErrorKind::BadParams, "need at least one seed");
  if (!D.host) D = extend(D, cm.base);
  CoverCounterexampleReport rep;
  rep.seeds = seeds;
  rep.total_connected = cm.total->is_connected();
  rep.best_exact = -1;
  for (int s = 0; s < seeds; ++s) {
    Rng r = rng.stream(static_cast<std::uint64_t>(s));
    PlantedEnsemble P = planted_cover_ensemble(cm, k, r);
    double a = agree_exact(P.ensemble, D).agreement;
    if (a > rep.best_exact + 1e-15) rep.best_exact = a, rep.best_seed = s, rep.ensemble = std::move(P);
  }
  Rng mc = rng.stream(static_cast<std::uint64_t>(seeds));
  AgreementResult m = agree_monte_carlo(rep.ensemble.ensemble, D, trials, mc);
  rep.agreement = m.agreement;
  rep.ci_low = m.ci_low;
  rep.ci_high = m.ci_high;
  rep.trials = m.trials;
  BestGlobal bg = best_global_bruteforce(rep.ensemble.ensemble, zeta, budget);
  rep.best_global_value = bg.value;
  rep.evaluated = bg.evaluated;
  rep.gap = rep.agreement - rep.best_global_value;
  return rep;
}

// ---------------------------------------------------------------------------------------------
// Constraint graphs

struct ConstraintGraph {
  struct Edge {
    int u = 0, v = 0;       ///< u < v
    std::vector<char> rel;  ///< rel[a * |Σ_v| + b]: (a, b) ∈ π_uv
  };
  int n = 0;
  std::vector<int> alphabet;
  std::vector<Edge> edges;

  bool allowed(const Edge& e, int a, int b) const { return e.rel[a * alphabet[e.v] + b] != 0; }

  /// Whether assignment (x at vertex p, y at vertex q) satisfies the constraint on edge e.
  bool satisfied(const Edge& e, VertexId p, int x, int y) const { return p == e.u ? allowed(e, x, y) : allowed(e, y, x); }

  std::vector<std::vector<std::pair<int, int>>> adjacency() const {  // vertex -> (neighbor, edge index)
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      adj[edges[i].u].emplace_back(edges[i].v, static_cast<int>(i));
      adj[edges[i].v].emplace_back(edges[i].u, static_cast<int>(i));
    }
    return adj;
  }
};

inline ConstraintGraph make_constraint_graph(int n, const std::vector<std::pair<int, int>>& edges, int sigma, const std::function<bool(int, int)>& rel) {
  ConstraintGraph G;
  G.n = n;
  G.alphabet.assign(n, sigma);
  for (auto [a, b] : edges) {
    require(a != b && a >= 0 && b >= 0 && a < n && b < n, ErrorKind::BadParams, "bad constraint edge");
    ConstraintGraph::Edge e;
    e.u = std::min(a, b);
    e.v = std::max(a, b);
    e.rel.assign(static_cast<std::size_t>(sigma) * sigma, 0);
    for (int x = 0; x < sigma; ++x)
      for (int y = 0; y < sigma; ++y) e.rel[x * sigma + y] = rel(x, y);
    G.edges.push_back(std::move(e));
  }
  return G;
}

inline ConstraintGraph inequality_constraints(int n, const std::vector<std::pair<int, int>>& edges, int sigma = 2) {
  return make_constraint_graph(n, edges, sigma, [](int x, int y) { return x != y; });
}

inline ConstraintGraph equality_constraints(int n, const std::vector<std::pair<int, int>>& edges, int sigma = 2) {
  return make_constraint_graph(n, edges, sigma, [](int x, int y) { return x == y; });
}

struct ValueResult {
  double val = 0;
  std::vector<int> assignment;
  bool exact = true;
  std::uint64_t nodes = 0;
};

enum class ValueStrategy { Exhaustive, LocalSearch };

/// Maximal fraction of satisfied constraints: branch and bound (exact, guarded by a node budget) or seeded
/// restarts of greedy improvement.
inline ValueResult value(const ConstraintGraph& G, ValueStrategy strategy = ValueStrategy::Exhaustive, std::uint64_t budget = std::uint64_t{1} << 32,
                         std::uint64_t seed = 0) {
  ValueResult out;
  const int m = static_cast<int>(G.edges.size());
  if (m == 0) {
    out.val = 1;
    out.assignment.assign(G.n, 0);
    return out;
  }
  auto adj = G.adjacency();
  auto violated_count = [&](const std::vector<int>& x) {
    int bad = 0;
    for (const auto& e : G.edges) bad += !G.allowed(e, x[e.u], x[e.v]);
    return bad;
  };
  if (strategy == ValueStrategy::LocalSearch) {
    Rng rng(seed);
    int best = m + 1;
    for (int restart = 0; restart < 64; ++restart) {
      std::vector<int> x(G.n);
      for (int v = 0; v < G.n; ++v) x[v] = rng.index(G.alphabet[v]);
      bool improved = true;
      while (improved) {
        improved = false;
        for (int v = 0; v < G.n; ++v) {
          auto local = [&](int a) {
            int bad = 0;
            for (auto [w, ei] : adj[v]) bad += !G.satisfied(G.edges[ei], v, a, x[w]);
            return bad;
          };
          int cur = local(x[v]);
          for (int a = 0; a < G.alphabet[v]; ++a)
            if (local(a) < cur) x[v] = a, cur = local(a), improved = true;
        }
      }
      int bad = violated_count(x);
      if (bad < best) best = bad, out.assignment = x;
    }
    out.val = 1.0 - static_cast<double>(best) / m;
    out.exact = false;
    return out;
  }
  // BFS order so each vertex meets constraints to earlier ones as soon as possible.
  std::vector<int> order, pos(G.n, -1);
  for (int s = 0; s < G.n; ++s) {
    if (pos[s] >= 0) continue;
    pos[s] = static_cast<int>(order.size());
    order.push_back(s);
    for (std::size_t h = order.size() - 1; h < order.size(); ++h)
      for (auto [w, ei] : adj[order[h]])
        if (pos[w] < 0) pos[w] = static_cast<int>(order.size()), order.push_back(w);
  }
  // Seed the bound with local search so pruning starts tight.
  ValueResult warm = value(G, ValueStrategy::LocalSearch, budget, seed);
  int best = violated_count(warm.assignment);
  out.assignment = warm.assignment;
  std::vector<int> x(G.n, 0);
  std::function<void(int, int)> rec = [&](int i, int bad) {
    if (bad >= best) return;
    if (i == G.n) {
      best = bad;
      out.assignment = x;
      return;
    }
    if (++out.nodes > budget) fail(ErrorKind::BudgetExceeded, "branch and bound exceeds the node budget");
    int v = order[i];
    std::vector<std::pair<int, int>> opts;  // (added violations, symbol), cheapest first
    for (int a = 0; a < G.alphabet[v]; ++a) {
      int add = 0;
      for (auto [w, ei] : adj[v])
        if (pos[w] < i) add += !G.satisfied(G.edges[ei], v, a, x[w]);
      opts.emplace_back(add, a);
    }
    std::sort(opts.begin(), opts.end());
    for (auto [add, a] : opts) {
      x[v] = a;
      rec(i + 1, bad + add);
    }
  };
  rec(0, 0);
  out.val = 1.0 - static_cast<double>(best) / m;
  return out;
}

/// G': vertices (v, b) numbered 2v + b; edge uv gives {(u,0),(v,1)} and {(u,1),(v,0)} carrying π_uv.
inline ConstraintGraph double_cover(const ConstraintGraph& G) {
  ConstraintGraph D;
  D.n = 2 * G.n;
  for (int v = 0; v < G.n; ++v) D.alphabet.push_back(G.alphabet[v]), D.alphabet.push_back(G.alphabet[v]);
  for (const auto& e : G.edges) {
    for (int b = 0; b < 2; ++b) {
      ConstraintGraph::Edge f;
      int p = 2 * e.u + b, q = 2 * e.v + (1 - b);
      f.u = std::min(p, q);
      f.v = std::max(p, q);
      if (f.u == p) {
        f.rel = e.rel;
      } else {
        f.rel.assign(e.rel.size(), 0);
        for (int x = 0; x < G.alphabet[e.u]; ++x)
          for (int y = 0; y < G.alphabet[e.v]; ++y) f.rel[y * G.alphabet[e.u] + x] = e.rel[x * G.alphabet[e.v] + y];
      }
      D.edges.push_back(std::move(f));
    }
  }
  std::sort(D.edges.begin(), D.edges.end(), [](const auto& a, const auto& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return D;
}

inline std::vector<std::pair<int, int>> edge_list(const ConstraintGraph& G) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : G.edges) out.emplace_back(e.u, e.v);
  return out;
}

/// Component labels of the underlying graph.
inline int component_count(const ConstraintGraph& G) {
  WeightedGraph g{G.n, {}};
  for (const auto& e : G.edges) g.edges.emplace_back(e.u, e.v, 1.0);
  std::vector<char> bip;
  g.components(&bip);
  return static_cast<int>(bip.size());
}

inline bool is_bipartite(const ConstraintGraph& G) {
  WeightedGraph g{G.n, {}};
  for (const auto& e : G.edges) g.edges.emplace_back(e.u, e.v, 1.0);
  std::vector<char> bip;
  g.components(&bip);
  return std::all_of(bip.begin(), bip.end(), [](char b) { return b != 0; });
}

/// Length of a shortest cycle, or max int for forests.
inline int girth(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) adj[a].push_back(b), adj[b].push_back(a);
  int best = std::numeric_limits<int>::max();
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), par(n, -1), q{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < q.size(); ++h) {
      int u = q[h];
      for (int w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          par[w] = u;
          q.push_back(w);
        } else if (par[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

struct BallFamily {
  int radius = 0;
  std::vector<std::vector<int>> balls;                    ///< s_v, sorted
  std::vector<std::vector<std::vector<int>>> admissible;  ///< Σ_v: assignments positional along s_v
};

/// s_v = {u : dist(u, v) ≤ ℓ} with Σ_v = assignments satisfying every constraint inside s_v.
inline BallFamily power_graph(const ConstraintGraph& G, int radius, std::uint64_t budget = 10'000'000) {
  BallFamily B;
  B.radius = radius;
  auto adj = G.adjacency();
  for (int v = 0; v < G.n; ++v) {
    std::vector<int> dist(G.n, -1), q{v};
    dist[v] = 0;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (auto [w, ei] : adj[q[h]])
        if (dist[w] < 0 && dist[q[h]] < radius) dist[w] = dist[q[h]] + 1, q.push_back(w);
    std::vector<int> ball = q;
    std::sort(ball.begin(), ball.end());
    // Backtrack in BFS order, checking constraints to already assigned ball vertices.
    std::vector<int> where(G.n, -1);
    for (std::size_t i = 0; i < ball.size(); ++i) where[ball[i]] = static_cast<int>(i);
    std::vector<int> x(ball.size(), -1);
    std::vector<std::vector<int>> sols;
    std::uint64_t nodes = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (++nodes > budget) fail(ErrorKind::BudgetExceeded, "ball assignment enumeration exceeds the budget");
      if (i == q.size()) {
        sols.push_back(x);
        return;
      }
      int u = q[i];
      for (int a = 0; a < G.alphabet[u]; ++a) {
        bool ok = true;
        for (auto [w, ei] : adj[u]) {
          if (where[w] < 0 || x[where[w]] < 0) continue;
          if (!G.satisfied(G.edges[ei], u, a, x[where[w]])) ok = false;
        }
        if (!ok) continue;
        x[where[u]] = a;
        rec(i + 1);
        x[where[u]] = -1;
      }
    };
    rec(0);
    std::sort(sols.begin(), sols.end());
    B.balls.push_back(std::move(ball));
    B.admissible.push_back(std::move(sols));
  }
  return B;
}

/// Uniformly random d-regular simple graph by the pairing model, rejected until girth ≥ min_girth and λ2 ≤ max_lambda2.
struct RegularInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  int girth = 0;
  double lambda2 = 0;
  std::uint64_t tries = 0;
  std::uint64_t seed = 0;
};

inline RegularInstance random_regular_graph(int n, int d, int min_girth, std::uint64_t seed, double max_lambda2 = 1.0, std::uint64_t max_tries = 10'000'000) {
  require(n * d % 2 == 0 && d < n, ErrorKind::BadParams, "no d-regular graph on n vertices");
  Rng rng(seed);
  RegularInstance inst;
  inst.n = n;
  inst.seed = seed;
  std::vector<int> points;
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) points.push_back(v);
  for (std::uint64_t t = 1; t <= max_tries; ++t) {
    rng.shuffle(points);
    std::vector<std::pair<int, int>> edges;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      int a = std::min(points[i], points[i + 1]), b = std::max(points[i], points[i + 1]);
      if (a == b) ok = false;
      edges.emplace_back(a, b);
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    int g = girth(n, edges);
    if (g < min_girth) continue;
    WeightedGraph wg{n, {}};
    for (auto [a, b] : edges) wg.edges.emplace_back(a, b, 1.0);
    SpectralReport sr = second_eigenvalue(wg);
    if (!sr.connected || sr.lambda2 > max_lambda2) continue;
    inst.edges = std::move(edges);
    inst.girth = g;
    inst.lambda2 = sr.lambda2;
    inst.tries = t;
    return inst;
  }
  fail(ErrorKind::BudgetExceeded, "no graph met the girth and spectral requirements");
}

struct BogdanovReport {
  int radius = 0;
  int girth = 0;
  double lambda2 = 0;
  bool unique_propagation = true;  ///< every ball has exactly |Σ| admissible assignments
  double agreement_expected = 0;   ///< coins resampled on every trial
  double ci_low = 0, ci_high = 0;
  double agreement_fixed = 0;  ///< one seeded ensemble, exact over edges
  std::uint64_t trials = 0;
  double val = 0;
  bool val_exact = true;
  double cover_val = 0;  ///< value of the double cover
  bool bipartite = false;
};

namespace detail {

/// Whether the chosen assignments on balls a and b agree on s_a ∩ s_b.
inline bool balls_agree(const BallFamily& B, int a, int ia, int b, int ib) {
  const auto& sa = B.balls[a];
  const auto& sb = B.balls[b];
  const auto& xa = B.admissible[a][ia];
  const auto& xb = B.admissible[b][ib];
  std::size_t i = 0, j = 0;
  while (i < sa.size() && j < sb.size()) {
    if (sa[i] < sb[j]) ++i;
    else if (sb[j] < sa[i]) ++j;
    else {
      if (xa[i] != xb[j]) return false;
      ++i, ++j;
    }
  }
  return true;
}

}  // namespace detail

/// The test draws a uniform constraint edge uv and compares f_{s_u} with f_{s_v}; each ball's assignment is uniform
/// among its admissible ones.
inline BogdanovReport bogdanov_experiment(const ConstraintGraph& G, int radius, std::uint64_t trials, Rng& rng) {
  require(!G.edges.empty(), ErrorKind::BadParams, "constraint graph without edges");
  BogdanovReport rep;
  rep.radius = radius;
  auto el = edge_list(G);
  rep.girth = girth(G.n, el);
  WeightedGraph wg{G.n, {}};
  for (auto [a, b] : el) wg.edges.emplace_back(a, b, 1.0);
  rep.lambda2 = second_eigenvalue(wg).lambda2;
  rep.bipartite = is_bipartite(G);
  BallFamily B = power_graph(G, radius);
  for (std::size_t v = 0; v < B.balls.size(); ++v)
    rep.unique_propagation = rep.unique_propagation && static_cast<int>(B.admissible[v].size()) == G.alphabet[v];

  Rng fixed_rng = rng.stream(0);
  std::vector<int> fixed(G.n);
  for (int v = 0; v < G.n; ++v) fixed[v] = fixed_rng.index(B.admissible[v].size());
  std::size_t agree_fixed = 0;
  for (auto [a, b] : el) agree_fixed += detail::balls_agree(B, a, fixed[a], b, fixed[b]);
  rep.agreement_fixed = static_cast<double>(agree_fixed) / static_cast<double>(el.size());

  Rng mc = rng.stream(1);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto [a, b] = el[mc.index(el.size())];
    int ia = mc.index(B.admissible[a].size()), ib = mc.index(B.admissible[b].size());
    hits += detail::balls_agree(B, a, ia, b, ib);
  }
  rep.trials = trials;
  rep.agreement_expected = trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0;
  Interval ci = wilson_interval(hits, trials);
  rep.ci_low = ci.low;
  rep.ci_high = ci.high;

  ValueResult vr = value(G, ValueStrategy::Exhaustive);
  rep.val = vr.val;
  rep.val_exact = vr.exact;
  rep.cover_val = value(double_cover(G), ValueStrategy::Exhaustive).val;
  return rep;
}

}  // namespace hdx
