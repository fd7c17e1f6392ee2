#pragma once

// Shared fixtures and brute-force oracles for the unit and acceptance suites.

#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "hdx/hdx.hpp"

namespace hdx::testing {

/// Random pure d-dimensional complex: m distinct random facets on [n], relabeled densely.
inline SimplicialComplex random_pure_complex(int n, int d, int m, Rng& rng, bool weighted = false) {
  std::set<std::vector<int>> chosen;
  while (static_cast<int>(chosen.size()) < m) {
    auto s = rng.subset(n, d + 1);
    std::sort(s.begin(), s.end());
    chosen.insert(s);
  }
  std::map<int, int> re;
  for (const auto& s : chosen)
    for (int v : s) re.emplace(v, 0);
  int next = 0;
  for (auto& [v, id] : re) id = next++;
  std::vector<Face> facets;
  std::vector<double> w;
  double tot = 0;
  for (const auto& s : chosen) {
    std::vector<VertexId> vs;
    for (int v : s) vs.push_back(re[v]);
    facets.emplace_back(std::move(vs));
    w.push_back(0.1 + rng.uniform());
    tot += w.back();
  }
  for (double& x : w) x /= tot;
  return weighted ? SimplicialComplex::from_facets(facets, w) : SimplicialComplex::from_facets(facets);
}

/// Pr_k(t) = (1/C(d+1,k+1)) Σ_{s ∈ X(d), s ⊇ t} Pr_d(s) by direct summation.
inline double direct_level_weight(const SimplicialComplex& X, const Face& t) {
  double acc = 0;
  for (std::size_t j = 0; j < X.facets().size(); ++j)
    if (X.facets()[j].intersect(t).size() == t.size()) acc += X.top_weights()[j];
  return acc / binomial(X.dim() + 1, static_cast<int>(t.size()));
}

/// Upper χ² quantile by the Wilson-Hilferty approximation; z is the normal quantile.
inline double chi2_quantile(int df, double z) {
  double a = 2.0 / (9.0 * df);
  return df * std::pow(1 - a + z * std::sqrt(a), 3);
}

inline ComplexPtr heawood() {
  std::vector<std::pair<int, int>> e;
  // Points 0..6 and lines 7..13: line i is {i, i+1, i+3} mod 7.
  for (int i = 0; i < 7; ++i)
    for (int off : {0, 1, 3}) e.emplace_back((i + off) % 7, 7 + i);
  return share(graph_complex(e));
}

/// σ on every edge of a circulant_complex(m, r), m > 2r, that crosses the seam between m-1 and 0, identity elsewhere.
/// Every triangle has zero or two seam edges, so this is a cocycle; an ℓ-cycle σ gives a connected cover.
inline Cochain1 seam_cocycle(const ComplexPtr& X, int r, const Permutation& sigma) {
  Cochain1 psi(X, sigma.size());
  const auto& E = X->faces(1);
  for (std::size_t e = 0; e < E.size(); ++e)
    if (E[e][1] - E[e][0] > r) psi.set_at(static_cast<int>(e), sigma);
  return psi;
}

/// A random cocycle on a host with at most 20 vertices and ℓ ∈ {1, 2, 3}: any cochain on a graph, a
/// coboundary on a 2-dimensional complex, or a gauged seam cocycle on a circulant complex.
inline Cochain1 random_cocycle_instance(Rng& rng) {
  const int ell = 1 + rng.index(3);
  switch (rng.index(3)) {
    case 0: {
      int n = 4 + rng.index(17);
      int m = std::min(n * (n - 1) / 2, n + rng.index(2 * n));
      auto X = share(random_pure_complex(n, 1, m, rng, rng.bernoulli(0.5)));
      return random_cochain(X, ell, rng);
    }
    case 1: {
      int n = 5 + rng.index(16);
      int m = 3 + rng.index(3 * n);
      auto X = share(random_pure_complex(n, 2, std::min(m, n * (n - 1) * (n - 2) / 6), rng, rng.bernoulli(0.5)));
      return coboundary(X, random_gauge(X->n_vertices(), ell, rng));
    }
    default: {
      static const std::vector<std::pair<int, int>> shapes{{8, 2}, {12, 2}, {14, 3}, {16, 3}, {20, 4}, {20, 2}};
      auto [m, r] = shapes[rng.index(shapes.size())];
      auto X = share(circulant_complex(m, r));
      std::vector<int> cyc(ell);
      for (int i = 0; i < ell; ++i) cyc[i] = (i + 1) % ell;
      Cochain1 psi = seam_cocycle(X, r, Permutation(cyc));
      return gauge(psi, random_gauge(m, ell, rng));
    }
  }
}

/// Edge set of a complex's 1-skeleton as sorted pairs.
inline std::set<std::pair<int, int>> edge_set(const SimplicialComplex& X) {
  std::set<std::pair<int, int>> s;
  for (const Face& f : X.faces(1)) s.emplace(f[0], f[1]);
  return s;
}

}  // namespace hdx::testing
