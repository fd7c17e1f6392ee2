#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

#include "complex.hpp"
#include "error.hpp"

namespace hdx {

/// Undirected weighted graph; self-loops allowed and counted once.
struct WeightedGraph {
  int n = 0;
  std::vector<std::tuple<int, int, double>> edges;

  std::vector<double> degrees() const {
    std::vector<double> d(n, 0.0);
    for (auto [u, v, w] : edges) {
      d[u] += w;
      if (u != v) d[v] += w;
    }
    return d;
  }

  /// Component label per vertex and whether each component is bipartite.
  std::vector<int> components(std::vector<char>* bipartite = nullptr, std::vector<int>* side = nullptr) const {
    std::vector<std::vector<int>> adj(n);
    std::vector<char> loop(n, 0);
    for (auto [u, v, w] : edges) {
      if (w <= 0) continue;
      if (u == v) {
        loop[u] = 1;
        continue;
      }
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<int> comp(n, -1), col(n, 0);
    std::vector<char> bip;
    int c = 0;
    for (int s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      bool ok = true;
      std::vector<int> stack{s};
      comp[s] = c;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (loop[u]) ok = false;
        for (int w : adj[u]) {
          if (comp[w] < 0) {
            comp[w] = c;
            col[w] = 1 - col[u];
            stack.push_back(w);
          } else if (col[w] == col[u]) {
            ok = false;
          }
        }
      }
      bip.push_back(ok ? 1 : 0);
      ++c;
    }
    if (bipartite) *bipartite = bip;
    if (side) *side = col;
    return comp;
  }
};

/// 1-skeleton of X weighted by the edge measure Pr_1.
inline WeightedGraph skeleton_graph(const SimplicialComplex& X) {
  WeightedGraph g;
  g.n = X.n_vertices();
  if (X.dim() >= 1) {
    const auto& E = X.faces(1);
    for (std::size_t j = 0; j < E.size(); ++j) g.edges.emplace_back(E[j][0], E[j][1], X.weights(1)[j]);
  }
  return g;
}

struct SpectralReport {
  double lambda2 = 0;     ///< second largest signed eigenvalue of the normalized walk
  double lambda_abs = 0;  ///< largest absolute eigenvalue after removing the top and one -1 per bipartite component
  double two_step = std::numeric_limits<double>::quiet_NaN();  ///< second eigenvalue of the two-step walk (bipartite walk graphs)
  std::string method;
  double tolerance = 1e-9;
  bool connected = true;
  bool bipartite = false;
  int components = 1;
  int size = 0;
};

namespace detail {

inline Eigen::MatrixXd normalized_dense(const WeightedGraph& g, const std::vector<double>& deg) {
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(g.n, g.n);
  for (auto [u, v, w] : g.edges) {
    if (deg[u] <= 0 || deg[v] <= 0) continue;
    double x = w / std::sqrt(deg[u] * deg[v]);
    if (u == v) {
      S(u, u) += x;
    } else {
      S(u, v) += x;
      S(v, u) += x;
    }
  }
  return S;
}

/// Sparse symmetric operator x -> S x for the normalized adjacency.
struct NormalizedOp {
  int n;
  std::vector<std::tuple<int, int, double>> entries;
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
    for (auto [u, v, s] : entries) {
      y[u] += s * x[v];
      if (u != v) y[v] += s * x[u];
    }
    return y;
  }
};

inline NormalizedOp normalized_sparse(const WeightedGraph& g, const std::vector<double>& deg) {
  NormalizedOp op{g.n, {}};
  for (auto [u, v, w] : g.edges)
    if (deg[u] > 0 && deg[v] > 0) op.entries.emplace_back(u, v, w / std::sqrt(deg[u] * deg[v]));
  return op;
}

/// Largest eigenvalue of a PSD operator restricted to the complement of `deflate` (orthonormal).
template <class Op>
double power_iteration(const Op& op, int n, const std::vector<Eigen::VectorXd>& deflate, double tol, int max_iter, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.uniform() - 0.5;
  auto project = [&](Eigen::VectorXd& y) {
    for (const auto& q : deflate) y -= q.dot(y) * q;
  };
  project(x);
  if (x.norm() == 0) return 0.0;
  x.normalize();
  double rho = 0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd y = op(x);
    project(y);
    double next = x.dot(y);
    double ny = y.norm();
    if (ny == 0) return 0.0;
    double resid = (y - next * x).norm();
    if (it > 0 && std::abs(next - rho) <= tol * 1e-2 && resid <= std::sqrt(tol)) return next;
    rho = next;
    x = y / ny;
  }
  fail(ErrorKind::ConvergenceFailure, "power iteration did not converge");
}

/// Fills lambda2/lambda_abs from a sorted (descending) spectrum.
inline void summarize_spectrum(std::vector<double> ev, int bipartite_components, SpectralReport& r) {
  std::sort(ev.begin(), ev.end(), std::greater<double>());
  if (ev.size() < 2) {
    r.lambda2 = 0;
    r.lambda_abs = 0;
    return;
  }
  r.lambda2 = ev[1];
  std::vector<double> rest(ev.begin() + 1, ev.end());
  for (int b = 0; b < bipartite_components && !rest.empty(); ++b) {
    if (std::abs(rest.back() + 1.0) <= 1e-8) rest.pop_back();
  }
  double a = 0;
  for (double x : rest) a = std::max(a, std::abs(x));
  r.lambda_abs = std::min(1.0, a);
  r.lambda2 = std::clamp(r.lambda2, -1.0, 1.0);
}

}  // namespace detail

/// Normalized second eigenvalues of a weighted graph.
inline SpectralReport second_eigenvalue(const WeightedGraph& g, double tol = 1e-9, int dense_limit = 2000) {
  SpectralReport r;
  r.tolerance = tol;
  r.size = g.n;
  std::vector<char> bip;
  std::vector<int> side;
  std::vector<int> comp = g.components(&bip, &side);
  r.components = bip.empty() ? 0 : static_cast<int>(bip.size());
  r.connected = r.components <= 1;
  int nbip = 0;
  for (char b : bip) nbip += b;
  r.bipartite = r.connected && nbip == 1 && g.n > 1;
  std::vector<double> deg = g.degrees();
  if (g.n <= dense_limit) {
    r.method = "dense";
    Eigen::MatrixXd S = detail::normalized_dense(g, deg);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + g.n);
    // Isolated vertices contribute spurious zeros; they also make the graph disconnected.
    int nb = 0;
    for (std::size_t c = 0; c < bip.size(); ++c) {
      bool isolated = true;
      for (int v = 0; v < g.n; ++v)
        if (comp[v] == static_cast<int>(c) && deg[v] > 0) isolated = false;
      if (bip[c] && !isolated) ++nb;
    }
    detail::summarize_spectrum(ev, nb, r);
    if (!r.connected) r.lambda2 = 1.0, r.lambda_abs = 1.0;
    return r;
  }
  r.method = "power";
  if (!r.connected) {
    r.lambda2 = 1.0;
    r.lambda_abs = 1.0;
    return r;
  }
  auto op = detail::normalized_sparse(g, deg);
  Eigen::VectorXd top(g.n);
  double dsum = 0;
  for (int i = 0; i < g.n; ++i) dsum += deg[i];
  for (int i = 0; i < g.n; ++i) top[i] = std::sqrt(deg[i] / dsum);
  std::vector<Eigen::VectorXd> defl{top};
  auto shifted = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd { return 0.5 * (op.apply(x) + x); };
  r.lambda2 = 2 * detail::power_iteration(shifted, g.n, defl, tol, 100000, 1) - 1;
  if (r.bipartite) {
    Eigen::VectorXd b = top;
    for (int i = 0; i < g.n; ++i)
      if (side[i]) b[i] = -b[i];
    defl.push_back(b);
  }
  auto squared = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd { return op.apply(op.apply(x)); };
  r.lambda_abs = std::sqrt(std::max(0.0, detail::power_iteration(squared, g.n, defl, tol, 100000, 2)));
  r.lambda_abs = std::max(r.lambda_abs, std::abs(r.lambda2));
  return r;
}

}  // namespace hdx
