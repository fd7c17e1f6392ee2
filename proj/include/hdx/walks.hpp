#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "complex.hpp"
#include "spectral.hpp"

namespace hdx {

/// A walk between two levels of a complex given by a joint distribution over (left, right) faces.
struct WalkGraph {
  std::string kind;  ///< containment | swap | up-down | skeleton
  int left_level = 0;
  int right_level = 0;
  bool same_side = false;  ///< left and right are one vertex set and the joint law is symmetric
  std::vector<Face> left, right;
  std::vector<std::tuple<int, int, double>> joint;

  std::vector<double> left_marginal() const {
    std::vector<double> m(left.size(), 0.0);
    for (auto [i, j, w] : joint) m[i] += w;
    return m;
  }
  std::vector<double> right_marginal() const {
    std::vector<double> m(right.size(), 0.0);
    for (auto [i, j, w] : joint) m[j] += w;
    return m;
  }

  /// Largest deviation from 1 among the row sums of both transition matrices.
  double row_sum_error() const {
    auto ml = left_marginal(), mr = right_marginal();
    std::vector<double> rl(left.size(), 0.0), rr(right.size(), 0.0);
    for (auto [i, j, w] : joint) {
      rl[i] += w / ml[i];
      rr[j] += w / mr[j];
    }
    double e = 0;
    for (double x : rl) e = std::max(e, std::abs(x - 1));
    for (double x : rr) e = std::max(e, std::abs(x - 1));
    return e;
  }

  /// For same-side walks: largest |P(i,j) - P(j,i)|.
  double symmetry_error() const {
    if (!same_side) return 0.0;
    std::map<std::pair<int, int>, double> m;
    for (auto [i, j, w] : joint) m[{i, j}] += w;
    double e = 0;
    for (auto& [key, w] : m) {
      auto it = m.find({key.second, key.first});
      e = std::max(e, std::abs(w - (it == m.end() ? 0.0 : it->second)));
    }
    return e;
  }
};

/// G_{k,l}: t ~ Pr_k, then a uniform (l+1)-subset s of t.
inline WalkGraph containment_graph(const SimplicialComplex& X, int k, int l) {
  require(0 <= l && l <= k && k <= X.dim(), ErrorKind::BadParams, "containment graph needs l <= k <= d");
  WalkGraph g;
  g.kind = "containment";
  g.left_level = k;
  g.right_level = l;
  g.left = X.faces(k);
  g.right = X.faces(l);
  double share = 1.0 / binomial(k + 1, l + 1);
  auto masks = combination_masks(k + 1, l + 1);
  for (std::size_t i = 0; i < g.left.size(); ++i) {
    const Face& t = g.left[i];
    for (auto m : masks) g.joint.emplace_back(static_cast<int>(i), X.ordinal(t.select(m)), X.weight(k, static_cast<int>(i)) * share);
  }
  return g;
}

/// S_{k,l}: u ~ Pr_{k+l+1}, split uniformly into t of size k+1 and s = u \ t.
inline WalkGraph swap_graph(const SimplicialComplex& X, int k, int l) {
  require(k >= 0 && l >= 0 && k + l <= X.dim() - 1, ErrorKind::BadParams, "swap graph needs k+l <= d-1");
  WalkGraph g;
  g.kind = "swap";
  g.left_level = k;
  g.right_level = l;
  g.same_side = (k == l);
  g.left = X.faces(k);
  g.right = X.faces(l);
  const int m = k + l + 1;
  double share = 1.0 / binomial(m + 1, k + 1);
  auto masks = combination_masks(m + 1, k + 1);
  const std::uint64_t full = (std::uint64_t{1} << (m + 1)) - 1;
  for (std::size_t j = 0; j < X.faces(m).size(); ++j) {
    const Face& u = X.faces(m)[j];
    double w = X.weight(m, static_cast<int>(j)) * share;
    for (auto mk : masks) {
      Face t = u.select(mk), s = u.select(full & ~mk);
      g.joint.emplace_back(X.ordinal(t), X.ordinal(s), w);
    }
  }
  return g;
}

/// Walk graph of a complex's 1-skeleton (vertices, weighted by Pr_1).
inline WalkGraph skeleton_walk(const SimplicialComplex& X) {
  require(X.dim() >= 1, ErrorKind::BadParams, "skeleton walk needs an edge");
  WalkGraph g;
  g.kind = "skeleton";
  g.same_side = true;
  g.left = X.faces(0);
  g.right = X.faces(0);
  const auto& E = X.faces(1);
  for (std::size_t j = 0; j < E.size(); ++j) {
    double w = X.weights(1)[j] / 2;
    g.joint.emplace_back(E[j][0], E[j][1], w);
    g.joint.emplace_back(E[j][1], E[j][0], w);
  }
  return g;
}

/// Spectral summary of a walk. Same-side walks are treated as weighted graphs; bipartite ones through
/// the two-step walk on their smaller side, reporting its square root as lambda2 and lambda_abs.
inline SpectralReport second_eigenvalue(const WalkGraph& g, double tol = 1e-9, int dense_limit = 2000) {
  if (g.same_side) {
    WeightedGraph wg;
    wg.n = static_cast<int>(g.left.size());
    std::map<std::pair<int, int>, double> acc;
    for (auto [i, j, w] : g.joint) acc[{std::min(i, j), std::max(i, j)}] += w;
    for (auto& [key, w] : acc) wg.edges.emplace_back(key.first, key.second, w);
    SpectralReport r = second_eigenvalue(wg, tol, dense_limit);
    r.method += ":same-side";
    return r;
  }
  // Two-step operator on side A: M = D_A^{-1/2} W D_B^{-1} W^T D_A^{-1/2}.
  const bool use_left = g.left.size() <= g.right.size();
  const int na = static_cast<int>(use_left ? g.left.size() : g.right.size());
  const int nb = static_cast<int>(use_left ? g.right.size() : g.left.size());
  auto ma = use_left ? g.left_marginal() : g.right_marginal();
  auto mb = use_left ? g.right_marginal() : g.left_marginal();
  std::vector<std::vector<std::pair<int, double>>> byb(nb);
  for (auto [i, j, w] : g.joint) {
    int a = use_left ? i : j, b = use_left ? j : i;
    byb[b].emplace_back(a, w / std::sqrt(ma[a]));
  }
  SpectralReport r;
  r.tolerance = tol;
  r.size = na + nb;
  r.bipartite = true;
  WeightedGraph conn;
  conn.n = na + nb;
  for (auto [i, j, w] : g.joint) conn.edges.emplace_back(use_left ? i : j, na + (use_left ? j : i), w);
  {
    std::vector<char> bip;
    conn.components(&bip);
    r.components = static_cast<int>(bip.size());
    r.connected = r.components <= 1;
  }
  double mu2 = 0;
  if (na >= 2) {
    if (na <= dense_limit) {
      r.method = "dense:two-step";
      Eigen::MatrixXd M = Eigen::MatrixXd::Zero(na, na);
      for (int b = 0; b < nb; ++b)
        for (auto [a1, x1] : byb[b])
          for (auto [a2, x2] : byb[b]) M(a1, a2) += x1 * x2 / mb[b];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
      mu2 = es.eigenvalues()[na - 2];
    } else {
      r.method = "power:two-step";
      auto op = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        Eigen::VectorXd y = Eigen::VectorXd::Zero(na);
        for (int b = 0; b < nb; ++b) {
          double acc = 0;
          for (auto [a, xa] : byb[b]) acc += xa * x[a];
          acc /= mb[b];
          for (auto [a, xa] : byb[b]) y[a] += xa * acc;
        }
        return y;
      };
      Eigen::VectorXd top(na);
      for (int a = 0; a < na; ++a) top[a] = std::sqrt(ma[a]);
      top.normalize();
      mu2 = r.connected ? detail::power_iteration(op, na, {top}, tol, 100000, 3) : 1.0;
    }
  } else {
    r.method = "trivial";
  }
  mu2 = std::clamp(mu2, 0.0, 1.0);
  r.two_step = mu2;
  r.lambda2 = std::sqrt(mu2);
  r.lambda_abs = r.lambda2;
  return r;
}

/// Non-lazy up-down walk: t ~ Pr_{d2}, then a uniform ordered pair s1, s2 in X(d1) with s1 ∪ s2 = t.
inline std::pair<Face, Face> sample_non_lazy_up_down(const SimplicialComplex& X, int d1, int d2, Rng& rng) {
  require(0 <= d1 && d1 <= d2 && d2 <= X.dim() && 2 * d1 >= d2 - 1, ErrorKind::BadParams, "need d1 <= d2 <= d and 2 d1 >= d2 - 1");
  Face t = X.sample_face(d2, rng);
  std::vector<VertexId> p(t.begin(), t.end());
  rng.shuffle(p);
  std::vector<VertexId> a(p.begin(), p.begin() + d1 + 1), b(p.end() - (d1 + 1), p.end());
  return {Face(a), Face(b)};
}

/// Same walk through its decomposition: r = s1 ∩ s2 ~ Pr_{2d1-d2}, then a swap step in the link of r.
inline std::pair<Face, Face> sample_non_lazy_up_down_decomposed(const SimplicialComplex& X, int d1, int d2, Rng& rng) {
  require(0 <= d1 && d1 <= d2 && d2 <= X.dim() && 2 * d1 >= d2 - 1, ErrorKind::BadParams, "need d1 <= d2 <= d and 2 d1 >= d2 - 1");
  Face r = X.sample_face(2 * d1 - d2, rng);
  std::vector<int> fs = X.facets_containing(r);
  std::vector<double> cum;
  double c = 0;
  for (int j : fs) cum.push_back(c += X.top_weights()[j]);
  const Face& F = X.facets()[fs[rng.from_cumulative(cum)]];
  Face rest = F.minus(r);
  const int side = d2 - d1;  // vertices of each swapped part
  Face u = SimplicialComplex::uniform_subface(rest, 2 * side - 1, rng);
  std::vector<VertexId> p(u.begin(), u.end());
  rng.shuffle(p);
  Face p1(std::vector<VertexId>(p.begin(), p.begin() + side)), p2(std::vector<VertexId>(p.begin() + side, p.end()));
  return {r.unite(p1), r.unite(p2)};
}

/// Weighted 1-skeleton of the link of s, built straight from the facets containing s.
inline WeightedGraph link_graph(const SimplicialComplex& X, const Face& s) {
  std::vector<int> fs = X.facets_containing(s);
  std::vector<VertexId> verts;
  for (int j : fs)
    for (VertexId v : X.facets()[j])
      if (!s.contains(v)) verts.push_back(v);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::unordered_map<VertexId, int> re;
  for (std::size_t i = 0; i < verts.size(); ++i) re[verts[i]] = static_cast<int>(i);
  std::map<std::pair<int, int>, double> acc;
  for (int j : fs) {
    Face rest = X.facets()[j].minus(s);
    double w = X.top_weights()[j];
    for (std::size_t a = 0; a < rest.size(); ++a)
      for (std::size_t b = a + 1; b < rest.size(); ++b) acc[{re[rest[a]], re[rest[b]]}] += w;
  }
  WeightedGraph g;
  g.n = static_cast<int>(verts.size());
  for (auto& [key, w] : acc) g.edges.emplace_back(key.first, key.second, w);
  return g;
}

enum class SpectralMode { OneSided, TwoSided };

struct HdxParameter {
  double lambda = -1;
  Face worst_link;
  std::vector<double> level_max;  ///< entry i+1 is the maximum over links of faces in X(i), i = -1..d-2
  bool all_links_connected = true;
};

/// Maximum over s in X^{<= d-2} of λ(X_s) (one-sided) or |λ|(X_s) (two-sided).
inline HdxParameter hdx_parameter(const SimplicialComplex& X, SpectralMode mode) {
  require(X.dim() >= 1, ErrorKind::BadParams, "hdx parameter needs d >= 1");
  HdxParameter h;
  for (int i = -1; i <= X.dim() - 2; ++i) {
    double lm = -1;
    for (const Face& s : X.faces(i)) {
      SpectralReport r = second_eigenvalue(link_graph(X, s));
      h.all_links_connected = h.all_links_connected && r.connected;
      double v = mode == SpectralMode::OneSided ? r.lambda2 : r.lambda_abs;
      lm = std::max(lm, v);
      if (v > h.lambda) {
        h.lambda = v;
        h.worst_link = s;
      }
    }
    h.level_max.push_back(lm);
  }
  return h;
}

struct ConcentrationResult {
  double tail = 0;
  Interval ci;
  std::uint64_t trials = 0;
  std::uint64_t exceed = 0;
  double mean = 0;  ///< E f under Pr_k
};

namespace detail {
template <class Fn>
double average_over_subfaces(const Face& t, int k, Fn& f) {
  double acc = 0;
  int cnt = 0;
  for_each_combination(static_cast<int>(t.size()), k + 1, [&](const std::vector<int>& c) {
    std::vector<VertexId> vs;
    for (int p : c) vs.push_back(t[p]);
    acc += f(Face::sorted_unchecked(std::move(vs)));
    ++cnt;
  });
  return acc / cnt;
}
}  // namespace detail

/// Empirical Pr_{t ~ Pr_{d1}}[|E_{r ⊂ t} f(r) - E f| > zeta] on a materialized complex.
template <class Fn>
ConcentrationResult concentration_check(const SimplicialComplex& X, int k, int d1, Fn f, double zeta, std::uint64_t trials, Rng& rng) {
  require(0 <= k && k <= d1 && d1 <= X.dim(), ErrorKind::BadParams, "need k <= d1 <= d");
  ConcentrationResult res;
  for (std::size_t j = 0; j < X.faces(k).size(); ++j) res.mean += X.weights(k)[j] * f(X.faces(k)[j]);
  for (std::uint64_t i = 0; i < trials; ++i) {
    Face t = X.sample_face(d1, rng);
    if (std::abs(detail::average_over_subfaces(t, k, f) - res.mean) > zeta) ++res.exceed;
  }
  res.trials = trials;
  res.tail = trials ? static_cast<double>(res.exceed) / trials : 0.0;
  res.ci = wilson_interval(res.exceed, trials);
  return res;
}

/// Same check on the complete complex Δ_d(n) for any d >= d1, sampled without materializing it.
template <class Fn>
ConcentrationResult concentration_check_complete(int n, int k, int d1, Fn f, double zeta, std::uint64_t trials, Rng& rng) {
  require(0 <= k && k <= d1 && d1 < n, ErrorKind::BadParams, "need k <= d1 < n");
  ConcentrationResult res;
  double cnt = 0;
  for_each_combination(n, k + 1, [&](const std::vector<int>& c) {
    res.mean += f(Face::sorted_unchecked(c));
    cnt += 1;
  });
  res.mean /= cnt;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Face t = Face::sorted_unchecked(rng.subset(n, d1 + 1));
    if (std::abs(detail::average_over_subfaces(t, k, f) - res.mean) > zeta) ++res.exceed;
  }
  res.trials = trials;
  res.tail = trials ? static_cast<double>(res.exceed) / trials : 0.0;
  res.ci = wilson_interval(res.exceed, trials);
  return res;
}

/// Exact tail by enumerating X(d1).
template <class Fn>
double concentration_exact(const SimplicialComplex& X, int k, int d1, Fn f, double zeta) {
  double mean = 0;
  for (std::size_t j = 0; j < X.faces(k).size(); ++j) mean += X.weights(k)[j] * f(X.faces(k)[j]);
  double tail = 0;
  for (std::size_t j = 0; j < X.faces(d1).size(); ++j)
    if (std::abs(detail::average_over_subfaces(X.faces(d1)[j], k, f) - mean) > zeta) tail += X.weights(d1)[j];
  return tail;
}

}  // namespace hdx
