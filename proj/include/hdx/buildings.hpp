#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "complex.hpp"
#include "walks.hpp"

namespace hdx {

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

/// [d choose k]_q.
inline std::uint64_t gaussian_binomial(int d, int k, int q) {
  if (k < 0 || k > d) return 0;
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= static_cast<std::uint64_t>(std::pow(q, d - i)) - 1;
    den *= static_cast<std::uint64_t>(std::pow(q, i + 1)) - 1;
  }
  return num / den;
}

/// A subspace of F_q^d in reduced row echelon form.
struct Subspace {
  int q = 2;
  int d = 0;
  std::vector<std::vector<int>> rows;

  int dim() const { return static_cast<int>(rows.size()); }
  friend bool operator==(const Subspace&, const Subspace&) = default;

  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) s += ',';
      for (int x : rows[i]) s += std::to_string(x);
    }
    return s + ">";
  }
};

namespace detail {

inline int inverse_mod(int a, int q) {
  for (int x = 1; x < q; ++x)
    if (a * x % q == 1) return x;
  return 0;
}

/// Rank of a matrix over F_q by Gaussian elimination.
inline int rank_mod(std::vector<std::vector<int>> m, int q) {
  int r = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(m.size()) && m[p][c] == 0) ++p;
    if (p == static_cast<int>(m.size())) continue;
    std::swap(m[p], m[r]);
    int inv = inverse_mod(m[r][c], q);
    for (int& x : m[r]) x = x * inv % q;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r || m[i][c] == 0) continue;
      int f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % q + q) % q;
    }
    ++r;
  }
  return r;
}

}  // namespace detail

/// V ⊆ W.
inline bool contained_in(const Subspace& V, const Subspace& W) {
  auto m = W.rows;
  m.insert(m.end(), V.rows.begin(), V.rows.end());
  return detail::rank_mod(m, W.q) == W.dim();
}

/// All dim-dimensional subspaces of F_q^d, by pivot pattern then free entries (row-major, little-endian).
inline std::vector<Subspace> enumerate_subspaces(int d, int q, int dim) {
  require(is_prime(q), ErrorKind::UnsupportedField, "only prime fields are supported");
  require(1 <= dim && dim <= d - 1, ErrorKind::BadParams, "need 1 <= dim <= d-1");
  std::vector<Subspace> out;
  for_each_combination(d, dim, [&](const std::vector<int>& piv) {
    std::vector<char> is_piv(d, 0);
    for (int p : piv) is_piv[p] = 1;
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < dim; ++i)
      for (int j = piv[i] + 1; j < d; ++j)
        if (!is_piv[j]) free.emplace_back(i, j);
    std::vector<int> digits(free.size(), 0);
    while (true) {
      Subspace s{q, d, std::vector<std::vector<int>>(dim, std::vector<int>(d, 0))};
      for (int i = 0; i < dim; ++i) s.rows[i][piv[i]] = 1;
      for (std::size_t f = 0; f < free.size(); ++f) s.rows[free[f].first][free[f].second] = digits[f];
      out.push_back(std::move(s));
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  });
  return out;
}

struct BuildingComplex {
  ComplexPtr complex;
  std::vector<Subspace> vertices;  ///< vertex id -> subspace, ordered by dimension
  int d = 0, q = 0;

  int vertex_dim(VertexId v) const { return vertices[v].dim(); }
};

/// Flag complex of the nontrivial subspaces of F_q^d; facets are complete flags.
inline BuildingComplex spherical_building(int d, int q, std::size_t face_budget = 2'000'000) {
  require(d >= 2, ErrorKind::BadParams, "building needs d >= 2");
  require(is_prime(q), ErrorKind::UnsupportedField, "only prime fields are supported");
  BuildingComplex B;
  B.d = d;
  B.q = q;
  std::vector<int> offset;
  for (int k = 1; k <= d - 1; ++k) {
    offset.push_back(static_cast<int>(B.vertices.size()));
    for (auto& s : enumerate_subspaces(d, q, k)) B.vertices.push_back(std::move(s));
  }
  offset.push_back(static_cast<int>(B.vertices.size()));
  // up[v]: subspaces of the next dimension containing v.
  std::vector<std::vector<int>> up(B.vertices.size());
  for (int k = 1; k + 1 <= d - 1; ++k)
    for (int a = offset[k - 1]; a < offset[k]; ++a)
      for (int b = offset[k]; b < offset[k + 1]; ++b)
        if (contained_in(B.vertices[a], B.vertices[b])) up[a].push_back(b);
  std::vector<Face> facets;
  std::vector<int> chain;
  std::function<void(int)> rec = [&](int v) {
    chain.push_back(v);
    if (static_cast<int>(chain.size()) == d - 1) {
      facets.push_back(Face::sorted_unchecked(chain));
      require(facets.size() <= face_budget, ErrorKind::BudgetExceeded, "building exceeds the face budget");
    } else {
      for (int w : up[v]) rec(w);
    }
    chain.pop_back();
  };
  for (int v = offset[0]; v < offset[1]; ++v) rec(v);
  B.complex = share(SimplicialComplex::from_facets(std::move(facets), std::nullopt, face_budget * 8));
  return B;
}

struct BuildingExpansion {
  int d = 0, q = 0;
  HdxParameter one_sided;
  HdxParameter two_sided;
  double skeleton_lambda_abs = 0;  ///< |λ| of the 1-skeleton
  double fitted_constant = 0;      ///< one-sided λ·√q
  double reference = 0;            ///< 1/√q
  std::vector<double> skeleton_two_sided;  ///< entry k-1: two-sided λ of X^{≤k} for k = 1..d-2
};

inline BuildingExpansion building_expansion_report(int d, int q) {
  BuildingComplex B = spherical_building(d, q);
  require(B.complex->dim() >= 1, ErrorKind::BadParams, "building of dimension 0 has no links to measure");
  BuildingExpansion r;
  r.d = d;
  r.q = q;
  r.one_sided = hdx_parameter(*B.complex, SpectralMode::OneSided);
  r.two_sided = hdx_parameter(*B.complex, SpectralMode::TwoSided);
  r.skeleton_lambda_abs = second_eigenvalue(skeleton_graph(*B.complex)).lambda_abs;
  r.reference = 1.0 / std::sqrt(static_cast<double>(q));
  r.fitted_constant = r.one_sided.lambda * std::sqrt(static_cast<double>(q));
  for (int k = 1; k <= B.complex->dim() - 1; ++k)
    r.skeleton_two_sided.push_back(hdx_parameter(skeleton(*B.complex, k), SpectralMode::TwoSided).lambda);
  return r;
}

}  // namespace hdx
