#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "complex.hpp"

namespace hdx {

/// F^{d1}X: vertices are the d1-faces of X (vertex id = ordinal in X(d1)); a set of them is a face
/// iff they are pairwise disjoint and their union is a face of X.
struct FacesComplex {
  ComplexPtr complex;
  ComplexPtr base;
  int d1 = 0;

  const Face& block(VertexId v) const { return base->face(d1, v); }

  /// Union of the blocks of an F^{d1}X face.
  Face unite(const Face& f) const {
    Face u;
    for (VertexId v : f) u = u.unite(block(v));
    return u;
  }
};

inline int faces_complex_dim(int d, int d1) { return (d + 1) / (d1 + 1) - 1; }

inline FacesComplex faces_complex(const ComplexPtr& X, int d1, std::size_t face_budget = 1'000'000) {
  require(d1 >= 0 && d1 <= X->dim(), ErrorKind::BadParams, "faces complex needs 0 <= d1 <= d");
  const int J = faces_complex_dim(X->dim(), d1);
  const int m = (J + 1) * (d1 + 1) - 1;
  const int b = d1 + 1;
  // Number of unordered partitions of m+1 elements into J+1 blocks of size b.
  double parts = 1;
  for (int i = 0; i <= J; ++i) parts *= binomial((J + 1 - i) * b, b);
  for (int i = 2; i <= J + 1; ++i) parts /= i;
  double estimate = static_cast<double>(X->count(m)) * parts * std::pow(2.0, J + 1);
  require(estimate <= static_cast<double>(face_budget) * 4, ErrorKind::BudgetExceeded, "faces complex exceeds the face budget");
  std::vector<Face> facets;
  std::vector<double> weights;
  const auto& U = X->faces(m);
  for (std::size_t j = 0; j < U.size(); ++j) {
    const Face& u = U[j];
    double w = X->weight(m, static_cast<int>(j)) / parts;
    std::uint64_t mask = (m + 1 >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (m + 1)) - 1);
    for_each_block_partition(mask, b, [&](const std::vector<std::uint64_t>& blocks) {
      std::vector<VertexId> vs;
      for (auto blk : blocks) vs.push_back(X->ordinal(u.select(blk)));
      facets.emplace_back(std::move(vs));
      weights.push_back(w);
    });
  }
  FacesComplex F;
  F.base = X;
  F.d1 = d1;
  F.complex = share(SimplicialComplex::from_facets(std::move(facets), std::move(weights), face_budget));
  return F;
}

/// GX: vertices are the nonempty faces of X ordered by (dimension, ordinal); faces are chains.
struct FlagComplex {
  ComplexPtr complex;
  ComplexPtr base;
  std::vector<int> offset;  ///< vertex id of the first face of each level 0..d

  VertexId vertex_of(const Face& s) const { return offset[s.dim()] + base->ordinal(s); }
  Face face_of(VertexId v) const {
    int i = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), v) - offset.begin()) - 1;
    return base->face(i, v - offset[i]);
  }
};

inline FlagComplex flag_complex(const ComplexPtr& X, std::size_t face_budget = 1'000'000) {
  FlagComplex G;
  G.base = X;
  int acc = 0;
  for (int i = 0; i <= X->dim(); ++i) {
    G.offset.push_back(acc);
    acc += static_cast<int>(X->count(i));
  }
  std::vector<Face> facets;
  std::vector<double> weights;
  const int d = X->dim();
  double orders = 1;
  for (int i = 2; i <= d + 1; ++i) orders *= i;
  for (std::size_t j = 0; j < X->facets().size(); ++j) {
    const Face& F = X->facets()[j];
    std::vector<int> perm(F.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<VertexId> chain;
      std::vector<VertexId> prefix;
      for (int p : perm) {
        prefix.push_back(F[p]);
        Face s(prefix);
        chain.push_back(G.offset[s.dim()] + X->ordinal(s));
      }
      facets.emplace_back(std::move(chain));
      weights.push_back(X->top_weights()[j] / orders);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  G.complex = share(SimplicialComplex::from_facets(std::move(facets), std::move(weights), face_budget));
  return G;
}

/// F^{d1}(X_r) both as a standalone faces complex of the link and as a vertex subset of F^{d1}X.
struct LinkFacesComplex {
  FacesComplex standalone;
  std::vector<VertexId> link_to_base;  ///< link vertex -> X vertex
  std::vector<VertexId> to_fx;         ///< standalone vertex -> F^{d1}X vertex
};

inline LinkFacesComplex faces_subcomplex_of_link(const ComplexPtr& X, int d1, const Face& r) {
  require(X->contains(r), ErrorKind::NotAFace, r.str() + " is not a face");
  require(static_cast<int>(r.size()) <= d1 + 1, ErrorKind::BadParams, "anchor larger than a d1-face");
  LinkFacesComplex out;
  auto L = share(link_complex(*X, r, &out.link_to_base));
  require(L->dim() >= d1, ErrorKind::BadParams, "link of " + r.str() + " has no d1-faces");
  out.standalone = faces_complex(L, d1);
  for (const Face& s : L->faces(d1)) {
    std::vector<VertexId> vs;
    for (VertexId v : s) vs.push_back(out.link_to_base[v]);
    out.to_fx.push_back(X->ordinal(Face(vs)));
  }
  return out;
}

/// The vertex set of F^{d1}(X_r) inside F^{d1}X, without building the link complex.
inline std::vector<VertexId> link_faces_vertices(const SimplicialComplex& X, int d1, const Face& r) {
  std::vector<VertexId> out;
  const auto& S = X.faces(d1);
  for (std::size_t j = 0; j < S.size(); ++j)
    if (S[j].disjoint(r) && X.contains(S[j].unite(r))) out.push_back(static_cast<VertexId>(j));
  return out;
}

inline std::string write_faces_backmap(const FacesComplex& F) {
  std::ostringstream os;
  os << "faces_of_level " << F.d1 << '\n';
  for (VertexId v = 0; v < F.complex->n_vertices(); ++v) {
    os << v << " ->";
    for (VertexId x : F.block(v)) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

inline std::string write_flag_backmap(const FlagComplex& G) {
  std::ostringstream os;
  os << "flags\n";
  for (VertexId v = 0; v < G.complex->n_vertices(); ++v) {
    os << v << " ->";
    for (VertexId x : G.face_of(v)) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

}  // namespace hdx
