#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cochain.hpp"
#include "complex.hpp"
#include "faces_flags.hpp"

namespace hdx {

/// A validated covering map ρ: Y → X. Fibers are sorted by total-complex vertex id.
struct CoverMap {
  ComplexPtr total;
  ComplexPtr base;
  std::vector<VertexId> rho;
  std::vector<std::vector<VertexId>> fibers;
  std::vector<int> fiber_index;
  /// For each total vertex y: (x, y') pairs sorted by x, listing the unique neighbor of y over x.
  std::vector<std::vector<std::pair<VertexId, VertexId>>> lift;

  int degree_at(VertexId x) const { return static_cast<int>(fibers[x].size()); }

  /// Neighbor of y lying over x, or -1.
  VertexId neighbor_over(VertexId y, VertexId x) const {
    const auto& L = lift[y];
    auto it = std::lower_bound(L.begin(), L.end(), std::make_pair(x, VertexId{-1}));
    return (it != L.end() && it->first == x) ? it->second : -1;
  }

  /// The fiber vertex (x, i).
  VertexId vertex(VertexId x, int i) const { return fibers[x][i]; }

  Face image(const Face& f) const {
    std::vector<VertexId> vs;
    for (VertexId y : f) vs.push_back(rho[y]);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return Face::sorted_unchecked(std::move(vs));
  }
};

/// Checks the covering axioms and returns the cover; the error names the failed axiom and vertex.
inline CoverMap validate_cover(const ComplexPtr& Y, const ComplexPtr& X, std::vector<VertexId> rho) {
  require(static_cast<int>(rho.size()) == Y->n_vertices(), ErrorKind::NotHomomorphism, "vertex map is not total on Y(0)");
  for (VertexId x : rho) require(x >= 0 && x < X->n_vertices(), ErrorKind::NotHomomorphism, "vertex map leaves X(0)");
  CoverMap cm;
  cm.total = Y;
  cm.base = X;
  cm.rho = std::move(rho);
  for (const Face& f : Y->facets()) {
    Face im = cm.image(f);
    if (!X->contains(im)) fail(ErrorKind::NotHomomorphism, "facet " + f.str() + " maps to non-face " + im.str());
  }
  cm.fibers.assign(X->n_vertices(), {});
  for (VertexId y = 0; y < Y->n_vertices(); ++y) cm.fibers[cm.rho[y]].push_back(y);
  for (VertexId x = 0; x < X->n_vertices(); ++x)
    if (cm.fibers[x].empty()) fail(ErrorKind::NotSurjective, "vertex " + std::to_string(x) + " has empty fiber");
  cm.fiber_index.assign(Y->n_vertices(), 0);
  for (auto& fib : cm.fibers)
    for (std::size_t i = 0; i < fib.size(); ++i) cm.fiber_index[fib[i]] = static_cast<int>(i);

  auto yadj = Y->adjacency();
  auto xadj = X->adjacency();
  cm.lift.assign(Y->n_vertices(), {});
  for (VertexId y = 0; y < Y->n_vertices(); ++y) {
    VertexId x = cm.rho[y];
    std::vector<std::pair<VertexId, VertexId>> L;
    for (VertexId w : yadj[y]) L.emplace_back(cm.rho[w], w);
    std::sort(L.begin(), L.end());
    std::vector<VertexId> imgs;
    for (auto& p : L) imgs.push_back(p.first);
    if (std::adjacent_find(imgs.begin(), imgs.end()) != imgs.end() || imgs != xadj[x] ||
        std::binary_search(imgs.begin(), imgs.end(), x))
      fail(ErrorKind::LinkNotIsomorphic, "neighbors of total vertex " + std::to_string(y) + " do not map bijectively onto the link of " + std::to_string(x));
    cm.lift[y] = std::move(L);
    // Facets of the two links must correspond under ρ.
    std::set<Face> up, down;
    for (int j : Y->facets_of_vertex(y)) up.insert(cm.image(Y->facets()[j].without(y)));
    for (int j : X->facets_of_vertex(x)) down.insert(X->facets()[j].without(x));
    if (up != down || up.size() != Y->facets_of_vertex(y).size())
      fail(ErrorKind::LinkNotIsomorphic, "link of total vertex " + std::to_string(y) + " is not isomorphic to the link of " + std::to_string(x));
  }
  return cm;
}

/// Common fiber size; Irregular when fibers differ (possible only over a disconnected base).
inline int cover_degree(const CoverMap& cm) {
  int l = cm.degree_at(0);
  for (VertexId x = 0; x < cm.base->n_vertices(); ++x)
    if (cm.degree_at(x) != l) fail(ErrorKind::Irregular, "fibers of different sizes");
  return l;
}

/// The lifts of s: one face per vertex of the fiber over s's first vertex.
inline std::vector<Face> face_preimages(const CoverMap& cm, const Face& s) {
  require(!s.empty() && cm.base->contains(s), ErrorKind::NotAFace, s.str() + " is not a nonempty face of the base");
  std::vector<Face> out;
  for (VertexId y0 : cm.fibers[s[0]]) {
    std::vector<VertexId> vs{y0};
    for (std::size_t i = 1; i < s.size(); ++i) vs.push_back(cm.neighbor_over(y0, s[i]));
    Face f(vs);
    require(cm.total->contains(f), ErrorKind::LinkNotIsomorphic, "lift of " + s.str() + " is not a face");
    out.push_back(std::move(f));
  }
  return out;
}

/// The lift of s through the total vertex y0 (which must lie over a vertex of s).
inline Face lift_through(const CoverMap& cm, const Face& s, VertexId y0) {
  std::vector<VertexId> vs;
  for (VertexId x : s) vs.push_back(x == cm.rho[y0] ? y0 : cm.neighbor_over(y0, x));
  return Face(vs);
}

/// ψ_ρ(uv)(i) = j iff {(u,i), (v,j)} ∈ Y(1).
inline Cochain1 induced_cochain(const CoverMap& cm) {
  const int l = cover_degree(cm);
  Cochain1 psi(cm.base, l);
  const auto& E = cm.base->faces(1);
  for (std::size_t e = 0; e < E.size(); ++e) {
    VertexId u = E[e][0], v = E[e][1];
    std::vector<int> img(l);
    for (int i = 0; i < l; ++i) img[i] = cm.fiber_index[cm.neighbor_over(cm.vertex(u, i), v)];
    psi.set_at(static_cast<int>(e), Permutation(img));
  }
  return psi;
}

/// Y_ψ with vertex (v, i) numbered v·l + i; facets are the l lifts of each facet of X.
inline CoverMap induced_cover(const Cochain1& psi) {
  require(is_cocycle(psi), ErrorKind::NotACocycle, "induced cover needs a cocycle");
  const ComplexPtr& X = psi.base();
  const int l = psi.ell();
  std::vector<Face> facets;
  std::vector<double> weights;
  for (std::size_t j = 0; j < X->facets().size(); ++j) {
    const Face& F = X->facets()[j];
    for (int i0 = 0; i0 < l; ++i0) {
      std::vector<VertexId> vs;
      for (VertexId v : F) {
        int i = (v == F[0]) ? i0 : psi.get(F[0], v)(i0);
        vs.push_back(v * l + i);
      }
      facets.emplace_back(std::move(vs));
      weights.push_back(X->top_weights()[j] / l);
    }
  }
  auto Y = share(SimplicialComplex::from_facets(std::move(facets), std::move(weights)));
  std::vector<VertexId> rho(Y->n_vertices());
  for (VertexId y = 0; y < Y->n_vertices(); ++y) rho[y] = y / l;
  return validate_cover(Y, X, std::move(rho));
}

inline CoverMap trivial_cover(const ComplexPtr& X, int l) { return induced_cover(Cochain1(X, l)); }

/// Cover of the subcomplex induced on A by the subcomplex induced on ρ^{-1}(A).
inline CoverMap restrict_cover(const CoverMap& cm, const std::vector<VertexId>& A) {
  std::vector<VertexId> xs, ys;
  auto Xp = share(induced_subcomplex(*cm.base, A, &xs));
  std::vector<VertexId> pre;
  for (VertexId x : xs)
    for (VertexId y : cm.fibers[x]) pre.push_back(y);
  auto Yp = share(induced_subcomplex(*cm.total, pre, &ys));
  std::vector<int> xre(cm.base->n_vertices(), -1);
  for (std::size_t i = 0; i < xs.size(); ++i) xre[xs[i]] = static_cast<int>(i);
  std::vector<VertexId> rho;
  for (VertexId y : ys) rho.push_back(xre[cm.rho[y]]);
  return validate_cover(Yp, Xp, std::move(rho));
}

/// Per-vertex fiber relabelings σ_v with σ_v ∘ ψ1(uv) = ψ2(uv) ∘ σ_u on every edge, if the covers are isomorphic over X.
inline std::optional<std::vector<Permutation>> cover_isomorphism(const CoverMap& a, const CoverMap& b) {
  require(a.base->n_vertices() == b.base->n_vertices() && a.base->faces(1) == b.base->faces(1), ErrorKind::BaseMismatch, "covers over different bases");
  if (cover_degree(a) != cover_degree(b)) return std::nullopt;
  if (a.total->total_faces() != b.total->total_faces()) return std::nullopt;
  Cochain1 pa = induced_cochain(a), pb = induced_cochain(b);
  const int l = pa.ell();
  const ComplexPtr& X = a.base;
  auto adj = X->adjacency();
  std::vector<Permutation> sigma(X->n_vertices());
  std::vector<char> done(X->n_vertices(), 0);
  for (VertexId root = 0; root < X->n_vertices(); ++root) {
    if (done[root]) continue;
    bool found = false;
    for (const Permutation& start : Permutation::all(l)) {
      std::vector<VertexId> comp{root};
      std::vector<char> seen(X->n_vertices(), 0);
      seen[root] = 1;
      sigma[root] = start;
      bool ok = true;
      for (std::size_t q = 0; q < comp.size() && ok; ++q) {
        VertexId u = comp[q];
        for (VertexId v : adj[u]) {
          Permutation want = pb.get(u, v) * sigma[u] * pa.get(u, v).inverse();
          if (!seen[v]) {
            seen[v] = 1;
            sigma[v] = want;
            comp.push_back(v);
          } else if (!(sigma[v] == want)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        for (VertexId v : comp) done[v] = 1;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return sigma;
}

/// ψ(uv) = φ({uv}→{v}) ∘ φ({u}→{uv}) for a cochain φ on the flag complex of X.
inline Cochain1 flag_pushforward(const FlagComplex& G, const Cochain1& phi) {
  const ComplexPtr& X = G.base;
  Cochain1 psi(X, phi.ell());
  const auto& E = X->faces(1);
  auto lookup = [&](VertexId a, VertexId b) {
    Face f{a, b};
    if (!phi.complex().contains(f)) fail(ErrorKind::MissingFlagEdge, "flag edge " + f.str() + " missing");
    return phi.get(a, b);
  };
  for (std::size_t e = 0; e < E.size(); ++e) {
    VertexId gu = G.vertex_of(Face{E[e][0]}), gv = G.vertex_of(Face{E[e][1]}), guv = G.vertex_of(E[e]);
    psi.set_at(static_cast<int>(e), lookup(guv, gv) * lookup(gu, guv));
  }
  return psi;
}

inline std::string write_cover_map(const CoverMap& cm, const std::string& base_ref, const std::string& total_ref) {
  std::ostringstream os;
  os << "base " << base_ref << '\n' << "total " << total_ref << '\n';
  for (VertexId y = 0; y < static_cast<int>(cm.rho.size()); ++y) os << y << " -> " << cm.rho[y] << '\n';
  return os.str();
}

struct CoverFile {
  std::string base_ref, total_ref;
  std::vector<VertexId> rho;
};

inline CoverFile parse_cover_map(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CoverFile cf;
  std::vector<std::pair<int, int>> pairs;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string a, arrow;
    if (!(ls >> a)) continue;
    if (a == "base") {
      ls >> cf.base_ref;
      continue;
    }
    if (a == "total") {
      ls >> cf.total_ref;
      continue;
    }
    int x;
    if (!(ls >> arrow >> x) || arrow != "->") fail(ErrorKind::ParseError, "expected `y -> x`");
    try {
      pairs.emplace_back(std::stoi(a), x);
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "bad vertex `" + a + "`");
    }
  }
  int n = 0;
  for (auto [y, x] : pairs) n = std::max(n, y + 1);
  cf.rho.assign(n, -1);
  for (auto [y, x] : pairs) cf.rho[y] = x;
  for (int y = 0; y < n; ++y)
    if (cf.rho[y] < 0) fail(ErrorKind::NotHomomorphism, "vertex " + std::to_string(y) + " has no image");
  return cf;
}

}  // namespace hdx
