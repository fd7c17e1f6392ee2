#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "combinatorics.hpp"
#include "error.hpp"
#include "face.hpp"
#include "rng.hpp"

namespace hdx {

/// Pure weighted simplicial complex with every level materialized.
///
/// Level i holds X(i) in lexicographic order; a face's position there is its
/// ordinal. Level weights are the measures induced from the top weights.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Builds the downward closure of `facets`. Vertex ids must be dense in [0, n).
  static SimplicialComplex from_facets(std::vector<Face> facets, std::optional<std::vector<double>> weights = std::nullopt,
                                       std::size_t face_budget = 20'000'000) {
    require(!facets.empty(), ErrorKind::BadParams, "no facets");
    const std::size_t fsize = facets.front().size();
    for (const Face& f : facets)
      require(f.size() == fsize, ErrorKind::MixedDimension, "facets of sizes " + std::to_string(fsize) + " and " + std::to_string(f.size()));
    std::vector<double> w;
    if (weights) {
      w = std::move(*weights);
      require(w.size() == facets.size(), ErrorKind::BadWeights, "weight count does not match facet count");
      double sum = 0;
      for (double x : w) {
        require(std::isfinite(x) && x >= 0, ErrorKind::BadWeights, "negative or non-finite weight");
        sum += x;
      }
      require(std::abs(sum - 1.0) <= 1e-9, ErrorKind::BadWeights, "weights sum to " + std::to_string(sum));
      if (sum != 1.0)
        for (double& x : w) x /= sum;
    } else {
      w.assign(facets.size(), 1.0 / static_cast<double>(facets.size()));
    }

    // Deduplicate facets (merging weights) and sort canonically.
    std::vector<std::size_t> order(facets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return facets[a] < facets[b]; });
    std::vector<Face> top;
    std::vector<double> topw;
    for (std::size_t i : order) {
      if (!top.empty() && top.back() == facets[i]) {
        topw.back() += w[i];
      } else {
        top.push_back(facets[i]);
        topw.push_back(w[i]);
      }
    }

    SimplicialComplex X;
    X.dim_ = static_cast<int>(fsize) - 1;
    VertexId maxv = -1;
    for (const Face& f : top)
      for (VertexId v : f) maxv = std::max(maxv, v);
    X.n_ = maxv + 1;
    X.levels_.resize(static_cast<std::size_t>(X.dim_ + 2));
    Level& L = X.levels_[static_cast<std::size_t>(X.dim_ + 1)];
    L.faces = std::move(top);
    L.weights = std::move(topw);
    L.build_index();

    std::size_t total = L.faces.size();
    for (int i = X.dim_; i >= 1; --i) {
      const Level& up = X.levels_[static_cast<std::size_t>(i + 1)];
      Level& dn = X.levels_[static_cast<std::size_t>(i)];
      std::unordered_map<Face, double, FaceHash> acc;
      acc.reserve(up.faces.size() * 2);
      for (std::size_t j = 0; j < up.faces.size(); ++j) {
        const Face& f = up.faces[j];
        double share = up.weights[j] / static_cast<double>(f.size());
        for (VertexId v : f) acc[f.without(v)] += share;
      }
      dn.faces.reserve(acc.size());
      for (auto& kv : acc) dn.faces.push_back(kv.first);
      std::sort(dn.faces.begin(), dn.faces.end());
      dn.weights.resize(dn.faces.size());
      for (std::size_t j = 0; j < dn.faces.size(); ++j) dn.weights[j] = acc[dn.faces[j]];
      dn.build_index();
      total += dn.faces.size();
      require(total <= face_budget, ErrorKind::BudgetExceeded, "complex exceeds the face budget");
    }
    Level& empty = X.levels_[0];
    empty.faces = {Face{}};
    empty.weights = {1.0};
    empty.build_index();

    if (X.dim_ >= 0) {
      const Level& v0 = X.levels_[1];
      require(static_cast<int>(v0.faces.size()) == X.n_, ErrorKind::BadParams, "vertex ids are not dense");
    }
    X.top_cumulative_.resize(X.top().faces.size());
    double c = 0;
    for (std::size_t j = 0; j < X.top().faces.size(); ++j) X.top_cumulative_[j] = (c += X.top().weights[j]);
    X.vertex_facets_.assign(static_cast<std::size_t>(X.n_), {});
    for (std::size_t j = 0; j < X.top().faces.size(); ++j)
      for (VertexId v : X.top().faces[j]) X.vertex_facets_[static_cast<std::size_t>(v)].push_back(static_cast<int>(j));
    return X;
  }

  int dim() const { return dim_; }
  int n_vertices() const { return n_; }

  const std::vector<Face>& faces(int i) const { return level(i).faces; }
  std::size_t count(int i) const { return (i < -1 || i > dim_) ? 0 : level(i).faces.size(); }
  const std::vector<double>& weights(int i) const { return level(i).weights; }
  double weight(int i, int ord) const { return level(i).weights[static_cast<std::size_t>(ord)]; }
  const Face& face(int i, int ord) const { return level(i).faces[static_cast<std::size_t>(ord)]; }
  const std::vector<Face>& facets() const { return top().faces; }
  const std::vector<double>& top_weights() const { return top().weights; }

  std::size_t total_faces() const {
    std::size_t t = 0;
    for (const Level& l : levels_) t += l.faces.size();
    return t;
  }

  std::optional<int> find(const Face& f) const {
    int i = f.dim();
    if (i > dim_) return std::nullopt;
    const auto& idx = level(i).index;
    auto it = idx.find(f);
    if (it == idx.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Face& f) const { return find(f).has_value(); }

  int ordinal(const Face& f) const {
    auto o = find(f);
    if (!o) fail(ErrorKind::NotAFace, f.str() + " is not a face");
    return *o;
  }

  double measure(const Face& f) const { return weight(f.dim(), ordinal(f)); }

  /// Ordinals of the facets containing vertex v.
  const std::vector<int>& facets_of_vertex(VertexId v) const { return vertex_facets_[static_cast<std::size_t>(v)]; }

  /// Ordinals of the facets containing the face s.
  std::vector<int> facets_containing(const Face& s) const {
    std::vector<int> out;
    if (s.empty()) {
      out.resize(top().faces.size());
      std::iota(out.begin(), out.end(), 0);
      return out;
    }
    const std::vector<int>* best = &vertex_facets_[static_cast<std::size_t>(s[0])];
    for (VertexId v : s)
      if (vertex_facets_[static_cast<std::size_t>(v)].size() < best->size()) best = &vertex_facets_[static_cast<std::size_t>(v)];
    for (int j : *best)
      if (s.is_subset_of(top().faces[static_cast<std::size_t>(j)])) out.push_back(j);
    return out;
  }

  /// Sorted neighbor lists of the 1-skeleton.
  std::vector<std::vector<VertexId>> adjacency() const {
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n_));
    if (dim_ >= 1)
      for (const Face& e : faces(1)) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
      }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
  }

  /// Component label per vertex of the 1-skeleton, labels in order of first vertex.
  std::vector<int> components(int* count_out = nullptr) const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    auto adj = adjacency();
    int c = 0;
    for (VertexId s = 0; s < n_; ++s) {
      if (comp[static_cast<std::size_t>(s)] >= 0) continue;
      std::vector<VertexId> stack{s};
      comp[static_cast<std::size_t>(s)] = c;
      while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : adj[static_cast<std::size_t>(u)])
          if (comp[static_cast<std::size_t>(w)] < 0) {
            comp[static_cast<std::size_t>(w)] = c;
            stack.push_back(w);
          }
      }
      ++c;
    }
    if (count_out) *count_out = c;
    return comp;
  }

  bool is_connected() const {
    int c = 0;
    components(&c);
    return c <= 1;
  }

  /// Facet drawn by top weight.
  const Face& sample_facet(Rng& rng) const { return top().faces[rng.from_cumulative(top_cumulative_)]; }

  /// Face of level k drawn from Pr_k.
  Face sample_face(int k, Rng& rng) const {
    require(k >= -1 && k <= dim_, ErrorKind::BadParams, "level out of range");
    const Face& f = sample_facet(rng);
    return uniform_subface(f, k, rng);
  }

  /// Pair t ⊂ t' with t' drawn from Pr_{k'} and t a uniform (k+1)-subset of it.
  std::pair<Face, Face> sample_flag(int k, int kp, Rng& rng) const {
    require(k <= kp && kp <= dim_ && k >= -1, ErrorKind::BadParams, "need k <= k' <= d");
    Face big = sample_face(kp, rng);
    Face small = uniform_subface(big, k, rng);
    return {std::move(small), std::move(big)};
  }

  static Face uniform_subface(const Face& f, int k, Rng& rng) {
    std::vector<int> pos = rng.subset(static_cast<int>(f.size()), k + 1);
    std::vector<VertexId> out;
    out.reserve(pos.size());
    for (int p : pos) out.push_back(f[static_cast<std::size_t>(p)]);
    return Face::sorted_unchecked(std::move(out));
  }

 private:
  struct Level {
    std::vector<Face> faces;
    std::vector<double> weights;
    std::unordered_map<Face, int, FaceHash> index;
    void build_index() {
      index.clear();
      index.reserve(faces.size());
      for (std::size_t j = 0; j < faces.size(); ++j) index.emplace(faces[j], static_cast<int>(j));
    }
  };

  const Level& level(int i) const {
    require(i >= -1 && i <= dim_, ErrorKind::BadParams, "level " + std::to_string(i) + " out of range");
    return levels_[static_cast<std::size_t>(i + 1)];
  }
  const Level& top() const { return levels_.back(); }

  int dim_ = -1;
  int n_ = 0;
  std::vector<Level> levels_;
  std::vector<double> top_cumulative_;
  std::vector<std::vector<int>> vertex_facets_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

inline ComplexPtr share(SimplicialComplex X) { return std::make_shared<const SimplicialComplex>(std::move(X)); }

/// All (k+1)-subsets of [n] with uniform weights.
inline SimplicialComplex complete_complex(int n, int k) {
  require(k >= 0 && k + 1 <= n, ErrorKind::BadParams, "complete complex needs 0 <= k < n");
  std::vector<Face> facets;
  for_each_combination(n, k + 1, [&](const std::vector<int>& c) { facets.push_back(Face::sorted_unchecked(c)); });
  return SimplicialComplex::from_facets(std::move(facets));
}

/// Clique complex of the circulant graph C_n(1..r): facets are the n windows of r+1 cyclically consecutive vertices.
inline SimplicialComplex circulant_complex(int n, int r) {
  require(r >= 1 && n > 3 * r, ErrorKind::BadParams, "circulant complex needs n > 3r so that windows are the only cliques");
  std::vector<Face> facets;
  for (int i = 0; i < n; ++i) {
    std::vector<VertexId> w;
    for (int j = 0; j <= r; ++j) w.push_back((i + j) % n);
    facets.emplace_back(std::move(w));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

/// Cycle graph on n vertices as a 1-dimensional complex.
inline SimplicialComplex cycle_complex(int n) {
  require(n >= 3, ErrorKind::BadParams, "cycle needs n >= 3");
  std::vector<Face> facets;
  for (int i = 0; i < n; ++i) facets.push_back(Face{i, (i + 1) % n});
  return SimplicialComplex::from_facets(std::move(facets));
}

/// 1-dimensional complex from an edge list; every vertex must lie on an edge.
inline SimplicialComplex graph_complex(const std::vector<std::pair<int, int>>& edges) {
  std::vector<Face> facets;
  for (auto [u, v] : edges) facets.push_back(Face{u, v});
  return SimplicialComplex::from_facets(std::move(facets));
}

struct Link {
  ComplexPtr base;
  Face anchor;
  SimplicialComplex complex;
  std::vector<VertexId> to_base;  ///< link vertex id -> base vertex id

  Face lift(const Face& t) const {
    std::vector<VertexId> vs;
    for (VertexId v : t) vs.push_back(to_base[static_cast<std::size_t>(v)]);
    return Face(vs).unite(anchor);
  }
};

/// Link complex without the bookkeeping wrapper; vertices re-indexed in base order.
inline SimplicialComplex link_complex(const SimplicialComplex& X, const Face& s, std::vector<VertexId>* to_base = nullptr) {
  require(X.contains(s), ErrorKind::NotAFace, s.str() + " is not a face");
  std::vector<int> fs = X.facets_containing(s);
  std::vector<VertexId> verts;
  for (int j : fs)
    for (VertexId v : X.facets()[static_cast<std::size_t>(j)])
      if (!s.contains(v)) verts.push_back(v);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::unordered_map<VertexId, VertexId> re;
  for (std::size_t i = 0; i < verts.size(); ++i) re[verts[i]] = static_cast<VertexId>(i);
  std::vector<Face> facets;
  std::vector<double> w;
  double total = 0;
  for (int j : fs) total += X.top_weights()[static_cast<std::size_t>(j)];
  for (int j : fs) {
    std::vector<VertexId> vs;
    for (VertexId v : X.facets()[static_cast<std::size_t>(j)])
      if (!s.contains(v)) vs.push_back(re[v]);
    facets.push_back(Face::sorted_unchecked(std::move(vs)));
    w.push_back(X.top_weights()[static_cast<std::size_t>(j)] / total);
  }
  if (to_base) *to_base = verts;
  return SimplicialComplex::from_facets(std::move(facets), std::move(w));
}

inline Link link(const ComplexPtr& X, const Face& s) {
  Link L;
  L.base = X;
  L.anchor = s;
  L.complex = link_complex(*X, s, &L.to_base);
  return L;
}

/// The k-skeleton with Pr_k as its top measure.
inline SimplicialComplex skeleton(const SimplicialComplex& X, int k) {
  require(k >= 0 && k <= X.dim(), ErrorKind::BadParams, "skeleton level out of range");
  return SimplicialComplex::from_facets(X.faces(k), X.weights(k));
}

/// Complex induced on a vertex subset, re-indexed in increasing order; uniform top weights.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& X, const std::vector<VertexId>& A, std::vector<VertexId>* to_base = nullptr) {
  std::vector<VertexId> verts = A;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> re(static_cast<std::size_t>(X.n_vertices()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) re[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
  // Maximal faces inside A.
  std::vector<Face> inside;
  for (int i = X.dim(); i >= 0; --i)
    for (const Face& f : X.faces(i)) {
      bool ok = true;
      for (VertexId v : f) ok = ok && re[static_cast<std::size_t>(v)] >= 0;
      if (!ok) continue;
      bool covered = false;
      for (const Face& g : inside)
        if (f.is_subset_of(g)) {
          covered = true;
          break;
        }
      if (!covered) inside.push_back(f);
    }
  std::vector<Face> facets;
  for (const Face& f : inside) {
    std::vector<VertexId> vs;
    for (VertexId v : f) vs.push_back(re[static_cast<std::size_t>(v)]);
    facets.push_back(Face::sorted_unchecked(std::move(vs)));
  }
  if (to_base) *to_base = verts;
  return SimplicialComplex::from_facets(std::move(facets));
}

/// True iff every clique of the 1-skeleton is a face.
inline bool is_clique_complex(const SimplicialComplex& X) {
  if (X.dim() < 1) return true;
  auto adj = X.adjacency();
  std::vector<std::vector<char>> nbr(static_cast<std::size_t>(X.n_vertices()), std::vector<char>(static_cast<std::size_t>(X.n_vertices()), 0));
  for (VertexId u = 0; u < X.n_vertices(); ++u)
    for (VertexId w : adj[static_cast<std::size_t>(u)]) nbr[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = 1;
  for (int i = 1; i <= X.dim(); ++i)
    for (const Face& f : X.faces(i)) {
      for (VertexId w : adj[static_cast<std::size_t>(f[0])]) {
        if (w <= f[f.size() - 1]) continue;
        bool all = true;
        for (VertexId v : f) all = all && nbr[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
        if (all && !X.contains(f.with(w))) return false;
      }
    }
  return true;
}

/// A coloring of the vertices into `parts` classes with every facet meeting each class once.
inline std::optional<std::vector<std::vector<VertexId>>> is_partite(const SimplicialComplex& X, int parts, std::size_t node_budget = 10'000'000) {
  if (parts != X.dim() + 1) return std::nullopt;
  const int n = X.n_vertices();
  auto adj = X.adjacency();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::size_t nodes = 0;
  // DSatur-style backtracking; facets are cliques so proper colorings are exactly the rainbow ones.
  std::function<bool(int)> rec = [&](int colored) -> bool {
    if (colored == n) return true;
    require(++nodes <= node_budget, ErrorKind::BudgetExceeded, "partite search budget");
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0) continue;
      std::uint64_t seen = 0;
      for (VertexId w : adj[static_cast<std::size_t>(v)])
        if (color[static_cast<std::size_t>(w)] >= 0) seen |= std::uint64_t{1} << color[static_cast<std::size_t>(w)];
      int sat = __builtin_popcountll(seen);
      int deg = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    std::uint64_t seen = 0;
    int maxc = -1;
    for (int v = 0; v < n; ++v) maxc = std::max(maxc, color[static_cast<std::size_t>(v)]);
    for (VertexId w : adj[static_cast<std::size_t>(best)])
      if (color[static_cast<std::size_t>(w)] >= 0) seen |= std::uint64_t{1} << color[static_cast<std::size_t>(w)];
    // Colors are interchangeable: never open more than one new class at a time.
    for (int c = 0; c < parts && c <= maxc + 1; ++c) {
      if (seen >> c & 1) continue;
      color[static_cast<std::size_t>(best)] = c;
      if (rec(colored + 1)) return true;
      color[static_cast<std::size_t>(best)] = -1;
    }
    return false;
  };
  if (parts > 63 || !rec(0)) return std::nullopt;
  for (const Face& f : X.facets()) {
    std::uint64_t used = 0;
    for (VertexId v : f) used |= std::uint64_t{1} << color[static_cast<std::size_t>(v)];
    if (__builtin_popcountll(used) != parts) return std::nullopt;
  }
  std::vector<std::vector<VertexId>> out(static_cast<std::size_t>(parts));
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.empty() || b.empty()) return b.empty() && !a.empty();
    return a.front() < b.front();
  });
  return out;
}

}  // namespace hdx
