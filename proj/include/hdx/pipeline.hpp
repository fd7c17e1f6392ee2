#pragma once

#include <array>
#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "agreement.hpp"
#include "cocycle_search.hpp"
#include "cover.hpp"
#include "faces_flags.hpp"
#include "well_connected.hpp"

namespace hdx {

struct PipelineConfig {
  int d1 = 1;
  double tau = 0.4;
  double zeta = 0.0;
  double gamma = 0.1;
  double eta = 0.05;
  double separation = 0.9;              ///< lists are greedily `separation`-separated (9γ by default)
  bool restrict_from_top = true;        ///< lists at levels d1 and 2d1+1 are restrictions of a containing (3d1+2)-face's list
  std::uint64_t candidate_budget = 1 << 16;  ///< exhaustive candidates when |Σ|^|s| fits
  std::uint64_t cocycle_budget = 10'000'000;
  std::uint64_t triple_samples = 2000;
  bool check_well_connected = false;
  int well_connected_ell_max = 2;
  std::uint64_t seed = 0;
};

struct FaceList {
  std::vector<std::vector<int>> funcs;  ///< positional along the face
  std::vector<double> alpha;
  int anchor = -1;  ///< top-level ordinal the list was restricted from, or -1
  bool good = true;
};

/// Lists at levels d1, 2d1+1, 3d1+2 (index 0, 1, 2).
struct LocalLists {
  std::array<int, 3> levels{};
  std::array<std::vector<FaceList>, 3> lists;
  int ell = 0;
  std::array<double, 3> good_fraction{};
  std::string candidate_strategy;  ///< "exhaustive" or "plurality_stitched"
};

namespace detail {

inline std::vector<int> restrict_positional(const Face& dom, const std::vector<int>& g, const Face& sub) {
  std::vector<int> out;
  out.reserve(sub.size());
  for (VertexId v : sub) out.push_back(g[dom.position(v)]);
  return out;
}

/// Candidate functions on s: all of Σ^s when feasible, else plurality-stitched seeds from each f_r ⊂ s.
inline std::vector<std::vector<int>> candidates_on(const Ensemble& F, const Face& s, std::uint64_t budget, bool& exhaustive) {
  std::vector<std::vector<int>> out;
  const int m = static_cast<int>(s.size());
  exhaustive = std::pow(static_cast<double>(F.sigma), m) <= static_cast<double>(budget);
  if (exhaustive) {
    std::vector<int> g(m, 0);
    while (true) {
      out.push_back(g);
      int i = 0;
      while (i < m && ++g[i] == F.sigma) g[i++] = 0;
      if (i == m) break;
    }
    return out;
  }
  std::vector<std::uint64_t> masks = combination_masks(m, F.k + 1);
  std::vector<int> ords;
  for (auto mk : masks) ords.push_back(F.host->ordinal(s.select(mk)));
  for (std::size_t a = 0; a < ords.size(); ++a) {
    std::vector<std::vector<double>> votes(m, std::vector<double>(F.sigma, 0.0));
    for (std::size_t b = 0; b < ords.size(); ++b) {
      if (a != b && !tuple_agrees(F, std::vector<int>{ords[a], ords[b]})) continue;
      if ((masks[a] & masks[b]) == 0 && a != b) continue;
      const Face& r = F.face(ords[b]);
      for (std::size_t i = 0; i < r.size(); ++i) votes[s.position(r[i])][F.table[ords[b]][i]] += 1;
    }
    std::vector<int> g(m, 0);
    for (int i = 0; i < m; ++i) {
      double tot = 0;
      for (double x : votes[i]) tot += x;
      if (tot == 0)
        for (std::size_t b = 0; b < ords.size(); ++b)
          if ((masks[b] >> i) & 1) votes[i][F.value_at(ords[b], s[i])] += 1;
      g[i] = static_cast<int>(std::max_element(votes[i].begin(), votes[i].end()) - votes[i].begin());
    }
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Greedy separated list of candidates with α_ζ ≥ τ, scanned by decreasing α then lexicographically.
inline FaceList build_list(const Ensemble& F, const Face& s, const AgreementDistribution& D, const PipelineConfig& cfg, bool& exhaustive) {
  auto cands = candidates_on(F, s, cfg.candidate_budget, exhaustive);
  LocalAlpha la(F, s, D);
  std::vector<char> supp, cache;
  std::vector<std::pair<double, int>> scored;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    double a = la(F, cands[i], cfg.zeta, supp, cache);
    if (a >= cfg.tau - 1e-12) scored.emplace_back(-a, static_cast<int>(i));
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::vector<int>> ordered;
  for (auto [na, i] : scored) ordered.push_back(cands[i]);
  FaceList L;
  for (int j : greedy_separated_list(ordered, cfg.separation)) {
    L.funcs.push_back(ordered[j]);
    L.alpha.push_back(-scored[j].first);
  }
  return L;
}

}  // namespace detail

inline LocalLists local_lists(const Ensemble& F, const PipelineConfig& cfg, const AgreementDistribution& D) {
  const SimplicialComplex& X = *F.host;
  LocalLists out;
  out.levels = {cfg.d1, 2 * cfg.d1 + 1, 3 * cfg.d1 + 2};
  require(cfg.d1 >= F.k, ErrorKind::BadParams, "pipeline needs d1 >= k");
  require(out.levels[2] <= X.dim(), ErrorKind::DimensionTooSmall, "host dimension below 3d1+2");
  bool any_heuristic = false;
  auto direct = [&](int li) {
    auto& L = out.lists[li];
    for (const Face& s : X.faces(out.levels[li])) {
      bool ex = true;
      L.push_back(detail::build_list(F, s, D, cfg, ex));
      any_heuristic = any_heuristic || !ex;
    }
  };
  direct(2);
  if (cfg.restrict_from_top) {
    for (int li = 0; li < 2; ++li) out.lists[li].assign(X.count(out.levels[li]), FaceList{});
    const int top = out.levels[2];
    for (std::size_t u = 0; u < X.count(top); ++u) {
      const Face& U = X.face(top, static_cast<int>(u));
      for (int li = 0; li < 2; ++li) {
        for_each_combination(static_cast<int>(U.size()), out.levels[li] + 1, [&](const std::vector<int>& c) {
          std::vector<VertexId> vs;
          for (int p : c) vs.push_back(U[p]);
          Face x = Face::sorted_unchecked(std::move(vs));
          FaceList& fl = out.lists[li][X.ordinal(x)];
          if (fl.anchor >= 0) return;
          fl.anchor = static_cast<int>(u);
          for (std::size_t i = 0; i < out.lists[2][u].funcs.size(); ++i) {
            fl.funcs.push_back(detail::restrict_positional(U, out.lists[2][u].funcs[i], x));
            fl.alpha.push_back(out.lists[2][u].alpha[i]);
          }
        });
      }
    }
  } else {
    direct(0);
    direct(1);
  }
  out.candidate_strategy = any_heuristic ? "plurality_stitched" : "exhaustive";
  // Modal length over the top level; lists of other lengths or with repeated members are bad.
  std::map<int, double> hist;
  for (std::size_t u = 0; u < out.lists[2].size(); ++u) hist[static_cast<int>(out.lists[2][u].funcs.size())] += X.weight(out.levels[2], static_cast<int>(u));
  out.ell = 0;
  double best = -1;
  for (auto [len, w] : hist)
    if (w > best + 1e-15) best = w, out.ell = len;
  for (int li = 0; li < 3; ++li) {
    double good = 0;
    for (std::size_t j = 0; j < out.lists[li].size(); ++j) {
      FaceList& fl = out.lists[li][j];
      auto sorted = fl.funcs;
      std::sort(sorted.begin(), sorted.end());
      bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      fl.good = static_cast<int>(fl.funcs.size()) == out.ell && out.ell > 0 && distinct;
      if (fl.good) good += X.weight(out.levels[li], static_cast<int>(j));
    }
    out.good_fraction[li] = good;
  }
  return out;
}

/// π_{t,s}: index i of L(s) ↦ index j of L(t) with L_s^i ≈^{1-γ} L_t^j|_s; absent unless a bijection.
inline std::optional<Permutation> list_permutation(const LocalLists& LL, int ls, int s_ord, int lt, int t_ord, const SimplicialComplex& X, double gamma) {
  const FaceList& A = LL.lists[ls][s_ord];
  const FaceList& B = LL.lists[lt][t_ord];
  if (!A.good || !B.good) return std::nullopt;
  const Face& s = X.face(LL.levels[ls], s_ord);
  const Face& t = X.face(LL.levels[lt], t_ord);
  std::vector<std::vector<int>> restricted;
  for (const auto& g : B.funcs) restricted.push_back(detail::restrict_positional(t, g, s));
  ListMatch m = match_lists_unchecked(A.funcs, restricted, gamma);
  std::vector<char> hit(B.funcs.size(), 0);
  for (int j : m.pi) {
    if (j < 0 || hit[j]) return std::nullopt;
    hit[j] = 1;
  }
  return Permutation(m.pi);
}

struct MatchingReport {
  std::uint64_t pairs = 0;
  std::uint64_t failures = 0;
  std::uint64_t triples = 0;
  std::uint64_t triples_consistent = 0;
  double triple_consistency = 0;
};

/// Triple consistency π_{u,s} = π_{u,t} ∘ π_{t,s} over sampled chains s ⊂ t ⊂ u across the three levels.
inline MatchingReport match_all(const LocalLists& LL, const SimplicialComplex& X, double gamma, std::uint64_t samples, Rng& rng) {
  MatchingReport rep;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Face u = X.sample_face(LL.levels[2], rng);
    Face t = SimplicialComplex::uniform_subface(u, LL.levels[1], rng);
    Face s = SimplicialComplex::uniform_subface(t, LL.levels[0], rng);
    int so = X.ordinal(s), to = X.ordinal(t), uo = X.ordinal(u);
    auto ts = list_permutation(LL, 0, so, 1, to, X, gamma);
    auto ut = list_permutation(LL, 1, to, 2, uo, X, gamma);
    auto us = list_permutation(LL, 0, so, 2, uo, X, gamma);
    rep.pairs += 3;
    rep.failures += !ts + !ut + !us;
    if (ts && ut && us) {
      ++rep.triples;
      rep.triples_consistent += (*ut * *ts) == *us;
    }
  }
  rep.triple_consistency = rep.triples ? static_cast<double>(rep.triples_consistent) / static_cast<double>(rep.triples) : 0.0;
  return rep;
}

struct FacesCochain {
  Cochain1 psi;
  std::vector<char> defect;  ///< per F X edge: a needed match failed and the identity was used
  std::uint64_t defects = 0;
  double wt_delta = 0;
};

/// ψ((s1,s2)) = π_{t,s2}^{-1} ∘ π_{t,s1} for t = s1 ⊎ s2 on the edges of F^{d1}X.
inline FacesCochain build_faces_cochain(const LocalLists& LL, const FacesComplex& FX, double gamma) {
  const SimplicialComplex& X = *FX.base;
  FacesCochain out{Cochain1(FX.complex, std::max(LL.ell, 1)), {}, 0, 0};
  const auto& E = FX.complex->faces(1);
  out.defect.assign(E.size(), 0);
  for (std::size_t e = 0; e < E.size(); ++e) {
    int a = E[e][0], b = E[e][1];
    int t = X.ordinal(FX.block(a).unite(FX.block(b)));
    auto pa = list_permutation(LL, 0, a, 1, t, X, gamma);
    auto pb = list_permutation(LL, 0, b, 1, t, X, gamma);
    if (pa && pb && LL.ell > 0) {
      out.psi.set_at(static_cast<int>(e), pb->inverse() * *pa);
    } else {
      out.defect[e] = 1;
      ++out.defects;
    }
  }
  out.wt_delta = wt_delta(out.psi);
  return out;
}

/// Exhaustive nearest cocycle when (ℓ!)^|F X(0)| fits the budget, otherwise local search.
inline NearestCocycle correct_to_cocycle(const Cochain1& psi, std::uint64_t budget) {
  double gauges = std::pow(static_cast<double>(factorial(psi.ell())), psi.complex().n_vertices());
  auto strategy = gauges <= static_cast<double>(budget) ? CocycleStrategy::Exhaustive : CocycleStrategy::LocalSearch;
  return nearest_cocycle(psi, strategy, budget);
}

struct LiftResult {
  CoverMap nu;                ///< F̃X → F^{d1}X from the corrected cochain
  Cochain1 base_cochain;      ///< the X-level cochain from shared components
  CoverMap cover;             ///< ρ: Y → X
  FacesComplex fy;            ///< F^{d1}Y
  std::vector<VertexId> iota; ///< F^{d1}Y vertex -> F̃X vertex
  bool iota_bijective = false;
  std::uint64_t edges_checked = 0;
  std::uint64_t edges_preserved = 0;
  bool degrees_preserved = false;
};

namespace detail {

/// Components of the subgraph of F̃X induced on ν^{-1}(F X_r), labeled 0..ℓ-1 by smallest member; -1 outside.
inline std::vector<int> decompose(const CoverMap& nu, const std::vector<std::pair<int, int>>& edges, const std::vector<char>& in_base, int ell, const Face& r) {
  const int N = nu.total->n_vertices();
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : edges)
    if (in_base[nu.rho[a]] && in_base[nu.rho[b]]) parent[find(a)] = find(b);
  std::vector<int> label(N, -1);
  std::map<int, int> root_label;
  std::vector<int> comp_size;
  for (int z = 0; z < N; ++z) {
    if (!in_base[nu.rho[z]]) continue;
    int rt = find(z);
    auto it = root_label.find(rt);
    if (it == root_label.end()) {
      it = root_label.emplace(rt, static_cast<int>(root_label.size())).first;
      comp_size.push_back(0);
    }
    label[z] = it->second;
    ++comp_size[it->second];
  }
  if (static_cast<int>(root_label.size()) != ell)
    fail(ErrorKind::DecompositionFailure, "preimage of the faces complex of the link of " + r.str() + " has " + std::to_string(root_label.size()) + " components, expected " + std::to_string(ell));
  // Each component must meet every fiber exactly once.
  for (int x = 0; x < nu.base->n_vertices(); ++x) {
    if (!in_base[x]) continue;
    std::vector<char> seen(ell, 0);
    for (VertexId z : nu.fibers[x]) {
      if (seen[label[z]]) fail(ErrorKind::DecompositionFailure, "a component over the link of " + r.str() + " meets a fiber twice");
      seen[label[z]] = 1;
    }
  }
  return label;
}

}  // namespace detail

/// Builds ρ: Y → X with F^{d1}Y ≅ F̃X from a cocycle on F^{d1}X; X must be a well-connected clique complex.
inline LiftResult lift_to_complex_cover(const Cochain1& psi_fx, const FacesComplex& FX) {
  const ComplexPtr& X = FX.base;
  const int d1 = FX.d1;
  const int ell = psi_fx.ell();
  LiftResult out{induced_cover(psi_fx), Cochain1(X, ell), {}, {}, {}, false, 0, 0, false};
  const CoverMap& nu = out.nu;
  std::vector<std::pair<int, int>> edges;
  for (const Face& f : nu.total->faces(1)) edges.emplace_back(f[0], f[1]);
  auto labels_for = [&](const Face& r) {
    std::vector<char> in_base(FX.complex->n_vertices(), 0);
    for (VertexId a : link_faces_vertices(*X, d1, r)) in_base[a] = 1;
    return detail::decompose(nu, edges, in_base, ell, r);
  };
  std::vector<std::vector<int>> zv;
  for (VertexId v = 0; v < X->n_vertices(); ++v) zv.push_back(labels_for(Face{v}));
  // Z_uv components sit inside unique components of Z_u and Z_v.
  const auto& E = X->faces(1);
  for (std::size_t e = 0; e < E.size(); ++e) {
    VertexId u = E[e][0], v = E[e][1];
    auto zuv = labels_for(E[e]);
    std::vector<int> to_u(ell, -1), to_v(ell, -1);
    for (std::size_t z = 0; z < zuv.size(); ++z) {
      int j = zuv[z];
      if (j < 0) continue;
      if ((to_u[j] >= 0 && to_u[j] != zv[u][z]) || (to_v[j] >= 0 && to_v[j] != zv[v][z]))
        fail(ErrorKind::DecompositionFailure, "a component over the link of " + E[e].str() + " straddles two vertex components");
      to_u[j] = zv[u][z];
      to_v[j] = zv[v][z];
    }
    std::vector<int> img(ell);
    for (int j = 0; j < ell; ++j) img[to_u[j]] = to_v[j];
    out.base_cochain.set_at(static_cast<int>(e), Permutation(img));
  }
  if (!is_cocycle(out.base_cochain)) fail(ErrorKind::DecompositionFailure, "the cochain from shared components is not a cocycle");
  for (int i = 1; i <= d1; ++i)
    for (const Face& r : X->faces(i)) labels_for(r);  // decomposition over higher faces (throws on failure)
  out.cover = induced_cover(out.base_cochain);

  // ι: a lift s̃ of s through (v0, i0) goes to the fiber vertex of s whose link lies in Z_{v0}^{i0}.
  out.fy = faces_complex(out.cover.total, d1);
  const SimplicialComplex& Y = *out.cover.total;
  const int ny = static_cast<int>(Y.count(d1));
  out.iota.assign(ny, -1);
  std::vector<char> hit(nu.total->n_vertices(), 0);
  bool bij = true;
  for (int j = 0; j < ny; ++j) {
    const Face& st = Y.face(d1, j);
    Face s = out.cover.image(st);
    int so = X->ordinal(s);
    VertexId v0 = out.cover.rho[st[0]];
    int i0 = out.cover.fiber_index[st[0]];
    int found = -1;
    for (VertexId z : nu.fibers[so]) {
      bool inside = !nu.lift[z].empty();
      for (auto [x, zn] : nu.lift[z]) inside = inside && zv[v0][zn] == i0;
      if (inside) {
        if (found >= 0) fail(ErrorKind::IotaUndefined, "two fiber vertices over " + s.str() + " fit the lift through vertex " + std::to_string(st[0]));
        found = z;
      }
    }
    if (found < 0) fail(ErrorKind::IotaUndefined, "no fiber vertex over " + s.str() + " fits the lift through vertex " + std::to_string(st[0]));
    out.iota[j] = found;
    if (hit[found]) bij = false;
    hit[found] = 1;
  }
  out.iota_bijective = bij && ny == nu.total->n_vertices();
  const auto& FE = out.fy.complex->faces(1);
  for (const Face& f : FE) {
    ++out.edges_checked;
    out.edges_preserved += nu.total->contains(Face{out.iota[f[0]], out.iota[f[1]]});
  }
  out.degrees_preserved = out.iota_bijective && out.edges_preserved == out.edges_checked && FE.size() == nu.total->count(1);
  return out;
}

struct PipelineReport {
  int ell = 0;
  std::array<double, 3> good_fraction{};
  std::string candidate_strategy;
  MatchingReport matching;
  std::uint64_t cochain_defects = 0;
  double wt_delta_before = 0;
  double wt_delta_after = 0;
  double correction_dist = 0;
  std::string correction_strategy;
  bool lift_ok = false;
  std::string lift_error;
  int cover_degree = 0;
  bool iota_bijective = false;
  bool degrees_preserved = false;
  std::optional<bool> isomorphic_to_plant;
  double h_consistency = 0;      ///< Pr_{s̃ ∈ Y(d1)}[h_s̃ ≈^{1-η} G|_s̃]
  double final_agreement_raw = 0;  ///< Pr_{r̃ ∈ Y(k)}[f_ρ(r̃)∘ρ ≈^{1-η} G|_r̃]
  double final_agreement = 0;    ///< Pr_{r ∈ X(k)}[some preimage r̃ has f_r∘ρ ≈^{1-η} G|_r̃]
  std::optional<bool> well_connected;
  std::vector<std::pair<std::string, double>> timings_ms;
};

struct PipelineArtifacts {
  LocalLists lists;
  FacesComplex fx;
  FacesCochain cochain;
  NearestCocycle corrected;
  std::optional<LiftResult> lift;
  std::optional<GlobalFunction> G;
};

/// h_s̃ = L_s^m ∘ ρ for ι(s̃) = (s, m), decoded by plurality; fills the agreement fields of the report.
inline GlobalFunction global_function(const Ensemble& F, const LocalLists& LL, const LiftResult& lift, double eta, PipelineReport& rep) {
  const CoverMap& cm = lift.cover;
  const SimplicialComplex& Y = *cm.total;
  const SimplicialComplex& X = *cm.base;
  const int d1 = LL.levels[0];
  Ensemble H{cm.total, d1, F.sigma, {}};
  for (std::size_t j = 0; j < Y.count(d1); ++j) {
    const Face& st = Y.face(d1, static_cast<int>(j));
    VertexId z = lift.iota[j];
    int so = lift.nu.rho[z], m = lift.nu.fiber_index[z];
    const Face& s = X.face(d1, so);
    const FaceList& L = LL.lists[0][so];
    std::vector<int> row;
    for (VertexId y : st) row.push_back(m < static_cast<int>(L.funcs.size()) ? L.funcs[m][s.position(cm.rho[y])] : 0);
    H.table.push_back(std::move(row));
  }
  GlobalFunction G = plurality_decode(H);
  double hc = 0;
  for (std::size_t j = 0; j < H.size(); ++j)
    if (closeness(H.table[j], G.restrict_to(H.face(static_cast<int>(j))), eta).close) hc += Y.weight(d1, static_cast<int>(j));
  rep.h_consistency = hc;
  double raw = 0, fin = 0;
  for (std::size_t j = 0; j < X.count(F.k); ++j) {
    const Face& r = X.face(F.k, static_cast<int>(j));
    bool any = false;
    auto lifts = face_preimages(cm, r);
    for (const Face& rt : lifts) {
      std::vector<int> fr;  // f_r ∘ ρ positional along r̃
      for (VertexId y : rt) fr.push_back(F.value_at(static_cast<int>(j), cm.rho[y]));
      bool ok = closeness(fr, G.restrict_to(rt), eta).close;
      if (ok) raw += Y.measure(rt);
      any = any || ok;
    }
    if (any) fin += X.weight(F.k, static_cast<int>(j));
  }
  rep.final_agreement_raw = std::min(raw, 1.0);
  rep.final_agreement = std::min(fin, 1.0);
  return G;
}

/// All steps in order. Failures after list building are recorded in the report rather than thrown.
inline PipelineReport run_pipeline(const Ensemble& F, const PipelineConfig& cfg, const AgreementDistribution& D, const CoverMap* plant = nullptr,
                                   PipelineArtifacts* artifacts = nullptr) {
  using clock = std::chrono::steady_clock;
  PipelineReport rep;
  auto t0 = clock::now();
  auto lap = [&](const std::string& name) {
    auto t1 = clock::now();
    rep.timings_ms.emplace_back(name, std::chrono::duration<double, std::milli>(t1 - t0).count());
    t0 = t1;
  };
  Rng rng(cfg.seed);
  if (cfg.check_well_connected) rep.well_connected = well_connected_check(F.host, cfg.d1, cfg.well_connected_ell_max, cfg.cocycle_budget).well_connected;
  PipelineArtifacts local;
  PipelineArtifacts& A = artifacts ? *artifacts : local;
  A.lists = local_lists(F, cfg, D);
  rep.ell = A.lists.ell;
  rep.good_fraction = A.lists.good_fraction;
  rep.candidate_strategy = A.lists.candidate_strategy;
  lap("local_lists");
  Rng mrng = rng.stream(1);
  rep.matching = match_all(A.lists, *F.host, cfg.gamma, cfg.triple_samples, mrng);
  lap("match_all");
  A.fx = faces_complex(F.host, cfg.d1);
  A.cochain = build_faces_cochain(A.lists, A.fx, cfg.gamma);
  rep.cochain_defects = A.cochain.defects;
  rep.wt_delta_before = A.cochain.wt_delta;
  lap("build_faces_cochain");
  A.corrected = correct_to_cocycle(A.cochain.psi, cfg.cocycle_budget);
  rep.wt_delta_after = wt_delta(A.corrected.phi);
  rep.correction_dist = A.corrected.dist;
  rep.correction_strategy = A.corrected.strategy;
  lap("correct_to_cocycle");
  try {
    A.lift = lift_to_complex_cover(A.corrected.phi, A.fx);
    rep.lift_ok = true;
    rep.cover_degree = cover_degree(A.lift->cover);
    rep.iota_bijective = A.lift->iota_bijective;
    rep.degrees_preserved = A.lift->degrees_preserved;
    if (plant) rep.isomorphic_to_plant = cover_isomorphism(A.lift->cover, *plant).has_value();
  } catch (const Error& e) {
    rep.lift_error = std::string(to_string(e.kind())) + ": " + e.what();
  }
  lap("lift_to_complex_cover");
  if (rep.lift_ok) {
    A.G = global_function(F, A.lists, *A.lift, cfg.eta, rep);
    lap("global_function");
  }
  return rep;
}

}  // namespace hdx
