#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "complex.hpp"
#include "rng.hpp"

namespace hdx {

/// {f_r : r → Σ} for every r ∈ X(k); symbols stored positionally along r's sorted vertices.
struct Ensemble {
  ComplexPtr host;
  int k = 0;
  int sigma = 2;
  std::vector<std::vector<int>> table;

  const Face& face(int ord) const { return host->face(k, ord); }
  const std::vector<int>& values(int ord) const { return table[ord]; }
  int value_at(int ord, VertexId v) const { return table[ord][face(ord).position(v)]; }
  std::size_t size() const { return table.size(); }

  void validate() const {
    require(k >= 0 && k <= host->dim(), ErrorKind::LevelMismatch, "ensemble level outside the host");
    require(table.size() == host->count(k), ErrorKind::DomainMismatch, "ensemble is not total on X(k)");
    for (const auto& row : table) {
      require(static_cast<int>(row.size()) == k + 1, ErrorKind::DomainMismatch, "local function of the wrong size");
      for (int x : row) require(x >= 0 && x < sigma, ErrorKind::DomainMismatch, "symbol outside the alphabet");
    }
  }
};

/// A function on the vertices of `domain`, stored positionally.
struct LocalFunction {
  Face domain;
  std::vector<int> values;

  int value(VertexId v) const { return values[domain.position(v)]; }
  std::vector<int> restrict_to(const Face& r) const {
    std::vector<int> out;
    out.reserve(r.size());
    for (VertexId v : r) out.push_back(value(v));
    return out;
  }
};

/// G: X(0) → Σ.
struct GlobalFunction {
  ComplexPtr host;
  std::vector<int> values;

  std::vector<int> restrict_to(const Face& r) const {
    std::vector<int> out;
    out.reserve(r.size());
    for (VertexId v : r) out.push_back(values[v]);
    return out;
  }
  LocalFunction as_local() const {
    std::vector<VertexId> all(values.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<VertexId>(i);
    return {Face::sorted_unchecked(all), values};
  }
};

inline Ensemble direct_product_encode(const GlobalFunction& G, int k, int sigma) {
  Ensemble F{G.host, k, sigma, {}};
  for (const Face& r : G.host->faces(k)) F.table.push_back(G.restrict_to(r));
  return F;
}

inline Ensemble random_ensemble(const ComplexPtr& X, int k, int sigma, Rng& rng) {
  Ensemble F{X, k, sigma, {}};
  for (std::size_t j = 0; j < X->count(k); ++j) {
    std::vector<int> row(k + 1);
    for (int& x : row) x = rng.index(sigma);
    F.table.push_back(std::move(row));
  }
  return F;
}

/// Replaces each symbol, independently with probability p, by a different uniformly chosen symbol.
inline Ensemble add_symbol_noise(Ensemble F, double p, Rng& rng) {
  for (auto& row : F.table)
    for (int& x : row)
      if (F.sigma > 1 && rng.bernoulli(p)) x = (x + 1 + rng.index(F.sigma - 1)) % F.sigma;
  return F;
}

struct Closeness {
  double dist = 0;
  bool close = true;
};

/// Fractional Hamming distance and the predicate dist ≤ η.
inline Closeness closeness(const std::vector<int>& f, const std::vector<int>& g, double eta) {
  require(f.size() == g.size(), ErrorKind::DomainMismatch, "functions on domains of different size");
  if (f.empty()) return {0.0, true};
  std::size_t diff = 0;
  for (std::size_t i = 0; i < f.size(); ++i) diff += f[i] != g[i];
  double d = static_cast<double>(diff) / static_cast<double>(f.size());
  return {d, d <= eta + 1e-12};
}

inline double hamming(const std::vector<int>& f, const std::vector<int>& g) { return closeness(f, g, 0).dist; }

// ---------------------------------------------------------------------------------------------
// Test distributions

enum class TestKind { V, Z, DownUp };

inline int exact_sqrt(int x) {
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(x))));
  return r * r == x ? r : -1;
}

/// A q-query test on k-faces: either a pattern inside a random d-face (V, Z) or the lazy down-up walk on X(k).
struct AgreementDistribution {
  TestKind kind = TestKind::V;
  int q = 2;
  int k = 0;
  int d = 0;     ///< dimension of the face the pattern lives in (k for the down-up walk)
  int root = 1;  ///< √(k+1) for the pattern tests
  ComplexPtr host;

  std::string name() const {
    switch (kind) {
      case TestKind::V: return "v";
      case TestKind::Z: return "z";
      case TestKind::DownUp: return "down_up";
    }
    return "?";
  }

  /// Canonical tuple inside {0..d}; every valid tuple is a relabeling of it.
  std::vector<std::uint64_t> canonical() const {
    auto block = [](int lo, int len) { return ((std::uint64_t{1} << len) - 1) << lo; };
    const int b = k + 1;
    if (kind == TestKind::V) return {block(0, b), block(b - root, b)};
    return {block(0, b), block(b - root, b), block(2 * b - 2 * root, b)};
  }

  /// All valid tuples of the pattern inside {0..d}, each equally likely.
  std::vector<std::vector<std::uint64_t>> pattern_tuples() const {
    std::vector<std::vector<std::uint64_t>> out;
    auto masks = combination_masks(d + 1, k + 1);
    auto inter = [](std::uint64_t a, std::uint64_t b) { return std::popcount(a & b); };
    for (auto s1 : masks)
      for (auto s2 : masks) {
        if (inter(s1, s2) != root) continue;
        if (kind == TestKind::V) {
          out.push_back({s1, s2});
          continue;
        }
        for (auto s3 : masks)
          if (inter(s2, s3) == root && inter(s1, s3) == 0) out.push_back({s1, s2, s3});
      }
    return out;
  }

  /// Weighted tuples of local positions for the test run inside a face with m vertices.
  std::vector<std::pair<double, std::vector<std::uint64_t>>> local_support(int m) const {
    std::vector<std::pair<double, std::vector<std::uint64_t>>> out;
    if (kind == TestKind::DownUp) {
      require(m >= k + 1, ErrorKind::DimensionTooSmall, "face too small for the down-up test");
      auto r1s = combination_masks(m, k + 1);
      const double p1 = 1.0 / static_cast<double>(r1s.size());
      for (auto r1 : r1s) {
        for (int x = 0; x < m; ++x) {
          if (!((r1 >> x) & 1)) continue;
          std::uint64_t b = r1 & ~(std::uint64_t{1} << x);
          for (int y = 0; y < m; ++y) {
            if ((b >> y) & 1) continue;
            out.push_back({p1 / (k + 1) / (m - k), {r1, b | (std::uint64_t{1} << y)}});
          }
        }
      }
      return out;
    }
    require(m >= d + 1, ErrorKind::DimensionTooSmall, "face too small for the pattern test");
    auto pats = pattern_tuples();
    auto tops = combination_masks(m, d + 1);
    const double p = 1.0 / static_cast<double>(pats.size() * tops.size());
    for (auto T : tops) {
      std::vector<int> pos;
      for (int i = 0; i < m; ++i)
        if ((T >> i) & 1) pos.push_back(i);
      for (const auto& pat : pats) {
        std::vector<std::uint64_t> tup;
        for (auto s : pat) {
          std::uint64_t g = 0;
          for (int i = 0; i <= d; ++i)
            if ((s >> i) & 1) g |= std::uint64_t{1} << pos[i];
          tup.push_back(g);
        }
        out.push_back({p, std::move(tup)});
      }
    }
    return out;
  }

  /// One q-tuple of k-faces of the bound host.
  std::vector<Face> sample(Rng& rng) const {
    require(host != nullptr, ErrorKind::BadParams, "test distribution is not bound to a host");
    if (kind == TestKind::DownUp) {
      Face r1 = host->sample_face(k, rng);
      Face b = r1.without(r1[rng.index(r1.size())]);
      auto fs = host->facets_containing(b);
      std::vector<double> cum;
      double acc = 0;
      for (int j : fs) cum.push_back(acc += host->top_weights()[j]);
      const Face& F = host->facets()[fs[rng.from_cumulative(cum)]];
      Face rest = F.minus(b);
      return {r1, b.with(rest[rng.index(rest.size())])};
    }
    Face t = host->sample_face(d, rng);
    std::vector<VertexId> perm(t.begin(), t.end());
    rng.shuffle(perm);
    std::vector<Face> out;
    for (auto s : canonical()) {
      std::vector<VertexId> vs;
      for (int i = 0; i <= d; ++i)
        if ((s >> i) & 1) vs.push_back(perm[i]);
      out.emplace_back(std::move(vs));
    }
    return out;
  }
};

inline AgreementDistribution v_test(int k) {
  int r = exact_sqrt(k + 1);
  require(r > 0, ErrorKind::NotPerfectSquare, "V-test needs k+1 to be a perfect square");
  return {TestKind::V, 2, k, 2 * k - r + 1, r, nullptr};
}

inline AgreementDistribution z_test(int k) {
  int r = exact_sqrt(k + 1);
  require(r > 0, ErrorKind::NotPerfectSquare, "Z-test needs k+1 to be a perfect square");
  // s2 meets s1 and s3 in disjoint sets of √(k+1) vertices each.
  require(2 * r <= k + 1, ErrorKind::BadParams, "Z-test needs k+1 >= 4");
  return {TestKind::Z, 3, k, 3 * k - 2 * r + 2, r, nullptr};
}

/// Lazy down-up walk: r1 ∼ Pr_k, drop a uniform vertex, climb to r2 ⊃ b with the conditional measure.
inline AgreementDistribution down_up_test(int k) { return {TestKind::DownUp, 2, k, k, 1, nullptr}; }

/// D_X: the test bound to host X.
inline AgreementDistribution extend(AgreementDistribution D, const ComplexPtr& X) {
  require(X->dim() >= D.d, ErrorKind::DimensionTooSmall, "host dimension below the test's requirement");
  D.host = X;
  return D;
}

/// Visits the support of a host-bound test with probabilities; returns the support size.
inline std::size_t for_each_tuple(const AgreementDistribution& D, const std::function<void(double, const std::vector<Face>&)>& fn,
                                  std::size_t budget = 10'000'000) {
  require(D.host != nullptr, ErrorKind::BadParams, "test distribution is not bound to a host");
  const SimplicialComplex& X = *D.host;
  std::size_t count = 0;
  if (D.kind == TestKind::DownUp) {
    const int k = D.k;
    // Up-neighbors of each (k-1)-face.
    std::vector<std::vector<int>> up(X.count(k - 1));
    std::vector<double> mass(X.count(k - 1), 0.0);
    for (std::size_t j = 0; j < X.count(k); ++j) {
      const Face& r = X.face(k, static_cast<int>(j));
      for (VertexId v : r) {
        int b = X.ordinal(r.without(v));
        up[b].push_back(static_cast<int>(j));
        mass[b] += X.weight(k, static_cast<int>(j));
      }
    }
    for (std::size_t j = 0; j < X.count(k); ++j) {
      const Face& r1 = X.face(k, static_cast<int>(j));
      for (VertexId v : r1) {
        int b = X.ordinal(r1.without(v));
        count += up[b].size();
        require(count <= budget, ErrorKind::BudgetExceeded, "test support exceeds the enumeration budget");
        for (int j2 : up[b])
          fn(X.weight(k, static_cast<int>(j)) / (k + 1) * X.weight(k, j2) / mass[b], {r1, X.face(k, j2)});
      }
    }
    return count;
  }
  auto pats = D.pattern_tuples();
  require(static_cast<double>(pats.size()) * static_cast<double>(X.count(D.d)) <= static_cast<double>(budget), ErrorKind::BudgetExceeded,
          "test support exceeds the enumeration budget");
  const double pp = 1.0 / static_cast<double>(pats.size());
  for (std::size_t j = 0; j < X.count(D.d); ++j) {
    const Face& t = X.face(D.d, static_cast<int>(j));
    for (const auto& pat : pats) {
      std::vector<Face> tup;
      for (auto s : pat) tup.push_back(t.select(s));
      fn(X.weight(D.d, static_cast<int>(j)) * pp, tup);
      ++count;
    }
  }
  return count;
}

/// f_{r_i} = f_{r_j} on every shared vertex, for all pairs.
inline bool tuple_agrees(const Ensemble& F, const std::vector<int>& ords) {
  for (std::size_t a = 0; a < ords.size(); ++a)
    for (std::size_t b = a + 1; b < ords.size(); ++b) {
      const Face& ra = F.face(ords[a]);
      const Face& rb = F.face(ords[b]);
      std::size_t i = 0, j = 0;
      while (i < ra.size() && j < rb.size()) {
        if (ra[i] < rb[j]) ++i;
        else if (rb[j] < ra[i]) ++j;
        else {
          if (F.table[ords[a]][i] != F.table[ords[b]][j]) return false;
          ++i, ++j;
        }
      }
    }
  return true;
}

inline bool tuple_agrees(const Ensemble& F, const std::vector<Face>& tup) {
  std::vector<int> ords;
  for (const Face& r : tup) ords.push_back(F.host->ordinal(r));
  return tuple_agrees(F, ords);
}

struct AgreementResult {
  double agreement = 0;
  double ci_low = 0;
  double ci_high = 0;
  std::uint64_t trials = 0;  ///< Monte-Carlo draws, or the support size when exact
  bool exact = false;
};

/// Agree_D(F) by enumeration of D's support on F's host.
inline AgreementResult agree_exact(const Ensemble& F, AgreementDistribution D, std::size_t budget = 10'000'000) {
  require(F.k == D.k, ErrorKind::LevelMismatch, "ensemble level differs from the test level");
  if (!D.host) D = extend(D, F.host);
  double acc = 0;
  AgreementResult r;
  r.trials = for_each_tuple(D, [&](double p, const std::vector<Face>& tup) {
    if (tuple_agrees(F, tup)) acc += p;
  }, budget);
  r.exact = true;
  r.agreement = r.ci_low = r.ci_high = std::clamp(acc, 0.0, 1.0);
  return r;
}

/// Agree_D(F) by seeded Monte-Carlo; the interval is Wilson's at 95%.
inline AgreementResult agree_monte_carlo(const Ensemble& F, AgreementDistribution D, std::uint64_t trials, Rng& rng) {
  require(F.k == D.k, ErrorKind::LevelMismatch, "ensemble level differs from the test level");
  if (!D.host) D = extend(D, F.host);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < trials; ++i) hits += tuple_agrees(F, D.sample(rng));
  AgreementResult r;
  r.trials = trials;
  r.agreement = trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0;
  Interval ci = wilson_interval(hits, trials);
  r.ci_low = ci.low;
  r.ci_high = ci.high;
  return r;
}

// ---------------------------------------------------------------------------------------------
// Supports and agreeing edge sets

/// supp_ζ(g) = {r ∈ X(k), r ⊆ dom g : f_r ≈^{1-ζ} g|_r}, as X(k) ordinals.
inline std::vector<int> support(const Ensemble& F, const LocalFunction& g, double zeta) {
  std::vector<int> out;
  for (std::size_t j = 0; j < F.size(); ++j) {
    const Face& r = F.face(static_cast<int>(j));
    if (!r.is_subset_of(g.domain)) continue;
    if (closeness(F.table[j], g.restrict_to(r), zeta).close) out.push_back(static_cast<int>(j));
  }
  return out;
}

struct AgreementEvent {
  double probability = 0;
  std::vector<Face> tuple;
};

/// A_ζ(g): test tuples with every face in supp_ζ(g) and agreeing local functions. A global g uses D on the host;
/// a g on a face s uses D run inside s.
inline std::vector<AgreementEvent> agreement_edges(const Ensemble& F, const LocalFunction& g, double zeta, const AgreementDistribution& D) {
  std::vector<AgreementEvent> out;
  auto in_supp = [&](const Face& r) { return closeness(F.values(F.host->ordinal(r)), g.restrict_to(r), zeta).close; };
  auto consider = [&](double p, const std::vector<Face>& tup) {
    for (const Face& r : tup)
      if (!in_supp(r)) return;
    if (tuple_agrees(F, tup)) out.push_back({p, tup});
  };
  if (static_cast<int>(g.domain.size()) == F.host->n_vertices()) {
    AgreementDistribution B = D.host ? D : extend(D, F.host);
    for_each_tuple(B, consider);
    return out;
  }
  require(F.host->contains(g.domain), ErrorKind::NotAFace, "local function domain is not a face");
  for (const auto& [p, masks] : D.local_support(static_cast<int>(g.domain.size()))) {
    std::vector<Face> tup;
    for (auto m : masks) tup.push_back(g.domain.select(m));
    consider(p, tup);
  }
  return out;
}

inline double alpha(const Ensemble& F, const LocalFunction& g, double zeta, const AgreementDistribution& D) {
  double a = 0;
  for (const auto& e : agreement_edges(F, g, zeta, D)) a += e.probability;
  return a;
}

/// α_ζ for every g: s → Σ at once against a precomputed local table of D inside s.
struct LocalAlpha {
  Face s;
  std::vector<std::pair<double, std::vector<std::uint64_t>>> table;
  std::vector<std::uint64_t> masks;  ///< distinct k-face masks inside s
  std::vector<int> ords;             ///< their X(k) ordinals
  std::vector<std::vector<int>> tuple_ids;

  LocalAlpha(const Ensemble& F, const Face& face, const AgreementDistribution& D) : s(face), table(D.local_support(static_cast<int>(face.size()))) {
    masks = combination_masks(static_cast<int>(s.size()), F.k + 1);
    std::sort(masks.begin(), masks.end());
    for (auto m : masks) ords.push_back(F.host->ordinal(s.select(m)));
    for (const auto& [p, tup] : table) {
      std::vector<int> ids;
      for (auto m : tup) ids.push_back(static_cast<int>(std::lower_bound(masks.begin(), masks.end(), m) - masks.begin()));
      tuple_ids.push_back(std::move(ids));
    }
  }

  /// α_ζ(g) for g given positionally on s.
  double operator()(const Ensemble& F, const std::vector<int>& g, double zeta, std::vector<char>& in_supp, std::vector<char>& agree_cache) const {
    in_supp.assign(masks.size(), 0);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      const auto& row = F.table[ords[i]];
      std::size_t diff = 0, pos = 0;
      for (std::size_t b = 0; b < s.size(); ++b)
        if ((masks[i] >> b) & 1) diff += row[pos++] != g[b];
      in_supp[i] = static_cast<double>(diff) <= zeta * static_cast<double>(row.size()) + 1e-9;
    }
    if (agree_cache.empty()) {
      agree_cache.resize(table.size());
      for (std::size_t t = 0; t < table.size(); ++t) {
        std::vector<int> o;
        for (int id : tuple_ids[t]) o.push_back(ords[id]);
        agree_cache[t] = tuple_agrees(F, o);
      }
    }
    double a = 0;
    for (std::size_t t = 0; t < table.size(); ++t) {
      if (!agree_cache[t]) continue;
      bool ok = true;
      for (int id : tuple_ids[t]) ok = ok && in_supp[id];
      if (ok) a += table[t].first;
    }
    return a;
  }
};

// ---------------------------------------------------------------------------------------------
// Decoding and lists

/// G(v) = plurality over level-d1 faces s ∋ v of h_s(v), weighted by Pr_{d1}(s)/(d1+1); ties to the smaller symbol.
inline GlobalFunction plurality_decode(const Ensemble& H) {
  const SimplicialComplex& X = *H.host;
  std::vector<std::vector<double>> votes(X.n_vertices(), std::vector<double>(H.sigma, 0.0));
  for (std::size_t j = 0; j < H.size(); ++j) {
    const Face& s = H.face(static_cast<int>(j));
    double w = X.weight(H.k, static_cast<int>(j)) / (H.k + 1);
    for (std::size_t i = 0; i < s.size(); ++i) votes[s[i]][H.table[j][i]] += w;
  }
  GlobalFunction G{H.host, std::vector<int>(X.n_vertices(), 0)};
  for (int v = 0; v < X.n_vertices(); ++v) {
    int best = 0;
    for (int a = 1; a < H.sigma; ++a)
      if (votes[v][a] > votes[v][best] + 1e-15) best = a;
    G.values[v] = best;
  }
  return G;
}

/// Greedy maximal γ-separated sublist (pairwise dist > γ), scanning candidates in order. Returns indices.
inline std::vector<int> greedy_separated_list(const std::vector<std::vector<int>>& cands, double gamma) {
  std::vector<int> kept;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool far = true;
    for (int j : kept)
      if (hamming(cands[i], cands[j]) <= gamma + 1e-12) {
        far = false;
        break;
      }
    if (far) kept.push_back(static_cast<int>(i));
  }
  return kept;
}

struct SeparatedList {
  std::vector<int> indices;
  int rounds = 0;
  double gamma_final = 0;  ///< the list is γ_final-dense and 23γ_final-separated
};

/// L_1 maximal 24γ-separated, L_i maximal 24^i γ-separated inside L_{i-1}, stopped at the first repeat.
inline SeparatedList separated_schedule(const std::vector<std::vector<int>>& cands, double gamma, int max_rounds = 64) {
  SeparatedList out;
  std::vector<int> cur(cands.size());
  for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = static_cast<int>(i);
  double radius = gamma;
  for (int i = 1; i <= max_rounds; ++i) {
    radius *= 24;
    std::vector<std::vector<int>> sub;
    for (int j : cur) sub.push_back(cands[j]);
    std::vector<int> next;
    for (int j : greedy_separated_list(sub, radius)) next.push_back(cur[j]);
    out.rounds = i;
    bool repeat = next == cur;
    cur = std::move(next);
    if (repeat && i > 1) {
      out.gamma_final = radius / 23.0;
      break;
    }
    out.gamma_final = radius * 24 / 23.0;
  }
  out.indices = std::move(cur);
  return out;
}

struct ListMatch {
  std::vector<int> pi;  ///< pi[j] = k iff L1[j] ≈^{1-γ} L2[k]; -1 when unmatched
  bool preconditions_hold = true;
  std::string violation;
  std::pair<int, int> witness{-1, -1};
};

/// The partial map without precondition checks (a first close match wins).
inline ListMatch match_lists_unchecked(const std::vector<std::vector<int>>& L1, const std::vector<std::vector<int>>& L2, double gamma) {
  ListMatch m;
  m.pi.assign(L1.size(), -1);
  for (std::size_t j = 0; j < L1.size(); ++j)
    for (std::size_t k = 0; k < L2.size(); ++k)
      if (closeness(L1[j], L2[k], gamma).close) {
        m.pi[j] = static_cast<int>(k);
        break;
      }
  return m;
}

/// Claim-style matching: both lists 2γ-separated and L1 γ-dense in L2; throws PreconditionViolated with a witness.
inline ListMatch match_lists(const std::vector<std::vector<int>>& L1, const std::vector<std::vector<int>>& L2, double gamma) {
  auto check_sep = [&](const std::vector<std::vector<int>>& L, const char* which) {
    for (std::size_t a = 0; a < L.size(); ++a)
      for (std::size_t b = a + 1; b < L.size(); ++b)
        if (hamming(L[a], L[b]) <= 2 * gamma + 1e-12)
          fail(ErrorKind::PreconditionViolated, std::string(which) + " is not 2γ-separated: elements " + std::to_string(a) + " and " + std::to_string(b));
  };
  check_sep(L1, "L1");
  check_sep(L2, "L2");
  for (std::size_t k = 0; k < L2.size(); ++k) {
    bool hit = false;
    for (const auto& g : L1) hit = hit || closeness(g, L2[k], gamma).close;
    if (!hit) fail(ErrorKind::PreconditionViolated, "L1 is not γ-dense in L2: element " + std::to_string(k) + " of L2 has no close partner");
  }
  return match_lists_unchecked(L1, L2, gamma);
}

// ---------------------------------------------------------------------------------------------
// Ensemble file format

inline std::string write_ensemble(const Ensemble& F) {
  std::ostringstream os;
  os << "k " << F.k << " sigma " << F.sigma << '\n';
  for (std::size_t j = 0; j < F.size(); ++j) {
    const Face& r = F.face(static_cast<int>(j));
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
    os << " :";
    for (int x : F.table[j]) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

inline Ensemble parse_ensemble(const std::string& text, const ComplexPtr& X) {
  std::istringstream in(text);
  std::string line, tok;
  Ensemble F;
  F.host = X;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    if (!(ls >> tok)) continue;
    if (!header) {
      std::string s;
      if (tok != "k" || !(ls >> F.k >> s >> F.sigma) || s != "sigma") fail(ErrorKind::ParseError, "expected header `k <k> sigma <n>`");
      require(F.k >= 0 && F.k <= X->dim(), ErrorKind::LevelMismatch, "ensemble level outside the host");
      F.table.assign(X->count(F.k), {});
      header = true;
      continue;
    }
    std::vector<VertexId> vs;
    std::vector<int> syms;
    bool after = false;
    do {
      if (tok == ":") {
        after = true;
        continue;
      }
      try {
        (after ? syms : vs).push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad token `" + tok + "`");
      }
    } while (ls >> tok);
    if (!after || vs.size() != syms.size()) fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected `vertices : symbols`");
    if (!std::is_sorted(vs.begin(), vs.end())) fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": vertices must be sorted");
    Face r(vs);
    auto ord = X->find(r);
    if (!ord || r.dim() != F.k) fail(ErrorKind::NotAFace, "line " + std::to_string(lineno) + ": not a k-face");
    F.table[*ord] = syms;
  }
  if (!header) fail(ErrorKind::ParseError, "missing header");
  F.validate();
  return F;
}

}  // namespace hdx
