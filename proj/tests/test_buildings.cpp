#include "test_util.hpp"

using namespace hdx;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

/// [n choose k]_q by the Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
std::uint64_t pascal_q(int n, int k, int q) {
  if (k == 0 || k == n) return 1;
  if (k < 0 || k > n) return 0;
  std::uint64_t qk = 1;
  for (int i = 0; i < k; ++i) qk *= static_cast<std::uint64_t>(q);
  return pascal_q(n - 1, k - 1, q) + qk * pascal_q(n - 1, k, q);
}

/// Number of complete flags in F_q^d: the q-factorial ∏ (q^i - 1)/(q - 1).
std::uint64_t flag_count(int d, int q) {
  std::uint64_t c = 1;
  for (int i = 1; i <= d; ++i) c *= pascal_q(i, 1, q);
  return c;
}

bool is_rref(const Subspace& s) {
  int last = -1;
  for (const auto& row : s.rows) {
    int p = 0;
    while (p < s.d && row[p] == 0) ++p;
    if (p == s.d || row[p] != 1 || p <= last) return false;
    for (const auto& other : s.rows)
      if (&other != &row && other[p] != 0) return false;
    last = p;
  }
  return true;
}

}  // namespace

TEST(Subspaces, CountsAreGaussianBinomials) {
  for (int q : {2, 3})
    for (int d = 2; d <= 5; ++d)
      for (int k = 1; k <= d - 1; ++k) {
        auto S = enumerate_subspaces(d, q, k);
        EXPECT_EQ(S.size(), pascal_q(d, k, q)) << d << " " << k << " " << q;
        EXPECT_EQ(gaussian_binomial(d, k, q), pascal_q(d, k, q));
      }
  EXPECT_EQ(enumerate_subspaces(3, 2, 1).size(), 7u);
  EXPECT_EQ(enumerate_subspaces(3, 2, 2).size(), 7u);
  EXPECT_EQ(enumerate_subspaces(2, 3, 1).size(), 4u);
}

TEST(Subspaces, CanonicalAndDistinct) {
  for (int q : {2, 3})
    for (int d = 2; d <= 4; ++d)
      for (int k = 1; k <= d - 1; ++k) {
        auto S = enumerate_subspaces(d, q, k);
        std::set<std::vector<std::vector<int>>> seen;
        for (const auto& s : S) {
          EXPECT_TRUE(is_rref(s)) << s.str();
          EXPECT_EQ(detail::rank_mod(s.rows, q), k);
          EXPECT_TRUE(seen.insert(s.rows).second) << s.str();
        }
        // Distinct echelon forms span distinct subspaces.
        for (std::size_t a = 0; a < S.size() && a < 40; ++a)
          for (std::size_t b = a + 1; b < S.size() && b < 40; ++b) EXPECT_FALSE(contained_in(S[a], S[b]));
      }
}

TEST(Subspaces, Errors) {
  EXPECT_EQ(kind_of([] { enumerate_subspaces(3, 4, 1); }), ErrorKind::UnsupportedField);
  EXPECT_EQ(kind_of([] { enumerate_subspaces(3, 1, 1); }), ErrorKind::UnsupportedField);
  EXPECT_EQ(kind_of([] { enumerate_subspaces(3, 2, 0); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { enumerate_subspaces(3, 2, 3); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { spherical_building(3, 6); }), ErrorKind::UnsupportedField);
  EXPECT_EQ(kind_of([] { spherical_building(1, 2); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { spherical_building(4, 2, 100); }), ErrorKind::BudgetExceeded);
}

TEST(Building, FanoPlane) {
  BuildingComplex B = spherical_building(3, 2);
  EXPECT_EQ(B.complex->n_vertices(), 14);
  EXPECT_EQ(B.complex->dim(), 1);
  EXPECT_EQ(B.complex->count(1), 21u);
  for (VertexId v = 0; v < 14; ++v) EXPECT_EQ(B.complex->adjacency()[v].size(), 3u);
  EXPECT_TRUE(B.complex->is_connected());
}

TEST(Building, ProjectiveLineIsZeroDimensional) {
  for (int q : {2, 3, 5}) {
    BuildingComplex B = spherical_building(2, q);
    EXPECT_EQ(B.complex->dim(), 0);
    EXPECT_EQ(B.complex->n_vertices(), q + 1);
  }
}

TEST(Building, FacetsAreCompleteFlags) {
  for (auto [d, q] : {std::pair{3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}}) {
    BuildingComplex B = spherical_building(d, q);
    EXPECT_EQ(B.complex->dim(), d - 2);
    EXPECT_EQ(B.complex->count(d - 2), flag_count(d, q)) << d << " " << q;
    std::size_t n = 0;
    for (int k = 1; k < d; ++k) n += pascal_q(d, k, q);
    EXPECT_EQ(static_cast<std::size_t>(B.complex->n_vertices()), n);
    for (const Face& f : B.complex->faces(d - 2)) {
      for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(B.vertex_dim(f[i]), static_cast<int>(i) + 1);
      for (std::size_t i = 0; i + 1 < f.size(); ++i) EXPECT_TRUE(contained_in(B.vertices[f[i]], B.vertices[f[i + 1]]));
    }
  }
  EXPECT_EQ(spherical_building(4, 2).complex->count(2), 315u);
}

TEST(Building, EdgesAreExactlyTheIncidences) {
  BuildingComplex B = spherical_building(4, 2);
  const int n = B.complex->n_vertices();
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) {
      const Subspace& V = B.vertices[a];
      const Subspace& W = B.vertices[b];
      bool inc = V.dim() != W.dim() && (V.dim() < W.dim() ? contained_in(V, W) : contained_in(W, V));
      EXPECT_EQ(B.complex->contains(Face{a, b}), inc);
    }
}

TEST(Building, CliqueAndPartite) {
  for (auto [d, q] : {std::pair{3, 2}, {3, 3}, {4, 2}, {4, 3}}) {
    BuildingComplex B = spherical_building(d, q);
    EXPECT_TRUE(is_clique_complex(*B.complex));
    auto parts = is_partite(*B.complex, d - 1);
    ASSERT_TRUE(parts.has_value());
    // The coloring is the dimension partition, up to naming the classes.
    for (const auto& cls : *parts) {
      ASSERT_FALSE(cls.empty());
      const int k = B.vertex_dim(cls[0]);
      for (VertexId v : cls) EXPECT_EQ(B.vertex_dim(v), k);
      EXPECT_EQ(cls.size(), pascal_q(d, k, q));
    }
  }
  SpectralReport r = second_eigenvalue(skeleton_graph(*spherical_building(3, 3).complex));
  EXPECT_TRUE(r.bipartite);
}

TEST(Building, FanoIncidenceGraphIsNotSimplyConnected) {
  // A graph with a cycle has a connected double cover, since there are no triangles to constrain it.
  auto X = spherical_building(3, 2).complex;
  SimplyConnectedReport rep = is_simply_connected(X, 2);
  EXPECT_FALSE(rep.simply_connected);
  ASSERT_TRUE(rep.witness_cover.has_value());
  EXPECT_TRUE(rep.witness_cover->total->is_connected());
}

TEST(Building, RankThreeBuildingIsSimplyConnected) {
  auto X = spherical_building(4, 2).complex;
  EXPECT_TRUE(is_simply_connected(X, 2).simply_connected);
}

TEST(Expansion, FanoPlane) {
  BuildingExpansion r = building_expansion_report(3, 2);
  EXPECT_NEAR(r.one_sided.lambda, std::sqrt(2.0) / 3, 1e-9);
  EXPECT_NEAR(r.skeleton_lambda_abs, std::sqrt(2.0) / 3, 1e-9);
  EXPECT_LE(r.one_sided.lambda, 1 / std::sqrt(2.0));
  EXPECT_NEAR(r.fitted_constant, r.one_sided.lambda * std::sqrt(2.0), 1e-12);
}

TEST(Expansion, PlaneOverF3) {
  // Incidence graph of PG(2,3): adjacency eigenvalues ±4 and ±√3.
  BuildingExpansion r = building_expansion_report(3, 3);
  EXPECT_NEAR(r.one_sided.lambda, std::sqrt(3.0) / 4, 1e-9);
  EXPECT_LE(r.one_sided.lambda, 1 / std::sqrt(3.0));
}

TEST(Expansion, RankThreeLinks) {
  // Vertex links are Fano incidence graphs or K_{3,3}, so the level-0 maximum is √2/3.
  BuildingExpansion r = building_expansion_report(4, 2);
  ASSERT_EQ(r.one_sided.level_max.size(), 2u);
  EXPECT_NEAR(r.one_sided.level_max[1], std::sqrt(2.0) / 3, 1e-9);
  EXPECT_TRUE(r.one_sided.all_links_connected);
  EXPECT_GE(r.one_sided.lambda, r.one_sided.level_max[1] - 1e-12);
  ASSERT_EQ(r.skeleton_two_sided.size(), 1u);
  EXPECT_GE(r.skeleton_two_sided[0], 0.0);
  EXPECT_LT(r.skeleton_two_sided[0], 1.0);
  EXPECT_EQ(kind_of([] { building_expansion_report(2, 2); }), ErrorKind::BadParams);
}
