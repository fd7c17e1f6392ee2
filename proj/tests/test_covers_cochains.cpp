#include "test_util.hpp"

using namespace hdx;
using hdx::testing::random_cocycle_instance;
using hdx::testing::random_pure_complex;
using hdx::testing::seam_cocycle;

namespace {

CoverMap hexagon_over_triangle() {
  auto Y = share(cycle_complex(6));
  auto X = share(cycle_complex(3));
  return validate_cover(Y, X, {0, 1, 2, 0, 1, 2});
}

ComplexPtr triangle() { return share(complete_complex(3, 2)); }

Permutation cycle_perm(int l) {
  std::vector<int> c(l);
  for (int i = 0; i < l; ++i) c[i] = (i + 1) % l;
  return Permutation(c);
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// Permutations

TEST(Permutation, GroupLaws) {
  Rng rng(1);
  for (int l = 1; l <= 5; ++l)
    for (int t = 0; t < 20; ++t) {
      auto a = Permutation::random(l, rng), b = Permutation::random(l, rng), c = Permutation::random(l, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_TRUE((a * a.inverse()).is_identity());
      EXPECT_TRUE((a.inverse() * a).is_identity());
      EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    }
  EXPECT_THROW(Permutation({0, 0, 1}), Error);
  EXPECT_THROW(Permutation({0, 3}), Error);
}

TEST(Permutation, RankIsABijection) {
  for (int l = 1; l <= 5; ++l) {
    auto all = Permutation::all(l);
    ASSERT_EQ(static_cast<int>(all.size()), factorial(l));
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].rank(), static_cast<int>(i));
  }
}

// ---------------------------------------------------------------------------------------------
// validate_cover and friends

TEST(ValidateCover, TrivialCoverOfATriangle) {
  auto X = triangle();
  auto Y = share(SimplicialComplex::from_facets({Face{0, 1, 2}, Face{3, 4, 5}}));
  CoverMap cm = validate_cover(Y, X, {0, 1, 2, 0, 1, 2});
  EXPECT_EQ(cover_degree(cm), 2);
  int comps = 0;
  cm.total->components(&comps);
  EXPECT_EQ(comps, 2);
}

TEST(ValidateCover, HexagonOverTriangle) {
  CoverMap cm = hexagon_over_triangle();
  EXPECT_EQ(cover_degree(cm), 2);
  EXPECT_TRUE(cm.total->is_connected());
}

TEST(ValidateCover, Violations) {
  // Collapsing a square onto one edge doubles every neighbor.
  auto C4 = share(cycle_complex(4));
  auto edge = share(SimplicialComplex::from_facets({Face{0, 1}}));
  EXPECT_EQ(kind_of([&] { validate_cover(C4, edge, {0, 1, 0, 1}); }), ErrorKind::LinkNotIsomorphic);
  // The path 0-1-2 over a triangle hits a missing edge's link only partially.
  auto path = share(graph_complex({{0, 1}, {1, 2}}));
  EXPECT_EQ(kind_of([&] { validate_cover(path, share(cycle_complex(3)), {0, 1, 2}); }), ErrorKind::LinkNotIsomorphic);
  auto two = share(SimplicialComplex::from_facets({Face{0, 1}, Face{1, 2}}));
  EXPECT_EQ(kind_of([&] { validate_cover(share(cycle_complex(3)), two, {0, 1, 2}); }), ErrorKind::NotHomomorphism);
  EXPECT_EQ(kind_of([&] { validate_cover(edge, share(cycle_complex(3)), {0, 1}); }), ErrorKind::NotSurjective);
  EXPECT_EQ(kind_of([&] { validate_cover(edge, edge, {0}); }), ErrorKind::NotHomomorphism);
}

TEST(CoverDegree, Cases) {
  auto X = share(complete_complex(5, 2));
  EXPECT_EQ(cover_degree(trivial_cover(X, 3)), 3);
  EXPECT_EQ(cover_degree(validate_cover(X, X, {0, 1, 2, 3, 4})), 1);
  auto base = share(SimplicialComplex::from_facets({Face{0, 1}, Face{2, 3}}));
  auto total = share(SimplicialComplex::from_facets({Face{0, 1}, Face{2, 3}, Face{4, 5}}));
  CoverMap cm = validate_cover(total, base, {0, 1, 0, 1, 2, 3});
  EXPECT_EQ(kind_of([&] { cover_degree(cm); }), ErrorKind::Irregular);
}

TEST(FacePreimages, Cases) {
  CoverMap hex = hexagon_over_triangle();
  for (const Face& e : hex.base->faces(1)) {
    auto pre = face_preimages(hex, e);
    ASSERT_EQ(pre.size(), 2u);
    EXPECT_TRUE(pre[0].disjoint(pre[1]));
    for (const Face& f : pre) EXPECT_EQ(hex.image(f), e);
  }
  auto v = face_preimages(hex, Face{1});
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], Face{1});
  EXPECT_EQ(v[1], Face{4});
  CoverMap triv = trivial_cover(share(complete_complex(4, 3)), 3);
  auto copies = face_preimages(triv, Face{0, 1, 2, 3});
  EXPECT_EQ(copies.size(), 3u);
  EXPECT_THROW(face_preimages(hex, Face{0, 1, 2}), Error);
}

TEST(InducedCochain, TrivialCoverIsIdentity) {
  Cochain1 psi = induced_cochain(trivial_cover(share(complete_complex(6, 2)), 3));
  EXPECT_EQ(wt(psi), 0.0);
}

TEST(InducedCochain, HexagonHolonomyIsATransposition) {
  CoverMap hex = hexagon_over_triangle();
  Cochain1 psi = induced_cochain(hex);
  Permutation loop = psi.get(2, 0) * psi.get(1, 2) * psi.get(0, 1);
  EXPECT_EQ(loop, Permutation::transposition(2, 0, 1));
}

TEST(InducedCochain, CoversGiveCocycles) {
  Rng rng(2);
  for (int t = 0; t < 30; ++t) {
    Cochain1 psi = random_cocycle_instance(rng);
    CoverMap cm = induced_cover(psi);
    Cochain1 back = induced_cochain(cm);
    EXPECT_TRUE(is_cocycle(back));
    for (const Permutation& p : delta(back)) EXPECT_TRUE(p.is_identity());
  }
}

// ---------------------------------------------------------------------------------------------
// Round trips

TEST(RoundTrip, CochainCoverCochain) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    Cochain1 psi = random_cocycle_instance(rng);
    ASSERT_TRUE(is_cocycle(psi));
    CoverMap cm = induced_cover(psi);
    EXPECT_EQ(cover_degree(cm), psi.ell());
    EXPECT_EQ(cm.total->n_vertices(), psi.complex().n_vertices() * psi.ell());
    EXPECT_TRUE(induced_cochain(cm) == psi) << "instance " << t;
    EXPECT_NO_THROW(validate_cover(cm.total, cm.base, cm.rho));
  }
}

TEST(RoundTrip, CoverCochainCoverIsIsomorphic) {
  auto X = share(circulant_complex(28, 9));
  auto Y = share(circulant_complex(56, 9));
  std::vector<VertexId> rho;
  for (int i = 0; i < 56; ++i) rho.push_back(i % 28);
  CoverMap cm = validate_cover(Y, X, rho);
  CoverMap again = induced_cover(induced_cochain(cm));
  auto iso = cover_isomorphism(cm, again);
  ASSERT_TRUE(iso.has_value());
  // Applying the fiber relabeling carries every face of one total complex onto the other.
  for (const Face& f : cm.total->facets()) {
    std::vector<VertexId> vs;
    for (VertexId y : f) vs.push_back(again.vertex(cm.rho[y], (*iso)[cm.rho[y]](cm.fiber_index[y])));
    EXPECT_TRUE(again.total->contains(Face(vs)));
  }
  EXPECT_EQ(cm.total->total_faces(), again.total->total_faces());
}

TEST(RoundTrip, NonIsomorphicCoversAreRejected) {
  auto X = share(circulant_complex(12, 2));
  CoverMap connected = induced_cover(seam_cocycle(X, 2, Permutation::transposition(2, 0, 1)));
  CoverMap triv = trivial_cover(X, 2);
  EXPECT_TRUE(connected.total->is_connected());
  EXPECT_FALSE(cover_isomorphism(connected, triv).has_value());
  Rng rng(4);
  CoverMap gauged = induced_cover(gauge(induced_cochain(connected), random_gauge(12, 2, rng)));
  EXPECT_TRUE(cover_isomorphism(connected, gauged).has_value());
}

// ---------------------------------------------------------------------------------------------
// δ, wt and dist

TEST(Delta, CoboundariesAreCocycles) {
  auto X = share(complete_complex(7, 2));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    Cochain1 psi = coboundary(X, random_gauge(7, 1 + static_cast<int>(seed % 4), rng));
    EXPECT_EQ(wt_delta(psi), 0.0);
  }
}

TEST(Delta, WeightMatchesTriangleCount) {
  auto X = share(complete_complex(5, 2));
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    Cochain1 psi = random_cochain(X, 2, rng);
    int bad = 0;
    for (const Face& f : X->faces(2)) {
      VertexId u = f[0], v = f[1], w = f[2];
      Permutation loop = psi.get(w, u) * psi.get(v, w) * psi.get(u, v);
      bad += !loop.is_identity();
    }
    EXPECT_NEAR(wt_delta(psi), bad / 10.0, 1e-12);
    EXPECT_EQ(static_cast<int>(violated_triangles(psi).size()), bad);
  }
}

TEST(Dist, Basics) {
  auto K4 = share(complete_complex(4, 1));
  Cochain1 id(K4, 2), one(K4, 2);
  one.set(1, 3, Permutation::transposition(2, 0, 1));
  EXPECT_EQ(dist(id, id), 0.0);
  EXPECT_NEAR(dist(id, one), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(wt(one), 1.0 / 6.0, 1e-15);
  Cochain1 other(share(complete_complex(4, 1)), 3);
  EXPECT_EQ(kind_of([&] { dist(id, other); }), ErrorKind::BaseMismatch);
}

TEST(Dist, TriangleInequalityAndQuotient) {
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    auto X = share(random_pure_complex(10, 2, 15, rng, true));
    Cochain1 a = random_cochain(X, 3, rng), b = random_cochain(X, 3, rng), c = random_cochain(X, 3, rng);
    EXPECT_LE(dist(a, c), dist(a, b) + dist(b, c) + 1e-12);
    EXPECT_NEAR(dist(a, b), wt(edgewise_quotient(a, b)), 1e-12);
  }
}

// ---------------------------------------------------------------------------------------------
// induced_cover

TEST(InducedCover, IdentityIsTrivial) {
  auto X = share(complete_complex(5, 2));
  CoverMap cm = induced_cover(Cochain1(X, 2));
  int comps = 0;
  cm.total->components(&comps);
  EXPECT_EQ(comps, 2);
}

TEST(InducedCover, TransposedTriangleIsAHexagon) {
  auto C3 = share(cycle_complex(3));
  Cochain1 psi(C3, 2);
  psi.set(0, 2, Permutation::transposition(2, 0, 1));
  CoverMap cm = induced_cover(psi);
  EXPECT_TRUE(cm.total->is_connected());
  EXPECT_EQ(cm.total->n_vertices(), 6);
  EXPECT_EQ(cm.total->count(1), 6u);
  for (VertexId y = 0; y < 6; ++y) EXPECT_EQ(cm.total->adjacency()[y].size(), 2u);
}

TEST(InducedCover, CliqueComplexesLiftToCliqueComplexes) {
  Rng rng(7);
  for (auto [m, r, l] : std::vector<std::tuple<int, int, int>>{{12, 2, 2}, {16, 3, 3}, {20, 4, 2}}) {
    auto X = share(circulant_complex(m, r));
    ASSERT_TRUE(is_clique_complex(*X));
    Cochain1 psi = gauge(seam_cocycle(X, r, cycle_perm(l)), random_gauge(m, l, rng));
    CoverMap cm = induced_cover(psi);
    EXPECT_TRUE(cm.total->is_connected());
    EXPECT_TRUE(is_clique_complex(*cm.total));
  }
}

TEST(InducedCover, RejectsNonCocycles) {
  auto X = triangle();
  Cochain1 psi(X, 2);
  psi.set(0, 1, Permutation::transposition(2, 0, 1));
  EXPECT_EQ(kind_of([&] { induced_cover(psi); }), ErrorKind::NotACocycle);
}

TEST(InducedCover, ConnectedCoversOfExpandersExpand) {
  // Connected covers of λ-HDXs are λ/(1-λ)-HDXs.
  std::vector<CoverMap> covers;
  for (int n = 5; n <= 10; ++n) covers.push_back(all_transposition_cover(n));
  for (auto [m, r] : std::vector<std::pair<int, int>>{{30, 5}, {24, 4}}) {
    auto X = share(circulant_complex(m, r));
    covers.push_back(induced_cover(seam_cocycle(X, r, Permutation::transposition(2, 0, 1))));
  }
  for (const CoverMap& cm : covers) {
    ASSERT_TRUE(cm.total->is_connected());
    double lx = hdx_parameter(*cm.base, SpectralMode::TwoSided).lambda;
    double ly = hdx_parameter(*cm.total, SpectralMode::TwoSided).lambda;
    if (lx < 1) {
      EXPECT_LE(ly, lx / (1 - lx) + 1e-9) << cm.base->n_vertices();
    }
  }
}

// ---------------------------------------------------------------------------------------------
// restrict_cover

TEST(RestrictCover, Cases) {
  Rng rng(8);
  auto X = share(complete_complex(5, 2));
  CoverMap cm = induced_cover(coboundary(X, random_gauge(5, 2, rng)));
  CoverMap all = restrict_cover(cm, {0, 1, 2, 3, 4});
  EXPECT_EQ(all.total->total_faces(), cm.total->total_faces());
  CoverMap tri = restrict_cover(cm, {1, 2, 4});
  EXPECT_EQ(cover_degree(tri), 2);
  EXPECT_EQ(tri.base->dim(), 2);
  EXPECT_EQ(tri.base->facets().size(), 1u);
  EXPECT_EQ(tri.total->facets().size(), 2u);
  CoverMap pt = restrict_cover(cm, {3});
  EXPECT_EQ(pt.total->dim(), 0);
  EXPECT_EQ(pt.total->n_vertices(), 2);
}

// ---------------------------------------------------------------------------------------------
// nearest_cocycle

TEST(NearestCocycle, CocycleIsItsOwnNearest) {
  Rng rng(9);
  auto X = share(complete_complex(6, 2));
  Cochain1 psi = coboundary(X, random_gauge(6, 3, rng));
  for (auto s : {CocycleStrategy::Exhaustive, CocycleStrategy::GaugeTree, CocycleStrategy::LocalSearch}) {
    NearestCocycle nc = nearest_cocycle(psi, s);
    EXPECT_EQ(nc.dist, 0.0);
    EXPECT_TRUE(nc.phi == psi);
  }
}

TEST(NearestCocycle, SingleTriangleOneBadEdge) {
  auto X = triangle();
  Cochain1 psi(X, 2);
  psi.set(1, 2, Permutation::transposition(2, 0, 1));
  NearestCocycle nc = nearest_cocycle(psi, CocycleStrategy::Exhaustive);
  EXPECT_NEAR(nc.dist, 1.0 / 3.0, 1e-15);
  EXPECT_TRUE(is_cocycle(nc.phi));
  EXPECT_TRUE(nc.exact);
}

TEST(NearestCocycle, RecoversPerturbedCoboundary) {
  auto X = share(complete_complex(6, 2));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(100 + seed);
    Cochain1 orig = coboundary(X, random_gauge(6, 2, rng));
    Cochain1 psi = orig;
    int e = rng.index(psi.size());
    psi.set_at(e, psi.at(e) * Permutation::transposition(2, 0, 1));
    for (auto s : {CocycleStrategy::Exhaustive, CocycleStrategy::GaugeTree}) {
      NearestCocycle nc = nearest_cocycle(psi, s);
      EXPECT_NEAR(nc.dist, 1.0 / 15.0, 1e-15);
      EXPECT_TRUE(nc.phi == orig);
    }
    NearestCocycle ls = nearest_cocycle(psi, CocycleStrategy::LocalSearch);
    EXPECT_TRUE(is_cocycle(ls.phi));
    EXPECT_FALSE(ls.exact);
  }
}

TEST(NearestCocycle, ExhaustiveFindsNontrivialClasses) {
  // On a non-simply-connected base the nearest cocycle may lie outside the coboundaries.
  auto X = share(circulant_complex(8, 2));
  Cochain1 seam = seam_cocycle(X, 2, Permutation::transposition(2, 0, 1));
  Cochain1 psi = seam;
  psi.set_at(0, psi.at(0) * Permutation::transposition(2, 0, 1));
  NearestCocycle ex = nearest_cocycle(psi, CocycleStrategy::Exhaustive);
  NearestCocycle gt = nearest_cocycle(psi, CocycleStrategy::GaugeTree);
  EXPECT_NEAR(ex.dist, dist(psi, seam), 1e-15);
  EXPECT_GE(gt.dist, ex.dist);
  EXPECT_TRUE(gt.coboundaries_only);
}

TEST(NearestCocycle, BudgetExceeded) {
  auto X = share(complete_complex(12, 2));
  Rng rng(10);
  Cochain1 psi = random_cochain(X, 3, rng);
  EXPECT_EQ(kind_of([&] { nearest_cocycle(psi, CocycleStrategy::Exhaustive, 1000); }), ErrorKind::BudgetExceeded);
}

// ---------------------------------------------------------------------------------------------
// Cosystolic estimate and simple connectivity

TEST(Cosystolic, RestrictedExhaustiveSearch) {
  auto X = share(complete_complex(4, 2));
  Rng rng(11);
  CosystolicEstimate est = cosystolic_expansion_estimate(X, 2, 10'000'000, 0, rng, {0, 1, 2, 3});
  EXPECT_TRUE(est.exhaustive);
  EXPECT_EQ(est.evaluated, 16u);
  EXPECT_GT(est.beta_hat, 0.0);
  EXPECT_TRUE(std::isfinite(est.beta_hat));
  ASSERT_TRUE(est.witness.has_value());
  EXPECT_NEAR(est.witness_wt_delta / est.witness_dist, est.beta_hat, 1e-12);
}

TEST(Cosystolic, CocyclesAreExcluded) {
  auto X = share(cycle_complex(5));
  Rng rng(12);
  CosystolicEstimate est = cosystolic_expansion_estimate(X, 2, 1, 50, rng);
  EXPECT_FALSE(est.witness.has_value());
  EXPECT_TRUE(std::isinf(est.beta_hat));
}

TEST(Cosystolic, EstimateIsMonotoneInTheSampleBudget) {
  auto X = share(complete_complex(6, 2));
  double prev = std::numeric_limits<double>::infinity();
  for (std::uint64_t samples : {5, 20, 80}) {
    Rng rng(13);
    CosystolicEstimate est = cosystolic_expansion_estimate(X, 2, 10'000, samples, rng);
    EXPECT_FALSE(est.exhaustive);
    EXPECT_LE(est.beta_hat, prev);
    prev = est.beta_hat;
  }
}

TEST(SimplyConnected, Cases) {
  auto C3 = share(cycle_complex(3));
  auto r = is_simply_connected(C3, 3);
  EXPECT_FALSE(r.simply_connected);
  EXPECT_EQ(r.ell_max, 2);
  ASSERT_TRUE(r.witness_cover.has_value());
  EXPECT_TRUE(r.witness_cover->total->is_connected());
  EXPECT_EQ(r.witness_cover->total->n_vertices(), 6);
  EXPECT_TRUE(is_simply_connected(share(complete_complex(5, 2)), 3).simply_connected);
  auto two = share(SimplicialComplex::from_facets({Face{0, 1, 2}, Face{3, 4, 5}}));
  EXPECT_EQ(kind_of([&] { is_simply_connected(two, 2); }), ErrorKind::NotConnected);
}

// ---------------------------------------------------------------------------------------------
// Flag pushforward

TEST(FlagPushforward, IdentityAndCocycles) {
  auto X = triangle();
  FlagComplex G = flag_complex(X);
  EXPECT_EQ(wt(flag_pushforward(G, Cochain1(G.complex, 2))), 0.0);
  Rng rng(14);
  for (int t = 0; t < 20; ++t) {
    Cochain1 phi = coboundary(G.complex, random_gauge(G.complex->n_vertices(), 3, rng));
    EXPECT_TRUE(is_cocycle(flag_pushforward(G, phi)));
  }
}

TEST(FlagPushforward, LocalFlagRelationsControlEachTriangle) {
  auto X = share(complete_complex(4, 2));
  FlagComplex G = flag_complex(X);
  Rng rng(15);
  for (int t = 0; t < 40; ++t) {
    Cochain1 phi = coboundary(G.complex, random_gauge(G.complex->n_vertices(), 2, rng));
    int e = rng.index(phi.size());
    phi.set_at(e, phi.at(e) * Permutation::transposition(2, 0, 1));
    Cochain1 psi = flag_pushforward(G, phi);
    for (const Face& T : X->faces(2)) {
      bool flags_ok = true;
      for (VertexId v : T)
        for (const Face& edge : {T.without(T[0]), T.without(T[1]), T.without(T[2])}) {
          if (!edge.contains(v)) continue;
          Face chain{G.vertex_of(Face{v}), G.vertex_of(edge), G.vertex_of(T)};
          flags_ok = flags_ok && delta_at(phi, chain).is_identity();
        }
      if (flags_ok) {
        EXPECT_TRUE(delta_at(psi, T).is_identity()) << T.str();
      }
    }
  }
}

TEST(FlagPushforward, MissingFlagEdge) {
  FlagComplex G = flag_complex(triangle());
  auto bare = share(SimplicialComplex::from_facets({Face{0}, Face{1}, Face{2}, Face{3}, Face{4}, Face{5}, Face{6}}));
  EXPECT_EQ(kind_of([&] { flag_pushforward(G, Cochain1(bare, 2)); }), ErrorKind::MissingFlagEdge);
}

// ---------------------------------------------------------------------------------------------
// Degenerate ℓ = 1 and file formats

TEST(DegenerateEll, EverythingIsTrivial) {
  auto X = share(complete_complex(5, 2));
  Cochain1 psi(X, 1);
  EXPECT_TRUE(is_cocycle(psi));
  CoverMap cm = induced_cover(psi);
  EXPECT_EQ(cover_degree(cm), 1);
  EXPECT_EQ(nearest_cocycle(psi, CocycleStrategy::Exhaustive).dist, 0.0);
  EXPECT_TRUE(is_simply_connected(X, 1).simply_connected);
}

TEST(CochainIo, RoundTripAndErrors) {
  Rng rng(16);
  auto X = share(complete_complex(6, 2));
  Cochain1 psi = random_cochain(X, 3, rng);
  EXPECT_TRUE(parse_cochain(write_cochain(psi), X) == psi);
  EXPECT_EQ(kind_of([&] { parse_cochain("0 1 0 1\n", X); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { parse_cochain("ell 2\n0 1 0\n", X); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { parse_cochain("ell 2\n0 1 1 1\n", X); }), ErrorKind::ParseError);
  auto C5 = share(cycle_complex(5));
  EXPECT_EQ(kind_of([&] { parse_cochain("ell 2\n0 2 1 0\n", C5); }), ErrorKind::NotAFace);
  Cochain1 rev = parse_cochain("ell 3\n2 0  1 2 0\n", X);
  EXPECT_EQ(rev.get(2, 0), Permutation({1, 2, 0}));
}

TEST(CoverIo, RoundTrip) {
  CoverMap hex = hexagon_over_triangle();
  CoverFile cf = parse_cover_map(write_cover_map(hex, "tri.txt", "hex.txt"));
  EXPECT_EQ(cf.base_ref, "tri.txt");
  EXPECT_EQ(cf.total_ref, "hex.txt");
  EXPECT_EQ(cf.rho, hex.rho);
}
