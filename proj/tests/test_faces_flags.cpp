#include "test_util.hpp"

using namespace hdx;
using hdx::testing::edge_set;
using hdx::testing::random_pure_complex;

namespace {

std::set<std::vector<VertexId>> facet_set(const SimplicialComplex& X, const std::vector<VertexId>& relabel = {}) {
  std::set<std::vector<VertexId>> out;
  for (const Face& f : X.facets()) {
    std::vector<VertexId> vs;
    for (VertexId v : f) vs.push_back(relabel.empty() ? v : relabel[v]);
    std::sort(vs.begin(), vs.end());
    out.insert(vs);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// Faces complex

TEST(FacesComplex, DimensionFormula) {
  // ⌊(d+1)/(d1+1)⌋ - 1 with d the dimension of X.
  auto D26 = share(complete_complex(6, 2));
  FacesComplex F = faces_complex(D26, 1);
  EXPECT_EQ(F.complex->n_vertices(), 15);
  EXPECT_EQ(F.complex->dim(), 0);
  auto D56 = share(complete_complex(6, 5));
  FacesComplex G = faces_complex(D56, 1);
  EXPECT_EQ(G.complex->n_vertices(), 15);
  EXPECT_EQ(G.complex->dim(), 2);
  EXPECT_EQ(G.complex->facets().size(), 15u);  // perfect matchings of six points
  for (int d = 1; d <= 6; ++d)
    for (int d1 = 0; d1 <= d; ++d1) EXPECT_EQ(faces_complex_dim(d, d1), (d + 1) / (d1 + 1) - 1);
}

TEST(FacesComplex, LevelZeroIsTheComplexItself) {
  Rng rng(1);
  for (int t = 0; t < 5; ++t) {
    auto X = share(random_pure_complex(9, 3, 10, rng, true));
    FacesComplex F = faces_complex(X, 0);
    EXPECT_EQ(facet_set(*F.complex), facet_set(*X));
    ASSERT_EQ(F.complex->facets().size(), X->facets().size());
    for (std::size_t j = 0; j < X->facets().size(); ++j) {
      int k = F.complex->ordinal(X->facets()[j]);
      EXPECT_NEAR(F.complex->top_weights()[k], X->top_weights()[j], 1e-12);
    }
  }
}

TEST(FacesComplex, FacesAreDisjointUnionsOfFaces) {
  auto X = share(complete_complex(8, 5));
  FacesComplex F = faces_complex(X, 1);
  EXPECT_EQ(F.complex->dim(), 2);
  double total = 0;
  for (double w : F.complex->top_weights()) total += w;
  EXPECT_NEAR(total, 1.0, 1e-12);
  for (int j = 0; j <= F.complex->dim(); ++j)
    for (const Face& f : F.complex->faces(j)) {
      Face u = F.unite(f);
      EXPECT_EQ(static_cast<int>(u.size()), 2 * (j + 1));
      EXPECT_TRUE(X->contains(u));
    }
  // Conversely every pair of disjoint edges is an edge of F.
  std::size_t pairs = 0;
  const auto& E = X->faces(1);
  for (std::size_t a = 0; a < E.size(); ++a)
    for (std::size_t b = a + 1; b < E.size(); ++b)
      if (E[a].disjoint(E[b])) ++pairs;
  EXPECT_EQ(F.complex->count(1), pairs);
}

TEST(FacesComplex, SkeletonIsTheSwapGraph) {
  auto X = share(complete_complex(8, 3));
  FacesComplex F = faces_complex(X, 1);
  WalkGraph S = swap_graph(*X, 1, 1);
  std::set<std::pair<int, int>> swap_edges;
  for (auto [i, j, w] : S.joint) swap_edges.emplace(std::min(i, j), std::max(i, j));
  EXPECT_EQ(edge_set(*F.complex), swap_edges);
  // The edge measure of F matches the joint law of the swap walk.
  std::map<std::pair<int, int>, double> joint;
  for (auto [i, j, w] : S.joint) joint[{std::min(i, j), std::max(i, j)}] += w;
  for (std::size_t e = 0; e < F.complex->count(1); ++e) {
    const Face& f = F.complex->faces(1)[e];
    const double expect = joint[{f[0], f[1]}];
    EXPECT_NEAR(F.complex->weights(1)[e], expect, 1e-12);
  }
}

TEST(FacesComplex, CliqueComplexesGiveCliqueComplexes) {
  std::vector<ComplexPtr> hosts{share(complete_complex(8, 7)), share(complete_complex(6, 5)), share(circulant_complex(13, 3)),
                                share(circulant_complex(16, 5))};
  for (const auto& X : hosts) {
    ASSERT_TRUE(is_clique_complex(*X));
    for (int d1 = 0; d1 <= 2; ++d1) {
      if (faces_complex_dim(X->dim(), d1) < 1) continue;
      EXPECT_TRUE(is_clique_complex(*faces_complex(X, d1).complex)) << X->n_vertices() << " d1=" << d1;
    }
  }
}

TEST(FacesComplex, Errors) {
  auto X = share(complete_complex(6, 2));
  EXPECT_THROW(faces_complex(X, 3), Error);
  EXPECT_THROW(faces_complex(X, -1), Error);
  try {
    faces_complex(share(complete_complex(16, 11)), 1, 1000);
    ADD_FAILURE() << "budget not enforced";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(FacesComplex, BackmapListsBlocks) {
  FacesComplex F = faces_complex(share(complete_complex(4, 3)), 1);
  std::string text = write_faces_backmap(F);
  EXPECT_EQ(text.rfind("faces_of_level 1\n0 -> 0 1\n", 0), 0u);
}

// ---------------------------------------------------------------------------------------------
// Links of faces complexes

TEST(LinkFaces, LinkOfAFaceEqualsFacesOfTheLink) {
  auto X = share(complete_complex(9, 5));
  const int d1 = 1;
  FacesComplex F = faces_complex(X, d1);
  for (int ord : {0, 7, 20, 35}) {
    const Face& s = X->faces(d1)[ord];
    std::vector<VertexId> to_f;
    SimplicialComplex LF = link_complex(*F.complex, Face{ord}, &to_f);
    LinkFacesComplex LX = faces_subcomplex_of_link(X, d1, s);
    EXPECT_EQ(facet_set(LF, to_f), facet_set(*LX.standalone.complex, LX.to_fx)) << s.str();
    std::vector<VertexId> marked = link_faces_vertices(*X, d1, s);
    std::vector<VertexId> mapped = LX.to_fx;
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(marked, mapped);
  }
}

TEST(LinkFaces, VertexOfDelta26) {
  auto X = share(complete_complex(6, 2));
  LinkFacesComplex L = faces_subcomplex_of_link(X, 1, Face{0});
  // The link is Δ_1(5); its level-1 faces complex is its 10 edges.
  EXPECT_EQ(L.standalone.base->n_vertices(), 5);
  EXPECT_EQ(L.standalone.complex->n_vertices(), 10);
  EXPECT_EQ(L.standalone.complex->dim(), 0);
  for (VertexId v : L.to_fx) EXPECT_FALSE(X->faces(1)[v].contains(0));
  EXPECT_THROW(faces_subcomplex_of_link(X, 1, Face{0, 1, 2}), Error);
  EXPECT_THROW(faces_subcomplex_of_link(share(cycle_complex(5)), 1, Face{0, 2}), Error);
}

TEST(LinkFaces, EmptyFaceGivesTheWholeFacesComplex) {
  auto X = share(complete_complex(8, 3));
  auto F = link_faces_complex(X, 1, Face{});
  ASSERT_TRUE(F.has_value());
  EXPECT_EQ(facet_set(**F), facet_set(*faces_complex(X, 1).complex));
}

// ---------------------------------------------------------------------------------------------
// Flag complex

TEST(FlagComplex, SingleEdgeIsAPath) {
  FlagComplex G = flag_complex(share(SimplicialComplex::from_facets({Face{0, 1}})));
  EXPECT_EQ(G.complex->n_vertices(), 3);
  EXPECT_EQ(G.complex->count(1), 2u);
  EXPECT_EQ(G.face_of(2), (Face{0, 1}));
}

TEST(FlagComplex, TriangleIsTheBarycentricSubdivision) {
  FlagComplex G = flag_complex(share(complete_complex(3, 2)));
  EXPECT_EQ(G.complex->n_vertices(), 7);
  EXPECT_EQ(G.complex->count(1), 12u);
  EXPECT_EQ(G.complex->count(2), 6u);
  for (const Face& f : G.complex->facets()) {
    Face a = G.face_of(f[0]), b = G.face_of(f[1]), c = G.face_of(f[2]);
    EXPECT_TRUE(a.is_subset_of(b) && b.is_subset_of(c));
    EXPECT_EQ(a.dim() + 1, b.dim());
  }
}

TEST(FlagComplex, ZeroDimensionalGivesIsolatedVertices) {
  FlagComplex G = flag_complex(share(SimplicialComplex::from_facets({Face{0}, Face{1}, Face{2}})));
  EXPECT_EQ(G.complex->n_vertices(), 3);
  EXPECT_EQ(G.complex->dim(), 0);
}

TEST(FlagComplex, FacesAreExactlyChains) {
  auto X = share(complete_complex(5, 3));
  FlagComplex G = flag_complex(X);
  for (int j = 0; j <= G.complex->dim(); ++j)
    for (const Face& f : G.complex->faces(j)) {
      std::vector<Face> chain;
      for (VertexId v : f) chain.push_back(G.face_of(v));
      std::sort(chain.begin(), chain.end(), [](const Face& a, const Face& b) { return a.size() < b.size(); });
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        EXPECT_LT(chain[i].size(), chain[i + 1].size());
        EXPECT_TRUE(chain[i].is_subset_of(chain[i + 1]));
      }
    }
  // Every comparable pair is an edge.
  std::size_t comparable = 0;
  for (int a = 0; a <= 3; ++a)
    for (int b = a + 1; b <= 3; ++b)
      for (const Face& s : X->faces(a))
        for (const Face& t : X->faces(b)) comparable += s.is_subset_of(t);
  EXPECT_EQ(G.complex->count(1), comparable);
  EXPECT_NE(write_flag_backmap(G).find("flags\n"), std::string::npos);
}

// ---------------------------------------------------------------------------------------------
// Well-connectedness

TEST(WellConnected, LevelZeroReducesToLinkConnectivity) {
  auto X = share(complete_complex(8, 3));
  WellConnectedReport r = well_connected_check(X, 0, 2);
  EXPECT_TRUE(r.well_connected) << r.reason;
  EXPECT_EQ(r.faces_checked, 9u);
}

TEST(WellConnected, ZeroDimensionalFacesComplexIsDisconnected) {
  // F^1 of Δ_2(7) has dimension ⌊3/2⌋ - 1 = 0, so it is 21 isolated vertices.
  auto X = share(complete_complex(7, 2));
  WellConnectedReport r = well_connected_check(X, 1, 2);
  EXPECT_FALSE(r.well_connected);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(r.witness->empty());
}

TEST(WellConnected, DimensionSixCompleteComplexAtLevelOne) {
  // Vertex links are Δ_5(8), whose level-1 faces complex is 2-dimensional and simply connected.
  auto X = share(complete_complex(9, 6));
  WellConnectedReport r = well_connected_check(X, 1, 2);
  EXPECT_TRUE(r.well_connected) << r.reason << " at " << (r.witness ? r.witness->str() : "");
}

TEST(WellConnected, DisconnectedLinkIsWitnessed) {
  // Two tetrahedra glued at vertex 0: the link of 0 is two disjoint triangles.
  auto X = share(SimplicialComplex::from_facets({Face{0, 1, 2, 3}, Face{0, 4, 5, 6}}));
  WellConnectedReport r = well_connected_check(X, 0, 2);
  EXPECT_FALSE(r.well_connected);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, Face{0});
}

TEST(WellConnected, NontrivialCoverOfAVertexLinkIsWitnessed) {
  // Three triangles around an apex: its link is a 3-cycle, which the hexagon covers.
  auto X = share(SimplicialComplex::from_facets({Face{0, 1, 2}, Face{0, 2, 3}, Face{0, 1, 3}}));
  WellConnectedReport r = well_connected_check(X, 0, 2);
  EXPECT_FALSE(r.well_connected);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, Face{0});
  EXPECT_NE(r.reason.find("cover"), std::string::npos);
}
