#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toriplan/complex.hpp"
#include "toriplan/error.hpp"
#include "toriplan/sampling.hpp"

using namespace toriplan;

namespace {

SimplicialComplex fig8() { return SimplicialComplex::from_facets(2, {VertexSet{1}, VertexSet{2}}); }
SimplicialComplex flag_p3() { return flag_complex(Graph::from_edges(3, {{1, 2}, {2, 3}})); }

std::vector<VertexSet> sets(std::initializer_list<std::initializer_list<int>> s) {
  std::vector<VertexSet> out;
  for (auto m : s) out.emplace_back(m);
  return out;
}

}  // namespace

TEST(VertexSet, BasicsAndFormatting) {
  const VertexSet a{1, 3};
  EXPECT_EQ(a.bits(), 0b101u);
  EXPECT_EQ(a.size(), 2);
  EXPECT_TRUE(a.contains(3));
  EXPECT_FALSE(a.contains(2));
  EXPECT_EQ(a.max_element(), 3);
  EXPECT_EQ(a.to_string(), "{1,3}");
  EXPECT_EQ(VertexSet{}.to_string(), "{}");
  EXPECT_EQ((a | VertexSet{2}), (VertexSet{1, 2, 3}));
  EXPECT_EQ((VertexSet{1, 2, 3} - a), VertexSet{2});
  EXPECT_TRUE(a.within(3));
  EXPECT_FALSE(a.within(2));
  EXPECT_EQ(a.shifted(2), (VertexSet{3, 5}));
}

TEST(VertexSet, RejectsOutOfRangeIndices) {
  EXPECT_THROW(VertexSet({0}), Error);
  EXPECT_THROW(VertexSet({64}), Error);
  const std::vector<int> idx{1, 4};
  EXPECT_THROW(VertexSet::from_indices(idx, 3), Error);
  EXPECT_EQ(VertexSet::from_indices(idx, 4), (VertexSet{1, 4}));
}

TEST(VertexSet, CrossingCountMatchesBubbleSort) {
  for (std::uint64_t a = 0; a < 64; ++a) {
    for (std::uint64_t b = 0; b < 64; ++b) {
      if (a & b) continue;
      const VertexSet l(a);
      const VertexSet r(b);
      const int sign = crossing_count(l, r) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(sign, oracle::concat_sign(l.members(), r.members())) << a << " " << b;
    }
  }
}

TEST(Complex, FromFacetsKeepsMaximalAntichain) {
  EXPECT_EQ(fig8().maximal_faces(), sets({{1}, {2}}));
  const auto x = SimplicialComplex::from_facets(3, {VertexSet{1, 2}, VertexSet{1}, VertexSet{2, 3}});
  EXPECT_EQ(x.maximal_faces(), sets({{1, 2}, {2, 3}}));
  const auto empty = SimplicialComplex::from_facets(3, std::initializer_list<VertexSet>{});
  EXPECT_EQ(empty.maximal_faces(), std::vector<VertexSet>{VertexSet{}});
  EXPECT_EQ(empty.faces().size(), 1u);
}

TEST(Complex, FromFacetsErrors) {
  try {
    SimplicialComplex::from_facets(2, {VertexSet{1}, VertexSet{3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
  EXPECT_THROW(SimplicialComplex::from_facets(64, {}), Error);
  EXPECT_THROW(SimplicialComplex::from_facets(-1, {}), Error);
}

TEST(Complex, IsFace) {
  EXPECT_TRUE(fig8().is_face(VertexSet{1}));
  EXPECT_FALSE(fig8().is_face(VertexSet{1, 2}));
  EXPECT_TRUE(fig8().is_face(VertexSet{}));
  EXPECT_TRUE(SimplicialComplex::skeleton(5, 2).is_face(VertexSet{3, 5}));
  EXPECT_FALSE(SimplicialComplex::skeleton(5, 2).is_face(VertexSet{1, 3, 5}));
}

TEST(Complex, Skeleton) {
  EXPECT_EQ(SimplicialComplex::skeleton(3, 3), SimplicialComplex::full(3));
  EXPECT_EQ(SimplicialComplex::skeleton(3, 3).maximal_faces(), sets({{1, 2, 3}}));
  EXPECT_EQ(SimplicialComplex::skeleton(5, 2).maximal_faces().size(), 10u);
  EXPECT_EQ(SimplicialComplex::skeleton(4, 0).maximal_faces(), std::vector<VertexSet>{VertexSet{}});
  EXPECT_EQ(SimplicialComplex::skeleton(6, 3).faces().size(), 1u + 6 + 15 + 20);
}

TEST(Complex, FlagComplexExamples) {
  EXPECT_EQ(flag_p3().maximal_faces(), sets({{1, 2}, {2, 3}}));
  EXPECT_EQ(flag_complex(Graph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}})).maximal_faces(), sets({{1, 2, 3}}));
  EXPECT_EQ(flag_complex(Graph(2)).maximal_faces(), sets({{1}, {2}}));
}

TEST(Complex, GraphErrors) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), Error);
  EXPECT_THROW(Graph::from_edges(3, {{1, 4}}), Error);
  EXPECT_THROW(Graph::from_edges(3, {{1, 2}, {2, 1}}), Error);
}

TEST(Complex, MaximalCliquesMatchSubsetScan) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    Rng rng = sample_rng(11, i);
    const Graph g = random_graph(1 + static_cast<int>(i % 11), rng);
    std::vector<std::uint64_t> got;
    for (VertexSet c : maximal_cliques(g)) got.push_back(c.bits());
    EXPECT_EQ(got, oracle::maximal_cliques(g)) << "graph " << i;
  }
}

TEST(Complex, FaceCountsAreCliqueCounts) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    Rng rng = sample_rng(12, i);
    const Graph g = random_graph(1 + static_cast<int>(i % 10), rng);
    std::vector<std::uint64_t> counts;
    for (VertexSet f : flag_complex(g).faces()) {
      if (counts.size() <= static_cast<std::size_t>(f.size())) counts.resize(static_cast<std::size_t>(f.size()) + 1);
      ++counts[static_cast<std::size_t>(f.size())];
    }
    EXPECT_EQ(counts, oracle::clique_counts(g));
  }
}

TEST(Invariants, Examples) {
  EXPECT_EQ(d_invariant(SimplicialComplex::skeleton(5, 2)), 2);
  EXPECT_EQ(d_invariant(fig8()), 1);
  EXPECT_EQ(d_invariant(flag_p3()), 2);

  const ZResult s = z_invariant(SimplicialComplex::skeleton(5, 2));
  EXPECT_EQ(s.z, 4);
  EXPECT_EQ(s.witness, (Witness{VertexSet{1, 2}, VertexSet{3, 4}}));
  const ZResult f = z_invariant(fig8());
  EXPECT_EQ(f.z, 2);
  EXPECT_EQ(f.witness, (Witness{VertexSet{1}, VertexSet{2}}));
  const ZResult p = z_invariant(flag_p3());
  EXPECT_EQ(p.z, 3);
  EXPECT_EQ(p.witness, (Witness{VertexSet{1, 2}, VertexSet{3}}));

  EXPECT_EQ(z_bruteforce(SimplicialComplex::full(3)), 3);
  EXPECT_EQ(z_bruteforce(fig8()), 2);
  EXPECT_EQ(z_bruteforce(flag_p3()), 3);
  EXPECT_EQ(z_invariant(SimplicialComplex()).z, 0);
}

TEST(Invariants, ZAgreesWithNaiveEnumeration) {
  for (std::uint64_t i = 0; i < 150; ++i) {
    Rng rng = sample_rng(13, i);
    const SimplicialComplex x = random_complex(1 + static_cast<int>(i % 9), rng);
    const ZResult z = z_invariant(x);
    const int expected = oracle::z(x);
    EXPECT_EQ(z.z, expected) << "complex " << i;
    EXPECT_EQ(z_bruteforce(x), expected) << "complex " << i;
    EXPECT_TRUE(z.witness.j.disjoint(z.witness.k));
    EXPECT_TRUE(x.is_face(z.witness.j));
    EXPECT_TRUE(x.is_face(z.witness.k));
    EXPECT_EQ(z.witness.size(), z.z);
  }
}

TEST(Invariants, BruteforceSizeCap) {
  try {
    z_bruteforce(SimplicialComplex::skeleton(21, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeCap);
  }
}

TEST(Invariants, UnionClosed) {
  EXPECT_TRUE(union_closed(SimplicialComplex::full(4)));
  EXPECT_FALSE(union_closed(fig8()));
  EXPECT_FALSE(union_closed(SimplicialComplex::skeleton(5, 2)));
}

TEST(Tc, Examples) {
  EXPECT_EQ(tc(SimplicialComplex::skeleton(5, 2), Parity::kOdd).tc, 5);
  EXPECT_EQ(tc(SimplicialComplex::full(3), Parity::kEven).tc, 7);
  EXPECT_EQ(tc(fig8(), Parity::kOdd).tc, 3);
  EXPECT_EQ(tc(fig8(), Parity::kEven).tc, 3);
  // k never changes the answer.
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(tc(flag_p3(), Parity::kOdd, k).tc, 4);
}

TEST(Tc, ProductAndWedge) {
  const SimplicialComplex p = product(fig8(), fig8());
  EXPECT_EQ(p.n(), 4);
  EXPECT_EQ(z_bruteforce(p), 4);
  EXPECT_EQ(tc(p, Parity::kOdd).tc, 5);

  const SimplicialComplex circle = SimplicialComplex::full(1);
  const SimplicialComplex w = wedge(circle, circle);
  EXPECT_EQ(w, fig8());
  EXPECT_EQ(tc(w, Parity::kOdd).tc, 3);

  const SimplicialComplex point;
  EXPECT_EQ(z_invariant(product(flag_p3(), point)).z, 3);
}

TEST(Tc, ProductZIsAdditive) {
  for (std::uint64_t i = 0; i < 30; ++i) {
    Rng rng = sample_rng(14, i);
    const SimplicialComplex a = random_complex(1 + static_cast<int>(i % 5), rng);
    const SimplicialComplex b = random_complex(1 + static_cast<int>((i / 5) % 5), rng);
    EXPECT_EQ(oracle::z(product(a, b)), oracle::z(a) + oracle::z(b));
  }
}
