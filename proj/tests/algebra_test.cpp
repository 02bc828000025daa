#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toriplan/algebra.hpp"
#include "toriplan/error.hpp"
#include "toriplan/sampling.hpp"

using namespace toriplan;

namespace {

const Grading kOdd{1};
const Grading kEven{2};

SimplicialComplex fig8() { return SimplicialComplex::from_facets(2, {VertexSet{1}, VertexSet{2}}); }
SimplicialComplex flag_p3() { return flag_complex(Graph::from_edges(3, {{1, 2}, {2, 3}})); }

AlgebraElement e(int n, Grading g, std::initializer_list<int> m) {
  return AlgebraElement::monomial(n, g, VertexSet(m));
}

// Reference tensor product: signs from explicit permutation parity.
TensorElement naive_tensor_mul(const TensorElement& u, const TensorElement& v) {
  TensorElement out(u.n(), u.grading());
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      int sign = 1;
      if (u.grading().odd()) {
        sign = oracle::concat_sign(a.first.members(), b.first.members()) *
               oracle::concat_sign(a.second.members(), b.second.members());
        if ((a.second.size() * b.first.size()) % 2) sign = -sign;
      } else if (!a.first.disjoint(b.first) || !a.second.disjoint(b.second)) {
        sign = 0;
      }
      if (sign == 0) continue;
      out.add_term(a.first | b.first, a.second | b.second, ca * cb * sign);
    }
  }
  return out;
}

TensorElement random_tensor(int n, Grading g, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> mono(0, (std::uint64_t{1} << n) - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  TensorElement t(n, g);
  for (int i = 0; i < 4; ++i) t.add_term(VertexSet(mono(rng)), VertexSet(mono(rng)), coeff(rng));
  return t;
}

}  // namespace

TEST(Rational, Formatting) {
  EXPECT_EQ(to_string(Rational(3)), "3/1");
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
}

TEST(Mul, SignsAndSquares) {
  EXPECT_EQ(mul(e(2, kOdd, {2}), e(2, kOdd, {1})), AlgebraElement::monomial(2, kOdd, VertexSet{1, 2}, -1));
  EXPECT_TRUE(mul(e(2, kOdd, {1}), e(2, kOdd, {1})).is_zero());
  EXPECT_EQ(mul(e(2, kEven, {2}), e(2, kEven, {1})), e(2, kEven, {1, 2}));
  EXPECT_TRUE(mul(e(2, kEven, {1}), e(2, kEven, {1})).is_zero());
}

TEST(Mul, GradedCommutativity) {
  for (std::uint64_t a = 0; a < 32; ++a) {
    for (std::uint64_t b = 0; b < 32; ++b) {
      if (a & b) continue;
      for (Grading g : {kOdd, kEven, Grading{3}}) {
        const auto x = AlgebraElement::monomial(5, g, VertexSet(a));
        const auto y = AlgebraElement::monomial(5, g, VertexSet(b));
        const int deg = std::popcount(a) * std::popcount(b) * g.degree * g.degree;
        const Rational s = deg % 2 ? -1 : 1;
        EXPECT_EQ(mul(x, y).coefficient(VertexSet(a | b)), s * mul(y, x).coefficient(VertexSet(a | b)));
      }
    }
  }
}

TEST(Mul, MismatchRejected) {
  try {
    mul(e(2, kOdd, {1}), e(3, kOdd, {1}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kGradingMismatch);
  }
  EXPECT_THROW(mul(e(2, kOdd, {1}), e(2, kEven, {1})), Error);
  EXPECT_THROW(AlgebraElement::monomial(2, kOdd, VertexSet{3}), Error);
}

TEST(ZeroDivisor, ProductOfTwo) {
  const TensorElement p = tensor_mul(zero_divisor(1, 2, kOdd), zero_divisor(2, 2, kOdd));
  TensorElement want(2, kOdd);
  want.add_term(VertexSet{}, VertexSet{1, 2}, 1);
  want.add_term(VertexSet{1}, VertexSet{2}, -1);
  want.add_term(VertexSet{2}, VertexSet{1}, 1);
  want.add_term(VertexSet{1, 2}, VertexSet{}, 1);
  EXPECT_EQ(p, want);
  EXPECT_EQ(p.to_string(), "1/1 1(x)e1.2 + -1/1 e1(x)e2 + 1/1 e2(x)e1 + 1/1 e1.2(x)1");
}

TEST(ZeroDivisor, Squares) {
  for (int i = 1; i <= 4; ++i) {
    const TensorElement z = zero_divisor(i, 4, kOdd);
    EXPECT_TRUE(tensor_mul(z, z).is_zero());
    const TensorElement w = zero_divisor(i, 4, kEven);
    const VertexSet s = VertexSet::singleton(i);
    EXPECT_EQ(tensor_mul(w, w), TensorElement::pure(4, kEven, s, s, -2));
  }
  EXPECT_THROW(zero_divisor(0, 3, kOdd), Error);
  EXPECT_THROW(zero_divisor(4, 3, kOdd), Error);
}

TEST(TensorMul, MatchesPermutationOracle) {
  for (Grading g : {kOdd, kEven}) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      Rng rng = sample_rng(51, i);
      const TensorElement u = random_tensor(5, g, rng);
      const TensorElement v = random_tensor(5, g, rng);
      EXPECT_EQ(tensor_mul(u, v), naive_tensor_mul(u, v));
    }
  }
}

TEST(TensorMul, Associative) {
  for (Grading g : {kOdd, kEven}) {
    for (std::uint64_t i = 0; i < 100; ++i) {
      Rng rng = sample_rng(52, i);
      std::uniform_int_distribution<int> pick(1, 5);
      const TensorElement a = zero_divisor(pick(rng), 5, g);
      const TensorElement b = zero_divisor(pick(rng), 5, g);
      const TensorElement c = random_tensor(5, g, rng);
      EXPECT_EQ(tensor_mul(tensor_mul(a, b), c), tensor_mul(a, tensor_mul(b, c)));
    }
  }
}

TEST(Shuffle, SmallCases) {
  TensorElement one(1, kOdd);
  one.add_term(VertexSet{}, VertexSet{1}, 1);
  one.add_term(VertexSet{1}, VertexSet{}, -1);
  EXPECT_EQ(shuffle_expansion(1), one);
  EXPECT_EQ(shuffle_expansion(2), tensor_mul(zero_divisor(1, 2, kOdd), zero_divisor(2, 2, kOdd)));
  EXPECT_EQ(shuffle_expansion(0), TensorElement::one(0, kOdd));
}

TEST(Shuffle, MatchesIteratedProduct) {
  for (int z = 0; z <= 8; ++z) {
    const TensorElement s = shuffle_expansion(z);
    EXPECT_EQ(s, iterated_zero_divisor_product(z)) << z;
    EXPECT_EQ(s.size(), std::size_t{1} << z);
  }
  EXPECT_EQ(shuffle_expansion(5, Grading{3}), iterated_zero_divisor_product(5, Grading{3}));
}

TEST(Shuffle, Preconditions) {
  EXPECT_THROW(shuffle_expansion(3, kEven), Error);
  EXPECT_THROW(shuffle_expansion(17), Error);
}

TEST(Reduce, Examples) {
  const TensorElement r = reduce_mod_complex(shuffle_expansion(2), fig8());
  TensorElement want(2, kOdd);
  want.add_term(VertexSet{1}, VertexSet{2}, -1);
  want.add_term(VertexSet{2}, VertexSet{1}, 1);
  EXPECT_EQ(r, want);

  const TensorElement s = shuffle_expansion(4);
  EXPECT_EQ(reduce_mod_complex(s, SimplicialComplex::full(4)), s);

  const TensorElement unit = TensorElement::one(3, kOdd);
  EXPECT_EQ(reduce_mod_complex(unit, SimplicialComplex::skeleton(3, 0)), unit);

  EXPECT_THROW(reduce_mod_complex(s, fig8()), Error);
}

TEST(ZclWitness, Examples) {
  const ZclCertificate f = zcl_witness(fig8());
  EXPECT_EQ(f.value, 2);
  EXPECT_TRUE(f.certified);
  EXPECT_EQ(f.witness_coefficient, -1);

  const ZclCertificate s = zcl_witness(SimplicialComplex::skeleton(5, 2));
  EXPECT_EQ(s.value, 4);
  EXPECT_TRUE(s.certified);

  for (int n = 1; n <= 7; ++n) {
    const ZclCertificate c = zcl_witness(SimplicialComplex::full(n));
    EXPECT_EQ(c.value, n);
    EXPECT_TRUE(c.certified);
  }
}

TEST(ZclWitness, EvenUsesSquares) {
  const ZclCertificate c = zcl_witness(SimplicialComplex::skeleton(5, 2), kEven);
  EXPECT_EQ(c.value, 4);
  EXPECT_TRUE(c.certified);
  EXPECT_EQ(c.witness_coefficient, 4);  // (-2)^2
}

TEST(ZclExhaustive, Examples) {
  EXPECT_EQ(zcl_exhaustive_basic(fig8()), 2);
  EXPECT_EQ(zcl_exhaustive_basic(flag_p3()), 3);
  EXPECT_EQ(zcl_exhaustive_basic(SimplicialComplex::skeleton(4, 1)), 2);
  EXPECT_THROW(zcl_exhaustive_basic(SimplicialComplex::skeleton(15, 1)), Error);
  EXPECT_THROW(zcl_exhaustive_basic(fig8(), kEven), Error);
}

TEST(ZclExhaustive, EqualsNaiveZ) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    Rng rng = sample_rng(53, i);
    const SimplicialComplex x = random_complex(1 + static_cast<int>(i % 8), rng);
    EXPECT_EQ(zcl_exhaustive_basic(x), oracle::z(x)) << i;
  }
}

TEST(Poincare, Examples) {
  EXPECT_EQ(poincare_polynomial(flag_p3()), (std::vector<std::uint64_t>{1, 3, 2}));
  EXPECT_EQ(poincare_polynomial(SimplicialComplex::full(3)), (std::vector<std::uint64_t>{1, 3, 3, 1}));
  EXPECT_EQ(poincare_polynomial(fig8()), (std::vector<std::uint64_t>{1, 2}));
}

TEST(Poincare, CliquePolynomialOfFlagComplex) {
  for (std::uint64_t i = 0; i < 30; ++i) {
    Rng rng = sample_rng(54, i);
    const Graph g = random_graph(1 + static_cast<int>(i % 10), rng);
    EXPECT_EQ(poincare_polynomial(flag_complex(g)), oracle::clique_counts(g));
  }
}
