#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toriplan/complex.hpp"

namespace toriplan {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with q > 0, always including the denominator.
std::string to_string(const Rational& r);

/// Degree of the generators e_1, ..., e_n: 2k-1 for odd spheres, 2k for
/// even ones. Only its parity affects signs.
struct Grading {
  int degree = 1;

  static Grading for_sphere(Parity parity, int k) {
    return Grading{parity == Parity::kOdd ? 2 * k - 1 : 2 * k};
  }
  bool odd() const { return degree % 2 != 0; }
  bool operator==(const Grading&) const = default;
};

/// Element of the square-free monomial algebra on e_1..e_n: exterior when
/// the grading is odd, commutative when it is even. Monomials are keyed by
/// their index set in increasing order; zero coefficients are never stored.
class AlgebraElement {
 public:
  using Terms = std::map<VertexSet, Rational>;

  AlgebraElement(int n, Grading g) : n_(n), grading_(g) {}

  static AlgebraElement one(int n, Grading g) { return monomial(n, g, VertexSet{}); }
  /// coeff · e_A. Throws kIndexOutOfRange if A leaves [n].
  static AlgebraElement monomial(int n, Grading g, VertexSet a, const Rational& coeff = 1);

  int n() const { return n_; }
  Grading grading() const { return grading_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(VertexSet a) const;

  void add_term(VertexSet a, const Rational& coeff);
  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-(const AlgebraElement& other) const;
  bool operator==(const AlgebraElement& other) const;

 private:
  int n_;
  Grading grading_;
  Terms terms_;
};

/// Bilinear product: e_A e_B = 0 when A ∩ B ≠ ∅, otherwise ± e_{A∪B} with
/// the sign of the merging shuffle (odd grading) or + (even grading).
/// Throws kGradingMismatch when operands disagree on n or grading.
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);

/// Element of A ⊗ A, keyed by (A, B) for e_A ⊗ e_B.
class TensorElement {
 public:
  using Key = std::pair<VertexSet, VertexSet>;
  using Terms = std::map<Key, Rational>;

  TensorElement(int n, Grading g) : n_(n), grading_(g) {}

  static TensorElement one(int n, Grading g) { return pure(n, g, VertexSet{}, VertexSet{}); }
  /// coeff · e_A ⊗ e_B.
  static TensorElement pure(int n, Grading g, VertexSet a, VertexSet b, const Rational& coeff = 1);

  int n() const { return n_; }
  Grading grading() const { return grading_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(VertexSet a, VertexSet b) const;

  void add_term(VertexSet a, VertexSet b, const Rational& coeff);
  TensorElement operator+(const TensorElement& other) const;
  TensorElement operator-(const TensorElement& other) const;
  TensorElement scaled(const Rational& factor) const;
  bool operator==(const TensorElement& other) const;

  /// Terms as "c e_A(x)e_B" joined by " + ".
  std::string to_string() const;

 private:
  int n_;
  Grading grading_;
  Terms terms_;
};

/// (a ⊗ b)(c ⊗ d) = (-1)^{deg b · deg c} ac ⊗ bd.
TensorElement tensor_mul(const TensorElement& u, const TensorElement& v);

/// ē_i = 1 ⊗ e_i - e_i ⊗ 1. Throws kIndexOutOfRange unless 1 <= i <= n.
TensorElement zero_divisor(int i, int n, Grading g);

/// Closed form of ē_1 ⋯ ē_z: the sum over ordered partitions (J, J') of [z]
/// of (-1)^{|J|} sign(σ_{J,J'}) e_J ⊗ e_J', σ placing J' after J. Odd
/// grading only; throws kSizeCap for z > 16.
TensorElement shuffle_expansion(int z, Grading g = {});

/// ē_1 ⋯ ē_z by repeated tensor_mul; the oracle for shuffle_expansion.
TensorElement iterated_zero_divisor_product(int z, Grading g = {});

/// Drops every term e_A ⊗ e_B with A or B a non-face of X, i.e. the image
/// in H*(X) ⊗ H*(X) for H*(X) = E / I_X.
TensorElement reduce_mod_complex(const TensorElement& u, const SimplicialComplex& x);

struct ZclCertificate {
  /// z(X) for odd grading, 2 d(X) for even grading.
  int value = 0;
  bool certified = false;
  Witness witness;
  /// Terms surviving in the reduced product.
  std::size_t surviving_terms = 0;
  /// Coefficient of e_J ⊗ e_K (odd) or e_J ⊗ e_J (even) in the reduced product.
  Rational witness_coefficient;
};

/// Odd grading: reduces ∏_{i ∈ J ∪ K} ē_i for the z witness (J, K).
/// Even grading: reduces ∏_{i ∈ J} ē_i² for a maximum face J. Throws
/// kSizeCap when the product would involve more than 20 generators.
ZclCertificate zcl_witness(const SimplicialComplex& x, Grading g = {});

/// max |S| over S ⊆ [n] with ∏_{i∈S} ē_i ≠ 0 in H*(X) ⊗ H*(X). Odd grading,
/// n <= 14; throws kSizeCap / kGradingMismatch otherwise.
int zcl_exhaustive_basic(const SimplicialComplex& x, Grading g = {});

/// Coefficient k is the number of k-element faces; entry 0 is 1.
std::vector<std::uint64_t> poincare_polynomial(const SimplicialComplex& x);

}  // namespace toriplan
