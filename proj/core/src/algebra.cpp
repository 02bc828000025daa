#include "toriplan/algebra.hpp"

#include <sstream>

#include "toriplan/error.hpp"

namespace toriplan {

namespace {

void check_compatible(int n1, Grading g1, int n2, Grading g2) {
  if (n1 != n2 || !(g1 == g2)) {
    throw Error(ErrorCode::kGradingMismatch,
                "operands differ in ground size or grading (n " + std::to_string(n1) + " vs " +
                    std::to_string(n2) + ", degree " + std::to_string(g1.degree) + " vs " +
                    std::to_string(g2.degree) + ")");
  }
}

void check_within(VertexSet a, int n) {
  if (!a.within(n)) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "monomial " + a.to_string() + " not in [" + std::to_string(n) + "]");
  }
}

// Sign of e_A e_B -> e_{A∪B}; 0 when the monomials overlap.
int monomial_sign(VertexSet a, VertexSet b, Grading g) {
  if (!a.disjoint(b)) return 0;
  if (!g.odd()) return 1;
  return crossing_count(a, b) % 2 == 0 ? 1 : -1;
}

std::string monomial_name(VertexSet a) {
  if (a.empty()) return "1";
  std::string s = "e";
  bool first = true;
  for (int i : a.members()) {
    s += (first ? "" : ".") + std::to_string(i);
    first = false;
  }
  return s;
}

}  // namespace

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

AlgebraElement AlgebraElement::monomial(int n, Grading g, VertexSet a, const Rational& coeff) {
  check_within(a, n);
  AlgebraElement out(n, g);
  out.add_term(a, coeff);
  return out;
}

Rational AlgebraElement::coefficient(VertexSet a) const {
  const auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(VertexSet a, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  check_compatible(n_, grading_, other.n_, other.grading_);
  AlgebraElement out(*this);
  for (const auto& [a, c] : other.terms_) out.add_term(a, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
  check_compatible(n_, grading_, other.n_, other.grading_);
  AlgebraElement out(*this);
  for (const auto& [a, c] : other.terms_) out.add_term(a, -c);
  return out;
}

bool AlgebraElement::operator==(const AlgebraElement& other) const {
  return n_ == other.n_ && grading_ == other.grading_ && terms_ == other.terms_;
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  check_compatible(a.n(), a.grading(), b.n(), b.grading());
  AlgebraElement out(a.n(), a.grading());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int sign = monomial_sign(ma, mb, a.grading());
      if (sign == 0) continue;
      out.add_term(ma | mb, sign > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
    }
  }
  return out;
}

TensorElement TensorElement::pure(int n, Grading g, VertexSet a, VertexSet b,
                                  const Rational& coeff) {
  check_within(a, n);
  check_within(b, n);
  TensorElement out(n, g);
  out.add_term(a, b, coeff);
  return out;
}

Rational TensorElement::coefficient(VertexSet a, VertexSet b) const {
  const auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add_term(VertexSet a, VertexSet b, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement TensorElement::operator+(const TensorElement& other) const {
  check_compatible(n_, grading_, other.n_, other.grading_);
  TensorElement out(*this);
  for (const auto& [k, c] : other.terms_) out.add_term(k.first, k.second, c);
  return out;
}

TensorElement TensorElement::operator-(const TensorElement& other) const {
  check_compatible(n_, grading_, other.n_, other.grading_);
  TensorElement out(*this);
  for (const auto& [k, c] : other.terms_) out.add_term(k.first, k.second, -c);
  return out;
}

TensorElement TensorElement::scaled(const Rational& factor) const {
  TensorElement out(n_, grading_);
  if (factor == 0) return out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * factor);
  return out;
}

bool TensorElement::operator==(const TensorElement& other) const {
  return n_ == other.n_ && grading_ == other.grading_ && terms_ == other.terms_;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << (first ? "" : " + ") << toriplan::to_string(c) << " " << monomial_name(k.first)
       << "(x)" << monomial_name(k.second);
    first = false;
  }
  return os.str();
}

TensorElement tensor_mul(const TensorElement& u, const TensorElement& v) {
  check_compatible(u.n(), u.grading(), v.n(), v.grading());
  const Grading g = u.grading();
  TensorElement out(u.n(), g);
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kv, cv] : v.terms()) {
      const int left = monomial_sign(ku.first, kv.first, g);
      if (left == 0) continue;
      const int right = monomial_sign(ku.second, kv.second, g);
      if (right == 0) continue;
      // Koszul sign for moving e_B (degree |B| g) past e_C (degree |C| g).
      const bool koszul = g.odd() && (ku.second.size() * kv.first.size()) % 2 != 0;
      const int sign = left * right * (koszul ? -1 : 1);
      const Rational c = cu * cv;
      out.add_term(ku.first | kv.first, ku.second | kv.second, sign > 0 ? c : Rational(-c));
    }
  }
  return out;
}

TensorElement zero_divisor(int i, int n, Grading g) {
  if (i < 1 || i > n || n > kMaxGround) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "zero divisor index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
  const VertexSet e = VertexSet::singleton(i);
  TensorElement out(n, g);
  out.add_term(VertexSet{}, e, 1);
  out.add_term(e, VertexSet{}, -1);
  return out;
}

TensorElement shuffle_expansion(int z, Grading g) {
  if (!g.odd()) {
    throw Error(ErrorCode::kGradingMismatch, "the shuffle formula holds for odd gradings only");
  }
  if (z < 0 || z > 16) {
    throw Error(ErrorCode::kSizeCap, "shuffle_expansion supports 0 <= z <= 16");
  }
  TensorElement out(z, g);
  const VertexSet all = VertexSet::full(z);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << z); ++bits) {
    const VertexSet j(bits);
    const VertexSet rest = all - j;
    // sign(σ) counts pairs (a ∈ J, b ∈ J') with a > b.
    const int parity = (j.size() + crossing_count(j, rest)) % 2;
    out.add_term(j, rest, parity == 0 ? 1 : -1);
  }
  return out;
}

TensorElement iterated_zero_divisor_product(int z, Grading g) {
  TensorElement out = TensorElement::one(z, g);
  for (int i = 1; i <= z; ++i) out = tensor_mul(out, zero_divisor(i, z, g));
  return out;
}

TensorElement reduce_mod_complex(const TensorElement& u, const SimplicialComplex& x) {
  if (u.n() != x.n()) {
    throw Error(ErrorCode::kInvalidArgument,
                "tensor lives on n = " + std::to_string(u.n()) + " but the complex has n = " +
                    std::to_string(x.n()));
  }
  TensorElement out(u.n(), u.grading());
  for (const auto& [k, c] : u.terms()) {
    if (x.is_face(k.first) && x.is_face(k.second)) out.add_term(k.first, k.second, c);
  }
  return out;
}

ZclCertificate zcl_witness(const SimplicialComplex& x, Grading g) {
  ZclCertificate cert;
  const int n = x.n();
  TensorElement product = TensorElement::one(n, g);
  if (g.odd()) {
    const ZResult z = z_invariant(x);
    cert.value = z.z;
    cert.witness = z.witness;
    const VertexSet support = z.witness.j | z.witness.k;
    if (support.size() > 20) {
      throw Error(ErrorCode::kSizeCap, "zcl certificate limited to 20 generators");
    }
    for (int i : support.members()) {
      product = reduce_mod_complex(tensor_mul(product, zero_divisor(i, n, g)), x);
    }
    cert.witness_coefficient = product.coefficient(z.witness.j, z.witness.k);
  } else {
    const int d = d_invariant(x);
    cert.value = 2 * d;
    for (VertexSet m : x.maximal_faces()) {
      if (m.size() == d) {
        cert.witness = {m, VertexSet{}};
        break;
      }
    }
    if (d > 20) throw Error(ErrorCode::kSizeCap, "zcl certificate limited to 20 generators");
    for (int i : cert.witness.j.members()) {
      const TensorElement e = zero_divisor(i, n, g);
      product = reduce_mod_complex(tensor_mul(product, tensor_mul(e, e)), x);
    }
    cert.witness_coefficient = product.coefficient(cert.witness.j, cert.witness.j);
  }
  cert.surviving_terms = product.size();
  cert.certified = !product.is_zero();
  return cert;
}

namespace {

// Depth-first over S = {s_1 < s_2 < ...}, extending the reduced product one
// generator at a time. A zero product stays zero under further
// multiplication, so its branch is closed.
void extend_products(const SimplicialComplex& x, const TensorElement& current, int size,
                     int next, int& best) {
  best = std::max(best, size);
  for (int i = next; i <= x.n(); ++i) {
    if (size + 1 + (x.n() - i) <= best) break;
    TensorElement extended =
        reduce_mod_complex(tensor_mul(current, zero_divisor(i, x.n(), current.grading())), x);
    if (extended.is_zero()) continue;
    extend_products(x, extended, size + 1, i + 1, best);
  }
}

}  // namespace

int zcl_exhaustive_basic(const SimplicialComplex& x, Grading g) {
  if (!g.odd()) throw Error(ErrorCode::kGradingMismatch, "zcl_exhaustive_basic needs odd grading");
  if (x.n() > 14) throw Error(ErrorCode::kSizeCap, "zcl_exhaustive_basic supports n <= 14");
  int best = 0;
  extend_products(x, TensorElement::one(x.n(), g), 0, 1, best);
  return best;
}

std::vector<std::uint64_t> poincare_polynomial(const SimplicialComplex& x) {
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(d_invariant(x) + 1), 0);
  for (VertexSet f : x.faces(kMaxGround)) ++coeffs[static_cast<std::size_t>(f.size())];
  return coeffs;
}

}  // namespace toriplan
