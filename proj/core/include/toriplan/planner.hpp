#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "toriplan/complex.hpp"
#include "toriplan/sphere.hpp"

namespace toriplan {

/// A point of the n-fold product of one sphere.
class ProductPoint {
 public:
  /// Throws kInvalidArgument if the coordinates do not share one SphereKind.
  ProductPoint(SphereKind kind, std::vector<SpherePoint> coords);

  /// (e, ..., e).
  static ProductPoint basepoint(SphereKind kind, int n);
  /// Points on (S^1)^n from angles.
  static ProductPoint from_angles(std::span<const double> angles);

  SphereKind kind() const { return kind_; }
  int n() const { return static_cast<int>(coords_.size()); }
  const SpherePoint& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<SpherePoint>& coords() const { return coords_; }

  /// {i : |p_i - e| > tau_cell}, 1-based.
  VertexSet support(double tau_cell) const;
  /// Euclidean distance in the ambient product.
  double distance(const ProductPoint& other) const;

 private:
  SphereKind kind_;
  std::vector<SpherePoint> coords_;
};

/// Odd local domain F_I: I is the set of antipodal coordinates. Its
/// stratum is n - |I|.
struct OddLiteralDomain {
  VertexSet antipodal;
  bool operator==(const OddLiteralDomain&) const = default;
};

/// Even local domain F_alpha: alpha(i) ∈ {0, 1, 2} selects the rule on
/// coordinate i. Its stratum is alpha(1) + ... + alpha(n).
struct EvenLiteralDomain {
  std::vector<std::uint8_t> alpha;
  bool operator==(const EvenLiteralDomain&) const = default;
};

/// Domain of the basepoint planner: coordinates of x (resp. y) sitting at
/// -e. Its stratum is |I_x| + |I_y|.
struct SafeDomain {
  VertexSet x_at_antipode;
  VertexSet y_at_antipode;
  bool operator==(const SafeDomain&) const = default;
};

struct DomainId {
  std::variant<OddLiteralDomain, EvenLiteralDomain, SafeDomain> which;
  int stratum = 0;

  std::string to_string() const;
  bool operator==(const DomainId&) const = default;
};

enum class PlannerKind { kFullOdd, kFullEven, kRestrictedLiteral, kSafe };

const char* to_string(PlannerKind kind);

/// One TimedPath per coordinate sphere.
class ProductPath {
 public:
  ProductPath(SphereKind kind, std::vector<TimedPath> coords)
      : kind_(kind), coords_(std::move(coords)) {}

  ProductPoint at(double t) const;
  int n() const { return static_cast<int>(coords_.size()); }
  const std::vector<TimedPath>& coords() const { return coords_; }

 private:
  SphereKind kind_;
  std::vector<TimedPath> coords_;
};

struct PlanResult {
  DomainId domain;
  ProductPath path;
  PlannerKind planner;
  /// For the restricted literal planner: whether the stratum respects the
  /// lower bound n - z(X) (odd) or 2n - 2 d(X) (even). Always true otherwise.
  bool stratum_bound_ok = true;
  int stratum_bound = 0;
};

DomainId classify_odd(const ProductPoint& x, const ProductPoint& y, double tau_anti = 1e-9);
DomainId classify_even(const ProductPoint& x, const ProductPoint& y, double tau_anti = 1e-9);
/// Domain of the basepoint planner.
DomainId classify_safe(const ProductPoint& x, const ProductPoint& y, double tau_anti = 1e-9);

/// Whether (x, y) satisfies the defining conditions of `domain` exactly up
/// to tau_anti. Independent of the classify_* functions; used to confirm
/// each pair lies in one domain only.
bool in_domain(const DomainId& domain, const ProductPoint& x, const ProductPoint& y,
               double tau_anti = 1e-9);

/// True iff supp(p) is a face of X.
bool membership(const SimplicialComplex& x, const ProductPoint& p, double tau_cell = 1e-7);

/// Coordinate-wise s_1 on antipodal coordinates, s_2 elsewhere.
PlanResult plan_full_odd(const ProductPoint& x, const ProductPoint& y, const Tolerances& tol = {});
/// Coordinate-wise s_alpha(i).
PlanResult plan_full_even(const ProductPoint& x, const ProductPoint& y, const Tolerances& tol = {});

/// The full-product rule restricted to X × X. Throws kPointNotInComplex
/// if x or y is outside X. Containment of the path in X is not
/// guaranteed; see verify_containment.
PlanResult plan_restricted_literal(const SimplicialComplex& complex, const ProductPoint& x,
                                   const ProductPoint& y, const Tolerances& tol = {});

/// x -> (e, ..., e) on [0, 1/2], then (e, ..., e) -> y on [1/2, 1]. Each
/// half stays in the torus of its endpoint's support, hence in X.
PlanResult plan_safe(const SimplicialComplex& complex, const ProductPoint& x,
                     const ProductPoint& y, const Tolerances& tol = {});

/// Dispatches on `kind`. The full planners ignore `complex`.
PlanResult plan(PlannerKind kind, const SimplicialComplex& complex, const ProductPoint& x,
                const ProductPoint& y, const Tolerances& tol = {});

/// A planner bound to one complex and sphere, with z(X) and d(X) computed
/// once. This is what the verification harness drives.
class Planner {
 public:
  Planner(PlannerKind kind, SimplicialComplex complex, SphereKind sphere, Tolerances tol = {});

  PlanResult plan(const ProductPoint& x, const ProductPoint& y) const;
  DomainId classify(const ProductPoint& x, const ProductPoint& y) const;

  PlannerKind kind() const { return kind_; }
  const SimplicialComplex& complex() const { return complex_; }
  SphereKind sphere() const { return sphere_; }
  const Tolerances& tolerances() const { return tol_; }
  int z() const { return z_; }
  int d() const { return d_; }

  /// Local domains the construction is designed to use: n+1 (full odd),
  /// 2n+1 (full even), z+1 (literal odd), 2d+1 (literal even, safe).
  int theoretical_domain_count() const;
  /// Smallest stratum the construction should ever produce.
  int min_stratum() const;
  /// Largest stratum index.
  int max_stratum() const;
  /// Whether paths are expected to stay in X (literal only on union-closed X).
  bool guarantees_containment() const;

 private:
  PlannerKind kind_;
  SimplicialComplex complex_;
  SphereKind sphere_;
  Tolerances tol_;
  int z_;
  int d_;
};

}  // namespace toriplan
