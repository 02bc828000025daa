#pragma once

#include <span>
#include <variant>
#include <vector>

#include "toriplan/complex.hpp"

namespace toriplan {

/// Numerical thresholds shared by the geometry, the planners and the CLI.
struct Tolerances {
  /// Inner products at or below -1 + anti count as antipodal.
  double anti = 1e-9;
  /// A coordinate farther than this from e counts as off the basepoint.
  double cell = 1e-7;
  /// Unit-norm tolerance for sphere points.
  double norm = 1e-12;
  /// Geodesics shorter than this collapse to constant paths.
  double degenerate = 1e-12;
};

/// Which sphere a coordinate lives on. Odd: S^{2k-1} ⊂ R^{2k} ≅ C^k.
/// Even: S^{2k} ⊂ R^{2k+1}.
struct SphereKind {
  Parity parity = Parity::kOdd;
  int k = 1;

  int ambient_dim() const { return parity == Parity::kOdd ? 2 * k : 2 * k + 1; }
  bool operator==(const SphereKind&) const = default;
};

/// A unit vector in the ambient space of a sphere.
class SpherePoint {
 public:
  /// Throws kInvalidArgument if the dimension is wrong or the norm differs
  /// from 1 by more than `norm_tol`.
  SpherePoint(SphereKind kind, std::vector<double> coords, double norm_tol = 1e-12);

  /// Rescales `coords` to unit length. Throws kInvalidArgument on a zero vector.
  static SpherePoint normalized(SphereKind kind, std::vector<double> coords);
  /// Point at angle `theta` on S^1.
  static SpherePoint from_angle(double theta);
  /// e = (1, 0, ..., 0).
  static SpherePoint basepoint(SphereKind kind);

  SphereKind kind() const { return kind_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  std::span<const double> coords() const { return coords_; }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  SpherePoint operator-() const;
  double dot(const SpherePoint& other) const;
  /// Euclidean distance in the ambient space.
  double distance(const SpherePoint& other) const;
  /// Euclidean distance to e.
  double distance_to_basepoint() const;
  double norm() const;

 private:
  struct Unchecked {};
  SpherePoint(Unchecked, SphereKind kind, std::vector<double> coords)
      : kind_(kind), coords_(std::move(coords)) {}
  friend class PathSegment;
  friend std::vector<double> even_field(const SpherePoint& x, const Tolerances& tol);

  SphereKind kind_;
  std::vector<double> coords_;
};

struct ConstantSegment {
  SpherePoint at;
};

/// Great-circle arc from `from` to `to` subtending `theta`.
struct GeodesicSegment {
  SpherePoint from;
  SpherePoint to;
  double theta;
};

/// p(u) = cos(πu) from + sin(πu) tangent, ending at -from. `meridian` marks
/// the fixed e -> -e path used on F_0 of an even sphere.
struct SemicircleSegment {
  SpherePoint from;
  std::vector<double> tangent;
  bool meridian = false;
};

/// One closed-form piece of a path on a single sphere, parametrized over
/// local time u ∈ [0, 1]. Endpoints are returned exactly at u = 0 and u = 1.
class PathSegment {
 public:
  using Shape = std::variant<ConstantSegment, GeodesicSegment, SemicircleSegment>;

  explicit PathSegment(Shape shape, bool reversed = false)
      : shape_(std::move(shape)), reversed_(reversed) {}

  const Shape& shape() const { return shape_; }
  bool reversed() const { return reversed_; }

  SpherePoint start() const;
  SpherePoint end() const;
  /// Evaluates at local time u, clamped to [0, 1].
  SpherePoint at(double u) const;
  /// The same curve traversed backwards.
  PathSegment reverse() const { return PathSegment(shape_, !reversed_); }

  const char* name() const;

 private:
  SpherePoint forward_at(double u) const;

  Shape shape_;
  bool reversed_;
};

/// Segments with contiguous time spans covering [0, 1].
class TimedPath {
 public:
  struct Piece {
    double t0;
    double t1;
    PathSegment segment;
  };

  explicit TimedPath(PathSegment whole) : pieces_{{0.0, 1.0, std::move(whole)}} {}
  /// Throws kInvalidArgument unless spans are contiguous from 0 to 1.
  explicit TimedPath(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  SpherePoint at(double t) const;
  SpherePoint start() const { return pieces_.front().segment.start(); }
  SpherePoint end() const { return pieces_.back().segment.end(); }

 private:
  std::vector<Piece> pieces_;
};

/// Shortest great-circle arc from x to y. Throws kAntipodalInput when
/// x·y <= -1 + tol.anti; returns a constant segment when the angle is below
/// tol.degenerate.
PathSegment s2_short_geodesic(const SpherePoint& x, const SpherePoint& y,
                              const Tolerances& tol = {});

/// ν(x) = i·x under R^{2k} ≅ C^k, pairing coordinates (2j, 2j+1).
std::vector<double> odd_field(const SpherePoint& x);

/// Semicircle x -> -x tangent to i·x on an odd sphere.
PathSegment s1_semicircle_odd(const SpherePoint& x);

/// Nowhere-zero unit tangent field on an even sphere minus e: the constant
/// field u_2 on the stereographic chart from e, pushed to the sphere and
/// normalized. Throws kPoleInput when x·e >= 1 - tol.anti.
std::vector<double> even_field(const SpherePoint& x, const Tolerances& tol = {});

/// Semicircle x -> -x tangent to even_field(x). Throws kPoleInput at x = e.
PathSegment s1_semicircle_even(const SpherePoint& x, const Tolerances& tol = {});

/// The fixed meridian e -> u_2 -> -e on an even sphere.
PathSegment s0_fixed_even(SphereKind kind);

}  // namespace toriplan
