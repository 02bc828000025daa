#include "toriplan/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "toriplan/error.hpp"

namespace toriplan {

namespace {

double norm_of(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

void check_kind(SphereKind kind) {
  if (kind.k < 1) throw Error(ErrorCode::kInvalidArgument, "sphere parameter k must be >= 1");
}

}  // namespace

SpherePoint::SpherePoint(SphereKind kind, std::vector<double> coords, double norm_tol)
    : kind_(kind), coords_(std::move(coords)) {
  check_kind(kind);
  if (dim() != kind.ambient_dim()) {
    throw Error(ErrorCode::kInvalidArgument,
                "point has " + std::to_string(dim()) + " coordinates, expected " +
                    std::to_string(kind.ambient_dim()));
  }
  if (std::abs(norm() - 1.0) > norm_tol) {
    throw Error(ErrorCode::kInvalidArgument, "point is not on the unit sphere");
  }
}

SpherePoint SpherePoint::normalized(SphereKind kind, std::vector<double> coords) {
  check_kind(kind);
  const double len = norm_of(coords);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot normalize a zero or non-finite vector");
  }
  for (double& c : coords) c /= len;
  return SpherePoint(kind, std::move(coords), 1e-9);
}

SpherePoint SpherePoint::from_angle(double theta) {
  return SpherePoint(Unchecked{}, SphereKind{Parity::kOdd, 1}, {std::cos(theta), std::sin(theta)});
}

SpherePoint SpherePoint::basepoint(SphereKind kind) {
  check_kind(kind);
  std::vector<double> c(static_cast<std::size_t>(kind.ambient_dim()), 0.0);
  c[0] = 1.0;
  return SpherePoint(Unchecked{}, kind, std::move(c));
}

SpherePoint SpherePoint::operator-() const {
  std::vector<double> c(coords_);
  for (double& v : c) v = -v;
  return SpherePoint(Unchecked{}, kind_, std::move(c));
}

double SpherePoint::dot(const SpherePoint& other) const {
  double s = 0.0;
  for (std::size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * other.coords_[i];
  return s;
}

double SpherePoint::distance(const SpherePoint& other) const {
  double s = 0.0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const double d = coords_[i] - other.coords_[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double SpherePoint::distance_to_basepoint() const {
  double s = (coords_[0] - 1.0) * (coords_[0] - 1.0);
  for (std::size_t i = 1; i < coords_.size(); ++i) s += coords_[i] * coords_[i];
  return std::sqrt(s);
}

double SpherePoint::norm() const { return norm_of(coords_); }

SpherePoint PathSegment::start() const { return reversed_ ? forward_at(1.0) : forward_at(0.0); }

SpherePoint PathSegment::end() const { return reversed_ ? forward_at(0.0) : forward_at(1.0); }

SpherePoint PathSegment::at(double u) const {
  u = std::clamp(u, 0.0, 1.0);
  return forward_at(reversed_ ? 1.0 - u : u);
}

SpherePoint PathSegment::forward_at(double u) const {
  return std::visit(
      [u](const auto& s) -> SpherePoint {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ConstantSegment>) {
          return s.at;
        } else if constexpr (std::is_same_v<T, GeodesicSegment>) {
          if (u <= 0.0) return s.from;
          if (u >= 1.0) return s.to;
          const double inv = 1.0 / std::sin(s.theta);
          const double a = std::sin((1.0 - u) * s.theta) * inv;
          const double b = std::sin(u * s.theta) * inv;
          std::vector<double> c(s.from.coords().size());
          for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = a * s.from.coords()[i] + b * s.to.coords()[i];
          }
          return SpherePoint(SpherePoint::Unchecked{}, s.from.kind(), std::move(c));
        } else {
          if (u <= 0.0) return s.from;
          if (u >= 1.0) return -s.from;
          const double a = std::cos(std::numbers::pi * u);
          const double b = std::sin(std::numbers::pi * u);
          std::vector<double> c(s.from.coords().size());
          for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = a * s.from.coords()[i] + b * s.tangent[i];
          }
          return SpherePoint(SpherePoint::Unchecked{}, s.from.kind(), std::move(c));
        }
      },
      shape_);
}

const char* PathSegment::name() const {
  return std::visit(
      [](const auto& s) -> const char* {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ConstantSegment>) {
          return "constant";
        } else if constexpr (std::is_same_v<T, GeodesicSegment>) {
          return "geodesic";
        } else {
          return s.meridian ? "meridian" : "semicircle";
        }
      },
      shape_);
}

TimedPath::TimedPath(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty() || pieces_.front().t0 != 0.0 || pieces_.back().t1 != 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "path pieces must cover [0, 1]");
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!(pieces_[i].t0 < pieces_[i].t1) ||
        (i > 0 && pieces_[i].t0 != pieces_[i - 1].t1)) {
      throw Error(ErrorCode::kInvalidArgument, "path pieces must have contiguous spans");
    }
  }
}

SpherePoint TimedPath::at(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  for (const Piece& p : pieces_) {
    if (t <= p.t1) return p.segment.at((t - p.t0) / (p.t1 - p.t0));
  }
  return pieces_.back().segment.end();
}

PathSegment s2_short_geodesic(const SpherePoint& x, const SpherePoint& y, const Tolerances& tol) {
  const double dot = x.dot(y);
  if (dot <= -1.0 + tol.anti) {
    throw Error(ErrorCode::kAntipodalInput, "shortest geodesic requested between antipodal points");
  }
  // 2 atan2(|x-y|, |x+y|) stays accurate at both ends of [0, π].
  double diff = 0.0;
  double sum = 0.0;
  for (int i = 0; i < x.dim(); ++i) {
    const double d = x[i] - y[i];
    const double s = x[i] + y[i];
    diff += d * d;
    sum += s * s;
  }
  const double theta = 2.0 * std::atan2(std::sqrt(diff), std::sqrt(sum));
  if (theta < tol.degenerate) return PathSegment(ConstantSegment{x});
  return PathSegment(GeodesicSegment{x, y, theta});
}

std::vector<double> odd_field(const SpherePoint& x) {
  if (x.kind().parity != Parity::kOdd) {
    throw Error(ErrorCode::kInvalidArgument, "odd_field needs a point on an odd sphere");
  }
  std::vector<double> v(static_cast<std::size_t>(x.dim()));
  for (int j = 0; j + 1 < x.dim(); j += 2) {
    v[static_cast<std::size_t>(j)] = -x[j + 1];
    v[static_cast<std::size_t>(j + 1)] = x[j];
  }
  return v;
}

PathSegment s1_semicircle_odd(const SpherePoint& x) {
  return PathSegment(SemicircleSegment{x, odd_field(x), false});
}

std::vector<double> even_field(const SpherePoint& x, const Tolerances& tol) {
  if (x.kind().parity != Parity::kEven) {
    throw Error(ErrorCode::kInvalidArgument, "even_field needs a point on an even sphere");
  }
  const double x0 = x[0];
  if (x0 >= 1.0 - tol.anti) throw Error(ErrorCode::kPoleInput, "even_field is undefined at e");
  // With w the stereographic image of x from e, the pushforward of u_2 is
  // (2/(|w|^2+1)) (2 w_d/(|w|^2+1), u_2 - 2 w w_d/(|w|^2+1)). In terms of x
  // the bracket reduces to (x_d, u_2 - x_perp x_d / (1 - x0)).
  const double xd = x[1];
  double scale = 0.0;
  if (x0 <= 0.0) {
    scale = xd / (1.0 - x0);
  } else {
    // 1 - x0 = |x_perp|^2 / (1 + x0) avoids cancellation near e.
    double perp2 = 0.0;
    for (int i = 1; i < x.dim(); ++i) perp2 += x[i] * x[i];
    scale = xd * (1.0 + x0) / perp2;
  }
  std::vector<double> v(static_cast<std::size_t>(x.dim()), 0.0);
  v[0] = xd;
  for (int i = 1; i < x.dim(); ++i) v[static_cast<std::size_t>(i)] = -x[i] * scale;
  v[1] += 1.0;
  const double len = norm_of(v);
  for (double& c : v) c /= len;
  return v;
}

PathSegment s1_semicircle_even(const SpherePoint& x, const Tolerances& tol) {
  return PathSegment(SemicircleSegment{x, even_field(x, tol), false});
}

PathSegment s0_fixed_even(SphereKind kind) {
  if (kind.parity != Parity::kEven) {
    throw Error(ErrorCode::kInvalidArgument, "the fixed meridian lives on an even sphere");
  }
  std::vector<double> u2(static_cast<std::size_t>(kind.ambient_dim()), 0.0);
  u2[1] = 1.0;
  return PathSegment(SemicircleSegment{SpherePoint::basepoint(kind), std::move(u2), true});
}

}  // namespace toriplan
