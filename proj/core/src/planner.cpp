#include "toriplan/planner.hpp"

#include <cmath>
#include <sstream>

#include "toriplan/error.hpp"

namespace toriplan {

namespace {

bool antipodal(const SpherePoint& a, const SpherePoint& b, double tau) {
  return a.dot(b) <= -1.0 + tau;
}

bool at_basepoint(const SpherePoint& a, double tau) { return a[0] >= 1.0 - tau; }

bool at_antipode(const SpherePoint& a, double tau) { return a[0] <= -1.0 + tau; }

void check_pair(const ProductPoint& x, const ProductPoint& y, Parity parity) {
  if (x.n() != y.n() || !(x.kind() == y.kind())) {
    throw Error(ErrorCode::kInvalidArgument, "endpoints live on different products");
  }
  if (x.kind().parity != parity) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("planner expects ") + to_string(parity) + " spheres");
  }
}

void check_in_complex(const SimplicialComplex& complex, const ProductPoint& p, const char* which,
                      double tau_cell) {
  if (p.n() != complex.n()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(which) + " has " + std::to_string(p.n()) +
                    " coordinates but the complex has n = " + std::to_string(complex.n()));
  }
  if (!membership(complex, p, tau_cell)) {
    throw Error(ErrorCode::kPointNotInComplex,
                std::string(which) + " has support " + p.support(tau_cell).to_string() +
                    ", which is not a face");
  }
}

// Path taking p to the basepoint coordinate-wise.
std::vector<PathSegment> retract_to_basepoint(const ProductPoint& p, const Tolerances& tol) {
  std::vector<PathSegment> out;
  out.reserve(static_cast<std::size_t>(p.n()));
  const SpherePoint e = SpherePoint::basepoint(p.kind());
  for (const SpherePoint& c : p.coords()) {
    if (at_antipode(c, tol.anti)) {
      out.push_back(p.kind().parity == Parity::kOdd ? s1_semicircle_odd(c)
                                                    : s1_semicircle_even(c, tol));
    } else {
      out.push_back(s2_short_geodesic(c, e, tol));
    }
  }
  return out;
}

}  // namespace

ProductPoint::ProductPoint(SphereKind kind, std::vector<SpherePoint> coords)
    : kind_(kind), coords_(std::move(coords)) {
  for (const SpherePoint& c : coords_) {
    if (!(c.kind() == kind_)) {
      throw Error(ErrorCode::kInvalidArgument, "product coordinates must share one sphere");
    }
  }
}

ProductPoint ProductPoint::basepoint(SphereKind kind, int n) {
  return ProductPoint(kind, std::vector<SpherePoint>(static_cast<std::size_t>(n),
                                                     SpherePoint::basepoint(kind)));
}

ProductPoint ProductPoint::from_angles(std::span<const double> angles) {
  std::vector<SpherePoint> c;
  c.reserve(angles.size());
  for (double a : angles) c.push_back(SpherePoint::from_angle(a));
  return ProductPoint(SphereKind{Parity::kOdd, 1}, std::move(c));
}

VertexSet ProductPoint::support(double tau_cell) const {
  VertexSet s;
  for (int i = 0; i < n(); ++i) {
    if ((*this)[i].distance_to_basepoint() > tau_cell) s |= VertexSet::singleton(i + 1);
  }
  return s;
}

double ProductPoint::distance(const ProductPoint& other) const {
  double s = 0.0;
  for (int i = 0; i < n(); ++i) {
    const double d = (*this)[i].distance(other[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

std::string DomainId::to_string() const {
  std::ostringstream os;
  std::visit(
      [&os](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, OddLiteralDomain>) {
          os << "F_I I=" << d.antipodal.to_string();
        } else if constexpr (std::is_same_v<T, EvenLiteralDomain>) {
          os << "F_alpha alpha=(";
          for (std::size_t i = 0; i < d.alpha.size(); ++i) {
            os << (i ? "," : "") << static_cast<int>(d.alpha[i]);
          }
          os << ')';
        } else {
          os << "Safe Ix=" << d.x_at_antipode.to_string() << " Iy=" << d.y_at_antipode.to_string();
        }
      },
      which);
  os << " stratum=" << stratum;
  return os.str();
}

const char* to_string(PlannerKind kind) {
  switch (kind) {
    case PlannerKind::kFullOdd: return "full-odd";
    case PlannerKind::kFullEven: return "full-even";
    case PlannerKind::kRestrictedLiteral: return "restricted-literal";
    case PlannerKind::kSafe: return "safe";
  }
  return "unknown";
}

ProductPoint ProductPath::at(double t) const {
  std::vector<SpherePoint> c;
  c.reserve(coords_.size());
  for (const TimedPath& p : coords_) c.push_back(p.at(t));
  return ProductPoint(kind_, std::move(c));
}

DomainId classify_odd(const ProductPoint& x, const ProductPoint& y, double tau_anti) {
  check_pair(x, y, Parity::kOdd);
  VertexSet anti;
  for (int i = 0; i < x.n(); ++i) {
    if (antipodal(x[i], y[i], tau_anti)) anti |= VertexSet::singleton(i + 1);
  }
  return DomainId{OddLiteralDomain{anti}, x.n() - anti.size()};
}

DomainId classify_even(const ProductPoint& x, const ProductPoint& y, double tau_anti) {
  check_pair(x, y, Parity::kEven);
  EvenLiteralDomain d;
  d.alpha.resize(static_cast<std::size_t>(x.n()));
  int stratum = 0;
  for (int i = 0; i < x.n(); ++i) {
    std::uint8_t a = 2;
    if (antipodal(x[i], y[i], tau_anti)) a = at_basepoint(x[i], tau_anti) ? 0 : 1;
    d.alpha[static_cast<std::size_t>(i)] = a;
    stratum += a;
  }
  return DomainId{std::move(d), stratum};
}

DomainId classify_safe(const ProductPoint& x, const ProductPoint& y, double tau_anti) {
  if (x.n() != y.n() || !(x.kind() == y.kind())) {
    throw Error(ErrorCode::kInvalidArgument, "endpoints live on different products");
  }
  SafeDomain d;
  for (int i = 0; i < x.n(); ++i) {
    if (at_antipode(x[i], tau_anti)) d.x_at_antipode |= VertexSet::singleton(i + 1);
    if (at_antipode(y[i], tau_anti)) d.y_at_antipode |= VertexSet::singleton(i + 1);
  }
  const int s = d.x_at_antipode.size() + d.y_at_antipode.size();
  return DomainId{d, s};
}

bool in_domain(const DomainId& domain, const ProductPoint& x, const ProductPoint& y,
               double tau_anti) {
  // Squared-distance forms of the classify_* predicates: for unit vectors
  // |a + b|^2 = 2 + 2 a·b and |a - e|^2 = 2 - 2 a_0.
  const double radius = std::sqrt(2.0 * tau_anti);
  const auto is_anti = [&](int i) { return x[i].distance(-y[i]) <= radius; };
  const auto near_e = [&](const SpherePoint& p) { return p.distance_to_basepoint() <= radius; };
  const auto near_minus_e = [&](const SpherePoint& p) {
    return p.distance(-SpherePoint::basepoint(p.kind())) <= radius;
  };

  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, OddLiteralDomain>) {
          if (domain.stratum != x.n() - d.antipodal.size()) return false;
          for (int i = 0; i < x.n(); ++i) {
            if (d.antipodal.contains(i + 1) != is_anti(i)) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, EvenLiteralDomain>) {
          if (static_cast<int>(d.alpha.size()) != x.n()) return false;
          int sum = 0;
          for (int i = 0; i < x.n(); ++i) {
            const int a = d.alpha[static_cast<std::size_t>(i)];
            sum += a;
            const bool ok = a == 0   ? (near_e(x[i]) && is_anti(i))
                            : a == 1 ? (!near_e(x[i]) && is_anti(i))
                                     : !is_anti(i);
            if (!ok) return false;
          }
          return sum == domain.stratum;
        } else {
          for (int i = 0; i < x.n(); ++i) {
            if (d.x_at_antipode.contains(i + 1) != near_minus_e(x[i])) return false;
            if (d.y_at_antipode.contains(i + 1) != near_minus_e(y[i])) return false;
          }
          return domain.stratum == d.x_at_antipode.size() + d.y_at_antipode.size();
        }
      },
      domain.which);
}

bool membership(const SimplicialComplex& x, const ProductPoint& p, double tau_cell) {
  if (p.n() != x.n()) return false;
  return x.is_face(p.support(tau_cell));
}

PlanResult plan_full_odd(const ProductPoint& x, const ProductPoint& y, const Tolerances& tol) {
  DomainId domain = classify_odd(x, y, tol.anti);
  const VertexSet anti = std::get<OddLiteralDomain>(domain.which).antipodal;
  std::vector<TimedPath> coords;
  coords.reserve(static_cast<std::size_t>(x.n()));
  for (int i = 0; i < x.n(); ++i) {
    coords.emplace_back(anti.contains(i + 1) ? s1_semicircle_odd(x[i])
                                             : s2_short_geodesic(x[i], y[i], tol));
  }
  return PlanResult{std::move(domain), ProductPath(x.kind(), std::move(coords)),
                    PlannerKind::kFullOdd};
}

PlanResult plan_full_even(const ProductPoint& x, const ProductPoint& y, const Tolerances& tol) {
  DomainId domain = classify_even(x, y, tol.anti);
  const auto& alpha = std::get<EvenLiteralDomain>(domain.which).alpha;
  std::vector<TimedPath> coords;
  coords.reserve(static_cast<std::size_t>(x.n()));
  for (int i = 0; i < x.n(); ++i) {
    switch (alpha[static_cast<std::size_t>(i)]) {
      case 0: coords.emplace_back(s0_fixed_even(x.kind())); break;
      case 1: coords.emplace_back(s1_semicircle_even(x[i], tol)); break;
      default: coords.emplace_back(s2_short_geodesic(x[i], y[i], tol)); break;
    }
  }
  return PlanResult{std::move(domain), ProductPath(x.kind(), std::move(coords)),
                    PlannerKind::kFullEven};
}

PlanResult plan_restricted_literal(const SimplicialComplex& complex, const ProductPoint& x,
                                   const ProductPoint& y, const Tolerances& tol) {
  return Planner(PlannerKind::kRestrictedLiteral, complex, x.kind(), tol).plan(x, y);
}

PlanResult plan_safe(const SimplicialComplex& complex, const ProductPoint& x,
                     const ProductPoint& y, const Tolerances& tol) {
  return Planner(PlannerKind::kSafe, complex, x.kind(), tol).plan(x, y);
}

PlanResult plan(PlannerKind kind, const SimplicialComplex& complex, const ProductPoint& x,
                const ProductPoint& y, const Tolerances& tol) {
  return Planner(kind, complex, x.kind(), tol).plan(x, y);
}

Planner::Planner(PlannerKind kind, SimplicialComplex complex, SphereKind sphere, Tolerances tol)
    : kind_(kind), complex_(std::move(complex)), sphere_(sphere), tol_(tol) {
  if ((kind_ == PlannerKind::kFullOdd && sphere_.parity != Parity::kOdd) ||
      (kind_ == PlannerKind::kFullEven && sphere_.parity != Parity::kEven)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(toriplan::to_string(kind_)) + " planner does not match " +
                    toriplan::to_string(sphere_.parity) + " spheres");
  }
  z_ = z_invariant(complex_).z;
  d_ = d_invariant(complex_);
}

DomainId Planner::classify(const ProductPoint& x, const ProductPoint& y) const {
  switch (kind_) {
    case PlannerKind::kFullOdd: return classify_odd(x, y, tol_.anti);
    case PlannerKind::kFullEven: return classify_even(x, y, tol_.anti);
    case PlannerKind::kRestrictedLiteral:
      return sphere_.parity == Parity::kOdd ? classify_odd(x, y, tol_.anti)
                                            : classify_even(x, y, tol_.anti);
    case PlannerKind::kSafe: return classify_safe(x, y, tol_.anti);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown planner kind");
}

PlanResult Planner::plan(const ProductPoint& x, const ProductPoint& y) const {
  switch (kind_) {
    case PlannerKind::kFullOdd: return plan_full_odd(x, y, tol_);
    case PlannerKind::kFullEven: return plan_full_even(x, y, tol_);
    case PlannerKind::kRestrictedLiteral: {
      check_in_complex(complex_, x, "x", tol_.cell);
      check_in_complex(complex_, y, "y", tol_.cell);
      PlanResult r = sphere_.parity == Parity::kOdd ? plan_full_odd(x, y, tol_)
                                                    : plan_full_even(x, y, tol_);
      r.planner = PlannerKind::kRestrictedLiteral;
      r.stratum_bound = min_stratum();
      r.stratum_bound_ok = r.domain.stratum >= r.stratum_bound;
      return r;
    }
    case PlannerKind::kSafe: {
      check_in_complex(complex_, x, "x", tol_.cell);
      check_in_complex(complex_, y, "y", tol_.cell);
      if (!(x.kind() == y.kind())) {
        throw Error(ErrorCode::kInvalidArgument, "endpoints live on different products");
      }
      DomainId domain = classify_safe(x, y, tol_.anti);
      auto outbound = retract_to_basepoint(x, tol_);
      auto inbound = retract_to_basepoint(y, tol_);
      std::vector<TimedPath> coords;
      coords.reserve(outbound.size());
      for (std::size_t i = 0; i < outbound.size(); ++i) {
        coords.emplace_back(std::vector<TimedPath::Piece>{
            {0.0, 0.5, std::move(outbound[i])}, {0.5, 1.0, inbound[i].reverse()}});
      }
      return PlanResult{std::move(domain), ProductPath(x.kind(), std::move(coords)),
                        PlannerKind::kSafe};
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown planner kind");
}

int Planner::theoretical_domain_count() const {
  const int n = complex_.n();
  switch (kind_) {
    case PlannerKind::kFullOdd: return n + 1;
    case PlannerKind::kFullEven: return 2 * n + 1;
    case PlannerKind::kRestrictedLiteral:
      return sphere_.parity == Parity::kOdd ? z_ + 1 : 2 * d_ + 1;
    case PlannerKind::kSafe: return 2 * d_ + 1;
  }
  return 0;
}

int Planner::min_stratum() const {
  const int n = complex_.n();
  if (kind_ != PlannerKind::kRestrictedLiteral) return 0;
  return sphere_.parity == Parity::kOdd ? n - z_ : 2 * n - 2 * d_;
}

int Planner::max_stratum() const {
  const int n = complex_.n();
  switch (kind_) {
    case PlannerKind::kFullOdd: return n;
    case PlannerKind::kFullEven: return 2 * n;
    case PlannerKind::kRestrictedLiteral: return sphere_.parity == Parity::kOdd ? n : 2 * n;
    case PlannerKind::kSafe: return 2 * d_;
  }
  return 0;
}

bool Planner::guarantees_containment() const {
  return kind_ != PlannerKind::kRestrictedLiteral || union_closed(complex_);
}

}  // namespace toriplan
