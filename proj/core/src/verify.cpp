#include "toriplan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "parallel.hpp"
#include "toriplan/sampling.hpp"

namespace toriplan {

namespace {

using detail::parallel_for;

bool is_full_kind(PlannerKind k) {
  return k == PlannerKind::kFullOdd || k == PlannerKind::kFullEven;
}

PointPair draw_pair(const Planner& planner, const PairSampler& sampler, const VerifyConfig& config,
                    std::size_t index) {
  Rng rng = sample_rng(config.seed, index);
  const auto every = static_cast<std::size_t>(std::max(config.directed_every, 0));
  const bool directed = every > 0 && index % every == every - 1;
  if (is_full_kind(planner.kind())) {
    if (directed) return sampler.pattern_pair(rng);
    const int n = planner.complex().n();
    ProductPoint x = random_product_point(planner.sphere(), n, rng);
    ProductPoint y = random_product_point(planner.sphere(), n, rng);
    return {std::move(x), std::move(y)};
  }
  return directed ? sampler.directed_pair(rng) : sampler.random_pair(rng);
}

std::vector<DomainId> candidate_domains(const Planner& planner) {
  const int n = planner.complex().n();
  std::vector<DomainId> out;
  const bool odd = planner.sphere().parity == Parity::kOdd;
  if (planner.kind() == PlannerKind::kSafe) {
    if (n > 5) return out;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        SafeDomain d{VertexSet(a), VertexSet(b)};
        out.push_back(DomainId{d, std::popcount(a) + std::popcount(b)});
      }
    }
  } else if (odd) {
    if (n > 10) return out;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      out.push_back(DomainId{OddLiteralDomain{VertexSet(a)}, n - std::popcount(a)});
    }
  } else {
    if (n > 6) return out;
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      EvenLiteralDomain d;
      d.alpha.resize(static_cast<std::size_t>(n));
      int sum = 0;
      std::size_t c = code;
      for (int i = 0; i < n; ++i) {
        d.alpha[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c % 3);
        sum += static_cast<int>(c % 3);
        c /= 3;
      }
      out.push_back(DomainId{std::move(d), sum});
    }
  }
  return out;
}

std::vector<double> time_grid(int count) {
  count = std::max(count, 2);
  std::vector<double> t(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) t[static_cast<std::size_t>(i)] = static_cast<double>(i) / (count - 1);
  return t;
}

SpherePoint jitter(const SpherePoint& p, double sigma, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, sigma);
  std::vector<double> c(p.coords().begin(), p.coords().end());
  for (double& v : c) v += gauss(rng);
  return SpherePoint::normalized(p.kind(), std::move(c));
}

// Same-domain perturbation: coordinates pinned at ±e stay put and
// antipodal coordinates stay antipodal.
PointPair perturb(const Planner& planner, const ProductPoint& x, const ProductPoint& y,
                  double delta, Rng& rng) {
  const auto& tol = planner.tolerances();
  const int n = x.n();
  const double sigma = delta / std::sqrt(2.0 * n * x.kind().ambient_dim());
  const double pin = std::sqrt(2.0 * tol.anti);
  const SpherePoint minus_e = -SpherePoint::basepoint(x.kind());
  const auto pinned = [&](const SpherePoint& p) {
    return p.distance_to_basepoint() <= tol.cell || p.distance(minus_e) <= pin;
  };
  std::vector<SpherePoint> xs;
  std::vector<SpherePoint> ys;
  for (int i = 0; i < n; ++i) {
    const bool anti = x[i].dot(y[i]) <= -1.0 + tol.anti;
    SpherePoint xi = pinned(x[i]) ? x[i] : jitter(x[i], sigma, rng);
    SpherePoint yi = anti ? (pinned(x[i]) ? y[i] : -xi) : (pinned(y[i]) ? y[i] : jitter(y[i], sigma, rng));
    xs.push_back(std::move(xi));
    ys.push_back(std::move(yi));
  }
  return {ProductPoint(x.kind(), std::move(xs)), ProductPoint(y.kind(), std::move(ys))};
}

// Distance from (x, y) to where the planner's rules stop being continuous.
double singular_distance(const Planner& planner, const ProductPoint& x, const ProductPoint& y) {
  const auto& tol = planner.tolerances();
  const SpherePoint e = SpherePoint::basepoint(x.kind());
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < x.n(); ++i) {
    if (planner.kind() == PlannerKind::kSafe) {
      for (const SpherePoint* p : {&x[i], &y[i]}) {
        if ((*p)[0] > -1.0 + tol.anti) best = std::min(best, p->distance(-e));
      }
      continue;
    }
    const bool anti = x[i].dot(y[i]) <= -1.0 + tol.anti;
    if (!anti) {
      best = std::min(best, x[i].distance(-y[i]));
    } else if (x.kind().parity == Parity::kEven && x[i][0] < 1.0 - tol.anti) {
      best = std::min(best, x[i].distance_to_basepoint());
    }
  }
  return best;
}

}  // namespace

PartitionReport verify_partition(const Planner& planner, const VerifyConfig& config) {
  const PairSampler sampler(planner.complex(), planner.sphere());
  const auto candidates = candidate_domains(planner);
  const double tau = planner.tolerances().anti;

  struct Slot {
    DomainId domain;
    int matches = 0;
    bool assigned_matches = false;
  };
  std::vector<Slot> slots(config.samples);
  parallel_for(config.samples, config.jobs, [&](std::size_t i) {
    auto [x, y] = draw_pair(planner, sampler, config, i);
    Slot s{planner.classify(x, y)};
    s.assigned_matches = in_domain(s.domain, x, y, tau);
    if (candidates.empty()) {
      s.matches = s.assigned_matches ? 1 : 0;
    } else {
      for (const DomainId& c : candidates) {
        if (in_domain(c, x, y, tau)) ++s.matches;
      }
    }
    slots[i] = std::move(s);
  });

  PartitionReport report;
  report.samples = config.samples;
  report.theoretical_domains = planner.theoretical_domain_count();
  report.min_stratum = planner.min_stratum();
  report.max_stratum = planner.max_stratum();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const Slot& s = slots[i];
    if (s.matches != 1 || !s.assigned_matches) ++report.not_unique;
    ++report.stratum_counts[s.domain.stratum];
    if (s.domain.stratum < report.min_stratum || s.domain.stratum > report.max_stratum) {
      ++report.stratum_bound_violations;
      if (!report.first_bound_violation) {
        report.first_bound_violation =
            "sample=" + std::to_string(i) + " domain=" + s.domain.to_string();
      }
    }
  }
  report.realized_strata = static_cast<int>(report.stratum_counts.size());
  return report;
}

ContainmentReport verify_containment(const Planner& planner, const VerifyConfig& config) {
  const PairSampler sampler(planner.complex(), planner.sphere());
  const auto times = time_grid(config.time_samples);
  const double tau_cell = planner.tolerances().cell;

  std::vector<std::optional<ContainmentViolation>> slots(config.samples);
  parallel_for(config.samples, config.jobs, [&](std::size_t i) {
    auto [x, y] = draw_pair(planner, sampler, config, i);
    const PlanResult r = planner.plan(x, y);
    for (double t : times) {
      const ProductPoint p = r.path.at(t);
      const VertexSet supp = p.support(tau_cell);
      if (!planner.complex().is_face(supp)) {
        slots[i] = ContainmentViolation{i, t, supp, r.domain.to_string()};
        break;
      }
    }
  });

  ContainmentReport report;
  report.samples = config.samples;
  for (auto& s : slots) {
    if (!s) continue;
    ++report.violating_pairs;
    if (report.witnesses.size() < ContainmentReport::kMaxWitnesses) {
      report.witnesses.push_back(std::move(*s));
    }
  }
  return report;
}

ContinuityReport verify_endpoints_continuity(const Planner& planner, const VerifyConfig& config) {
  const PairSampler sampler(planner.complex(), planner.sphere());
  const auto times = time_grid(config.time_samples);

  struct Slot {
    double endpoint = 0.0;
    double sphere = 0.0;
    double ratio = -1.0;  // < 0: no regular same-domain perturbation
    bool skipped = false;
  };
  std::vector<Slot> slots(config.samples);
  parallel_for(config.samples, config.jobs, [&](std::size_t i) {
    auto [x, y] = draw_pair(planner, sampler, config, i);
    const PlanResult r = planner.plan(x, y);
    Slot s;
    s.endpoint = std::max(r.path.at(0.0).distance(x), r.path.at(1.0).distance(y));
    std::vector<ProductPoint> trace;
    trace.reserve(times.size());
    for (double t : times) {
      ProductPoint p = r.path.at(t);
      for (const SpherePoint& c : p.coords()) s.sphere = std::max(s.sphere, std::abs(c.norm() - 1.0));
      trace.push_back(std::move(p));
    }

    Rng rng = sample_rng(config.seed ^ 0x9e3779b97f4a7c15ULL, i);
    auto [xp, yp] = perturb(planner, x, y, config.delta, rng);
    const double dist = std::hypot(x.distance(xp), y.distance(yp));
    if (dist > 0.0) {
      if (!(planner.classify(xp, yp) == r.domain)) {
        s.skipped = true;
      } else if (singular_distance(planner, x, y) >= config.regular_margin) {
        const PlanResult rp = planner.plan(xp, yp);
        double sup = 0.0;
        for (std::size_t k = 0; k < times.size(); ++k) {
          sup = std::max(sup, trace[k].distance(rp.path.at(times[k])));
        }
        s.ratio = sup / dist;
      }
    }
    slots[i] = s;
  });

  ContinuityReport report;
  report.samples = config.samples;
  for (const Slot& s : slots) {
    report.max_endpoint_error = std::max(report.max_endpoint_error, s.endpoint);
    report.max_sphere_error = std::max(report.max_sphere_error, s.sphere);
    if (s.skipped) ++report.cross_domain_skipped;
    if (s.ratio >= 0.0) {
      ++report.lipschitz_pairs;
      report.lipschitz = std::max(report.lipschitz, s.ratio);
    }
  }
  return report;
}

}  // namespace toriplan
