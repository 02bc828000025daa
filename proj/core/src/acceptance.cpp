#include "toriplan/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>

#include "parallel.hpp"
#include "toriplan/algebra.hpp"
#include "toriplan/applications.hpp"
#include "toriplan/complex.hpp"
#include "toriplan/error.hpp"
#include "toriplan/sampling.hpp"
#include "toriplan/verify.hpp"

namespace toriplan {

namespace {

using detail::parallel_for;

struct Outcome {
  bool correct = true;
  std::string detail;
};

SimplicialComplex figure_eight() {
  return SimplicialComplex::from_facets(2, {VertexSet{1}, VertexSet{2}});
}

struct NamedComplex {
  std::string name;
  SimplicialComplex x;
};

// Fixed small complexes plus random ones on up to 6 vertices.
std::vector<NamedComplex> sampled_complexes(std::uint64_t seed) {
  std::vector<NamedComplex> out{
      {"figure-eight", figure_eight()},
      {"flag(P3)", flag_complex(Graph::from_edges(3, {{1, 2}, {2, 3}}))},
      {"skeleton(4,1)", SimplicialComplex::skeleton(4, 1)},
      {"skeleton(5,2)", SimplicialComplex::skeleton(5, 2)},
      {"full(3)", SimplicialComplex::full(3)},
      {"single facet {1,3}", SimplicialComplex::from_facets(4, {VertexSet{1, 3}})},
  };
  for (int i = 0; i < 12; ++i) {
    Rng rng = sample_rng(seed ^ 0x6a09e667f3bcc908ULL, static_cast<std::uint64_t>(i));
    const int n = 2 + i % 5;
    out.push_back({"random#" + std::to_string(i) + " n=" + std::to_string(n), random_complex(n, rng)});
  }
  return out;
}

Outcome tc_grid() {
  Outcome o;
  int checked = 0;
  for (int l = 1; l <= 4; ++l) {
    for (int n = 1; n <= 10; ++n) {
      const int gp = tc(SimplicialComplex::skeleton(n, std::min(n, l)), Parity::kOdd).tc;
      ++checked;
      if (gp != std::min(n + 1, 2 * l + 1)) {
        o.correct = false;
        o.detail += " general-position(n=" + std::to_string(n) + ",l=" + std::to_string(l) +
                    ")=" + std::to_string(gp);
      }
      if (n < l) continue;
      const SimplicialComplex central =
          product(SimplicialComplex::skeleton(n - 1, l - 1), SimplicialComplex::full(1));
      const int gc = tc(central, Parity::kOdd).tc;
      ++checked;
      if (gc != std::min(n + 1, 2 * l)) {
        o.correct = false;
        o.detail += " generic(n=" + std::to_string(n) + ",l=" + std::to_string(l) + ")=" +
                    std::to_string(gc);
      }
    }
  }
  o.detail = std::to_string(checked) + " grid points" + (o.correct ? ", all equal" : ";" + o.detail);
  return o;
}

Outcome oracle_equivalence(const AcceptanceConfig& cfg) {
  constexpr std::size_t kCount = 200;
  std::vector<int> mismatch(kCount, 0);
  parallel_for(kCount, cfg.jobs, [&](std::size_t i) {
    Rng rng = sample_rng(cfg.seed ^ 0xbb67ae8584caa73bULL, i);
    const SimplicialComplex x = random_complex(1 + static_cast<int>(i % 14), rng);
    mismatch[i] = z_invariant(x).z != z_bruteforce(x);
  });
  const auto bad = std::count(mismatch.begin(), mismatch.end(), 1);
  return {bad == 0, std::to_string(kCount) + " random complexes n<=14, " + std::to_string(bad) +
                        " mismatches"};
}

Outcome algebra_bridge(const AcceptanceConfig& cfg) {
  constexpr std::size_t kCount = 100;
  std::vector<int> mismatch(kCount, 0);
  parallel_for(kCount, cfg.jobs, [&](std::size_t i) {
    Rng rng = sample_rng(cfg.seed ^ 0x3c6ef372fe94f82bULL, i);
    const SimplicialComplex x = random_complex(1 + static_cast<int>(i % 12), rng);
    mismatch[i] = zcl_exhaustive_basic(x) != z_invariant(x).z;
  });
  const auto bad = std::count(mismatch.begin(), mismatch.end(), 1);
  return {bad == 0, std::to_string(kCount) + " random complexes n<=12, " + std::to_string(bad) +
                        " mismatches"};
}

Outcome shuffle_formula() {
  Outcome o;
  for (int z = 0; z <= 8; ++z) {
    const TensorElement closed = shuffle_expansion(z);
    const TensorElement iterated = iterated_zero_divisor_product(z);
    if (!(closed == iterated) || closed.size() != (std::size_t{1} << z)) {
      o.correct = false;
      o.detail += " z=" + std::to_string(z);
    }
  }
  o.detail = o.correct ? "z=0..8 exact" : "differs at" + o.detail;
  return o;
}

Outcome planner_contract(const AcceptanceConfig& cfg) {
  Outcome o;
  std::ostringstream os;
  VerifyConfig vc;
  vc.samples = cfg.planner_samples;
  vc.time_samples = cfg.time_samples;
  vc.seed = cfg.seed;
  vc.jobs = cfg.jobs;
  double endpoint = 0.0;
  double sphere = 0.0;
  for (Parity parity : {Parity::kOdd, Parity::kEven}) {
    const int top = parity == Parity::kOdd ? 6 : 3;
    for (int n = 1; n <= top; ++n) {
      const PlannerKind kind = parity == Parity::kOdd ? PlannerKind::kFullOdd : PlannerKind::kFullEven;
      const Planner planner(kind, SimplicialComplex::full(n), SphereKind{parity, 1}, cfg.tol);
      const PartitionReport part = verify_partition(planner, vc);
      const ContinuityReport cont = verify_endpoints_continuity(planner, vc);
      endpoint = std::max(endpoint, cont.max_endpoint_error);
      sphere = std::max(sphere, cont.max_sphere_error);
      const bool ok = part.ok() && part.realized_strata == part.theoretical_domains && cont.ok();
      if (!ok) {
        o.correct = false;
        os << " [" << to_string(kind) << " n=" << n << ": not_unique=" << part.not_unique
           << " domains " << part.realized_strata << "/" << part.theoretical_domains
           << " endpoint=" << cont.max_endpoint_error << " sphere=" << cont.max_sphere_error << "]";
      }
    }
  }
  std::ostringstream head;
  head << "9 configurations x " << cfg.planner_samples << " pairs, max endpoint error " << endpoint
       << ", max sphere error " << sphere;
  o.detail = head.str() + os.str();
  return o;
}

Outcome stratum_bound(const AcceptanceConfig& cfg) {
  Outcome o;
  VerifyConfig vc;
  vc.samples = 2000;
  vc.seed = cfg.seed;
  vc.jobs = cfg.jobs;
  std::size_t violations[2] = {0, 0};
  std::string first;
  for (const NamedComplex& c : sampled_complexes(cfg.seed)) {
    for (Parity parity : {Parity::kOdd, Parity::kEven}) {
      const Planner planner(PlannerKind::kRestrictedLiteral, c.x, SphereKind{parity, 1}, cfg.tol);
      const PartitionReport r = verify_partition(planner, vc);
      violations[parity == Parity::kOdd ? 0 : 1] += r.stratum_bound_violations;
      if (r.stratum_bound_violations > 0 && first.empty()) {
        first = c.name + " " + to_string(parity) + " bound " + std::to_string(r.min_stratum) +
                " " + r.first_bound_violation.value_or("");
      }
    }
  }
  o.correct = violations[0] == 0 && violations[1] == 0;
  o.detail = "violations odd=" + std::to_string(violations[0]) +
             " even=" + std::to_string(violations[1]) + (first.empty() ? "" : "; first: " + first);
  return o;
}

Outcome containment_dichotomy(const AcceptanceConfig& cfg) {
  Outcome o;
  VerifyConfig vc;
  vc.samples = 1000;
  vc.time_samples = cfg.time_samples;
  vc.seed = cfg.seed;
  vc.jobs = cfg.jobs;
  std::size_t safe_bad = 0;
  std::size_t literal_bad = 0;
  int union_closed_count = 0;
  for (const NamedComplex& c : sampled_complexes(cfg.seed)) {
    for (Parity parity : {Parity::kOdd, Parity::kEven}) {
      const SphereKind sphere{parity, 1};
      safe_bad += verify_containment(Planner(PlannerKind::kSafe, c.x, sphere, cfg.tol), vc)
                      .violating_pairs;
      if (union_closed(c.x)) {
        ++union_closed_count;
        literal_bad +=
            verify_containment(Planner(PlannerKind::kRestrictedLiteral, c.x, sphere, cfg.tol), vc)
                .violating_pairs;
      }
    }
  }
  VerifyConfig directed = vc;
  directed.directed_every = 1;
  const ContainmentReport fig8 = verify_containment(
      Planner(PlannerKind::kRestrictedLiteral, figure_eight(), SphereKind{}, cfg.tol), directed);
  o.correct = safe_bad == 0 && literal_bad == 0 && fig8.violating_pairs >= 1;
  std::ostringstream os;
  os << "safe violations " << safe_bad << ", literal on " << union_closed_count
     << " union-closed cases " << literal_bad << ", literal on figure-eight "
     << fig8.violating_pairs << "/" << fig8.samples;
  if (!fig8.witnesses.empty()) {
    const auto& w = fig8.witnesses.front();
    os << " (first: sample " << w.sample << " t=" << w.t << " support " << w.support.to_string()
       << ")";
  }
  o.detail = os.str();
  return o;
}

Outcome applications_check(const AcceptanceConfig& cfg) {
  Outcome o;
  std::ostringstream os;
  int raag_bad = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = sample_rng(cfg.seed ^ 0xa54ff53a5f1d36f1ULL, i);
    const Graph g = random_graph(1 + static_cast<int>(i % 12), rng);
    const TcAnswer a = raag_tc(g);
    if (!a.agree || a.tc != tc(flag_complex(g), Parity::kOdd).tc) ++raag_bad;
  }
  int open_bad = 0;
  for (int n = 1; n <= 8; ++n) {
    const TcAnswer a = open_string_tc(n);
    if (!check_general_position(open_string_arrangement(n)) || a.tc != n + 2 || !a.agree) ++open_bad;
  }
  int redundant_bad = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int l = 1; l <= 4; ++l) {
      const int base = redundant_tc(n, l, 1).model_tc;
      for (int k = 1; k <= 4; ++k) {
        const TcAnswer a = redundant_tc(n, l, k);
        if (a.model_tc != base || !a.agree) ++redundant_bad;
      }
    }
  }
  o.correct = raag_bad == 0 && open_bad == 0 && redundant_bad == 0;
  os << "raag mismatches " << raag_bad << "/100, open-string failures " << open_bad
     << "/8, redundant k-dependence " << redundant_bad << "/128";
  o.detail = os.str();
  return o;
}

Outcome even_square(const AcceptanceConfig& cfg) {
  Outcome o;
  const Grading g{2};
  int bad_squares = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      const TensorElement e = zero_divisor(i, n, g);
      const VertexSet s = VertexSet::singleton(i);
      if (!(tensor_mul(e, e) == TensorElement::pure(n, g, s, s, -2))) ++bad_squares;
    }
  }
  int faces = 0;
  int bad_products = 0;
  for (const NamedComplex& c : sampled_complexes(cfg.seed)) {
    for (VertexSet face : c.x.faces()) {
      TensorElement product = TensorElement::one(c.x.n(), g);
      for (int i : face.members()) {
        const TensorElement e = zero_divisor(i, c.x.n(), g);
        product = reduce_mod_complex(tensor_mul(product, tensor_mul(e, e)), c.x);
      }
      ++faces;
      Rational expected = 1;
      for (int j = 0; j < face.size(); ++j) expected *= -2;
      if (product.is_zero() || product.coefficient(face, face) != expected) ++bad_products;
    }
  }
  o.correct = bad_squares == 0 && bad_products == 0;
  o.detail = "square mismatches " + std::to_string(bad_squares) + "/21, vanishing products " +
             std::to_string(bad_products) + "/" + std::to_string(faces) + " faces";
  return o;
}

struct CriterionInfo {
  const char* title;
  double budget;
};

constexpr CriterionInfo kCriteria[kCriterionCount] = {
    {"tc grid from skeleton models", 1.0},
    {"z_invariant equals brute force", 30.0},
    {"zero-divisor cup length equals z", 60.0},
    {"shuffle formula", 5.0},
    {"full-product planner contract", 60.0},
    {"stratum lower bound", 0.0},
    {"containment dichotomy", 0.0},
    {"applications", 0.0},
    {"even-parity squares", 0.0},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceConfig& config) {
  if (id < 1 || id > kCriterionCount) {
    throw Error(ErrorCode::kIndexOutOfRange, "criterion " + std::to_string(id) + " outside 1.." +
                                                 std::to_string(kCriterionCount));
  }
  CriterionResult r;
  r.id = id;
  r.title = kCriteria[id - 1].title;
  r.budget_seconds = kCriteria[id - 1].budget;
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    switch (id) {
      case 1: o = tc_grid(); break;
      case 2: o = oracle_equivalence(config); break;
      case 3: o = algebra_bridge(config); break;
      case 4: o = shuffle_formula(); break;
      case 5: o = planner_contract(config); break;
      case 6: o = stratum_bound(config); break;
      case 7: o = containment_dichotomy(config); break;
      case 8: o = applications_check(config); break;
      default: o = even_square(config); break;
    }
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.correct = o.correct;
  r.detail = std::move(o.detail);
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config, std::vector<int> ids) {
  if (ids.empty()) {
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(run_criterion(id, config));
  return out;
}

}  // namespace toriplan
