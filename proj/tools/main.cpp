// toriplan command-line front end.
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toriplan/acceptance.hpp"
#include "toriplan/algebra.hpp"
#include "toriplan/applications.hpp"
#include "toriplan/error.hpp"
#include "toriplan/io.hpp"
#include "toriplan/planner.hpp"
#include "toriplan/verify.hpp"

namespace {

using nlohmann::json;
using namespace toriplan;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;

struct RunConfig {
  std::string format = "human";
  std::uint64_t seed = 0;
  int jobs = 1;
  std::size_t samples = 10'000;
  int path_samples = 256;
  Tolerances tol;
};

// Where a complex comes from: --complex FILE or --graph FILE (flag complex).
struct ComplexSource {
  std::string complex_file;
  std::string graph_file;

  void add_to(CLI::App* cmd) {
    auto* c = cmd->add_option("--complex", complex_file, "complex file {\"n\", \"facets\"}");
    auto* g = cmd->add_option("--graph", graph_file, "graph file {\"n\", \"edges\"}; uses its flag complex");
    c->excludes(g);
  }
  bool given() const { return !complex_file.empty() || !graph_file.empty(); }
  SimplicialComplex load() const {
    if (!complex_file.empty()) return load_complex(complex_file);
    if (!graph_file.empty()) return flag_complex(load_graph(graph_file));
    throw Error(ErrorCode::kInvalidArgument, "one of --complex or --graph is required");
  }
};

struct SphereOptions {
  std::string parity = "odd";
  int k = 1;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--parity", parity, "sphere parity")->check(CLI::IsMember({"odd", "even"}));
    cmd->add_option("--k", k, "sphere S^{2k-1} (odd) or S^{2k} (even)")->check(CLI::PositiveNumber);
  }
  Parity value() const { return parity == "even" ? Parity::kEven : Parity::kOdd; }
  SphereKind sphere() const { return SphereKind{value(), k}; }
};

json set_json(VertexSet s) { return s.members(); }

json witness_json(const Witness& w) { return json{{"J", set_json(w.j)}, {"K", set_json(w.k)}}; }

std::string witness_string(const Witness& w) {
  return "J=" + w.j.to_string() + " K=" + w.k.to_string();
}

json facets_json(const SimplicialComplex& x) {
  json out = json::array();
  for (VertexSet m : x.maximal_faces()) out.push_back(set_json(m));
  return out;
}

json point_json(const ProductPoint& p) {
  json out = json::array();
  for (const SpherePoint& c : p.coords()) out.push_back(std::vector<double>(c.coords().begin(), c.coords().end()));
  return out;
}

PlannerKind planner_kind(const std::string& name, Parity parity) {
  if (name == "literal") return PlannerKind::kRestrictedLiteral;
  if (name == "safe") return PlannerKind::kSafe;
  return parity == Parity::kOdd ? PlannerKind::kFullOdd : PlannerKind::kFullEven;
}

void emit(const RunConfig& cfg, const json& record, const std::string& human) {
  if (cfg.format == "records") {
    std::cout << record.dump() << "\n";
  } else {
    std::cout << human;
  }
}

json certificate_json(const ZclCertificate& c) {
  return json{{"value", c.value},
              {"certified", c.certified},
              {"witness", witness_json(c.witness)},
              {"surviving_terms", c.surviving_terms},
              {"witness_coefficient", to_string(c.witness_coefficient)}};
}

std::string certificate_line(const ZclCertificate& c, Parity parity) {
  std::ostringstream os;
  os << (parity == Parity::kOdd ? "z=" : "2d=") << c.value << " "
     << (c.certified ? "certified" : "NOT certified") << " (coefficient "
     << to_string(c.witness_coefficient) << ", " << c.surviving_terms << " surviving terms)\n";
  return os.str();
}

// ---- tc ------------------------------------------------------------------

struct TcArgs {
  ComplexSource source;
  SphereOptions sphere;
  std::vector<int> gp;
  std::vector<int> generic;
  std::vector<int> redundant;
  int openstring = 0;
  bool zcl = false;
};

int run_tc(const RunConfig& cfg, const TcArgs& a) {
  TcAnswer ans;
  if (a.gp.size() == 2) {
    ans = general_position_tc(a.gp[0], a.gp[1]);
  } else if (a.generic.size() == 2) {
    ans = generic_central_tc(a.generic[0], a.generic[1]);
  } else if (a.redundant.size() == 3) {
    ans = redundant_tc(a.redundant[0], a.redundant[1], a.redundant[2]);
  } else if (a.openstring > 0) {
    ans = open_string_tc(a.openstring);
  } else if (!a.source.graph_file.empty()) {
    ans = raag_tc(load_graph(a.source.graph_file), a.sphere.k);
  } else if (!a.source.complex_file.empty()) {
    ans = complex_tc(load_complex(a.source.complex_file), a.sphere.value(), a.sphere.k);
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "choose one of --graph, --complex, --gp, --generic, --redundant, --openstring");
  }

  json rec{{"command", "tc"},
           {"tc", ans.tc},
           {"formula", ans.formula},
           {"model_tc", ans.model_tc},
           {"agree", ans.agree},
           {"citation", ans.citation},
           {"parity", to_string(ans.parity)},
           {"k", ans.k},
           {"model", json{{"n", ans.model.n()}, {"facets", facets_json(ans.model)}}},
           {"witness", witness_json(ans.witness)}};
  std::ostringstream os;
  os << "tc = " << ans.tc << "  [" << ans.citation << "]\n"
     << "model: n=" << ans.model.n() << ", " << ans.model.maximal_faces().size()
     << " maximal faces, tc(model) = " << ans.model_tc << (ans.agree ? "" : "  MISMATCH") << "\n"
     << "witness: " << witness_string(ans.witness) << "\n";
  if (a.zcl) {
    const ZclCertificate c = zcl_witness(ans.model, Grading::for_sphere(ans.parity, ans.k));
    rec["zcl"] = certificate_json(c);
    os << "zcl: " << certificate_line(c, ans.parity);
  }
  emit(cfg, rec, os.str());
  return ans.agree ? kExitOk : kExitVerify;
}

// ---- z -------------------------------------------------------------------

struct ZArgs {
  ComplexSource source;
  bool bruteforce = false;
};

int run_z(const RunConfig& cfg, const ZArgs& a) {
  const SimplicialComplex x = a.source.load();
  const ZResult z = z_invariant(x);
  const int d = d_invariant(x);
  json rec{{"command", "z"}, {"n", x.n()}, {"z", z.z}, {"d", d}, {"witness", witness_json(z.witness)},
           {"union_closed", union_closed(x)}};
  std::ostringstream os;
  os << "z = " << z.z << "  witness " << witness_string(z.witness) << "\n"
     << "d = " << d << (union_closed(x) ? "  (union-closed)" : "") << "\n";
  int code = kExitOk;
  if (a.bruteforce) {
    const int b = z_bruteforce(x);
    rec["bruteforce"] = b;
    os << "brute force z = " << b << (b == z.z ? "" : "  MISMATCH") << "\n";
    if (b != z.z) code = kExitVerify;
  }
  emit(cfg, rec, os.str());
  return code;
}

// ---- plan ----------------------------------------------------------------

struct PlanArgs {
  std::string input;
  std::string planner = "full";
  SphereOptions sphere;
  std::string csv;
};

int run_plan(const RunConfig& cfg, const PlanArgs& a) {
  const SphereKind sphere = a.sphere.sphere();
  const PlanInput in = load_plan_input(a.input, sphere);
  const PlannerKind kind = planner_kind(a.planner, sphere.parity);
  const PlanResult r = plan(kind, in.complex, in.x, in.y, cfg.tol);
  const auto samples = sample_path(r.path, cfg.path_samples);

  std::vector<bool> inside;
  bool all_inside = true;
  for (const auto& s : samples) {
    inside.push_back(membership(in.complex, s.p, cfg.tol.cell));
    all_inside = all_inside && inside.back();
  }

  if (!a.csv.empty()) {
    std::ofstream out(a.csv);
    if (!out) throw Error(ErrorCode::kParse, a.csv + ": cannot write");
    write_path_csv(out, samples);
  }

  if (cfg.format == "records") {
    json path = json::array();
    for (std::size_t i = 0; i < samples.size(); ++i) {
      path.push_back(json{{"t", samples[i].t}, {"p", point_json(samples[i].p)}, {"in_complex", static_cast<bool>(inside[i])}});
    }
    json rec{{"command", "plan"},
             {"planner", to_string(kind)},
             {"domain", r.domain.to_string()},
             {"stratum", r.domain.stratum},
             {"stratum_bound", r.stratum_bound},
             {"stratum_bound_ok", r.stratum_bound_ok},
             {"path_in_complex", all_inside},
             {"path", std::move(path)}};
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << "planner: " << to_string(kind) << "\n"
              << "domain: " << r.domain.to_string() << "\n"
              << "stratum: " << r.domain.stratum << "\n";
    if (kind == PlannerKind::kRestrictedLiteral) {
      std::cout << "stratum bound " << r.stratum_bound << ": " << (r.stratum_bound_ok ? "ok" : "VIOLATED") << "\n";
    }
    std::cout << "path stays in complex: " << (all_inside ? "yes" : "NO") << "\n";
    if (a.csv.empty()) write_path_csv(std::cout, samples);
  }
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  ComplexSource source;
  SphereOptions sphere;
  std::string planner = "safe";
  std::vector<std::string> suites{"partition", "containment", "continuity"};
  int directed_every = 2;
};

int run_verify(const RunConfig& cfg, const VerifyArgs& a) {
  const SphereKind sphere = a.sphere.sphere();
  const PlannerKind kind = planner_kind(a.planner, sphere.parity);
  SimplicialComplex x = a.source.load();
  if (kind == PlannerKind::kFullOdd || kind == PlannerKind::kFullEven) x = SimplicialComplex::full(x.n());
  const Planner planner(kind, x, sphere, cfg.tol);

  VerifyConfig vc;
  vc.samples = cfg.samples;
  vc.time_samples = cfg.path_samples;
  vc.seed = cfg.seed;
  vc.jobs = cfg.jobs;
  vc.directed_every = a.directed_every;

  json rec{{"command", "verify"}, {"planner", to_string(kind)}, {"n", x.n()}, {"parity", to_string(sphere.parity)},
           {"k", sphere.k}, {"samples", vc.samples}, {"seed", vc.seed}};
  std::ostringstream os;
  os << "planner " << to_string(kind) << " on n=" << x.n() << " (" << to_string(sphere.parity)
     << ", k=" << sphere.k << "), " << vc.samples << " samples, seed " << vc.seed << "\n";
  bool ok = true;
  const auto wants = [&](const char* s) {
    return std::find(a.suites.begin(), a.suites.end(), s) != a.suites.end();
  };

  if (wants("partition")) {
    const PartitionReport p = verify_partition(planner, vc);
    ok = ok && p.ok();
    json counts = json::object();
    for (const auto& [s, c] : p.stratum_counts) counts[std::to_string(s)] = c;
    rec["partition"] = json{{"ok", p.ok()},
                            {"not_unique", p.not_unique},
                            {"stratum_bound_violations", p.stratum_bound_violations},
                            {"min_stratum", p.min_stratum},
                            {"max_stratum", p.max_stratum},
                            {"realized_strata", p.realized_strata},
                            {"theoretical_domains", p.theoretical_domains},
                            {"stratum_counts", counts}};
    if (p.first_bound_violation) rec["partition"]["first_bound_violation"] = *p.first_bound_violation;
    os << "partition: " << (p.ok() ? "ok" : "FAILED") << ", " << p.realized_strata << " strata realized of "
       << p.theoretical_domains << ", not unique " << p.not_unique << ", bound [" << p.min_stratum << ", "
       << p.max_stratum << "] violations " << p.stratum_bound_violations << "\n";
    if (p.first_bound_violation) os << "  first violation: " << *p.first_bound_violation << "\n";
  }
  if (wants("containment")) {
    const ContainmentReport c = verify_containment(planner, vc);
    ok = ok && c.ok();
    json ws = json::array();
    for (const auto& w : c.witnesses) {
      ws.push_back(json{{"sample", w.sample}, {"t", w.t}, {"support", set_json(w.support)}, {"domain", w.domain}});
    }
    rec["containment"] = json{{"ok", c.ok()}, {"violating_pairs", c.violating_pairs}, {"witnesses", ws}};
    os << "containment: " << (c.ok() ? "ok" : "FAILED") << ", " << c.violating_pairs << " violating pairs\n";
    for (const auto& w : c.witnesses) {
      os << "  sample " << w.sample << " t=" << w.t << " support " << w.support.to_string() << " domain "
         << w.domain << "\n";
    }
  }
  if (wants("continuity")) {
    const ContinuityReport c = verify_endpoints_continuity(planner, vc);
    ok = ok && c.ok();
    rec["continuity"] = json{{"ok", c.ok()},
                             {"max_endpoint_error", c.max_endpoint_error},
                             {"max_sphere_error", c.max_sphere_error},
                             {"lipschitz", c.lipschitz},
                             {"lipschitz_pairs", c.lipschitz_pairs},
                             {"cross_domain_skipped", c.cross_domain_skipped}};
    os << "continuity: " << (c.ok() ? "ok" : "FAILED") << ", endpoint error " << c.max_endpoint_error
       << ", sphere error " << c.max_sphere_error << ", empirical Lipschitz " << c.lipschitz << " over "
       << c.lipschitz_pairs << " pairs\n";
  }
  rec["ok"] = ok;
  emit(cfg, rec, os.str());
  return ok ? kExitOk : kExitVerify;
}

// ---- algebra / poincare ----------------------------------------------------

int run_expand(const RunConfig& cfg, int z, bool reduce, const ComplexSource& source) {
  TensorElement t = shuffle_expansion(z);
  if (reduce) {
    const SimplicialComplex x = source.load();
    if (x.n() != z) throw Error(ErrorCode::kInvalidArgument, "--complex must have n = --z");
    t = reduce_mod_complex(t, x);
  }
  json terms = json::array();
  std::ostringstream os;
  for (const auto& [key, c] : t.terms()) {
    terms.push_back(json{{"J", set_json(key.first)}, {"K", set_json(key.second)}, {"coefficient", to_string(c)}});
    os << to_string(c) << "\t" << key.first.to_string() << "\t" << key.second.to_string() << "\n";
  }
  emit(cfg, json{{"command", "algebra expand"}, {"z", z}, {"terms", terms}},
       "terms: " + std::to_string(t.size()) + "\ncoefficient\tJ\tK\n" + os.str());
  return kExitOk;
}

int run_witness(const RunConfig& cfg, const ComplexSource& source, const SphereOptions& sphere) {
  const SimplicialComplex x = source.load();
  const ZclCertificate c = zcl_witness(x, Grading::for_sphere(sphere.value(), sphere.k));
  json rec = certificate_json(c);
  rec["command"] = "algebra witness";
  rec["parity"] = to_string(sphere.value());
  emit(cfg, rec, certificate_line(c, sphere.value()) + "witness " + witness_string(c.witness) + "\n");
  return c.certified ? kExitOk : kExitVerify;
}

int run_poincare(const RunConfig& cfg, const ComplexSource& source) {
  const auto coeffs = poincare_polynomial(source.load());
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) os << " + ";
    os << coeffs[i];
    if (i > 0) os << " t" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  emit(cfg, json{{"command", "poincare"}, {"coefficients", coeffs}}, "P(t) = " + os.str() + "\n");
  return kExitOk;
}

// ---- report ----------------------------------------------------------------

int run_report(const RunConfig& cfg, const std::vector<int>& criteria, bool timings) {
  AcceptanceConfig ac;
  ac.seed = cfg.seed;
  ac.jobs = cfg.jobs;
  ac.time_samples = cfg.path_samples;
  ac.tol = cfg.tol;
  const auto results = run_acceptance(ac, criteria);
  bool all = true;
  json rows = json::array();
  std::ostringstream os;
  for (const auto& r : results) {
    all = all && r.pass();
    json row{{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"detail", r.detail}};
    if (timings) {
      row["seconds"] = r.seconds;
      row["budget_seconds"] = r.budget_seconds;
    }
    rows.push_back(row);
    os << (r.pass() ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title;
    if (timings) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "  %.2fs", r.seconds);
      os << buf;
    }
    os << "\n      " << r.detail << "\n";
  }
  emit(cfg, json{{"command", "report"}, {"criteria", rows}, {"all_pass", all}}, os.str());
  return all ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toriplan: topological complexity and motion planners for subcomplexes of sphere products"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"human", "records"}))
      ->envname("TORIPLAN_FORMAT");
  app.add_option("--seed", cfg.seed, "random seed")->envname("TORIPLAN_SEED");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber)->envname("TORIPLAN_JOBS");
  app.add_option("--samples", cfg.samples, "verification samples")->envname("TORIPLAN_SAMPLES");
  app.add_option("--path-samples", cfg.path_samples, "time samples per path")
      ->check(CLI::Range(2, 1'000'000))
      ->envname("TORIPLAN_PATH_SAMPLES");
  app.add_option("--tau-anti", cfg.tol.anti, "antipodality tolerance")->envname("TORIPLAN_TAU_ANTI");
  app.add_option("--tau-cell", cfg.tol.cell, "cell membership tolerance")->envname("TORIPLAN_TAU_CELL");
  app.add_option("--tau-norm", cfg.tol.norm, "unit norm tolerance")->envname("TORIPLAN_TAU_NORM");

  TcArgs tc_args;
  auto* tc_cmd = app.add_subcommand("tc", "topological complexity of a complex, graph or arrangement");
  tc_args.source.add_to(tc_cmd);
  tc_args.sphere.add_to(tc_cmd);
  tc_cmd->add_option("--gp", tc_args.gp, "general position arrangement: n l")->expected(2);
  tc_cmd->add_option("--generic", tc_args.generic, "generic central arrangement: n l")->expected(2);
  tc_cmd->add_option("--redundant", tc_args.redundant, "redundant arrangement: n l k")->expected(3);
  tc_cmd->add_option("--openstring", tc_args.openstring, "open-string configuration space on n points");
  tc_cmd->add_flag("--zcl", tc_args.zcl, "attach a zero-divisor certificate");

  ZArgs z_args;
  auto* z_cmd = app.add_subcommand("z", "z invariant with witness");
  z_args.source.add_to(z_cmd);
  z_cmd->add_flag("--bruteforce", z_args.bruteforce, "cross-check by exhaustive search");

  PlanArgs plan_args;
  auto* plan_cmd = app.add_subcommand("plan", "plan a path between two points");
  plan_cmd->add_option("--input", plan_args.input, "{\"complex\"?, \"x\", \"y\"}")->required();
  plan_cmd->add_option("--planner", plan_args.planner)->check(CLI::IsMember({"literal", "safe", "full"}));
  plan_args.sphere.add_to(plan_cmd);
  plan_cmd->add_option("--csv", plan_args.csv, "write the sampled path here");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "check a planner on sampled endpoint pairs");
  verify_args.source.add_to(verify_cmd);
  verify_args.sphere.add_to(verify_cmd);
  verify_cmd->add_option("--planner", verify_args.planner)->check(CLI::IsMember({"literal", "safe", "full"}));
  verify_cmd->add_option("--suite", verify_args.suites, "partition, containment, continuity")
      ->check(CLI::IsMember({"partition", "containment", "continuity"}));
  verify_cmd->add_option("--directed-every", verify_args.directed_every, "every m-th sample is directed; 0 none");

  auto* algebra_cmd = app.add_subcommand("algebra", "exact exterior-algebra computations");
  algebra_cmd->require_subcommand(1);
  int expand_z = 0;
  bool expand_reduce = false;
  ComplexSource expand_source;
  auto* expand_cmd = algebra_cmd->add_subcommand("expand", "closed form of the product of the first z zero divisors");
  expand_cmd->add_option("--z", expand_z)->required()->check(CLI::Range(0, 16));
  expand_source.add_to(expand_cmd);
  expand_cmd->callback([&] { expand_reduce = expand_source.given(); });
  ComplexSource witness_source;
  SphereOptions witness_sphere;
  auto* witness_cmd = algebra_cmd->add_subcommand("witness", "zero-divisor certificate for a complex");
  witness_source.add_to(witness_cmd);
  witness_sphere.add_to(witness_cmd);
  ComplexSource alg_poincare_source;
  auto* alg_poincare_cmd = algebra_cmd->add_subcommand("poincare", "face-count polynomial");
  alg_poincare_source.add_to(alg_poincare_cmd);

  ComplexSource poincare_source;
  auto* poincare_cmd = app.add_subcommand("poincare", "face-count polynomial");
  poincare_source.add_to(poincare_cmd);

  std::vector<int> criteria;
  bool timings = false;
  auto* report_cmd = app.add_subcommand("report", "run the acceptance criteria");
  report_cmd->add_option("--criteria", criteria, "subset of 1..9")->check(CLI::Range(1, kCriterionCount));
  report_cmd->add_flag("--timings", timings, "include wall-clock times (output no longer byte-stable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*tc_cmd) return run_tc(cfg, tc_args);
    if (*z_cmd) return run_z(cfg, z_args);
    if (*plan_cmd) return run_plan(cfg, plan_args);
    if (*verify_cmd) return run_verify(cfg, verify_args);
    if (*expand_cmd) return run_expand(cfg, expand_z, expand_reduce, expand_source);
    if (*witness_cmd) return run_witness(cfg, witness_source, witness_sphere);
    if (*alg_poincare_cmd) return run_poincare(cfg, alg_poincare_source);
    if (*poincare_cmd) return run_poincare(cfg, poincare_source);
    if (*report_cmd) return run_report(cfg, criteria, timings);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
