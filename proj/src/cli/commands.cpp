#include "orbitkit/cli/commands.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "orbitkit/arith.hpp"
#include "orbitkit/orbital.hpp"
#include "orbitkit/padics.hpp"
#include "orbitkit/qseries.hpp"
#include "orbitkit/tracefmla.hpp"

namespace orbitkit::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string verdict_name(bool pass) { return pass ? "pass" : "fail"; }

i64 parse_integer(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw UsageError(what + ": \"" + text + "\" is not an integer");
  }
}

Fraction parse_fraction(const std::string& text, const std::string& what) {
  const auto slash = text.find('/');
  Fraction f;
  f.num = parse_integer(text.substr(0, slash), what);
  if (slash != std::string::npos) f.den = parse_integer(text.substr(slash + 1), what);
  if (f.den == 0) throw UsageError(what + ": zero denominator");
  if (f.den < 0) {
    f.num = -f.num;
    f.den = -f.den;
  }
  const i64 g = std::gcd(f.num, f.den);
  if (g > 1) {
    f.num /= g;
    f.den /= g;
  }
  return f;
}

std::string format_fraction(const Fraction& f) {
  return f.den == 1 ? std::to_string(f.num) : std::to_string(f.num) + "/" + std::to_string(f.den);
}

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Json optional_json(const std::optional<i64>& value) { return value ? Json(*value) : Json(nullptr); }

void require_odd_prime(u64 p) {
  if (p == 2 || !is_prime(p)) throw UsageError("p=" + std::to_string(p) + " is not an odd prime");
}

void require_kappa(int kappa) {
  if (kappa != 0 && kappa != 1) throw UsageError("kappa must be 0 or 1");
}

Json counts_json(const GradedCounts& counts) {
  return Json{{"window", counts.window},
              {"by_grading", {counts.by_grading[0], counts.by_grading[1]}},
              {"cells_scanned", counts.cells_scanned}};
}

Json orbital_results(const OrbitalReport& r) {
  return Json{{"regime", to_string(r.regime)},
              {"val_a", r.val_a},
              {"val_b", r.val_b},
              {"window", r.window},
              {"counts", counts_json(r.counts)},
              {"saturation_counts", r.saturation_counts ? counts_json(*r.saturation_counts) : Json(nullptr)},
              {"saturated", r.saturated},
              {"untwisted_total", r.untwisted_total},
              {"twisted_total", r.twisted_total},
              {"closed_form", optional_json(r.closed_form)},
              {"expected", optional_json(r.expected)}};
}

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream is(text);
  while (std::getline(is, current, separator)) {
    const auto first = current.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    parts.push_back(current.substr(first, current.find_last_not_of(" \t") - first + 1));
  }
  return parts;
}

int max_point(const std::string& cycles) {
  int best = 0;
  int current = -1;
  for (char c : cycles + " ") {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current = (current < 0 ? 0 : current * 10) + (c - '0');
    } else if (current >= 0) {
      best = std::max(best, current);
      current = -1;
    }
  }
  return best;
}

FiniteGroupTable resolve_group(const std::string& text) {
  if (!text.empty() && text.front() == '(') {
    const auto gens = split(text, ';');
    int degree = 1;
    for (const auto& g : gens) degree = std::max(degree, max_point(g));
    std::vector<Permutation> perms;
    for (const auto& g : gens) perms.push_back(parse_cycles(g, degree));
    return FiniteGroupTable::generated_by(degree, perms, text);
  }
  return FiniteGroupTable::by_name(text);
}

DirichletCharacter resolve_character(const std::string& text) {
  if (text == "trivial") return DirichletCharacter::trivial();
  if (text == "mod4") return DirichletCharacter::kronecker(-4);
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string kind = text.substr(0, colon);
    const i64 value = parse_integer(text.substr(colon + 1), "character");
    if (kind == "kronecker") return DirichletCharacter::kronecker(value);
    if (kind == "quadratic") return DirichletCharacter::quadratic_field(value);
  }
  throw UsageError("unknown character \"" + text + "\"");
}

unsigned parse_jobs(const std::string& text) {
  const i64 value = parse_integer(text, "jobs");
  if (value < 1 || value > 1024) throw UsageError("jobs must be between 1 and 1024");
  return static_cast<unsigned>(value);
}

}  // namespace

unsigned default_jobs() {
  const char* value = std::getenv(kJobsEnv);
  if (value == nullptr || *value == '\0') return 1;
  return parse_jobs(value);
}

RunReport cmd_fl_verify(const FlVerifyParams& params) {
  const auto start = Clock::now();
  require_odd_prime(params.p);
  require_kappa(params.kappa);
  const Fraction a = parse_fraction(params.a, "a");
  const Fraction b = parse_fraction(params.b, "b");
  if (b.num == 0) throw UsageError("b must be nonzero");
  const Fraction delta = params.delta == "auto" ? Fraction{static_cast<i64>(smallest_nonresidue(params.p)), 1}
                                                : parse_fraction(params.delta, "delta");
  WindowOptions options;
  options.saturate = params.saturate;
  options.jobs = params.jobs;
  if (params.window != "auto") {
    const i64 m = parse_integer(params.window, "window");
    if (m < 0 || m > 64) throw UsageError("window must be auto or an integer in [0, 64]");
    options.window = static_cast<int>(m);
  }

  const OrbitalReport r = verify_fundamental_lemma(params.p, a, b, delta, params.kappa, options);

  RunReport report;
  report.subcommand = "fl-verify";
  report.inputs = Json{{"p", params.p},
                       {"a", format_fraction(a)},
                       {"b", format_fraction(b)},
                       {"delta", format_fraction(delta)},
                       {"kappa", params.kappa},
                       {"window", r.window},
                       {"saturate", params.saturate},
                       {"jobs", params.jobs}};
  report.results = orbital_results(r);
  report.verdict = to_string(r.verdict);
  report.timing_ms = elapsed_ms(start);
  return report;
}

RunReport cmd_orbital(const FlVerifyParams& params) {
  RunReport report = cmd_fl_verify(params);
  report.subcommand = "orbital";
  report.results.erase("expected");
  report.verdict = !params.saturate                 ? to_string(Verdict::NotApplicable)
                   : report.results["saturated"] ? to_string(Verdict::Pass)
                                                   : to_string(Verdict::Fail);
  return report;
}

RunReport cmd_sweep(const SweepParams& params) {
  const auto start = Clock::now();
  require_kappa(params.kappa);
  for (u64 p : params.primes) require_odd_prime(p);
  for (int vb : params.valuations) {
    if (vb > 12) throw UsageError("val(b) above 12 is out of range for a sweep");
  }
  const Fraction a = parse_fraction(params.a, "a");

  struct Cell {
    u64 p;
    int vb;
  };
  std::vector<Cell> cells;
  for (u64 p : params.primes) {
    for (int vb : params.valuations) cells.push_back({p, vb});
  }
  std::vector<Json> rows(cells.size());
  std::vector<std::string> errors(cells.size());

  auto run_cell = [&](std::size_t i) {
    const auto [p, vb] = cells[i];
    Json row{{"p", p}, {"vb", vb}, {"kappa", params.kappa}};
    if (vb <= 0) {
      row.update(Json{{"window", nullptr}, {"brute_force", nullptr}, {"closed_form", nullptr},
                      {"expected", nullptr}, {"saturated", nullptr}, {"verdict", to_string(Verdict::NotApplicable)}});
      rows[i] = std::move(row);
      return;
    }
    try {
      Fraction b{1, 1};
      for (int k = 0; k < vb; ++k) b.num *= static_cast<i64>(p);
      WindowOptions options;
      options.saturate = params.saturate;
      const OrbitalReport r = verify_fundamental_lemma(
          p, a, b, Fraction{static_cast<i64>(smallest_nonresidue(p)), 1}, params.kappa, options);
      row.update(Json{{"window", r.window},
                      {"brute_force", r.twisted_total},
                      {"closed_form", optional_json(r.closed_form)},
                      {"expected", optional_json(r.expected)},
                      {"saturated", r.saturated},
                      {"verdict", to_string(r.verdict)}});
      rows[i] = std::move(row);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  };

  // Rows land in their grid position whatever order workers finish in.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) run_cell(i);
  };
  {
    std::vector<std::jthread> pool;
    const unsigned extra = std::min<std::size_t>(std::max(1u, params.jobs), cells.size() + 1) - 1;
    for (unsigned t = 0; t < extra; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw std::runtime_error(e);
  }

  bool pass = true;
  for (const auto& row : rows) pass = pass && row["verdict"] != to_string(Verdict::Fail);

  RunReport report;
  report.subcommand = "sweep";
  report.inputs = Json{{"p", params.primes},     {"vb", params.valuations}, {"kappa", params.kappa},
                       {"a", format_fraction(a)}, {"saturate", params.saturate}, {"jobs", params.jobs}};
  report.results = Json{{"rows", rows}};
  report.verdict = verdict_name(pass);
  report.timing_ms = elapsed_ms(start);
  return report;
}

RunReport cmd_hecke(const HeckeParams& params) {
  const auto start = Clock::now();
  if (!is_prime(params.p)) throw UsageError("p=" + std::to_string(params.p) + " is not prime");
  if (params.truncation < 1 || params.truncation > 5000) throw UsageError("truncation must be in [1, 5000]");
  if (params.truncation * params.p > 50'000) throw UsageError("p * truncation must not exceed 50000");
  const QExpansion f = delta(params.truncation * params.p);
  const EigenCheck check = eigencheck(f, params.p, params.truncation);

  RunReport report;
  report.subcommand = "hecke";
  report.inputs = Json{{"form", "delta"}, {"p", params.p}, {"truncation", params.truncation}};
  report.results = Json{{"weight", f.weight()},
                        {"level", f.level()},
                        {"eigenvalue", rational_text(check.eigenvalue)},
                        {"depth", check.depth},
                        {"is_eigen", check.is_eigen},
                        {"first_mismatch", check.first_mismatch ? Json(*check.first_mismatch) : Json(nullptr)}};
  report.verdict = verdict_name(check.is_eigen);
  report.timing_ms = elapsed_ms(start);
  return report;
}

RunReport cmd_theta(const ThetaParams& params) {
  const auto start = Clock::now();
  if (params.t.empty()) throw UsageError("theta needs at least one t");
  Json rows = Json::array();
  bool pass = true;
  for (double t : params.t) {
    if (!(t > 0) || !std::isfinite(t)) throw UsageError("t must be a positive finite number");
    const double residual = theta_functional_equation_residual(t, params.terms);
    const bool ok = residual < params.tolerance;
    pass = pass && ok;
    rows.push_back(Json{{"t", t},
                        {"residual", residual},
                        {"tail_bound", theta_tail_bound(t, params.terms)},
                        {"verdict", verdict_name(ok)}});
  }
  RunReport report;
  report.subcommand = "theta";
  report.inputs = Json{{"t", params.t}, {"terms", params.terms}, {"tolerance", params.tolerance}};
  report.results = Json{{"rows", rows}};
  report.verdict = verdict_name(pass);
  report.timing_ms = elapsed_ms(start);
  return report;
}

RunReport cmd_poisson(const PoissonParams& params) {
  const auto start = Clock::now();
  if (params.s.empty()) throw UsageError("poisson needs at least one s");
  Json rows = Json::array();
  bool pass = true;
  for (double s : params.s) {
    if (!(s > 0) || !std::isfinite(s)) throw UsageError("s must be a positive finite number");
    const double residual = poisson_residual(s, params.terms);
    const bool ok = residual < params.tolerance;
    pass = pass && ok;
    rows.push_back(Json{{"s", s}, {"residual", residual}, {"verdict", verdict_name(ok)}});
  }
  RunReport report;
  report.subcommand = "poisson";
  report.inputs = Json{{"s", params.s}, {"terms", params.terms}, {"tolerance", params.tolerance}};
  report.results = Json{{"rows", rows}};
  report.verdict = verdict_name(pass);
  report.timing_ms = elapsed_ms(start);
  return report;
}

RunReport cmd_lseries(const LseriesParams& params) {
  const auto start = Clock::now();
  const DirichletCharacter chi = resolve_character(params.character);
  if (!(params.s > 1.0) || !std::isfinite(params.s)) throw UsageError("s must be a real number > 1");
  if (params.n_max < 1 || params.n_max > 100'000'000) throw UsageError("nmax must be in [1, 1e8]");
  if (params.p_max < 2 || params.p_max > 100'000'000) throw UsageError("pmax must be in [2, 1e8]");
  const auto sum = dirichlet_sum_partial(chi, params.s, params.n_max);
  const auto product = euler_product_partial(chi, params.s, params.p_max);
  const double difference = std::abs(sum - product);
  const bool pass = difference < params.tolerance;

  RunReport report;
  report.subcommand = "lseries";
  report.inputs = Json{{"character", params.character},
                       {"modulus", chi.modulus()},
                       {"s", params.s},
                       {"nmax", params.n_max},
                       {"pmax", params.p_max},
                       {"tolerance", params.tolerance}};
  report.results = Json{{"dirichlet_sum", {sum.real(), sum.imag()}},
                        {"euler_product", {product.real(), product.imag()}},
                        {"difference", difference}};
  report.verdict = verdict_name(pass);
  report.timing_ms = elapsed_ms(start);
  return report;
}

RunReport cmd_frobenius(const FrobeniusParams& params) {
  const auto start = Clock::now();
  if (params.d == 0 || params.d == 1 || !is_squarefree(params.d)) {
    throw UsageError("d must be a squarefree integer other than 0 and 1");
  }
  if (params.p_max < 2 || params.p_max > 100'000'000) throw UsageError("pmax must be in [2, 1e8]");
  const DirichletCharacter chi = DirichletCharacter::quadratic_field(params.d);
  const ReciprocityReport r = reciprocity_check(params.d, chi, params.p_max);
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back(Json{{"p", m.p}, {"frobenius", to_string(m.frobenius)}, {"chi", to_string(m.chi)}});
  }

  RunReport report;
  report.subcommand = "frobenius";
  report.inputs = Json{{"d", params.d}, {"pmax", params.p_max}};
  report.results = Json{{"character", chi.name()},
                        {"conductor", chi.modulus()},
                        {"primes_checked", r.primes_checked},
                        {"split", r.split},
                        {"inert", r.inert},
                        {"ramified", r.ramified},
                        {"mismatches", mismatches}};
  report.verdict = verdict_name(r.mismatches.empty());
  report.timing_ms = elapsed_ms(start);
  return report;
}

RunReport cmd_trace(const TraceParams& params) {
  const auto start = Clock::now();
  const FiniteGroupTable group = resolve_group(params.group);
  if (group.order() > 5040) throw UsageError("group order above 5040 is out of range");

  std::vector<Subgroup> subgroups;
  if (params.subgroup == "all") {
    subgroups = all_subgroups(group);
  } else {
    std::vector<int> gens;
    for (const auto& text : split(params.subgroup, ';')) {
      const auto index = group.index_of(parse_cycles(text, group.degree()));
      if (!index) throw UsageError("subgroup generator " + text + " is not in the group");
      gens.push_back(*index);
    }
    subgroups.push_back(generated_subgroup(group, gens));
  }

  Json rows = Json::array();
  bool pass = true;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const Subgroup& sub = subgroups[i];
    const TraceFormulaResult result = verify_trace_formula(group, sub);
    int character_sum = 0;
    for (int g = 0; g < group.order(); ++g) character_sum += induced_trace(group, sub, g);
    const bool transitive = character_sum == group.order();
    pass = pass && result.holds && transitive;
    rows.push_back(Json{{"subgroup", i},
                        {"order", sub.size()},
                        {"index", group.order() / static_cast<int>(sub.size())},
                        {"orbits", character_sum / group.order()},
                        {"holds", result.holds},
                        {"witness", result.witness ? Json(format_cycles(group.element(*result.witness))) : Json(nullptr)},
                        {"verdict", verdict_name(result.holds && transitive)}});
  }

  RunReport report;
  report.subcommand = "trace";
  report.inputs = Json{{"group", params.group}, {"subgroup", params.subgroup}, {"order", group.order()},
                       {"degree", group.degree()}};
  report.results = Json{{"conjugacy_classes", conjugacy_classes(group).size()}, {"rows", rows}};
  report.verdict = verdict_name(pass);
  report.timing_ms = elapsed_ms(start);
  return report;
}

SweepParams load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw UsageError("config file " + path + " is not valid JSON: " + e.what());
  }
  SweepParams params;
  params.jobs = 0;
  try {
    if (j.contains("p")) j.at("p").get_to(params.primes);
    if (j.contains("vb")) j.at("vb").get_to(params.valuations);
    if (j.contains("kappa")) j.at("kappa").get_to(params.kappa);
    if (j.contains("a")) params.a = j.at("a").is_string() ? j.at("a").get<std::string>() : j.at("a").dump();
    if (j.contains("saturate")) j.at("saturate").get_to(params.saturate);
    if (j.contains("jobs")) j.at("jobs").get_to(params.jobs);
  } catch (const Json::exception& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
  return params;
}

int exit_code(const RunReport& report) { return report.verdict == "fail" ? kExitFail : kExitPass; }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool err_is_terminal) {
  CLI::App app{"Numerical checks for orbital integrals, Hecke operators, L-series and finite trace formulas",
               "orbitkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kToolVersion));
  std::string format;
  app.add_option("--format", format, "Output format on stdout")->check(CLI::IsMember({"json", "csv", "table"}));
  std::string jobs_text;
  app.add_option("--jobs", jobs_text, std::string("Worker threads (default from ") + kJobsEnv + ", else 1)");

  std::function<RunReport()> action;

  FlVerifyParams fl;
  auto* fl_cmd = app.add_subcommand("fl-verify", "Twisted orbital count against (-p)^val(b)");
  fl_cmd->add_option("--p", fl.p, "Odd prime")->required();
  fl_cmd->add_option("--a", fl.a, "Rational a");
  fl_cmd->add_option("--b", fl.b, "Nonzero rational b")->required();
  fl_cmd->add_option("--delta", fl.delta, "Non-square unit, or auto");
  fl_cmd->add_option("--kappa", fl.kappa, "0 (untwisted) or 1 (twisted)");
  fl_cmd->add_option("--window", fl.window, "Window radius, or auto");
  fl_cmd->add_flag_function("--no-saturate", [&fl](std::int64_t) { fl.saturate = false; }, "Skip the m+1 re-run");
  fl_cmd->callback([&] { action = [&] { return cmd_fl_verify(fl); }; });

  FlVerifyParams orb;
  auto* orb_cmd = app.add_subcommand("orbital", "Stable lattice counts by grading, with a saturation check");
  orb_cmd->add_option("--p", orb.p, "Odd prime")->required();
  orb_cmd->add_option("--a", orb.a, "Rational a");
  orb_cmd->add_option("--b", orb.b, "Nonzero rational b")->required();
  orb_cmd->add_option("--delta", orb.delta, "Non-square unit, or auto");
  orb_cmd->add_option("--kappa", orb.kappa, "0 (untwisted) or 1 (twisted)");
  orb_cmd->add_option("--window", orb.window, "Window radius, or auto");
  orb_cmd->add_flag_function("--no-saturate", [&orb](std::int64_t) { orb.saturate = false; }, "Skip the m+1 re-run");
  orb_cmd->callback([&] { action = [&] { return cmd_orbital(orb); }; });

  SweepParams sweep;
  std::string sweep_config;
  auto* sweep_cmd = app.add_subcommand("sweep", "Closed form versus brute force over a (p, val(b)) grid");
  auto* sweep_p = sweep_cmd->add_option("--p", sweep.primes, "Odd primes")->delimiter(',');
  auto* sweep_vb = sweep_cmd->add_option("--vb", sweep.valuations, "Valuations of b")->delimiter(',');
  auto* sweep_kappa = sweep_cmd->add_option("--kappa", sweep.kappa, "0 or 1");
  auto* sweep_a = sweep_cmd->add_option("--a", sweep.a, "Unit a");
  bool sweep_no_saturate = false;
  auto* sweep_sat = sweep_cmd->add_flag("--no-saturate", sweep_no_saturate, "Skip the m+1 re-run");
  sweep_cmd->add_option("--config", sweep_config, "JSON file with p, vb, kappa, a, saturate, jobs");
  sweep_cmd->callback([&] {
    action = [&] {
      SweepParams merged = sweep_config.empty() ? SweepParams{} : load_sweep_config(sweep_config);
      if (sweep_p->count()) merged.primes = sweep.primes;
      if (sweep_vb->count()) merged.valuations = sweep.valuations;
      if (sweep_kappa->count()) merged.kappa = sweep.kappa;
      if (sweep_a->count()) merged.a = sweep.a;
      if (sweep_sat->count()) merged.saturate = false;
      if (!jobs_text.empty() || merged.jobs == 0 || sweep_config.empty()) merged.jobs = sweep.jobs;
      return cmd_sweep(merged);
    };
  });

  HeckeParams hecke;
  auto* hecke_cmd = app.add_subcommand("hecke", "Hecke eigenform check for Delta");
  hecke_cmd->add_option("--p", hecke.p, "Prime")->required();
  hecke_cmd->add_option("--truncation", hecke.truncation, "Output depth");
  hecke_cmd->callback([&] { action = [&] { return cmd_hecke(hecke); }; });

  ThetaParams theta;
  auto* theta_cmd = app.add_subcommand("theta", "Theta functional equation residual");
  theta_cmd->add_option("--t", theta.t, "Points t > 0")->delimiter(',');
  theta_cmd->add_option("--terms", theta.terms, "Series truncation M");
  theta_cmd->add_option("--tolerance", theta.tolerance);
  theta_cmd->callback([&] { action = [&] { return cmd_theta(theta); }; });

  PoissonParams poisson;
  auto* poisson_cmd = app.add_subcommand("poisson", "Poisson summation residual for the Gaussian");
  poisson_cmd->add_option("--s", poisson.s, "Scales s > 0")->delimiter(',');
  poisson_cmd->add_option("--terms", poisson.terms, "Series truncation M");
  poisson_cmd->add_option("--tolerance", poisson.tolerance);
  poisson_cmd->callback([&] { action = [&] { return cmd_poisson(poisson); }; });

  LseriesParams lseries;
  auto* lseries_cmd = app.add_subcommand("lseries", "Dirichlet series against Euler product");
  lseries_cmd->add_option("--character", lseries.character, "trivial, mod4, kronecker:D or quadratic:d");
  lseries_cmd->add_option("--s", lseries.s, "Real s > 1");
  lseries_cmd->add_option("--nmax", lseries.n_max, "Dirichlet series cutoff");
  lseries_cmd->add_option("--pmax", lseries.p_max, "Euler product cutoff");
  lseries_cmd->add_option("--tolerance", lseries.tolerance);
  lseries_cmd->callback([&] { action = [&] { return cmd_lseries(lseries); }; });

  FrobeniusParams frobenius;
  auto* frobenius_cmd = app.add_subcommand("frobenius", "Frobenius in Q(sqrt d) against the quadratic character");
  frobenius_cmd->add_option("--d", frobenius.d, "Squarefree d")->required();
  frobenius_cmd->add_option("--pmax", frobenius.p_max, "Largest prime checked");
  frobenius_cmd->callback([&] { action = [&] { return cmd_frobenius(frobenius); }; });

  TraceParams trace;
  auto* trace_cmd = app.add_subcommand("trace", "Finite group trace formula");
  trace_cmd->add_option("--group", trace.group, "Catalog name or ';'-separated cycle generators");
  trace_cmd->add_option("--subgroup", trace.subgroup, "all, or ';'-separated cycle generators");
  trace_cmd->callback([&] { action = [&] { return cmd_trace(trace); }; });

  std::vector<std::string> argv_storage{"orbitkit"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "orbitkit: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const unsigned jobs = jobs_text.empty() ? default_jobs() : parse_jobs(jobs_text);
    fl.jobs = jobs;
    orb.jobs = jobs;
    sweep.jobs = jobs;
    const RunReport report = action();
    const OutputFormat chosen = format.empty() ? OutputFormat::Json : parse_format(format);
    out << render(report, chosen);
    if (format.empty() && err_is_terminal) err << render_table(report);
    return exit_code(report);
  } catch (const PrecisionError& e) {
    err << "orbitkit: precision error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "orbitkit: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace orbitkit::cli
