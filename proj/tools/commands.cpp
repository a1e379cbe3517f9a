#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramlab/bounds.hpp"
#include "ramlab/error.hpp"
#include "ramlab/frobsolve.hpp"
#include "ramlab/module_io.hpp"
#include "ramlab/ramify.hpp"

namespace ramlab::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

Json integer_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(n));
  }
  return Json(to_string(n));
}

Json rational_json(const Rational& r) {
  Json j;
  j["num"] = integer_json(boost::multiprecision::numerator(r));
  j["den"] = integer_json(boost::multiprecision::denominator(r));
  return j;
}

bool is_rational_object(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den"); }

std::string text_scalar(const Json& j) {
  if (is_rational_object(j)) {
    const std::string num = j["num"].is_string() ? j["num"].get<std::string>() : j["num"].dump();
    const std::string den = j["den"].is_string() ? j["den"].get<std::string>() : j["den"].dump();
    return den == "1" ? num : num + "/" + den;
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object()) {
    std::string out;
    for (const auto& [k, v] : j.items()) {
      if (!out.empty()) out += " ";
      out += k + "=" + text_scalar(v);
    }
    return out;
  }
  return j.dump();
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  for (const auto& [key, value] : report.items()) {
    if (value.is_array()) {
      os << key << ":\n";
      for (const auto& item : value) os << "  - " << text_scalar(item) << "\n";
    } else {
      os << key << ": " << text_scalar(value) << "\n";
    }
  }
  return os.str();
}

Integer parse_budget(const std::string& text) {
  const Rational r = parse_rational(text);
  if (boost::multiprecision::denominator(r) != 1 || r < 1) {
    throw Error(ErrorCode::kInvalidArgument, "budget must be a positive integer (got '" + text + "')");
  }
  return boost::multiprecision::numerator(r);
}

Integer resolve_budget(const std::string& flag) {
  if (!flag.empty()) return parse_budget(flag);
  if (const char* env = std::getenv("PADIC_RAMLAB_BUDGET"); env != nullptr && *env != '\0') return parse_budget(env);
  return Integer(1000000);
}

std::uint32_t checked_prime(std::int64_t p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  return static_cast<std::uint32_t>(p);
}

std::int64_t default_character_unit(std::uint32_t p) {
  return p == 2 ? 3 : static_cast<std::int64_t>(least_primitive_root(p));
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kHeightExceeded:
    case ErrorCode::kStructureViolation:
    case ErrorCode::kNonCharacter:
    case ErrorCode::kNoConvergenceWithinCut:
      return kExitFailed;
    default:
      return kExitUsage;
  }
}

struct Outcome {
  Json report;
  int exit_code = kExitOk;
  // Preformatted output (CSV) that bypasses the JSON/text renderers.
  std::string raw;
};

// ---- bound ---------------------------------------------------------------

struct BoundOptions {
  std::int64_t p = 0;
  int i = 0;
  bool compare = false;
};

Outcome cmd_bound(const BoundOptions& o, const std::string& format) {
  const std::uint32_t p = checked_prime(o.p);
  Outcome out;
  Json& r = out.report;
  r["command"] = "bound";
  r["p"] = p;
  r["i"] = o.i;
  r["alpha"] = alpha(p, o.i);
  r["beta"] = rational_json(beta(p, o.i));
  r["crystalline"] = rational_json(crystalline_bound(p, o.i));
  if (o.compare) {
    const Rational ss = semistable_bound(p, o.i);
    r["semistable"] = rational_json(ss);
    r["difference"] = rational_json(ss - crystalline_bound(p, o.i));
  }
  if (format == "csv") {
    out.raw = grid_csv({GridRow{p, o.i, alpha(p, o.i), crystalline_bound(p, o.i), semistable_bound(p, o.i)}});
  }
  return out;
}

// ---- grid ----------------------------------------------------------------

struct GridOptions {
  std::vector<std::int64_t> primes;
  std::int64_t pmax = 0;
  int imax = 10;
};

std::vector<std::uint32_t> primes_up_to(std::int64_t bound) {
  std::vector<std::uint32_t> out;
  for (std::int64_t n = 2; n <= bound; ++n) {
    if (is_prime(static_cast<std::uint64_t>(n))) out.push_back(static_cast<std::uint32_t>(n));
  }
  return out;
}

Outcome cmd_grid(const GridOptions& o, const std::string& format) {
  std::vector<std::uint32_t> ps;
  if (o.pmax > 0) ps = primes_up_to(o.pmax);
  for (std::int64_t p : o.primes) ps.push_back(checked_prime(p));
  if (ps.empty()) ps = {2, 3, 5, 7, 11, 13};
  const std::vector<GridRow> rows = bound_grid(ps, o.imax);
  Outcome out;
  out.report["command"] = "grid";
  out.report["rows"] = Json::array();
  for (const auto& row : rows) {
    Json j;
    j["p"] = row.p;
    j["i"] = row.i;
    j["alpha"] = row.alpha;
    j["crystalline"] = rational_json(row.crystalline);
    j["semistable"] = rational_json(row.semistable);
    j["difference"] = rational_json(row.difference());
    out.report["rows"].push_back(std::move(j));
  }
  if (format == "csv") out.raw = grid_csv(rows);
  return out;
}

// ---- herbrand ------------------------------------------------------------

struct HerbrandOptions {
  std::string family;
  std::int64_t p = 0;
  int n = 1;
  std::string breaks;
  std::string file;
  std::vector<std::string> eval;
  std::vector<std::string> inverse;
  bool mu = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome cmd_herbrand(const HerbrandOptions& o) {
  BreakData data;
  if (o.family == "cyclotomic") {
    data = cyclotomic_breaks(checked_prime(o.p), o.n);
  } else if (o.family == "kummer-tate") {
    data = kummer_tate_breaks(checked_prime(o.p));
  } else if (o.family == "file") {
    if (o.breaks.empty() == o.file.empty()) throw Error(ErrorCode::kInvalidArgument, "family 'file' needs exactly one of --breaks or --file");
    data = parse_break_data(o.breaks.empty() ? read_file(o.file) : o.breaks);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown family '" + o.family + "' (expected cyclotomic, kummer-tate or file)");
  }
  const HerbrandFn phi = phi_fn(data);
  const HerbrandFn psi = psi_fn(phi);
  Outcome out;
  Json& r = out.report;
  r["command"] = "herbrand";
  r["family"] = o.family;
  r["break_data"] = to_string(data);
  r["phi"] = to_string(phi);
  r["psi"] = to_string(psi);
  if (!o.eval.empty()) {
    r["phi_values"] = Json::array();
    for (const auto& t : o.eval) {
      const Rational x = parse_rational(t);
      r["phi_values"].push_back(Json{{"t", rational_json(x)}, {"phi", rational_json(phi(x))}});
    }
  }
  if (!o.inverse.empty()) {
    r["psi_values"] = Json::array();
    for (const auto& t : o.inverse) {
      const Rational x = parse_rational(t);
      r["psi_values"].push_back(Json{{"u", rational_json(x)}, {"psi", rational_json(psi(x))}});
    }
  }
  if (o.mu) r["mu"] = rational_json(mu(data));
  return out;
}

// ---- solve ---------------------------------------------------------------

struct SolveOptions {
  std::string file;
  std::string mode = "tilt";
  int depth = 2;
  int level = -1;
  std::string cut;
  std::string c_work;
  std::string budget;
  std::int64_t u = 0;
  bool trace = false;
  bool skip_verify = false;
};

Json verify_loaded(const WachModuleModP& m, int& exit_code) {
  Json j;
  const HeightWitness w = verify_height(m);
  j["height"] = "pass";
  j["height_trunc"] = w.trunc;
  if (m.gamma) {
    const GammaReport g = verify_gamma(m);
    j["gamma_trivial_mod_x"] = g.trivial_mod_x;
    j["gamma_commutes"] = g.commutes;
    if (!g.passed()) {
      j["gamma_detail"] = g.detail;
      exit_code = kExitFailed;
    }
  }
  return j;
}

int least_level_above(std::uint32_t p, const Rational& a) {
  int s = 0;
  Integer power = 1;
  while (Rational(power) <= a) {
    power *= p;
    ++s;
  }
  return s;
}

RingSpec solver_ring(const WachModuleModP& m, const std::string& mode, int depth, int level, const std::string& cut_text) {
  const std::uint32_t p = m.p();
  const Rational a(static_cast<std::int64_t>(p) * m.height, p - 1);
  if (mode == "tilt") {
    const RingSpec probe = RingSpec::tilt(m.field, depth, Rational(0));
    const Rational cut = cut_text.empty() ? a + Rational(2, probe.denom()) : parse_rational(cut_text);
    return RingSpec::tilt(m.field, depth, cut);
  }
  if (mode == "untilted") {
    const int s = level >= 0 ? level : least_level_above(p, a);
    if (Rational(ipow(Integer(p), static_cast<unsigned>(s))) <= a) {
      throw Error(ErrorCode::kRegimeViolation, "untilted lifting needs p^s > a (p^s=" + to_string(ipow(Integer(p), static_cast<unsigned>(s))) +
                                                   ", a=" + to_string(a) + ")");
    }
    const RingSpec probe = RingSpec::untilted(m.field, s, Rational(0));
    const Rational scale(ipow(Integer(p), static_cast<unsigned>(s)));
    // Largest cut whose extension by (p-1)i/D stays below 1, when that cut
    // is at least a; the lift then reports at the cut itself.
    const std::int64_t D = probe.denom();
    const std::int64_t shift = static_cast<std::int64_t>(p - 1) * m.height;
    Rational cut = a / scale + Rational(1, D);
    if (static_cast<std::int64_t>(p) * m.height + shift < D) cut = Rational(D - shift - 1, D);
    if (!cut_text.empty()) cut = parse_rational(cut_text);
    return RingSpec::untilted(m.field, s, cut);
  }
  throw Error(ErrorCode::kInvalidArgument, "mode must be tilt or untilted");
}

Json transcript_json(const LiftTranscript& t) {
  Json j;
  j["h"] = rational_json(t.h);
  j["output_cut"] = rational_json(t.output_cut);
  j["lines"] = t.lines();
  j["rate_holds"] = t.rate_holds();
  return j;
}

Outcome cmd_solve(const SolveOptions& o) {
  const ModuleFile file = load_module_file(o.file);
  const WachModuleModP& m = file.module;
  Outcome out;
  Json& r = out.report;
  r["command"] = "solve";
  r["module"] = file.name;
  if (!o.skip_verify) {
    r["checks"] = verify_loaded(m, out.exit_code);
    if (out.exit_code != kExitOk) return out;
  }
  const RingSpec spec = solver_ring(m, o.mode, o.depth, o.level, o.cut);
  std::optional<Rational> c_work;
  if (!o.c_work.empty()) c_work = parse_rational(o.c_work);
  const TstarResult t = compute_Tstar(m, spec, resolve_budget(o.budget), c_work);

  r["ring"] = spec.header();
  r["a"] = rational_json(t.params.a);
  r["b"] = rational_json(t.params.b);
  r["c_work"] = rational_json(t.params.c_work);
  r["h"] = rational_json(t.params.h);
  r["output_cut"] = rational_json(t.output_cut);
  r["dimension"] = t.dimension;
  r["cardinality"] = t.solutions.size();
  r["basis"] = Json::array();
  for (const auto& x : t.basis) r["basis"].push_back(to_string(x));
  r["solutions"] = Json::array();
  for (const auto& x : t.solutions) r["solutions"].push_back(to_string(x));
  r["injective_at_b"] = t.injective_at_b;
  if (t.solutions.size() == m.p()) {
    const std::int64_t u = o.u != 0 ? o.u : default_character_unit(m.p());
    r["character_unit"] = u;
    r["character_exponent"] = character_of(t.solutions, u);
  }
  if (m.gamma) {
    const bool permutes = galois_permutes(m, t.solutions);
    r["galois_permutes"] = permutes;
    if (!permutes) out.exit_code = kExitFailed;
  }
  bool rate = true;
  for (const auto& tr : t.transcripts) rate = rate && tr.rate_holds();
  r["contraction_rate_holds"] = rate;
  if (!rate) out.exit_code = kExitFailed;
  if (o.trace) {
    r["transcripts"] = Json::array();
    for (const auto& tr : t.transcripts) r["transcripts"].push_back(transcript_json(tr));
  }
  return out;
}

// ---- verify --------------------------------------------------------------

struct VerifyOptions {
  std::string suite;
  std::int64_t p = 0;
  int i = 1;
  std::string budget;
  int depth = 2;
  std::int64_t pmax = 13;
  int imax = 50;
  std::int64_t trunc = 16;
  int count = 200;
  std::uint64_t seed = 1;
  int max_height = 2;
};

Outcome verify_tate(const VerifyOptions& o) {
  std::vector<std::uint32_t> ps{3, 5, 7};
  if (o.p != 0) ps = {checked_prime(o.p)};
  Outcome out;
  Json& r = out.report;
  r["command"] = "verify";
  r["suite"] = "tate-exclusion";
  r["checks"] = Json::array();
  bool all = true;
  for (std::uint32_t p : ps) {
    const BoundReport b = tate_exclusion(p);
    Json j;
    j["p"] = p;
    j["tate_mu"] = rational_json(b.tate_mu);
    j["crystalline"] = rational_json(b.crystalline);
    j["semistable"] = rational_json(b.semistable);
    j["excluded"] = b.excluded;
    if (b.tabulated_mu) j["tabulated_mu"] = rational_json(*b.tabulated_mu);
    j["table_agrees"] = b.table_agrees;
    const bool pass = b.excluded && b.table_agrees;
    j["verdict"] = pass ? "pass" : "fail";
    all = all && pass;
    r["checks"].push_back(std::move(j));
  }
  r["verdict"] = all ? "pass" : "fail";
  out.exit_code = all ? kExitOk : kExitFailed;
  return out;
}

Outcome verify_approx1(const VerifyOptions& o) {
  const std::uint32_t p = checked_prime(o.p == 0 ? 2 : o.p);
  if (o.i < 1) throw Error(ErrorCode::kDegenerateWeightRange, "approx1 needs i >= 1");
  const Integer budget = resolve_budget(o.budget);
  const FiniteField field(p);
  const RingSpec probe = RingSpec::tilt(field, o.depth, Rational(0));
  const Rational a(static_cast<std::int64_t>(p) * o.i, p - 1);
  const Rational b(o.i, p - 1);
  const RingSpec spec = RingSpec::tilt(field, o.depth, a + Rational(2, probe.denom()));
  const WachModuleModP m = rank_one_module(field, minimum_truncation(spec, o.i), o.i, p + 1);

  const JcSet jc = enumerate_Jc(m, spec, a, budget);
  std::vector<PhiVector> image;
  for (const auto& x : jc.elements) image.push_back(reduce_to(x, b));
  std::vector<std::string> image_keys = as_key_set(image);
  image_keys.erase(std::unique(image_keys.begin(), image_keys.end()), image_keys.end());
  const TstarResult t = compute_Tstar(m, spec, budget);
  const std::vector<std::string> tstar_keys = as_key_set(t.image_b);

  Outcome out;
  Json& r = out.report;
  r["command"] = "verify";
  r["suite"] = "approx1";
  r["p"] = p;
  r["i"] = o.i;
  r["depth"] = o.depth;
  r["jc_search_space"] = integer_json(jc.search_space);
  r["jc_size"] = jc.elements.size();
  r["image_size"] = image_keys.size();
  r["tstar_size"] = t.solutions.size();
  r["injective_at_b"] = t.injective_at_b;
  r["images_equal"] = image_keys == tstar_keys;
  const bool pass = image_keys == tstar_keys && t.injective_at_b && t.solutions.size() == p;
  r["verdict"] = pass ? "pass" : "fail";
  out.exit_code = pass ? kExitOk : kExitFailed;
  return out;
}

Outcome verify_gamma_power(const VerifyOptions& o) {
  std::vector<std::uint32_t> ps{2, 3, 5};
  if (o.p != 0) ps = {checked_prime(o.p)};
  std::mt19937_64 rng(o.seed);
  std::size_t checks = 0;
  Json failures = Json::array();
  for (int k = 0; k < o.count; ++k) {
    const std::uint32_t p = ps[static_cast<std::size_t>(k) % ps.size()];
    const FiniteField field(p);
    std::uniform_int_distribution<std::int64_t> unit_dist(1, 10 * p);
    std::int64_t u = unit_dist(rng);
    if (u % p == 0) ++u;
    const WachModuleModP m = random_module(field, o.trunc, 2, o.max_height, u, rng);
    if (!verify_gamma(m).passed()) {
      failures.push_back(Json{{"module", k}, {"detail", "generated module fails verify_gamma"}});
      continue;
    }
    std::int64_t power = 1;
    for (int s = 0; power + m.height_exponent() < o.trunc; ++s, power *= p) {
      const ContainmentReport c = gamma_power_containment(m, s);
      ++checks;
      if (!c.passed) failures.push_back(Json{{"module", k}, {"p", p}, {"s", s}, {"detail", c.detail}});
    }
  }
  Outcome out;
  Json& r = out.report;
  r["command"] = "verify";
  r["suite"] = "gamma-power";
  r["modules"] = o.count;
  r["trunc"] = o.trunc;
  r["checks"] = checks;
  r["failures"] = failures;
  r["verdict"] = failures.empty() ? "pass" : "fail";
  out.exit_code = failures.empty() ? kExitOk : kExitFailed;
  return out;
}

Outcome verify_bounds_grid(const VerifyOptions& o) {
  const std::vector<GridRow> rows = bound_grid(primes_up_to(o.pmax), o.imax);
  Json violations = Json::array();
  for (const auto& row : rows) {
    if (row.crystalline > row.semistable) {
      violations.push_back(Json{{"p", row.p}, {"i", row.i}, {"crystalline", rational_json(row.crystalline)},
                                {"semistable", rational_json(row.semistable)}});
    }
  }
  Outcome out;
  Json& r = out.report;
  r["command"] = "verify";
  r["suite"] = "bounds-grid";
  r["pmax"] = o.pmax;
  r["imax"] = o.imax;
  r["rows"] = rows.size();
  r["violations"] = violations;
  r["verdict"] = violations.empty() ? "pass" : "fail";
  out.exit_code = violations.empty() ? kExitOk : kExitFailed;
  return out;
}

Outcome cmd_verify(const VerifyOptions& o) {
  if (o.suite == "tate-exclusion") return verify_tate(o);
  if (o.suite == "approx1") return verify_approx1(o);
  if (o.suite == "gamma-power") return verify_gamma_power(o);
  if (o.suite == "bounds-grid") return verify_bounds_grid(o);
  throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + o.suite + "'");
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact ramification bounds, Herbrand functions and mod-p Wach-module solvers", "ramlab"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));

  BoundOptions bound_opts;
  CLI::App* bound = app.add_subcommand("bound", "Crystalline (and semistable) ramification bounds");
  bound->add_option("-p", bound_opts.p, "Prime")->required();
  bound->add_option("-i", bound_opts.i, "Hodge-Tate weight range")->required();
  bound->add_flag("--compare", bound_opts.compare, "Also print the semistable bound");

  GridOptions grid_opts;
  CLI::App* grid = app.add_subcommand("grid", "Bounds over a grid of primes and weights");
  grid->add_option("--primes", grid_opts.primes, "Primes")->delimiter(',');
  grid->add_option("--pmax", grid_opts.pmax, "Use every prime up to this bound");
  grid->add_option("--imax", grid_opts.imax, "Largest i");

  HerbrandOptions herbrand_opts;
  CLI::App* herbrand = app.add_subcommand("herbrand", "Ramification filtrations and Herbrand functions");
  herbrand->add_option("family", herbrand_opts.family, "cyclotomic | kummer-tate | file")->required();
  herbrand->add_option("-p", herbrand_opts.p, "Prime");
  herbrand->add_option("-n", herbrand_opts.n, "Cyclotomic level (Q_p(zeta_{p^n}))");
  herbrand->add_option("--breaks", herbrand_opts.breaks, "Break data text");
  herbrand->add_option("--file", herbrand_opts.file, "File holding break data text");
  herbrand->add_option("--eval", herbrand_opts.eval, "Evaluate phi at t");
  herbrand->add_option("--inverse", herbrand_opts.inverse, "Evaluate psi at u");
  herbrand->add_flag("--mu", herbrand_opts.mu, "Print mu");

  SolveOptions solve_opts;
  CLI::App* solve = app.add_subcommand("solve", "Frobenius-compatible maps T*(M) of a module file");
  solve->add_option("module", solve_opts.file, "Module file (JSON)")->required();
  solve->add_option("--mode", solve_opts.mode, "tilt | untilted")->check(CLI::IsMember({"tilt", "untilted"}));
  solve->add_option("--depth", solve_opts.depth, "Tilt depth N");
  solve->add_option("--level", solve_opts.level, "Untilted level s");
  solve->add_option("--cut", solve_opts.cut, "Output cut (valuation units, v(p) = 1)");
  solve->add_option("--c-work", solve_opts.c_work, "Working cut for J_c, above a");
  solve->add_option("--budget", solve_opts.budget, "Enumeration cap");
  solve->add_option("-u", solve_opts.u, "Primitive root used to read the character");
  solve->add_flag("--trace", solve_opts.trace, "Include lift transcripts");
  solve->add_flag("--skip-verify", solve_opts.skip_verify, "Skip height and gamma checks on load");

  VerifyOptions verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "Verification suites");
  verify->add_option("suite", verify_opts.suite, "tate-exclusion | approx1 | gamma-power | bounds-grid")->required();
  verify->add_option("-p", verify_opts.p, "Prime");
  verify->add_option("-i", verify_opts.i, "Height");
  verify->add_option("--budget", verify_opts.budget, "Enumeration cap");
  verify->add_option("--depth", verify_opts.depth, "Tilt depth N");
  verify->add_option("--pmax", verify_opts.pmax, "Largest prime (bounds-grid)");
  verify->add_option("--imax", verify_opts.imax, "Largest i (bounds-grid)");
  verify->add_option("--trunc", verify_opts.trunc, "Truncation N (gamma-power)");
  verify->add_option("--count", verify_opts.count, "Number of random modules (gamma-power)");
  verify->add_option("--seed", verify_opts.seed, "Random seed (gamma-power)");
  verify->add_option("--max-height", verify_opts.max_height, "Largest height of random summands");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    return CommandResult{code == 0 ? kExitOk : kExitUsage, out.str(), err.str()};
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (bound->parsed()) {
      outcome = cmd_bound(bound_opts, format);
    } else if (grid->parsed()) {
      outcome = cmd_grid(grid_opts, format);
    } else if (herbrand->parsed()) {
      outcome = cmd_herbrand(herbrand_opts);
    } else if (solve->parsed()) {
      outcome = cmd_solve(solve_opts);
    } else {
      outcome = cmd_verify(verify_opts);
    }
  } catch (const Error& e) {
    return CommandResult{exit_code_for(e.code()), "", std::string("error: ") + e.what() + "\n"};
  }
  if (!outcome.raw.empty()) return CommandResult{outcome.exit_code, outcome.raw, ""};
  if (format == "csv") return CommandResult{kExitUsage, "", "error: csv output is available for bound and grid only\n"};

  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  outcome.report["timing_ms"] = static_cast<double>(static_cast<std::int64_t>(elapsed * 1000)) / 1000.0;
  const std::string text = format == "text" ? render_text(outcome.report) : outcome.report.dump(2) + "\n";
  return CommandResult{outcome.exit_code, text, ""};
}

}  // namespace ramlab::cli
