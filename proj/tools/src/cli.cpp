#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "overview.hpp"
#include "qkgr/errors.hpp"
#include "qkgr/expr.hpp"
#include "qkgr/groebner.hpp"
#include "qkgr/presentations.hpp"
#include "qkgr/specialize.hpp"
#include "qkgr/verifier.hpp"

namespace qkgr::cli {

namespace {

// Signals a usage error after CLI11 parsing (exit 2).
struct UsageError : Error {
  using Error::Error;
};

struct Common {
  std::string cache_dir;
  bool no_cache = false;
  int max_n = 8;

  std::optional<GroebnerCache> cache() const {
    if (no_cache) return std::nullopt;
    if (!cache_dir.empty()) return GroebnerCache(cache_dir);
    return GroebnerCache::from_env();
  }
};

struct Grassmannian {
  int k = 0;
  int n = 0;

  void add(CLI::App* cmd) {
    cmd->add_option("--k", k, "Dimension of the subspaces")->required();
    cmd->add_option("--n", n, "Dimension of the ambient space")->required();
  }
  void check(const Common& c) const {
    if (k < 1 || k >= n) throw UsageError("need 1 <= k <= n-1, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    if (n > c.max_n) throw UsageError("n=" + std::to_string(n) + " exceeds --max-n " + std::to_string(c.max_n));
  }
};

// --equivariant / --non-equivariant with a per-kind default.
struct Equivariance {
  bool on = false;
  bool off = false;

  void add(CLI::App* cmd) {
    auto* a = cmd->add_flag("--equivariant", on, "Keep the equivariant parameters (default except for gk)");
    auto* b = cmd->add_flag("--non-equivariant", off, "Set the equivariant parameters to zero");
    a->excludes(b);
  }
  bool resolve(std::optional<Kind> kind) const {
    if (kind == Kind::kGk) {
      if (on) throw UsageError("the gk presentation is non-equivariant only");
      return false;
    }
    return !off;
  }
};

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos && std::stol(text.substr(slash + 1)) == 0) throw UsageError("zero denominator: " + text);
  try {
    Rational r(text);
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw UsageError("not a rational number: " + text);
  }
}

std::vector<Rational> parse_zeta(const std::vector<std::string>& items, int n) {
  std::vector<Rational> zeta;
  for (const auto& s : items) zeta.push_back(parse_rational(s));
  if (!zeta.empty() && static_cast<int>(zeta.size()) != n)
    throw UsageError("--zeta needs " + std::to_string(n) + " values, got " + std::to_string(zeta.size()));
  return zeta;
}

QMode parse_q_mode(const std::string& text) {
  try {
    return QMode::parse(text);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

Kind parse_kind_arg(const std::string& text) {
  try {
    return parse_kind(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

GroebnerBasis basis_for(const GeneratorList& g, const Common& c, std::size_t max_pairs) {
  auto cache = c.cache();
  GroebnerOptions opts;
  opts.max_pairs = max_pairs;
  return groebner_cached(g.ideal_generators(), TermOrder::block(*g.space), cache ? &*cache : nullptr, opts);
}

// ---------------------------------------------------------------------------------------------
// present

struct PresentArgs {
  Grassmannian gr;
  Equivariance eq;
  std::string kind = "all";
  std::string format = "text";
  std::string q_mode = "cleared";
  std::vector<std::string> zeta;
};

void present_list_text(std::ostream& out, const GeneratorList& g) {
  out << "Gr(" << g.spec.k << ";" << g.spec.n << "), " << kind_name(g.spec.kind) << ", "
      << (g.spec.equivariant ? "equivariant" : "non-equivariant") << ", q-mode " << g.spec.q_mode.str() << "\n";
  for (std::size_t i = 0; i < g.generators.size(); ++i) out << g.provenance[i] << ": " << to_string(g.generators[i]) << "\n";
}

int cmd_present(const PresentArgs& a, const Common& c, std::ostream& out) {
  a.gr.check(c);
  QMode mode = parse_q_mode(a.q_mode);
  auto zeta = parse_zeta(a.zeta, a.gr.n);
  if (a.kind == "all") {
    bool equivariant = a.eq.resolve(std::nullopt);
    auto o = build_overview(a.gr.k, a.gr.n, equivariant, mode, equivariant ? zeta : std::vector<Rational>{});
    if (a.format == "json")
      out << overview_json(o).dump(2) << "\n";
    else if (a.format == "latex")
      out << overview_latex(o);
    else
      out << overview_text(o);
    return 0;
  }
  Kind kind = parse_kind_arg(a.kind);
  PresentationSpec spec;
  spec.k = a.gr.k;
  spec.n = a.gr.n;
  spec.kind = kind;
  spec.equivariant = a.eq.resolve(kind);
  spec.q_mode = mode;
  if (spec.equivariant) spec.zeta_values = zeta;
  auto g = build_presentation(spec);
  if (a.format == "json")
    out << g.to_json().dump(2) << "\n";
  else if (a.format == "latex")
    out << latex_document(g);
  else
    present_list_text(out, g);
  return 0;
}

// ---------------------------------------------------------------------------------------------
// verify

struct VerifyArgs {
  bool all = false;
  std::vector<std::string> checks;
  int k = 0;
  int n = 0;
  int kmax = 3;
  int nmax = 6;
  std::string mode = "auto";
  std::uint64_t seed = 1;
  int draws = 3;
  std::size_t budget = 1000000;
  std::size_t symbolic_max_vars = 12;
  int jobs = 1;
  std::string output;
};

struct Task {
  std::string check;
  int k;
  int n;
};

std::vector<Task> verify_tasks(const VerifyArgs& a, const Common& c) {
  std::vector<std::string> names = a.all || a.checks.empty() ? check_names() : a.checks;
  for (const auto& name : names)
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw UsageError("unknown check: " + name);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  std::vector<std::pair<int, int>> grid;
  if (a.k || a.n) {
    Grassmannian{a.k, a.n}.check(c);
    grid.emplace_back(a.k, a.n);
  } else {
    if (a.nmax > c.max_n) throw UsageError("--nmax exceeds --max-n " + std::to_string(c.max_n));
    for (int k = 1; k <= a.kmax; ++k)
      for (int n = k + 1; n <= a.nmax; ++n) grid.emplace_back(k, n);
  }
  std::vector<Task> tasks;
  for (const auto& name : names)
    for (auto [k, n] : grid)
      if (check_applies(name, k, n)) tasks.push_back({name, k, n});
  return tasks;
}

void save_witness(const GroebnerCache& cache, const CheckReport& r) {
  std::error_code ec;
  auto dir = cache.dir() / "witnesses";
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  std::ofstream f(dir / (r.name + "-" + std::to_string(r.k) + "-" + std::to_string(r.n) + ".txt"));
  f << r.to_json().dump(2) << "\n";
}

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  if (a.all && !a.checks.empty()) throw UsageError("--all and --check are exclusive");
  auto tasks = verify_tasks(a, c);
  auto cache = c.cache();
  VerifyOptions opts;
  try {
    opts.mode = parse_check_mode(a.mode);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  opts.seed = a.seed;
  opts.draws = a.draws;
  opts.symbolic_max_vars = a.symbolic_max_vars;
  opts.groebner.max_pairs = a.budget;
  opts.cache = cache ? &*cache : nullptr;

  std::vector<nlohmann::json> results(tasks.size());
  std::vector<int> status(tasks.size(), 0);  // 0 pass, 1 fail, 2 error
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      try {
        CheckReport r = run_check(t.check, t.k, t.n, opts);
        results[i] = r.to_json();
        if (!r.passed) {
          status[i] = 1;
          if (cache) save_witness(*cache, r);
        }
      } catch (const std::exception& e) {
        results[i] = {{"check", t.check}, {"k", t.k}, {"n", t.n}, {"status", "error"}, {"error", e.what()}};
        status[i] = 2;
      }
    }
  };
  int jobs = std::clamp(a.jobs, 1, 64);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  nlohmann::json report = nlohmann::json::array();
  for (auto& r : results) report.push_back(std::move(r));
  std::string text = report.dump(2);
  if (a.output.empty()) {
    out << text << "\n";
  } else {
    std::ofstream f(a.output);
    if (!f) throw UsageError("cannot write " + a.output);
    f << text << "\n";
  }
  int failed = static_cast<int>(std::count(status.begin(), status.end(), 1));
  int errors = static_cast<int>(std::count(status.begin(), status.end(), 2));
  err << tasks.size() << " checks, " << failed << " failed, " << errors << " errors\n";
  if (errors) return 2;
  return failed ? 1 : 0;
}

// ---------------------------------------------------------------------------------------------
// reduce, dim, limit2d

struct ReduceArgs {
  Grassmannian gr;
  Equivariance eq;
  std::string kind = "eliminated-hat";
  std::string q_mode = "cleared";
  std::vector<std::string> zeta;
  std::size_t budget = 1000000;
  std::string expression;
};

int cmd_reduce(const ReduceArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  a.gr.check(c);
  Kind kind = parse_kind_arg(a.kind);
  PresentationSpec spec;
  spec.k = a.gr.k;
  spec.n = a.gr.n;
  spec.kind = kind;
  spec.equivariant = a.eq.resolve(kind);
  spec.q_mode = parse_q_mode(a.q_mode);
  if (spec.equivariant) spec.zeta_values = parse_zeta(a.zeta, a.gr.n);
  auto g = build_presentation(spec);
  auto tree = expr::parse(a.expression);
  auto value = expr::elaborate(tree, g);
  for (const auto& w : value.warnings) err << "warning: " << w << "\n";
  out << to_string(basis_for(g, c, a.budget).normal_form(value.value)) << "\n";
  return 0;
}

struct DimArgs {
  Grassmannian gr;
  Equivariance eq;
  std::string kind = "eliminated-hat";
  std::uint64_t seed = 1;
  std::string q;
  std::vector<std::string> zeta;
  std::size_t budget = 1000000;
};

int cmd_dim(const DimArgs& a, const Common& c, std::ostream& out) {
  a.gr.check(c);
  Kind kind = parse_kind_arg(a.kind);
  NumericPoint pt = draw_point(a.gr.n, a.seed);
  PresentationSpec spec;
  spec.k = a.gr.k;
  spec.n = a.gr.n;
  spec.kind = kind;
  spec.equivariant = a.eq.resolve(kind);
  Rational q0 = a.q.empty() ? pt.q : parse_rational(a.q);
  if (q0 == 1) throw UsageError("q = 1 is not allowed");
  spec.q_mode = QMode::numeric(q0);
  if (spec.equivariant) {
    auto zeta = parse_zeta(a.zeta, a.gr.n);
    spec.zeta_values = zeta.empty() ? pt.zeta : zeta;
  }
  auto d = basis_for(build_presentation(spec), c, a.budget).quotient_dimension();
  if (d)
    out << *d << "\n";
  else
    out << "infinite\n";
  return 0;
}

struct LimitArgs {
  Grassmannian gr;
  std::string convention = "chern-roots";
  int order = -1;
  std::string expression;
};

std::string limit_line(const LimitResult& r) {
  if (r.power < 0) return "0";
  return "L^" + std::to_string(r.power) + " * (" + to_string(r.coefficient) + ")";
}

int cmd_limit2d(const LimitArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  a.gr.check(c);
  LimitConvention conv;
  if (a.convention == "chern-roots")
    conv = LimitConvention::kChernRoots;
  else if (a.convention == "literal")
    conv = LimitConvention::kLiteral;
  else
    throw UsageError("unknown convention: " + a.convention + " (use chern-roots or literal)");
  const int k = a.gr.k, n = a.gr.n;
  if (!a.expression.empty()) {
    PresentationSpec spec;
    spec.k = k;
    spec.n = n;
    spec.kind = Kind::kCoulomb;
    spec.q_mode = QMode::aux();
    auto g = build_presentation(spec);
    auto value = expr::elaborate(expr::parse(a.expression), g);
    for (const auto& w : value.warnings) err << "warning: " << w << "\n";
    out << limit_line(limit_2d(value.value, k, n, a.order, conv)) << "\n";
    return 0;
  }
  auto space = standard_space(k, n, {}, true, true, true);
  SymRing R = standard_ring(space, k, n, true);
  Poly q = Poly::variable(space, names::q);
  Poly u = Poly::variable(space, names::u);
  Poly est = e_shift_tilde_eliminated(R);
  for (int l = 1; l <= n; ++l) {
    out << "ghat_" << l << ": " << limit_line(limit_2d(g_hat_closed(R, l, q), k, n, a.order, conv)) << "\n";
    out << "gtilde_" << l << ": " << limit_line(limit_2d(g_tilde(R, l, q, u, est), k, n, a.order, conv)) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------------------------
// cache

int cmd_cache(const std::string& action, const Common& c, std::ostream& out) {
  GroebnerCache cache = c.cache_dir.empty() ? GroebnerCache::from_env() : GroebnerCache(c.cache_dir);
  if (action == "path") {
    out << cache.dir().string() << "\n";
  } else if (action == "list") {
    for (const auto& p : cache.entries()) out << p.string() << "\n";
  } else if (action == "clear") {
    out << "removed " << cache.clear() << " entries\n";
  } else {
    throw UsageError("unknown cache action: " + action + " (use path, list or clear)");
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Presentations of the quantum K-theory ring of Grassmannians", "qkgr"};
  app.set_config("--config", "", "Read defaults from a TOML/INI file; command line flags override it");
  app.require_subcommand(1);
  Common common;
  app.add_option("--cache-dir", common.cache_dir, "Groebner basis cache (default $QKGR_CACHE_DIR or ~/.cache/qkgr)");
  app.add_flag("--no-cache", common.no_cache, "Do not read or write cached bases");
  app.add_option("--max-n", common.max_n, "Largest n accepted")->capture_default_str();

  PresentArgs pa;
  auto* present = app.add_subcommand("present", "Print the generators of a presentation");
  pa.gr.add(present);
  pa.eq.add(present);
  present->add_option("--kind", pa.kind, "all, whitney, whitney-shifted, coulomb, eliminated-tilde, eliminated-hat, gk")
      ->capture_default_str();
  present->add_option("--format", pa.format, "text, latex or json")
      ->check(CLI::IsMember({"text", "latex", "json"}))
      ->capture_default_str();
  present->add_option("--q-mode", pa.q_mode, "cleared, aux or numeric:VALUE")->capture_default_str();
  present->add_option("--zeta", pa.zeta, "Values for zeta_1..zeta_n")->delimiter(',');

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run identity checks and print a JSON report");
  verify->add_flag("--all", va.all, "Run every check");
  verify->add_option("--check", va.checks, "Check to run (repeatable)")->delimiter(',');
  verify->add_option("--k", va.k, "Single grid point (with --n)");
  verify->add_option("--n", va.n, "Single grid point (with --k)");
  verify->add_option("--kmax", va.kmax, "Grid bound for k")->capture_default_str();
  verify->add_option("--nmax", va.nmax, "Grid bound for n")->capture_default_str();
  verify->add_option("--mode", va.mode, "auto, symbolic or numeric")->capture_default_str();
  verify->add_option("--seed", va.seed, "Seed of the first numeric point")->capture_default_str();
  verify->add_option("--draws", va.draws, "Number of numeric points")->capture_default_str();
  verify->add_option("--budget", va.budget, "S-pair budget per Groebner basis")->capture_default_str();
  verify->add_option("--symbolic-max-vars", va.symbolic_max_vars, "Auto mode goes numeric above this many variables")
      ->capture_default_str();
  verify->add_option("--jobs,-j", va.jobs, "Worker threads")->capture_default_str();
  verify->add_option("--output,-o", va.output, "Write the report to a file instead of stdout");

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "Normal form of an expression modulo a presentation");
  ra.gr.add(reduce);
  ra.eq.add(reduce);
  reduce->add_option("--kind", ra.kind, "Presentation")->capture_default_str();
  reduce->add_option("--q-mode", ra.q_mode, "cleared, aux or numeric:VALUE")->capture_default_str();
  reduce->add_option("--zeta", ra.zeta, "Values for zeta_1..zeta_n")->delimiter(',');
  reduce->add_option("--budget", ra.budget, "S-pair budget")->capture_default_str();
  reduce->add_option("expression", ra.expression, "Expression, e.g. 'G[1]^5 - q'")->required();

  DimArgs da;
  auto* dim = app.add_subcommand("dim", "Dimension of the quotient at a numeric point");
  da.gr.add(dim);
  da.eq.add(dim);
  dim->add_option("--kind", da.kind, "Presentation")->capture_default_str();
  dim->add_option("--seed", da.seed, "Seed for q and zeta not given explicitly")->capture_default_str();
  dim->add_option("--q", da.q, "Value of q");
  dim->add_option("--zeta", da.zeta, "Values for zeta_1..zeta_n")->delimiter(',');
  dim->add_option("--budget", da.budget, "S-pair budget")->capture_default_str();

  LimitArgs la;
  auto* limit = app.add_subcommand("limit2d", "Leading term of the two-dimensional limit");
  la.gr.add(limit);
  limit->add_option("--convention", la.convention, "chern-roots or literal")->capture_default_str();
  limit->add_option("--order", la.order, "Truncation order in L (default: n)");
  limit->add_option("--expr", la.expression, "Expression instead of the relations");

  std::string cache_action;
  auto* cache = app.add_subcommand("cache", "Inspect the Groebner basis cache");
  cache->add_option("action", cache_action, "path, list or clear")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*present) return cmd_present(pa, common, out);
    if (*verify) return cmd_verify(va, common, out, err);
    if (*reduce) return cmd_reduce(ra, common, out, err);
    if (*dim) return cmd_dim(da, common, out);
    if (*limit) return cmd_limit2d(la, common, out, err);
    if (*cache) return cmd_cache(cache_action, common, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qkgr::cli
