#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "sgw/errors.hpp"
#include "sgw/localize.hpp"
#include "sgw/point_sgw.hpp"
#include "sgw/quantum.hpp"
#include "sgw/reference_tables.hpp"
#include "sgw/taut0.hpp"

namespace sgw::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

Json result_json(const Invariant& v) {
  if (v.is_zero()) return Json{{"zero", true}};
  return Json{{"coefficient", v.coefficient().to_string()}, {"kappa_exponent", v.kappa_exp()}};
}

Json record(const std::string& command, Json inputs, Json result, Json diagnostics = Json::object()) {
  return Json{{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)},
              {"diagnostics", std::move(diagnostics)}};
}

std::string join(const std::vector<Rational>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].to_string();
  return s;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("SGW_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw DomainError(std::string("SGW_SEED is not an unsigned integer: '") + env + "'");
  }
}

void add_format(CLI::App* app, Common& common) {
  app->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

int cmd_point(int k, const Common& common, std::ostream& out) {
  const Invariant v = sgw_point(k);
  if (common.json()) {
    out << record("point", Json{{"k", k}}, result_json(v)).dump() << '\n';
  } else {
    out << v.to_string() << '\n';
  }
  return kOk;
}

int cmd_taut(int k, const std::vector<unsigned>& exps, const Common& common, std::ostream& out) {
  if (k < 3) throw DomainError("k must be >= 3");
  const TautMonomial m = TautMonomial::chain(static_cast<unsigned>(k), exps);
  const Rational v = integrate(TautExpr(m));
  if (common.json()) {
    out << record("taut", Json{{"k", k}, {"exps", exps}, {"monomial", m.to_string()}},
                  Json{{"value", v.to_string()}})
               .dump()
        << '\n';
  } else {
    out << v.to_string() << '\n';
  }
  return kOk;
}

struct InvariantArgs {
  int n = 1;
  int k = 1;
  std::vector<int> classes;
  std::string strategy = "evaluate";
  int samples = 3;
  std::uint64_t seed = 0;
  bool trace = false;
};

int cmd_invariant(const InvariantArgs& a, const Common& common, std::ostream& out) {
  const LocalizationJob job = LocalizationJob::make(a.n, a.k, a.classes);
  const Strategy strategy = a.strategy == "symbolic" ? Strategy::Symbolic : Strategy::Evaluate;
  Localizer loc;
  LocalizationTrace trace;
  const Invariant v = loc.invariant(job, strategy, {a.samples, a.seed}, a.trace ? &trace : nullptr);

  if (!common.json()) {
    for (std::size_t s = 0; s < trace.samples.size(); ++s) {
      const TauSample& sample = trace.samples[s];
      out << "# sample " << s + 1 << " tau=(" << join(sample.tau) << ")\n";
      for (const GraphTerm& t : sample.terms) out << "#   " << t.graph.to_string() << " = " << t.value << '\n';
      out << "#   total = " << sample.total << '\n';
    }
    out << v.to_string() << '\n';
    return kOk;
  }

  Json diag{{"strategy", a.strategy}, {"codegree", job.codegree()}};
  if (strategy == Strategy::Evaluate) {
    diag["samples"] = a.samples;
    diag["seed"] = a.seed;
  }
  if (a.trace) {
    Json samples = Json::array();
    for (const TauSample& sample : trace.samples) {
      Json terms = Json::array();
      for (const GraphTerm& t : sample.terms) terms.push_back({{"graph", t.graph.to_string()}, {"value", t.value.to_string()}});
      Json tau = Json::array();
      for (const Rational& x : sample.tau) tau.push_back(x.to_string());
      samples.push_back({{"tau", tau}, {"contributions", terms}, {"total", sample.total.to_string()}});
    }
    diag["tau_samples"] = samples;
  }
  Json inputs{{"n", a.n}, {"d", 1}, {"k", a.k}, {"classes", a.classes}};
  out << record("invariant", std::move(inputs), result_json(v), std::move(diag)).dump() << '\n';
  return kOk;
}

std::string basis_name(int p) {
  if (p == 0) return "1";
  if (p == 1) return "L";
  return "L^" + std::to_string(p);
}

int cmd_quantum(int n, const Common& common, std::ostream& out) {
  const std::vector<StructureRow> table = structure_table(n);
  for (const StructureRow& row : table) {
    const QElement product = star(n, QElement::basis(n, row.a), QElement::basis(n, row.b));
    if (common.json()) {
      Json structure = Json::array();
      for (const auto& [c, inv] : row.entries) {
        Json cell = result_json(inv);
        cell["c"] = c;
        structure.push_back(std::move(cell));
      }
      out << record("quantum", Json{{"n", n}, {"d", 1}, {"k", 3}, {"a", row.a}, {"b", row.b}},
                    Json{{"product", product.to_string()}, {"structure", structure}})
                 .dump()
          << '\n';
      continue;
    }
    out << basis_name(row.a) << " * " << basis_name(row.b) << " = " << product.to_string() << '\n';
    for (const auto& [c, inv] : row.entries) {
      out << "    <" << basis_name(row.a) << ", " << basis_name(row.b) << ", " << basis_name(c)
          << "> = " << inv.to_string() << '\n';
    }
  }
  return kOk;
}

int cmd_reproduce(std::uint64_t seed, const Common& common, std::ostream& out) {
  Localizer loc;
  int pass = 0;
  int fail = 0;
  int skip = 0;
  for (const ReferenceValue& v : reference_values()) {
    const Invariant got = recompute(v, loc, {3, seed});
    const ReferenceOutcome outcome = judge(v, got);
    (outcome == ReferenceOutcome::Pass ? pass : outcome == ReferenceOutcome::Fail ? fail : skip) += 1;
    const std::string got_text = v.kind == ReferenceKind::Taut && !got.is_zero() ? got.coefficient().to_string()
                                                                                 : got.to_string();
    if (common.json()) {
      Json inputs{{"table", v.table}, {"n", v.n}, {"k", v.k}, {"args", v.args}};
      Json diag{{"outcome", to_string(outcome)}, {"printed", v.printed}};
      if (v.status == ReferenceStatus::Suspect) {
        diag["corrected"] = v.corrected.to_string();
        diag["note"] = v.note;
      }
      out << record("reproduce-paper", std::move(inputs), result_json(got), std::move(diag)).dump() << '\n';
      continue;
    }
    out << to_string(outcome) << "  " << v.label() << "  printed " << v.printed << ", computed " << got_text;
    if (v.status == ReferenceStatus::Suspect) out << "  [" << v.note << "]";
    out << '\n';
  }
  if (common.json()) {
    out << Json{{"command", "reproduce-paper"}, {"summary", {{"pass", pass}, {"fail", fail}, {"skip", skip}}}}.dump()
        << '\n';
  } else {
    out << "summary: " << pass << " pass, " << fail << " fail, " << skip << " skip\n";
  }
  return fail == 0 ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Super Gromov-Witten invariants of a point and of P^n in degree one"};
  app.name("sgw");
  app.require_subcommand(1);

  Common common;
  int k = 3;
  std::vector<unsigned> exps;
  int n = 1;
  InvariantArgs inv;

  auto* point = app.add_subcommand("point", "Super GW number of a point");
  point->add_option("--k", k, "Number of marked points")->required();
  add_format(point, common);

  auto* invariant = app.add_subcommand("invariant", "Degree-one invariant of P^n by localization");
  invariant->add_option("--n", inv.n, "Target dimension")->required();
  invariant->add_option("--k", inv.k, "Number of marked points (1, 2 or 3)")->required();
  invariant->add_option("--classes", inv.classes, "Hyperplane powers a1,..,ak")->required()->delimiter(',');
  invariant->add_option("--strategy", inv.strategy, "evaluate or symbolic")
      ->check(CLI::IsMember({"evaluate", "symbolic"}));
  invariant->add_option("--samples", inv.samples, "Torus samples for evaluate")->check(CLI::PositiveNumber);
  auto* seed_opt = invariant->add_option("--seed", inv.seed, "Seed for torus samples (default $SGW_SEED or 0)");
  invariant->add_flag("--trace", inv.trace, "Print per-graph contributions");
  add_format(invariant, common);

  auto* taut = app.add_subcommand("taut", "Integral of a chain monomial over M_{0,k}");
  taut->add_option("--k", k, "Number of marked points")->required();
  taut->add_option("--exps", exps, "Exponents i4,..,ik")->delimiter(',');
  add_format(taut, common);

  auto* quantum = app.add_subcommand("quantum", "Quantum product table of P^n to first order in q");
  quantum->add_option("--n", n, "Target dimension")->required();
  add_format(quantum, common);

  std::uint64_t reproduce_seed = 0;
  auto* reproduce = app.add_subcommand("reproduce-paper", "Recompute every reference value");
  auto* reproduce_seed_opt = reproduce->add_option("--seed", reproduce_seed, "Seed for torus samples");
  add_format(reproduce, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*point) return cmd_point(k, common, out);
    if (*taut) return cmd_taut(k, exps, common, out);
    if (*quantum) return cmd_quantum(n, common, out);
    if (*invariant) {
      if (seed_opt->count() == 0) inv.seed = default_seed();
      return cmd_invariant(inv, common, out);
    }
    if (*reproduce) {
      if (reproduce_seed_opt->count() == 0) reproduce_seed = default_seed();
      return cmd_reproduce(reproduce_seed, common, out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kInconsistent;
  } catch (const std::runtime_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInconsistent;
  }
  return kUsage;
}

}  // namespace sgw::cli
