#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "hotspots/bound.hpp"
#include "hotspots/brownian.hpp"
#include "hotspots/constants.hpp"
#include "hotspots/errors.hpp"
#include "hotspots/grid_domain.hpp"
#include "hotspots/heat.hpp"
#include "hotspots/verify.hpp"

namespace hotspots::cli {

namespace {

using Json = nlohmann::ordered_json;

// Every reported number carries 12 significant digits.
std::string format12(double v) {
  if (!std::isfinite(v)) throw NumericalFailure("non-finite value in report");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) { return std::strtod(format12(v).c_str(), nullptr); }

struct Globals {
  bool csv = false;
  std::uint64_t seed = 0x5eed;
  unsigned threads = 1;
};

struct DomainSource {
  std::string gen;
  std::string file;
  std::optional<double> h;
};

void add_domain_options(CLI::App* cmd, DomainSource& src) {
  auto* gen = cmd->add_option("--gen", src.gen, "Generator spec, e.g. disk:1 or dumbbell:1,0.1,0.5,0.25");
  auto* file = cmd->add_option("--domain", src.file, "Mask file (hotspots-mask v1)");
  gen->excludes(file);
  cmd->add_option("--h", src.h, "Grid spacing for --gen");
}

pde::GridDomain load_source(const DomainSource& src) {
  if (!src.gen.empty()) {
    if (!src.h) throw ValidationError("--gen requires --h");
    return pde::make_domain(pde::parse_shape(src.gen), *src.h);
  }
  if (src.file.empty()) throw ValidationError("one of --gen or --domain is required");
  if (src.h) throw ValidationError("--h is taken from the mask file; do not pass it with --domain");
  std::ifstream in(src.file, std::ios::binary);
  if (!in) throw ValidationError("cannot open mask file '" + src.file + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return pde::load_domain(text.str(), src.file);
}

Json domain_json(const pde::GridDomain& dom) {
  return Json{{"name", dom.name()},
              {"nx", dom.nx()},
              {"ny", dom.ny()},
              {"h", round12(dom.h())},
              {"area", round12(dom.area())},
              {"cells", dom.cell_count()},
              {"boundary_cells", dom.boundary_count()}};
}

Json source_inputs(const DomainSource& src) {
  Json in = Json::object();
  if (!src.gen.empty()) in["gen"] = src.gen;
  if (!src.file.empty()) in["domain"] = src.file;
  if (src.h) in["h"] = *src.h;
  return in;
}

Json cell_json(pde::Cell c) { return Json::array({c.i, c.j}); }

Json envelope(const std::string& command, Json inputs, Json results) {
  return Json{{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)},
              {"version", kVersion}};
}

// {d, beta, alpha_d, p_sq, j_first, M, alpha_star, constant_star, constant_ceiling}
Json constant_payload(int d, std::optional<double> beta, std::optional<double> M) {
  const constants::DimensionConstants c = constants::dimension_constants(d);
  const bound::BoundResult r = beta ? bound::general_constant(d, *beta, *M) : bound::hot_spots_constant(d);
  // The theorem-level integer is the ceiling of the reported value.
  const double star = round12(r.constant_star);
  return Json{{"d", d},
              {"beta", round12(r.beta)},
              {"alpha_d", round12(c.alpha_d)},
              {"p_sq", round12(c.p_sq)},
              {"j_first", round12(c.j_first)},
              {"M", round12(r.M)},
              {"feasible_from", round12(r.feasible_from)},
              {"alpha_star", round12(r.alpha_star)},
              {"constant_star", star},
              {"constant_ceiling", static_cast<long long>(std::ceil(star))}};
}

void write_csv(std::ostream& out, const std::vector<std::string>& columns, const Json& rows) {
  for (std::size_t k = 0; k < columns.size(); ++k) out << (k ? "," : "") << columns[k];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      const Json& v = row.at(columns[k]);
      out << (k ? "," : "");
      if (v.is_number_float()) {
        out << format12(v.get<double>());
      } else if (v.is_string()) {
        out << v.get<std::string>();
      } else {
        out << v.dump();
      }
    }
    out << '\n';
  }
}

Json lemma1_json(const pde::Lemma1Report& r) {
  return Json{{"t", round12(r.t)},
              {"survival", round12(r.survival)},
              {"survival_error", round12(r.survival_error)},
              {"rhs", round12(r.rhs)},
              {"slack", round12(r.slack)}};
}

Json hot_spots_json(const pde::HotSpotsReport& r) {
  return Json{{"mu1", round12(r.mu1)},
              {"lambda1", round12(r.lambda1)},
              {"interior_max", round12(r.interior_max)},
              {"domain_max", round12(r.domain_max)},
              {"boundary_max", round12(r.boundary_max)},
              {"ratio", round12(r.ratio)},
              {"bound", round12(r.bound)},
              {"argmax", cell_json(r.argmax)},
              {"mu_lt_lambda", r.mu_lt_lambda},
              {"bound_satisfied", r.bound_satisfied}};
}

struct Outcome {
  Json report;
  // CSV view: column names and rows of report fields.
  std::vector<std::string> csv_columns;
  Json csv_rows = Json::array();
  int exit_code = kSuccess;
  std::string violation;
};

void emit(const Outcome& o, const Globals& g, std::ostream& out) {
  if (g.csv && !o.csv_columns.empty()) {
    write_csv(out, o.csv_columns, o.csv_rows);
  } else {
    out << o.report.dump(2) << '\n';
  }
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
  err << Json{{"error", Json{{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hot-spots constants and grid-domain verification"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  bool json_flag = false;
  auto* json_opt = app.add_flag("--json", json_flag, "Emit JSON (default)");
  app.add_flag("--csv", g.csv, "Emit CSV where the command has a tabular view")->excludes(json_opt);
  app.add_option("--seed", g.seed, "Monte-Carlo seed");
  app.add_option("--threads", g.threads, "Monte-Carlo worker threads")->check(CLI::PositiveNumber);

  // constant
  int c_d = 2;
  std::optional<double> c_beta, c_M;
  auto* constant = app.add_subcommand("constant", "Hot-spots constant for one dimension");
  constant->add_option("-d,--dim", c_d, "Dimension")->required();
  constant->add_option("--beta", c_beta, "Eigenvalue ratio mu/lambda_1 (general mode)");
  constant->add_option("--M", c_M, "Bound on mu |D|^{2/d} (general mode)");

  // table
  int t_min = 2, t_max = 4;
  auto* table = app.add_subcommand("table", "Hot-spots constants over a range of dimensions");
  table->add_option("--dmin", t_min, "First dimension")->required();
  table->add_option("--dmax", t_max, "Last dimension")->required();

  // verify
  DomainSource v_src;
  std::vector<double> v_times{0.01, 0.05, 0.1, 0.5};
  auto* verify = app.add_subcommand("verify", "Eigenpairs, hot-spots ratio and survival-inequality slack on a grid domain");
  add_domain_options(verify, v_src);
  verify->add_option("--t", v_times, "Comma-separated probe times")->delimiter(',');

  // mc
  DomainSource m_src;
  double m_t = 0.1;
  std::size_t m_paths = 100000;
  std::optional<double> m_dt;
  auto* mcmd = app.add_subcommand("mc", "Monte-Carlo survival and survival-inequality check");
  add_domain_options(mcmd, m_src);
  mcmd->add_option("--t", m_t, "Horizon");
  mcmd->add_option("--paths", m_paths, "Number of paths");
  mcmd->add_option("--dt", m_dt, "Time step (default h^2/10)");

  // survival
  DomainSource s_src;
  std::vector<double> s_times{0.05};
  std::vector<int> s_x0;
  auto* survival = app.add_subcommand("survival", "Dirichlet heat-kernel mass from one cell");
  add_domain_options(survival, s_src);
  survival->add_option("--t", s_times, "Comma-separated times")->delimiter(',');
  survival->add_option("--x0", s_x0, "Start cell i,j (default: cell nearest the centroid)")->delimiter(',');

  // gen
  DomainSource g_src;
  std::string g_output;
  auto* gen = app.add_subcommand("gen", "Write a generated domain as a mask file");
  add_domain_options(gen, g_src);
  gen->add_option("-o,--output", g_output, "Output file (default stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    emit_error(err, "invalid_input", e.what(), kInvalidInput);
    return kInvalidInput;
  }

  try {
    Outcome o;
    if (*constant) {
      if (c_beta.has_value() != c_M.has_value()) throw DomainError("--beta and --M must be given together");
      Json inputs{{"d", c_d}};
      if (c_beta) {
        inputs["beta"] = *c_beta;
        inputs["M"] = *c_M;
      }
      Json row = constant_payload(c_d, c_beta, c_M);
      o.csv_columns = {"d", "beta", "alpha_d", "p_sq", "j_first", "M", "alpha_star", "constant_star",
                       "constant_ceiling"};
      o.csv_rows.push_back(row);
      o.report = envelope("constant", std::move(inputs), std::move(row));
    } else if (*table) {
      if (t_min < constants::kMinDimension || t_max > constants::kMaxDimension || t_min > t_max) {
        throw DomainError("table requires 2 <= dmin <= dmax <= 500");
      }
      Json rows = Json::array();
      for (int d = t_min; d <= t_max; ++d) rows.push_back(constant_payload(d, std::nullopt, std::nullopt));
      o.csv_columns = {"d", "alpha_d", "p_sq", "M", "alpha_star", "constant_star"};
      o.csv_rows = rows;
      o.report = envelope("table", Json{{"dmin", t_min}, {"dmax", t_max}}, Json{{"rows", std::move(rows)}});
    } else if (*verify) {
      for (const double t : v_times) {
        if (!(t > 0.0)) throw DomainError("probe times must be positive");
      }
      const pde::GridDomain dom = load_source(v_src);
      const pde::HotSpotsReport hs = pde::hot_spots_report(dom);
      const auto probes = pde::lemma1_check(dom, hs, v_times);
      Json lemma = Json::array();
      bool slack_ok = true;
      for (const auto& p : probes) {
        lemma.push_back(lemma1_json(p));
        o.csv_rows.push_back(lemma.back());
        slack_ok = slack_ok && p.slack >= -pde::kLemma1Tolerance;
      }
      o.csv_columns = {"t", "survival", "survival_error", "rhs", "slack"};
      const bool all = hs.mu_lt_lambda && hs.bound_satisfied && slack_ok;
      Json checks{{"mu_lt_lambda", hs.mu_lt_lambda},
                  {"bound_satisfied", hs.bound_satisfied},
                  {"lemma1_slack", slack_ok},
                  {"slack_tolerance", pde::kLemma1Tolerance},
                  {"all_passed", all}};
      Json inputs = source_inputs(v_src);
      inputs["t"] = v_times;
      o.report = envelope("verify", std::move(inputs),
                          Json{{"domain", domain_json(dom)},
                               {"hot_spots", hot_spots_json(hs)},
                               {"lemma1", std::move(lemma)},
                               {"checks", std::move(checks)}});
      if (!all) {
        o.exit_code = kInvariantViolation;
        o.violation = "verification invariant failed on '" + dom.name() + "'";
      }
    } else if (*mcmd) {
      const pde::GridDomain dom = load_source(m_src);
      mc::WalkConfig cfg;
      cfg.n_paths = m_paths;
      cfg.dt = m_dt.value_or(dom.h() * dom.h() / 10.0);
      cfg.seed = g.seed;
      cfg.t = m_t;
      cfg.threads = g.threads;
      mc::validate(cfg);
      const pde::HotSpotsReport hs = pde::hot_spots_report(dom);
      const mc::McLemma1Report lm = mc::lemma1_mc(dom, hs, m_t, cfg);
      const pde::SurvivalEstimate pde_s = pde::heat_survival(dom, hs.argmax, m_t);
      const double gap = std::abs(lm.probe.survival - pde_s.survival);
      const double allowed = std::max(3.0 * lm.std_error, 0.02 * pde_s.survival);
      Json lemma = lemma1_json(lm.probe);
      lemma["std_error"] = round12(lm.std_error);
      lemma["tolerance"] = round12(lm.tolerance);
      lemma["passed"] = lm.passed;
      Json inputs = source_inputs(m_src);
      inputs["t"] = m_t;
      inputs["paths"] = m_paths;
      inputs["dt"] = cfg.dt;
      inputs["seed"] = g.seed;
      o.csv_columns = {"t", "survival", "survival_error", "rhs", "slack"};
      o.csv_rows.push_back(lemma);
      o.report = envelope(
          "mc", std::move(inputs),
          Json{{"domain", domain_json(dom)},
               {"x0", cell_json(hs.argmax)},
               {"reportable", mc::reportable(cfg)},
               {"mu1", round12(hs.mu1)},
               {"boundary_ratio", round12(hs.boundary_max / hs.domain_max)},
               {"survival_mc", Json{{"mean", round12(lm.probe.survival)},
                                    {"std_error", round12(lm.std_error)},
                                    {"n", cfg.n_paths}}},
               {"survival_pde", Json{{"survival", round12(pde_s.survival)},
                                     {"error_estimate", round12(pde_s.error_estimate)}}},
               {"survival_agreement", Json{{"gap", round12(gap)}, {"allowed", round12(allowed)},
                                           {"within", gap <= allowed}}},
               {"lemma1", std::move(lemma)}});
      if (!lm.passed) {
        o.exit_code = kInvariantViolation;
        o.violation = "Monte-Carlo survival-inequality slack below tolerance";
      }
    } else if (*survival) {
      const pde::GridDomain dom = load_source(s_src);
      pde::Cell x0 = dom.central_cell();
      if (!s_x0.empty()) {
        if (s_x0.size() != 2) throw DomainError("--x0 expects i,j");
        x0 = {s_x0[0], s_x0[1]};
      }
      if (!dom.contains(x0)) throw DomainError("--x0 is not an inside cell");
      Json rows = Json::array();
      for (const double t : s_times) {
        const pde::SurvivalEstimate s = pde::heat_survival(dom, x0, t);
        rows.push_back(Json{{"t", round12(s.t)},
                            {"survival", round12(s.survival)},
                            {"error_estimate", round12(s.error_estimate)},
                            {"method", "pde"}});
      }
      o.csv_columns = {"t", "survival", "error_estimate", "method"};
      o.csv_rows = rows;
      Json inputs = source_inputs(s_src);
      inputs["t"] = s_times;
      o.report = envelope("survival", std::move(inputs),
                          Json{{"domain", domain_json(dom)}, {"x0", cell_json(x0)}, {"rows", std::move(rows)}});
    } else if (*gen) {
      if (g_src.gen.empty()) throw ValidationError("gen requires --gen");
      const pde::GridDomain dom = load_source(g_src);
      const std::string text = dom.to_mask_text();
      if (g_output.empty()) {
        out << text;
        return kSuccess;
      }
      std::ofstream file(g_output, std::ios::binary);
      if (!(file << text)) throw ValidationError("cannot write '" + g_output + "'");
      Json inputs = source_inputs(g_src);
      inputs["output"] = g_output;
      o.report = envelope("gen", std::move(inputs), Json{{"domain", domain_json(dom)}, {"path", g_output}});
    }

    emit(o, g, out);
    if (o.exit_code == kInvariantViolation) emit_error(err, "invariant_violation", o.violation, o.exit_code);
    return o.exit_code;
  } catch (const NumericalFailure& e) {
    emit_error(err, "numerical_failure", e.what(), kNumericalFailure);
    return kNumericalFailure;
  } catch (const std::invalid_argument& e) {
    emit_error(err, "invalid_input", e.what(), kInvalidInput);
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    emit_error(err, "invalid_input", e.what(), kInvalidInput);
    return kInvalidInput;
  }
}

}  // namespace hotspots::cli
