// kendall: command line front end for the Kendall random walk library.
//
// Subcommands: simulate, renewal, pmf, asymptotics, limit-law, verify,
// catalog.  Numeric output uses 17 significant digits; CSV always carries a
// header row and JSON mirrors the CSV content as an array of objects.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kendall/asymptotics.hpp"
#include "kendall/catalog.hpp"
#include "kendall/errors.hpp"
#include "kendall/renewal.hpp"
#include "kendall/stats.hpp"
#include "kendall/verify.hpp"
#include "kendall/walk.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParameter = 3;
constexpr int kExitInput = 4;
constexpr int kExitDivergence = 5;
constexpr int kExitIntegration = 6;
constexpr int kExitRunaway = 7;
constexpr int kExitVerifyFailed = 8;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Cell {
  std::string text;
  bool numeric = false;
  bool boolean = false;
  double number = 0.0;
  bool truth = false;
};

Cell num_cell(double v) {
  Cell c;
  c.text = fmt17(v);
  c.numeric = true;
  c.number = v;
  return c;
}

Cell int_cell(long long v) {
  Cell c;
  c.text = std::to_string(v);
  c.numeric = true;
  c.number = static_cast<double>(v);
  return c;
}

Cell text_cell(std::string s) {
  Cell c;
  c.text = std::move(s);
  return c;
}

Cell bool_cell(bool v) {
  Cell c;
  c.text = v ? "true" : "false";
  c.boolean = true;
  c.truth = v;
  return c;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

void emit_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) os << ",";
    os << csv_escape(table.header[i]);
  }
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << csv_escape(row[i].text);
    }
    os << "\n";
  }
}

void emit_json(std::ostream& os, const Table& table) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < table.header.size(); ++i) {
      if (row[i].numeric) {
        obj[table.header[i]] = row[i].number;
      } else if (row[i].boolean) {
        obj[table.header[i]] = row[i].truth;
      } else {
        obj[table.header[i]] = row[i].text;
      }
    }
    arr.push_back(obj);
  }
  os << arr.dump(2) << "\n";
}

void emit(const Table& table, const std::string& format, const std::string& output) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw kendall::input_error("cannot open output file '" + output + "'");
    os = &file;
  }
  if (format == "json") {
    emit_json(*os, table);
  } else {
    emit_csv(*os, table);
  }
}

kendall::StepDistribution resolve_dist(const std::string& name,
                                       const std::optional<double>& beta, double alpha) {
  std::vector<double> params;
  if (beta) params.push_back(*beta);
  return kendall::catalog_lookup(name, params, alpha);
}

const char* kExitTable =
    "Exit codes:\n"
    "  0  success (verify: every criterion passed)\n"
    "  1  internal error\n"
    "  2  usage error (unknown flag, missing required option)\n"
    "  3  invalid parameter (unknown distribution, bad alpha/beta)\n"
    "  4  invalid input value\n"
    "  5  divergent quantity requested (G(t) = 1 pole, zero mass)\n"
    "  6  quadrature failed to reach its error target\n"
    "  7  simulation exceeded max_steps without crossing the level\n"
    "  8  verification suite had a failing criterion\n"
    "\n"
    "A config file (--config FILE, before the subcommand) holds flat\n"
    "key=value lines whose keys mirror flag names prefixed by the subcommand\n"
    "(e.g. renewal.alpha=1); command-line flags override file values.\n";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kendall random walk toolkit: renewal analysis, simulation and verification"};
  app.footer(kExitTable);
  app.set_config("--config", "", "Flat key=value config file; flags override file values");
  app.require_subcommand(1);

  std::string format = "csv";
  std::string output;
  app.add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", output, "Write output to a file instead of stdout");

  // simulate ----------------------------------------------------------------
  auto* simulate = app.add_subcommand("simulate", "Sample walk paths S_1..S_n as CSV/JSON");
  std::string sim_dist;
  std::optional<double> sim_beta;
  double sim_alpha = 1.0;
  int sim_n = 1;
  long long sim_paths = 1;
  std::uint64_t sim_seed = 0;
  simulate->add_option("--dist", sim_dist, "Step distribution name")->required();
  simulate->add_option("--beta", sim_beta, "Tail parameter for pareto / student_like");
  simulate->add_option("--alpha", sim_alpha, "Stability index alpha > 0")->required();
  simulate->add_option("--n", sim_n, "Steps per path")->required();
  simulate->add_option("--paths", sim_paths, "Number of independent paths")->required();
  simulate->add_option("--seed", sim_seed, "Base RNG seed (mandatory for reproducibility)")
      ->required();

  // renewal -----------------------------------------------------------------
  auto* renewal = app.add_subcommand("renewal", "Evaluate R, EN^2, VarN on a t-grid");
  std::string ren_dist;
  std::optional<double> ren_beta;
  double ren_alpha = 1.0;
  double ren_tmin = 0.0;
  double ren_tmax = 0.0;
  int ren_points = 2;
  bool ren_geometric = false;
  renewal->add_option("--dist", ren_dist, "Step distribution name")->required();
  renewal->add_option("--beta", ren_beta, "Tail parameter for pareto / student_like");
  renewal->add_option("--alpha", ren_alpha, "Stability index alpha > 0")->required();
  renewal->add_option("--tmin", ren_tmin, "Grid start")->required();
  renewal->add_option("--tmax", ren_tmax, "Grid end")->required();
  renewal->add_option("--points", ren_points, "Grid size (>= 2)")->required();
  renewal->add_flag("--geometric", ren_geometric, "Log-spaced grid instead of linear");

  // pmf ---------------------------------------------------------------------
  auto* pmf = app.add_subcommand("pmf", "Counting-process pmf P{N(t)=n} for n = 0..nmax");
  std::string pmf_dist;
  std::optional<double> pmf_beta;
  double pmf_alpha = 1.0;
  double pmf_t = 1.0;
  int pmf_nmax = 10;
  pmf->add_option("--dist", pmf_dist, "Step distribution name")->required();
  pmf->add_option("--beta", pmf_beta, "Tail parameter for pareto / student_like");
  pmf->add_option("--alpha", pmf_alpha, "Stability index alpha > 0")->required();
  pmf->add_option("--t", pmf_t, "Level t > 0")->required();
  pmf->add_option("--nmax", pmf_nmax, "Largest n to report")->required();

  // asymptotics ---------------------------------------------------------------
  auto* asym = app.add_subcommand(
      "asymptotics", "Finite-x asymptotic ratios against their theoretical limits");
  std::string asym_dist;
  std::optional<double> asym_beta;
  double asym_alpha = 1.0;
  double asym_x = 100.0;
  double asym_h = 1.0;
  asym->add_option("--dist", asym_dist, "Step distribution name")->required();
  asym->add_option("--beta", asym_beta, "Tail parameter for pareto / student_like");
  asym->add_option("--alpha", asym_alpha, "Stability index alpha > 0")->required();
  asym->add_option("--x", asym_x, "Evaluation point")->required();
  asym->add_option("--window", asym_h, "Blackwell window h > 0")->capture_default_str();

  // limit-law -----------------------------------------------------------------
  auto* law = app.add_subcommand(
      "limit-law", "Simulate Gbar(t) N(t) and compare with the gamma-mixture limit");
  std::string law_dist;
  std::optional<double> law_beta;
  double law_alpha = 1.0;
  double law_t = 100.0;
  long long law_sims = 10000;
  std::uint64_t law_seed = 0;
  int law_threads = 0;
  law->add_option("--dist", law_dist, "Step distribution name")->required();
  law->add_option("--beta", law_beta, "Tail parameter for pareto / student_like");
  law->add_option("--alpha", law_alpha, "Stability index alpha > 0")->required();
  law->add_option("--t", law_t, "Level t > 0")->required();
  law->add_option("--sims", law_sims, "Number of simulated paths")->required();
  law->add_option("--seed", law_seed, "Base RNG seed (mandatory for reproducibility)")
      ->required();
  law->add_option("--threads", law_threads, "Worker threads (0 = hardware)")
      ->capture_default_str();

  // verify --------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Run an acceptance suite; exit 0 iff all pass");
  std::string verify_suite = "all";
  std::optional<std::string> verify_dist;
  std::optional<double> verify_alpha;
  std::optional<double> verify_beta;
  int verify_threads = 0;
  verify->add_option("--suite", verify_suite,
                     "closedform|series|williamson|simulator|pair|fredholm|moments|"
                     "elementary|blackwell|limitlaw|snscaling|pgf|all")
      ->capture_default_str();
  verify->add_option("--dist", verify_dist, "Restrict catalog iteration to one law");
  verify->add_option("--alpha", verify_alpha, "Restrict iterated alphas to one value");
  verify->add_option("--beta", verify_beta, "Tail parameter override for pareto / student_like");
  verify->add_option("--threads", verify_threads, "Worker threads (0 = hardware)")
      ->capture_default_str();

  // catalog -------------------------------------------------------------------
  auto* catalog = app.add_subcommand("catalog", "List step distributions and parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) {
      kendall::WalkConfig cfg;
      cfg.alpha = sim_alpha;
      cfg.step = resolve_dist(sim_dist, sim_beta, sim_alpha);
      cfg.seed = sim_seed;
      Table table;
      table.header = {"path_id", "step_index", "value"};
      for (long long p = 0; p < sim_paths; ++p) {
        const kendall::WalkPath path =
            kendall::sample_path(cfg, sim_n, static_cast<std::uint64_t>(p));
        for (std::size_t k = 0; k < path.values.size(); ++k) {
          table.rows.push_back({int_cell(p), int_cell(static_cast<long long>(k) + 1),
                                num_cell(path.values[k])});
        }
      }
      emit(table, format, output);
      return kExitOk;
    }

    if (*renewal) {
      const kendall::StepDistribution dist = resolve_dist(ren_dist, ren_beta, ren_alpha);
      const std::vector<double> grid =
          ren_geometric ? kendall::geometric_grid(ren_tmin, ren_tmax, ren_points)
                        : kendall::linear_grid(ren_tmin, ren_tmax, ren_points);
      Table table;
      table.header = {"t", "R", "EN2", "VarN"};
      for (double t : grid) {
        const kendall::RenewalEval e = kendall::renewal_moments(dist, ren_alpha, t);
        table.rows.push_back({num_cell(e.t), num_cell(e.R), num_cell(e.EN2),
                              num_cell(e.VarN)});
      }
      emit(table, format, output);
      return kExitOk;
    }

    if (*pmf) {
      const kendall::StepDistribution dist = resolve_dist(pmf_dist, pmf_beta, pmf_alpha);
      if (pmf_nmax < 0) throw kendall::input_error("pmf: nmax must be nonnegative");
      Table table;
      table.header = {"n", "pmf"};
      for (int n = 0; n <= pmf_nmax; ++n) {
        table.rows.push_back(
            {int_cell(n), num_cell(kendall::counting_pmf(dist, pmf_alpha, pmf_t, n))});
      }
      emit(table, format, output);
      return kExitOk;
    }

    if (*asym) {
      const kendall::StepDistribution dist = resolve_dist(asym_dist, asym_beta, asym_alpha);
      const auto reports = kendall::asymptotics_suite(dist, asym_alpha, asym_x, asym_h);
      Table table;
      table.header = {"quantity", "x", "finite", "limit", "rel_error"};
      for (const kendall::AsymptoticsReport& r : reports) {
        table.rows.push_back({text_cell(r.quantity), num_cell(r.x), num_cell(r.finite_value),
                              num_cell(r.limit_value), num_cell(r.rel_error)});
      }
      emit(table, format, output);
      return kExitOk;
    }

    if (*law) {
      kendall::WalkConfig cfg;
      cfg.alpha = law_alpha;
      cfg.step = resolve_dist(law_dist, law_beta, law_alpha);
      cfg.seed = law_seed;
      const kendall::LimitLawResult res =
          kendall::limit_law_simulation(cfg, law_t, law_sims, law_threads);
      Table table;
      table.header = {"metric", "value"};
      table.rows.push_back({text_cell("mean"), num_cell(res.mean)});
      table.rows.push_back({text_cell("variance"), num_cell(res.variance)});
      table.rows.push_back({text_cell("ks"), num_cell(res.ks)});
      table.rows.push_back({text_cell("mixture_weight"), num_cell(res.mixture_weight)});
      table.rows.push_back({text_cell("gbar"), num_cell(res.gbar)});
      table.rows.push_back({text_cell("n_sims"), int_cell(res.n_sims)});
      emit(table, format, output);
      return kExitOk;
    }

    if (*verify) {
      kendall::VerifyOptions opts;
      opts.dist = verify_dist;
      opts.alpha = verify_alpha;
      opts.beta = verify_beta;
      opts.n_threads = verify_threads;
      const auto results = kendall::run_suite(verify_suite, opts);
      Table table;
      table.header = {"id", "name", "pass", "seconds", "detail"};
      bool all_pass = true;
      for (const kendall::CriterionResult& r : results) {
        all_pass = all_pass && r.pass;
        table.rows.push_back({int_cell(r.id), text_cell(r.name), bool_cell(r.pass),
                              num_cell(r.seconds), text_cell(r.detail)});
      }
      emit(table, format, output);
      return all_pass ? kExitOk : kExitVerifyFailed;
    }

    if (*catalog) {
      Table table;
      table.header = {"name", "parameters", "description"};
      for (const kendall::CatalogEntryInfo& e : kendall::catalog_entries()) {
        std::string params;
        for (std::size_t i = 0; i < e.param_names.size(); ++i) {
          if (i) params += " ";
          params += e.param_names[i];
        }
        table.rows.push_back({text_cell(e.name), text_cell(params), text_cell(e.description)});
      }
      emit(table, format, output);
      return kExitOk;
    }
  } catch (const kendall::parameter_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const kendall::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const kendall::divergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const kendall::integration_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIntegration;
  } catch (const kendall::runaway_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRunaway;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
