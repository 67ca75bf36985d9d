#include "sfc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "sfc/csv_io.hpp"
#include "sfc/errors.hpp"
#include "sfc/experiments.hpp"
#include "sfc/random.hpp"
#include "sfc/scenario.hpp"
#include "sfc/verification.hpp"

namespace sfc {

namespace {

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "scenario file (key = value)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", opts.seed, "overrides the scenario seed");
  cmd->add_option("--out", opts.out_path, "output CSV (default: stdout)");
}

ScenarioSpec load_spec(const CommonOptions& opts) {
  ScenarioSpec spec =
      opts.config_path.empty() ? ScenarioSpec{} : load_scenario_spec(opts.config_path);
  if (opts.seed) spec.seed = *opts.seed;
  return spec;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write " + path);
  f << text;
  if (!f) throw ValidationError("failed writing " + path);
}

void emit(const std::string& out_path, const std::string& csv,
          const std::string& meta, std::ostream& out) {
  if (out_path.empty()) {
    out << csv;
    return;
  }
  write_file(out_path, csv);
  write_file(out_path + ".meta", meta);
}

std::string meta_header(std::string_view command) {
  std::string text = "# sfc ";
  text += command;
  text += "\n# rng = ";
  text += Rng::kAlgorithm;
  text += "\n";
  return text;
}

// "65:115:5" (inclusive range) or "65,70,80".
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  if (text.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(parse_number(item));
    if (parts.size() < 2 || parts.size() > 3) {
      throw ValidationError("range must be start:stop[:step]");
    }
    const int start = static_cast<int>(parts[0]);
    const int stop = static_cast<int>(parts[1]);
    const int step = parts.size() == 3 ? static_cast<int>(parts[2]) : 1;
    if (step <= 0 || stop < start) throw ValidationError("bad range " + text);
    for (int v = start; v <= stop; v += step) values.push_back(v);
    return values;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const double v = parse_number(item);
    if (v != static_cast<int>(v)) throw ValidationError("not an integer: " + item);
    values.push_back(static_cast<int>(v));
  }
  if (values.empty()) throw ValidationError("empty list");
  return values;
}

int do_simulate(const CommonOptions& opts, std::ostream& out) {
  const ScenarioSpec spec = load_spec(opts);
  const DayTrace trace = run_day(build_scenario(spec));
  std::ostringstream csv;
  write_trace_csv(trace, csv);
  emit(opts.out_path, csv.str(), meta_header("simulate") + to_config_text(spec),
       out);
  return kExitOk;
}

int do_compare(const CommonOptions& opts, const std::string& trace_out,
               std::ostream& out) {
  const ScenarioSpec spec = load_spec(opts);
  const Comparison cmp = run_comparison(build_scenario(spec));
  std::ostringstream csv;
  write_summary(cmp.proposed, cmp.baselines, csv);
  emit(opts.out_path, csv.str(), meta_header("compare") + to_config_text(spec),
       out);
  if (!trace_out.empty()) write_trace_csv(cmp.proposed, trace_out);
  return kExitOk;
}

int do_sweep(const CommonOptions& opts, const std::string& panels,
             const std::string& scenarios, const std::vector<double>& a_ini,
             std::ostream& out) {
  const ScenarioSpec spec = load_spec(opts);
  const auto panel_counts = parse_int_list(panels);
  const auto scenario_ids = parse_int_list(scenarios);
  std::vector<double> a_values = a_ini;
  if (a_values.empty()) a_values.push_back(spec.a_initial);
  const auto points = run_panel_sweep(spec, panel_counts, scenario_ids, a_values);
  std::ostringstream csv;
  write_sweep_csv(points, csv);
  std::string meta = meta_header("sweep");
  meta += "# panels = " + panels + "\n# scenarios = " + scenarios + "\n";
  emit(opts.out_path, csv.str(), meta + to_config_text(spec), out);
  return kExitOk;
}

int do_verify(int instances, double resolution, double tolerance,
              std::uint64_t seed, const std::string& out_path, std::ostream& out) {
  const VerifyReport report =
      verify_closed_forms(instances, resolution, seed, tolerance);
  std::ostringstream csv;
  csv << "case,instances,failures,clamped,max_abs_gap_cents\n";
  for (const auto& c : report.cases) {
    csv << to_string(c.label) << ',' << c.instances << ',' << c.failures << ','
        << c.clamped << ',' << format_number(c.max_abs_gap) << '\n';
  }
  std::string meta = meta_header("verify");
  meta += "instances = " + std::to_string(instances) + "\n";
  meta += "resolution = " + format_number(resolution) + "\n";
  meta += "tolerance = " + format_number(tolerance) + "\n";
  meta += "seed = " + std::to_string(seed) + "\n";
  emit(out_path, csv.str(), meta, out);
  if (!out_path.empty()) {
    out << "verify: " << report.total_failures() << " failures over "
        << 3 * instances << " instances\n";
  }
  return report.total_failures() == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Shared-facility solar/battery dispatch simulator", "sfc"};
  app.require_subcommand(1);

  CommonOptions sim_opts;
  auto* simulate = app.add_subcommand("simulate", "per-slot trace of one day");
  add_common(simulate, sim_opts);

  CommonOptions cmp_opts;
  std::string trace_out;
  auto* compare = app.add_subcommand("compare", "proposed vs baseline schemes");
  add_common(compare, cmp_opts);
  compare->add_option("--trace-out", trace_out, "also write the proposed trace");

  CommonOptions sweep_opts;
  std::string panels = "65:115:5";
  std::string scenarios = "1,2";
  std::vector<double> a_ini;
  auto* sweep = app.add_subcommand("sweep", "savings vs panel count");
  add_common(sweep, sweep_opts);
  sweep->add_option("--panels", panels, "start:stop:step or a,b,c");
  sweep->add_option("--scenarios", scenarios,
                    "household demand multipliers, e.g. 1,2");
  sweep->add_option("--a-ini", a_ini, "initial VC coefficients")->delimiter(',');

  int instances = 1000;
  double resolution = 1e-3;
  double tolerance = 1e-3;
  std::uint64_t verify_seed = 1;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "closed form vs brute force");
  verify->add_option("--instances", instances, "instances per case")
      ->check(CLI::PositiveNumber);
  verify->add_option("--resolution", resolution, "grid step in kWh")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tolerance", tolerance, "allowed cost gap in cents")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_seed, "instance generator seed");
  verify->add_option("--out", verify_out, "output CSV (default: stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) return do_simulate(sim_opts, out);
    if (*compare) return do_compare(cmp_opts, trace_out, out);
    if (*sweep) return do_sweep(sweep_opts, panels, scenarios, a_ini, out);
    if (*verify) {
      return do_verify(instances, resolution, tolerance, verify_seed,
                       verify_out, out);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace sfc
