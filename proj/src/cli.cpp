#include "sinc_expdecay/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "sinc_expdecay/conformal_maps.hpp"
#include "sinc_expdecay/csv.hpp"
#include "sinc_expdecay/lemma_verification.hpp"
#include "sinc_expdecay/testbed.hpp"

namespace sinc::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string example_id = "f1";
  std::string map = "both";
  int n_min = 2;
  int n_max = 100;
  int n_step = 2;
  std::string out;
  double d = 1.0;
  int domain_samples = 400;
  int verify_samples = 100000;
  double x_min = -10.0;
  double x_max = 10.0;
  std::uint64_t seed = 42;
};

// Thrown for flag combinations CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<MapKind> selected_maps(const std::string& selector) {
  if (selector == "both") return {MapKind::ArcsinhMap, MapKind::LogisticLogMap};
  return {*parse_map_kind(selector)};
}

// Opens `path` for writing, creating missing parent directories.
std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return file;
}

fs::path csv_path(const std::string& prefix, MapKind kind) {
  return fs::path(prefix + "_" + std::string(short_name(kind)) + ".csv");
}

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<int> ns = [&] {
    try {
      return n_range(cfg.n_min, cfg.n_max, cfg.n_step);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const ExampleFunction ex = example(*parse_example_id(cfg.example_id));
  const bool to_stdout = cfg.out == "-";
  std::ostream& summary = to_stdout ? err : out;

  for (MapKind kind : selected_maps(cfg.map)) {
    std::vector<ErrorReport> reports;
    try {
      reports = convergence_sweep(ex, kind, ns);
    } catch (const SweepError& e) {
      err << "run: " << short_name(ex.id) << "/" << short_name(kind) << " failed at n = " << e.n() << ": "
          << e.what() << '\n';
      return kExitFailure;
    }
    if (to_stdout) {
      write_csv(out, reports);
    } else {
      std::ofstream file = open_output(csv_path(cfg.out, kind));
      write_csv(file, reports);
    }
    const ErrorReport& last = reports.back();
    summary << short_name(ex.id) << ' ' << short_name(kind) << ": n = " << last.n
            << ", observed = " << format_real(last.observed_error) << ", bound = " << format_real(last.bound)
            << '\n';
  }
  return kExitOk;
}

int cmd_domain(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const MapKind kind = *parse_map_kind(cfg.map);
  if (!admissible_width(kind, cfg.d)) {
    throw UsageError("--d " + format_real(cfg.d) + " is outside the admissible range for the " +
                     std::string(short_name(kind)) + " map");
  }
  if (cfg.domain_samples < 2) throw UsageError("--samples must be at least 2");
  if (!(cfg.x_min < cfg.x_max)) throw UsageError("--x-min must be below --x-max");
  BoundaryCurve curve;
  try {
    curve = domain_boundary(kind, cfg.d, cfg.x_min, cfg.x_max, cfg.domain_samples);
  } catch (const SingularPointError& e) {
    err << "domain: " << e.what() << '\n';
    return kExitFailure;
  }
  if (cfg.out == "-") {
    write_csv(out, curve);
  } else {
    std::ofstream file = open_output(cfg.out);
    write_csv(file, curve);
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.verify_samples < 1) throw UsageError("--samples must be at least 1");
  const auto samples = static_cast<std::size_t>(cfg.verify_samples);
  std::vector<SampleReport> reports = {
      check_essential_inequality(samples, cfg.seed),
      check_real_line_bound(samples, cfg.seed),
      check_p_nonneg(samples, cfg.seed),
      check_exp_bound(samples, cfg.seed),
  };
  for (ExampleId id : kAllExamples) {
    for (MapKind kind : kAllMapKinds) reports.push_back(check_decay_condition(id, kind, samples, cfg.seed));
  }

  std::ofstream file;
  if (cfg.out != "-") file = open_output(cfg.out);
  std::ostream& sink = cfg.out == "-" ? out : file;
  write_csv_header(sink);
  bool all_passed = true;
  for (const SampleReport& r : reports) {
    write_csv_row(sink, r);
    all_passed = all_passed && r.passed;
  }
  return all_passed ? kExitOk : kExitFailure;
}

std::string plot_script(ExampleId id, const std::vector<MapKind>& kinds, const std::string& stem) {
  std::string s;
  s += "# Observed maximum error (solid) and a-priori bound (dotted) for " + std::string(short_name(id)) + "\n";
  s += "set datafile separator ','\n";
  s += "set terminal pngcairo size 800,600\n";
  s += "set output '" + stem + ".png'\n";
  s += "set logscale y\n";
  s += "set format y '10^{%L}'\n";
  s += "set xlabel 'n'\n";
  s += "set ylabel 'maximum absolute error'\n";
  s += "set key top right\n";
  s += "plot";
  int color = 1;
  bool first = true;
  for (MapKind kind : kinds) {
    const std::string csv = stem + "_" + std::string(short_name(kind)) + ".csv";
    const std::string tag = std::string(short_name(kind));
    const std::string lc = " lc " + std::to_string(color++);
    s += first ? " " : ", \\\n     ";
    first = false;
    s += "'" + csv + "' skip 1 using 1:5 with linespoints dt 1" + lc + " title 'observed error (" + tag + ")'";
    s += ", \\\n     '" + csv + "' skip 1 using 1:6 with lines dt 3" + lc + " title 'error bound (" + tag + ")'";
  }
  s += "\n";
  return s;
}

int cmd_plotscript(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ExampleId id = *parse_example_id(cfg.example_id);
  const std::vector<MapKind> kinds = selected_maps(cfg.map);
  for (MapKind kind : kinds) {
    const fs::path csv = csv_path(cfg.out, kind);
    if (!fs::exists(csv)) {
      err << "plotscript: missing sweep CSV " << csv.string() << '\n';
      return kExitFailure;
    }
  }
  const fs::path prefix(cfg.out);
  const std::string script = plot_script(id, kinds, prefix.filename().string());
  const fs::path script_path = fs::path(cfg.out + ".gp");
  std::ofstream file = open_output(script_path);
  file << script;
  out << "wrote " << script_path.string() << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sinc approximation on the semi-infinite interval: sweeps, domains, lemma checks",
               "sinc-expdecay"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto example_check = CLI::IsMember({"f1", "f2", "f3"});
  const auto map_check = CLI::IsMember({"psi", "phi", "both"});

  CLI::App* run_cmd = app.add_subcommand("run", "Convergence sweep; writes <out>_psi.csv / <out>_phi.csv");
  run_cmd->add_option("--example", cfg.example_id, "f1, f2 or f3")->required()->check(example_check);
  run_cmd->add_option("--map", cfg.map, "psi, phi or both")->check(map_check);
  run_cmd->add_option("--n-min", cfg.n_min);
  run_cmd->add_option("--n-max", cfg.n_max);
  run_cmd->add_option("--n-step", cfg.n_step);
  run_cmd->add_option("--out", cfg.out, "Output prefix, or - for standard output")->required();

  CLI::App* domain_cmd = app.add_subcommand("domain", "Trace the image of the strip boundary");
  domain_cmd->add_option("--map", cfg.map, "psi or phi")->required()->check(CLI::IsMember({"psi", "phi"}));
  domain_cmd->add_option("--d", cfg.d, "Strip half-width");
  domain_cmd->add_option("--samples", cfg.domain_samples, "Number of boundary points")->capture_default_str();
  domain_cmd->add_option("--x-min", cfg.x_min);
  domain_cmd->add_option("--x-max", cfg.x_max);
  domain_cmd->add_option("--out", cfg.out, "CSV path, or - for standard output")->default_val("-");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Sample the inequality lemmas and decay conditions");
  verify_cmd->add_option("--samples", cfg.verify_samples, "Random samples per check")->capture_default_str();
  verify_cmd->add_option("--seed", cfg.seed)->default_val(42);
  verify_cmd->add_option("--out", cfg.out, "CSV path, or - for standard output")->default_val("-");

  CLI::App* plot_cmd = app.add_subcommand("plotscript", "Write a gnuplot script for sweep CSVs");
  plot_cmd->add_option("--example", cfg.example_id)->required()->check(example_check);
  plot_cmd->add_option("--map", cfg.map)->check(map_check);
  plot_cmd->add_option("--out", cfg.out, "Prefix the CSVs were written with")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*run_cmd) return cmd_run(cfg, out, err);
    if (*domain_cmd) return cmd_domain(cfg, out, err);
    if (*verify_cmd) return cmd_verify(cfg, out);
    return cmd_plotscript(cfg, out, err);
  } catch (const UsageError& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace sinc::cli
