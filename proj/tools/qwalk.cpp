// Command-line front end: evolves walks, emits expectation series, phase
// sweeps and sequence screens as plot-ready CSV.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qwalk/analysis.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/kernels.hpp"
#include "qwalk/sweep.hpp"
#include "qwalk/walker_state.hpp"

namespace {

struct Options {
  std::string sequence = "AB";
  double alpha = 0.0;
  double beta = 0.0;
  int steps = 100;
  int max_len = 4;
  double alpha_min = 0.0, alpha_max = 0.2;
  double beta_min = 0.0, beta_max = 0.2;
  int n_alpha = 81, n_beta = 81;
  std::string out_path;
  int threads = 0;
  std::string kernel = "auto";
  int precision = 12;
};

std::string fmt(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
  return buf;
}

void warn_if_outside_canonical_range(const char* name, double value) {
  if (std::abs(value) > std::numbers::pi / 2) {
    std::cerr << "warning: " << name << " = " << value
              << " lies outside the canonical range [-pi/2, pi/2]; the sign "
                 "convention (positive phase walks left) no longer applies\n";
  }
}

// CSV goes to --out when given, otherwise to stdout. The human-readable
// summary goes to the channel the CSV does not occupy.
struct Output {
  std::ofstream file;
  bool to_file = false;

  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) {
        throw std::runtime_error("cannot open output file: " + path);
      }
      to_file = true;
    }
  }

  std::ostream& csv() { return to_file ? file : std::cout; }
  std::ostream& summary() { return to_file ? std::cout : std::cerr; }

  void finish(const std::string& path) {
    if (to_file) {
      file.flush();
      if (!file) {
        throw std::runtime_error("write failed: " + path);
      }
    }
  }
};

int run_evolve(const Options& opt) {
  const qwalk::GameSequence seq = qwalk::GameSequence::parse(opt.sequence);
  warn_if_outside_canonical_range("alpha", opt.alpha);
  warn_if_outside_canonical_range("beta", opt.beta);
  const qwalk::WalkerState state =
      qwalk::evolve(qwalk::standard_initial_state(), seq,
                    {opt.alpha, opt.beta}, opt.steps);

  Output out(opt.out_path);
  out.csv() << "x,prob\n";
  for (const auto& [x, p] : qwalk::position_distribution(state)) {
    out.csv() << x << ',' << fmt(p, opt.precision) << '\n';
  }
  out.finish(opt.out_path);
  out.summary() << "t=" << state.t << " exp_x="
                << fmt(qwalk::expectation_position(state), opt.precision)
                << " norm=" << fmt(qwalk::norm_squared(state), opt.precision)
                << '\n';
  return 0;
}

int run_series(const Options& opt) {
  const qwalk::GameSequence seq = qwalk::GameSequence::parse(opt.sequence);
  warn_if_outside_canonical_range("alpha", opt.alpha);
  warn_if_outside_canonical_range("beta", opt.beta);
  const auto series =
      qwalk::expectation_series(seq, {opt.alpha, opt.beta}, opt.steps);

  Output out(opt.out_path);
  out.csv() << "t,exp_x\n";
  for (const auto& [t, v] : series) {
    out.csv() << t << ',' << fmt(v, opt.precision) << '\n';
  }
  out.finish(opt.out_path);

  const qwalk::SeriesDiagnostics diag = qwalk::diagnose(series);
  std::ostream& sum = out.summary();
  sum << "slope=" << fmt(diag.linear_trend_slope, 6);
  if (diag.last_positive_step) {
    sum << " last_positive_step=" << *diag.last_positive_step;
  }
  if (diag.dominant_period) {
    sum << " dominant_period=" << fmt(*diag.dominant_period, 6);
  }
  sum << " ripple_rms=" << fmt(diag.short_period_residual_rms, 6) << '\n';
  return 0;
}

int run_sweep(const Options& opt) {
  qwalk::SweepGrid grid;
  grid.alpha_min = opt.alpha_min;
  grid.alpha_max = opt.alpha_max;
  grid.beta_min = opt.beta_min;
  grid.beta_max = opt.beta_max;
  grid.n_alpha = opt.n_alpha;
  grid.n_beta = opt.n_beta;
  grid.sequence = qwalk::GameSequence::parse(opt.sequence);
  grid.steps = opt.steps;
  grid.validate();

  const qwalk::SweepResult result = qwalk::sweep(grid, opt.threads);

  Output out(opt.out_path);
  out.csv() << "alpha,beta,exp_x\n";
  for (int i = 0; i < grid.n_alpha; ++i) {
    for (int j = 0; j < grid.n_beta; ++j) {
      out.csv() << fmt(grid.alpha_at(i), opt.precision) << ','
                << fmt(grid.beta_at(j), opt.precision) << ','
                << fmt(result.at(i, j), opt.precision) << '\n';
    }
  }
  out.finish(opt.out_path);

  const auto winners = qwalk::positive_region(result);
  out.summary() << "positive cells: " << winners.size() << " of "
                << result.values.size() << '\n';
  return 0;
}

int run_screen(const Options& opt) {
  qwalk::SweepGrid proto;
  proto.alpha_min = opt.alpha_min;
  proto.alpha_max = opt.alpha_max;
  proto.beta_min = opt.beta_min;
  proto.beta_max = opt.beta_max;
  proto.n_alpha = opt.n_alpha;
  proto.n_beta = opt.n_beta;
  proto.steps = opt.steps;
  proto.sequence = qwalk::GameSequence{"A"};  // replaced per entry

  const auto entries =
      qwalk::parrondo_screen(opt.max_len, proto, opt.threads);

  Output out(opt.out_path);
  out.csv() << "sequence,steps,max_exp_x,has_positive\n";
  for (const auto& entry : entries) {
    out.csv() << entry.sequence.letters << ',' << entry.steps << ','
              << fmt(entry.max_exp_x, opt.precision) << ','
              << (entry.has_positive ? "true" : "false") << '\n';
  }
  out.finish(opt.out_path);

  std::ostream& sum = out.summary();
  sum << "positive sequences:";
  bool any = false;
  for (const auto& entry : entries) {
    if (entry.has_positive) {
      sum << ' ' << entry.sequence.letters;
      any = true;
    }
  }
  if (!any) {
    sum << " none";
  }
  sum << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"discrete-time quantum walk simulator with phase-biased coin "
               "games"};
  app.require_subcommand(1);

  auto add_shared = [&](CLI::App* cmd, bool wants_sequence) {
    if (wants_sequence) {
      cmd->add_option("--sequence", opt.sequence,
                      "periodic game word over {A,B}, e.g. AB or ABB")
          ->required();
    }
    cmd->add_option("--out", opt.out_path,
                    "output CSV path (default: stdout)");
    cmd->add_option("--threads", opt.threads,
                    "worker threads for sweeps (0 = all cores, 1 = serial)");
    cmd->add_option("--kernel", opt.kernel,
                    "step kernel: auto, scalar, or a SIMD variant");
    cmd->add_option("--precision", opt.precision,
                    "significant digits in CSV output")
        ->check(CLI::Range(1, 17));
  };
  auto add_phases = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", opt.alpha, "phase of game A, radians");
    cmd->add_option("--beta", opt.beta, "phase of game B, radians");
  };
  auto add_grid = [&](CLI::App* cmd) {
    cmd->add_option("--alpha-min", opt.alpha_min, "grid lower alpha bound");
    cmd->add_option("--alpha-max", opt.alpha_max, "grid upper alpha bound");
    cmd->add_option("--beta-min", opt.beta_min, "grid lower beta bound");
    cmd->add_option("--beta-max", opt.beta_max, "grid upper beta bound");
    cmd->add_option("--n-alpha", opt.n_alpha, "grid points on the alpha axis");
    cmd->add_option("--n-beta", opt.n_beta, "grid points on the beta axis");
  };

  CLI::App* evolve = app.add_subcommand(
      "evolve", "evolve one walk and emit the position distribution");
  add_shared(evolve, true);
  add_phases(evolve);
  evolve->add_option("--steps", opt.steps, "number of time steps")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* series = app.add_subcommand(
      "series", "emit <x>(t) for t = 1..steps");
  add_shared(series, true);
  add_phases(series);
  series->add_option("--steps", opt.steps, "number of time steps")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "grid sweep of <x> over (alpha, beta)");
  add_shared(sweep_cmd, true);
  add_grid(sweep_cmd);
  sweep_cmd->add_option("--steps", opt.steps, "number of time steps")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* screen = app.add_subcommand(
      "screen", "sweep every canonical sequence and flag winners");
  add_shared(screen, false);
  add_grid(screen);
  screen->add_option("--steps", opt.steps,
                     "base step count; each sequence runs the largest "
                     "multiple of its period below this")
      ->check(CLI::PositiveNumber);
  screen->add_option("--max-len", opt.max_len,
                     "screen sequences of period up to this length")
      ->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!qwalk::kernels::set_active_kernel(opt.kernel)) {
      std::ostringstream msg;
      msg << "unknown or unsupported kernel '" << opt.kernel
          << "'; available:";
      for (const auto& k : qwalk::kernels::available_kernels()) {
        if (qwalk::kernels::supported(k.name)) {
          msg << ' ' << k.name;
        }
      }
      msg << " auto";
      throw std::invalid_argument(msg.str());
    }

    if (evolve->parsed()) {
      return run_evolve(opt);
    }
    if (series->parsed()) {
      return run_series(opt);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep(opt);
    }
    return run_screen(opt);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
