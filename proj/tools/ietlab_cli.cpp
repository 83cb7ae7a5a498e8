#include <CLI11.hpp>

#include <exception>
#include <iostream>

#include "ietlab/kernels.hpp"
#include "ietlab/report.hpp"

namespace {

using ietlab::report::RunConfig;

void add_schedule_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--n", cfg.n, "number of intervals")->capture_default_str();
  cmd->add_option("--p", cfg.p, "schedule ratio p (needs p >= n+1)")->capture_default_str();
  cmd->add_option("--c1", cfg.c1, "first schedule constant c_1 (needs c_1 > p; default p^2)");
  cmd->add_option("--m", cfg.m, "truncation depth (number of cycles)")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "json or csv")->capture_default_str();
  cmd->add_option("--out", cfg.out, "output file (default stdout); written atomically");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact laboratory for a non-uniquely ergodic IET family"};
  app.require_subcommand(1);
  RunConfig cfg;
  bool serial = false;
  app.add_flag("--serial", serial, "use the serial reference kernels instead of OpenMP");

  auto* family = app.add_subcommand("family", "closed-form transition matrix and its path oracle");
  family->add_option("--n", cfg.n, "number of intervals (>= 4)")->capture_default_str();
  family->add_option("--a", cfg.a, "loop exponent a")->capture_default_str();
  family->add_option("--c", cfg.c, "cycle exponent c")->capture_default_str();
  add_output_flags(family, cfg);

  auto* induce = app.add_subcommand("induce", "realize the truncated IET's induction word");
  add_schedule_flags(induce, cfg);
  induce->add_option("--max-runs", cfg.max_runs, "accelerated-run limit (default: expected runs + 8)");
  add_output_flags(induce, cfg);

  auto* measures = app.add_subcommand("measures", "truncated invariant measures and return times");
  add_schedule_flags(measures, cfg);
  measures->add_option("--K", cfg.K, "deepest level reported (default m)");
  measures->add_option("--i", cfg.i, "first seed of a single distance row");
  measures->add_option("--j", cfg.j, "second seed of a single distance row");
  add_output_flags(measures, cfg);

  auto* lemmas = app.add_subcommand("lemmas", "exact lemma suite L1-L12");
  add_schedule_flags(lemmas, cfg);
  lemmas->add_option("--K", cfg.K, "deepest level checked (default m-2)");
  lemmas->add_flag("--escalate", cfg.escalate, "also sweep p over n+1, 2n, 4n, 8n, 16n with c_1 = p^2");
  add_output_flags(lemmas, cfg);

  auto* dimension = app.add_subcommand("dimension", "dimension estimate series for a pair of measures");
  add_schedule_flags(dimension, cfg);
  dimension->add_option("--i", cfg.i, "measured label i")->required();
  dimension->add_option("--j", cfg.j, "metric label j")->required();
  dimension->add_option("--K", cfg.K, "deepest level (default m-2)");
  dimension->add_option("--window", cfg.window, "tail-min window (default ceil(K/3))");
  add_output_flags(dimension, cfg);

  auto* oracle = app.add_subcommand("oracle", "visit-count oracle against matrix columns");
  add_schedule_flags(oracle, cfg);
  oracle->add_option("--K", cfg.K, "deepest level iterated (default 1)");
  oracle->add_option("--i", cfg.i, "single label (default all)");
  add_output_flags(oracle, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  ietlab::kernels::set_backend(serial ? ietlab::kernels::Backend::Serial : ietlab::kernels::Backend::OpenMP);

  try {
    const auto result = ietlab::report::run_command(cfg);
    if (cfg.out.empty()) {
      std::cout << result.text;
    } else {
      ietlab::report::write_atomic(cfg.out, result.text);
    }
    return result.exit_code;
  } catch (const ietlab::report::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
