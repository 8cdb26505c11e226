#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "levyflow/serialize.hpp"
#include "levyflow/toml_mini.hpp"
#include "levyflow/verify.hpp"

namespace {

bool verbose_logging() {
  const char* env = std::getenv("LEVYFLOW_LOG");
  return env && std::string(env) != "" && std::string(env) != "0";
}

void log_note(const std::string& msg) {
  if (verbose_logging()) std::cerr << "levyflow: " << msg << "\n";
}

// Deterministic byte output: one writer for every subcommand.
int emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return 2;
  }
  f << payload;
  return 0;
}

std::string dump_json(const levyflow::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential Lie series for Levy-driven flows"};
  app.require_subcommand(1);

  int d = 1, l = 2, grade = 3;
  std::string basis = "J", format = "text", out_path, spec_path;
  std::uint64_t seed = 1;
  int samples = 1000;
  double t = 0.1;

  auto add_common = [&](CLI::App* sub, bool with_alphabet) {
    if (with_alphabet) {
      sub->add_option("--d", d, "number of Wiener drivers")
          ->check(CLI::NonNegativeNumber);
      sub->add_option("--l", l, "total number of drivers")
          ->check(CLI::PositiveNumber);
    }
    sub->add_option("--grade", grade, "truncation grade")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  CLI::App* expand = app.add_subcommand(
      "expand", "print the truncated log-flowmap Lie series");
  add_common(expand, true);
  expand->add_option("--basis", basis, "integral basis, I or J")
      ->check(CLI::IsMember({"I", "J"}));
  expand->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  CLI::App* magnus = app.add_subcommand(
      "magnus", "print the pre-Lie Magnus tree coefficient table");
  add_common(magnus, false);
  magnus->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex", "csv"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "run the algebraic invariant suite");
  add_common(verify, true);
  verify->add_option("--seed", seed, "seed for randomised checks");
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  std::string corrupt;
  verify
      ->add_option("--corrupt", corrupt,
                   "deliberately corrupt the named check (testing aid)")
      ->group("");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo comparison of truncations against sampled paths");
  add_common(simulate, false);
  simulate->add_option("--spec", spec_path, "TOML model description")
      ->required();
  simulate->add_option("--seed", seed, "RNG seed");
  simulate->add_option("--samples", samples, "number of sample paths")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--t", t, "comparison time")->check(CLI::PositiveNumber);
  simulate->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(expand)) {
      if (format == "csv") {
        std::cerr << "error: csv is not available for expand\n";
        return 2;
      }
      if (d > l) {
        std::cerr << "error: --d cannot exceed --l\n";
        return 2;
      }
      levyflow::AlphabetSpec alphabet{d, l, grade};
      log_note("expanding to grade " + std::to_string(grade));
      levyflow::LogFlowmap lf = levyflow::log_flowmap(
          basis == "J" ? levyflow::LieBasis::J : levyflow::LieBasis::I,
          alphabet, grade);
      if (format == "json") return emit(dump_json(log_flowmap_to_json(lf)), out_path);
      if (format == "latex") return emit(log_flowmap_to_latex(lf), out_path);
      return emit(log_flowmap_to_text(lf), out_path);
    }

    if (app.got_subcommand(magnus)) {
      log_note("tabulating trees to degree " + std::to_string(grade));
      std::vector<levyflow::MagnusRow> rows = levyflow::magnus_table(grade, 0);
      if (format == "json") return emit(dump_json(magnus_table_to_json(rows)), out_path);
      if (format == "latex") return emit(magnus_table_to_latex(rows), out_path);
      if (format == "csv") return emit(magnus_table_to_csv(rows), out_path);
      return emit(magnus_table_to_text(rows), out_path);
    }

    if (app.got_subcommand(verify)) {
      levyflow::VerifyOptions options;
      options.num_wiener = d;
      options.num_drivers = l;
      options.max_grade = grade;
      options.seed = seed;
      options.corrupt = corrupt;
      if (d > l) {
        std::cerr << "error: --d cannot exceed --l\n";
        return 2;
      }
      log_note("running invariant suite");
      auto results = levyflow::run_verification(options);
      int rc = emit(format == "json"
                        ? dump_json(levyflow::verification_report(results))
                        : levyflow::verification_text(results),
                    out_path);
      if (rc != 0) return rc;
      return levyflow::all_passed(results) ? 0 : 1;
    }

    if (app.got_subcommand(simulate)) {
      if (format == "text" || format == "latex") format = "json";
      log_note("loading model from " + spec_path);
      levyflow::SdeSpec model = levyflow::load_sde_spec(spec_path);
      std::vector<int> grades;
      for (int g = 1; g <= grade; ++g) grades.push_back(g);
      levyflow::PathStatistics stats =
          levyflow::mc_compare(model, grades, samples, t, seed);
      if (format == "csv") return emit(statistics_to_csv(stats), out_path);
      return emit(dump_json(statistics_to_json(stats)), out_path);
    }
  } catch (const levyflow::TomlError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
