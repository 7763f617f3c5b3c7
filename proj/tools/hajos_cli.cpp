// Command line front end: search, replay, verification and export over the
// digraph and script file formats.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hajos/digraph.hpp"
#include "hajos/errors.hpp"
#include "hajos/fitness.hpp"
#include "hajos/lineage.hpp"
#include "hajos/oracle.hpp"
#include "hajos/rank_ga.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;
constexpr int kInputError = 3;

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hajos::ParseError(1, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Output files appear whole or not at all: write a sibling temp file, then rename.
void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

struct RunOptions {
  std::uint64_t seed = 0;
  bool entropy = false;
  hajos::GaConfig cfg;
  std::string out_script;
  std::string stats_path;
};

int cmd_run(const RunOptions& opts) {
  hajos::GaConfig cfg = opts.cfg;
  cfg.seed = opts.seed;
  if (opts.entropy) {
    std::random_device rd;
    cfg.seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
  }
  std::cout << "seed " << cfg.seed << "\n";

  std::ofstream stats;
  if (!opts.stats_path.empty()) {
    stats.open(opts.stats_path, std::ios::binary | std::ios::trunc);
    if (!stats) throw std::runtime_error("cannot write '" + opts.stats_path + "'");
    stats << hajos::stats_csv_header();
    stats.flush();
  }
  hajos::StatsSink sink;
  if (stats.is_open())
    sink = [&stats](const hajos::StatsRecord& rec) {
      stats << hajos::stats_csv_row(rec);
      stats.flush();
    };

  hajos::RunResult result = hajos::run_ga(cfg, sink);

  if (!result.solution) {
    std::cout << "no solution within " << result.generations_used << " generations\n";
    if (!opts.out_script.empty()) write_file_atomic(opts.out_script, "");
    return kVerificationFailed;
  }

  const hajos::ConstructionScript script =
      hajos::extract_script(result.lineage, result.solution->lineage_id);
  const hajos::OpCount ops = hajos::op_count(script);
  std::cout << "solution found at generation " << result.generations_used << "\n";
  std::cout << "operations " << ops.total() << " (" << ops.joins << " joins, "
            << ops.identifications << " identifications)\n";
  if (!opts.out_script.empty()) {
    write_file_atomic(opts.out_script, hajos::serialize_script(script));
    std::cout << "script written to " << opts.out_script << "\n";
  }
  return kOk;
}

struct ReplayOptions {
  std::string script_path;
  bool expect_c5 = false;
  bool print = false;
  std::string dot_path;
};

int cmd_replay(const ReplayOptions& opts) {
  const hajos::ConstructionScript script = hajos::parse_script(read_file(opts.script_path));
  const hajos::Digraph result = hajos::replay_script(script);

  if (opts.print) std::cout << hajos::serialize_digraph(result);
  if (!opts.dot_path.empty()) write_file_atomic(opts.dot_path, hajos::to_dot(result));
  if (opts.expect_c5) {
    if (!hajos::is_isomorphic(result, hajos::symmetric_cycle(5))) {
      std::cerr << "replay result is not the symmetric 5-cycle\n";
      return kVerificationFailed;
    }
    std::cout << "replay result is isomorphic to the symmetric 5-cycle\n";
  } else if (!opts.print) {
    std::cout << "ok: " << hajos::op_count(script).total() << " operations -> order "
              << result.order() << ", arcs " << result.arc_count() << "\n";
  }
  return kOk;
}

int cmd_verify_paper() {
  const hajos::ConstructionScript script = hajos::paper_script();
  const hajos::OpCount ops = hajos::op_count(script);

  // Stage boundaries in operation counts: the seeding join, then each
  // join-plus-four-identifications round.
  std::vector<hajos::FitnessBreakdown> stage_fitness;
  std::size_t op_no = 0;
  const hajos::Digraph result = hajos::replay_script(
      script, [&](std::size_t, const hajos::ScriptStatement& s, const hajos::Digraph& d) {
        if (s.kind == hajos::ScriptStatement::Kind::Init) return;
        ++op_no;
        if (op_no == 1 || op_no == 6 || op_no == 11 || op_no == 16)
          stage_fitness.push_back(hajos::fitness(d));
      });

  bool ok = true;
  auto check = [&ok](bool condition) {
    ok = ok && condition;
    return condition ? "" : "  <-- MISMATCH";
  };

  std::cout << "operations: " << ops.total() << " (" << ops.joins << " joins, "
            << ops.identifications << " identifications)"
            << check(ops.joins == 4 && ops.identifications == 12) << "\n";

  // Expected totals 17.2, 10.8, 5.4, 0 as exact ratios.
  const long long expected_num[] = {86, 54, 27, 0};
  const char* stage_note[] = {"five-cycle seed with chords", "two diagonals", "one diagonal",
                              "no diagonals"};
  for (std::size_t i = 0; i < stage_fitness.size(); ++i) {
    std::cout << "stage " << i + 1 << " fitness: " << format_double(stage_fitness[i].total())
              << " (" << stage_note[i] << ")"
              << check(stage_fitness[i].equals_ratio(expected_num[i], 5)) << "\n";
  }
  ok = ok && stage_fitness.size() == 4;

  const bool is_c5 = hajos::is_isomorphic(result, hajos::symmetric_cycle(5));
  std::cout << "final digraph isomorphic to D(C5): " << (is_c5 ? "yes" : "no") << check(is_c5)
            << "\n";

  std::cout << "verify-paper: " << (ok ? "OK" : "FAILED") << "\n";
  return ok ? kOk : kVerificationFailed;
}

int cmd_fitness(const std::string& path) {
  const hajos::FitnessBreakdown fb = hajos::fitness(hajos::parse_digraph(read_file(path)));
  std::cout << "order_term " << format_double(fb.order_term()) << "\n"
            << "asym_density_term " << format_double(fb.asym_density_term()) << "\n"
            << "sym_balance_term " << format_double(fb.sym_balance_term()) << "\n"
            << "sym_triangle_term " << format_double(fb.sym_triangle_term()) << "\n"
            << "mixed_triangle_term " << format_double(fb.mixed_triangle_term()) << "\n"
            << "total " << format_double(fb.total()) << "\n";
  return kOk;
}

int cmd_dichromatic(const std::string& path, std::optional<int> critical) {
  const hajos::Digraph d = hajos::parse_digraph(read_file(path));
  std::cout << hajos::dichromatic_number(d) << "\n";
  if (critical) {
    const bool verdict = hajos::is_r_critical(d, *critical);
    std::cout << "critical " << (verdict ? "yes" : "no") << "\n";
    return verdict ? kOk : kVerificationFailed;
  }
  return kOk;
}

int cmd_export_dot(const std::string& path) {
  std::cout << hajos::to_dot(hajos::parse_digraph(read_file(path)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hajos construction search and verification toolkit"};
  app.require_subcommand(1);

  RunOptions run_opts;
  CLI::App* run = app.add_subcommand("run", "search for the symmetric 5-cycle");
  run->add_option("--seed", run_opts.seed, "RNG seed (default 0)");
  run->add_flag("--entropy", run_opts.entropy, "seed from the system entropy source");
  run->add_option("--pop-size", run_opts.cfg.pop_size, "population size (even, default 50)");
  run->add_option("--pressure", run_opts.cfg.pressure, "selective pressure P (default 3)");
  run->add_option("--max-gens", run_opts.cfg.max_generations,
                  "generation cap (default 50000)");
  run->add_option("--stats-interval", run_opts.cfg.stats_interval,
                  "generations between stats rows (default 100)");
  run->add_option("--max-order", run_opts.cfg.max_order,
                  "optional cap on genome order during joins");
  run->add_option("--out-script", run_opts.out_script, "construction script output path");
  run->add_option("--stats", run_opts.stats_path, "stats CSV output path");

  ReplayOptions replay_opts;
  CLI::App* replay = app.add_subcommand("replay", "replay a construction script");
  replay->add_option("script", replay_opts.script_path, "script file")->required();
  replay->add_flag("--expect-c5", replay_opts.expect_c5,
                   "verify the result is the symmetric 5-cycle");
  replay->add_flag("--print", replay_opts.print, "write the digraph file to stdout");
  replay->add_option("--dot", replay_opts.dot_path, "write DOT to this path");

  app.add_subcommand("verify-paper", "replay and check the built-in 16-operation script");

  std::string fitness_path;
  CLI::App* fit = app.add_subcommand("fitness", "print the fitness breakdown of a digraph");
  fit->add_option("digraph", fitness_path, "digraph file")->required();

  std::string dichromatic_path;
  std::optional<int> critical;
  CLI::App* dichromatic =
      app.add_subcommand("dichromatic", "print the dichromatic number of a digraph");
  dichromatic->add_option("digraph", dichromatic_path, "digraph file")->required();
  dichromatic->add_option("--critical", critical, "also check r-criticality for this r");

  std::string dot_path;
  CLI::App* export_dot = app.add_subcommand("export-dot", "print a digraph as DOT");
  export_dot->add_option("digraph", dot_path, "digraph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (run->parsed()) return cmd_run(run_opts);
    if (replay->parsed()) return cmd_replay(replay_opts);
    if (app.get_subcommand("verify-paper")->parsed()) return cmd_verify_paper();
    if (fit->parsed()) return cmd_fitness(fitness_path);
    if (dichromatic->parsed()) return cmd_dichromatic(dichromatic_path, critical);
    if (export_dot->parsed()) return cmd_export_dot(dot_path);
  } catch (const hajos::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const hajos::ReplayError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const hajos::TooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
