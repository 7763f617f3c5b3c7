#ifndef HAJOS_RANK_GA_HPP
#define HAJOS_RANK_GA_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hajos/digraph.hpp"
#include "hajos/fitness.hpp"
#include "hajos/lineage.hpp"
#include "hajos/rng.hpp"

namespace hajos {

struct GaConfig {
  int pop_size = 50;                      // even, >= 2
  double pressure = 3.0;                  // clone curve P(1-r)^(2P-1)
  std::uint64_t seed = 0;
  std::uint64_t max_generations = 50000;
  std::uint64_t stats_interval = 100;
  std::optional<int> max_order;           // joins above this are replaced by a clone
};

struct Individual {
  Digraph genome;
  std::optional<FitnessBreakdown> cached_fitness;
  LineageId lineage_id = 0;
};

struct Population {
  std::vector<Individual> members;
  std::uint64_t generation = 0;
};

struct StatsRecord {
  std::uint64_t generation = 0;
  double best_fitness = 0;
  double mean_fitness = 0;
  int best_order = 0;
  int best_arc_count = 0;
  double population_mean_order = 0;
};

struct RunResult {
  std::optional<Individual> solution;
  std::uint64_t generations_used = 0;
  LineageStore lineage;
  std::vector<StatsRecord> stats;
};

using StatsSink = std::function<void(const StatsRecord&)>;

/// The rank GA over Hajos constructions: every generation doubles the sorted
/// population by rank-paired joins, spends rank-scaled identification budgets
/// on the worse half of the ranking, and rebuilds the population from
/// rank-weighted clone counts. Fully deterministic in the seed.
class RankGa {
 public:
  explicit RankGa(GaConfig cfg);

  /// Recomputes missing fitness values and stable-sorts ascending.
  void evaluate_and_sort();
  /// Grows the population from N to 2N by rank-paired Hajos joins. Offspring
  /// are appended while the loop runs, so late pairs draw on earlier
  /// offspring and the final pair wraps around to rank 0.
  void recombination();
  /// Rank-proportional identification attempts, in place. Rank 0 gets none.
  void mutation();
  /// Shrinks 2N to N: floor(P(1-r)^(2P-1)) clones per rank, then fractional
  /// lottery rounds until the target size is reached.
  void selection();

  /// One full generation. True when the best member reaches fitness 0 (the
  /// genome is then verified against the symmetric 5-cycle).
  bool step();
  /// Steps until a solution or the generation cap. Stats rows go to `sink`
  /// as produced (generation 0, every stats_interval, and the final one).
  RunResult run(const StatsSink& sink = {});

  const GaConfig& config() const { return cfg_; }
  const Population& population() const { return pop_; }
  const LineageStore& lineage() const { return store_; }
  std::uint64_t generation() const { return pop_.generation; }
  StatsRecord stats_record() const;

 private:
  ArcRef draw_arc(const Digraph& genome);

  GaConfig cfg_;
  SeededRng rng_;
  LineageStore store_;
  Population pop_;
};

/// Convenience wrapper: construct, run, return.
RunResult run_ga(const GaConfig& cfg, const StatsSink& sink = {});

/// CSV rows for the stats file; header then one row per record.
std::string stats_csv_header();
std::string stats_csv_row(const StatsRecord& r);

}  // namespace hajos

#endif
