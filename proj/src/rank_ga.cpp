#include "hajos/rank_ga.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "hajos/errors.hpp"
#include "hajos/hajos_ops.hpp"

namespace hajos {

namespace {

GaConfig validated(GaConfig cfg) {
  if (cfg.pop_size < 2 || cfg.pop_size % 2 != 0)
    throw std::invalid_argument("pop_size must be even and >= 2");
  if (!(cfg.pressure > 0)) throw std::invalid_argument("pressure must be positive");
  if (cfg.stats_interval < 1) throw std::invalid_argument("stats_interval must be >= 1");
  if (cfg.max_order && *cfg.max_order < 1)
    throw std::invalid_argument("max_order must be >= 1");
  return cfg;
}

}  // namespace

RankGa::RankGa(GaConfig cfg) : cfg_(validated(cfg)), rng_(cfg.seed) {
  pop_.members.reserve(static_cast<std::size_t>(2) * cfg_.pop_size);
  for (int i = 0; i < cfg_.pop_size; ++i)
    pop_.members.push_back({complete_symmetric(3), std::nullopt, store_.add_init(0)});
  evaluate_and_sort();
}

void RankGa::evaluate_and_sort() {
  for (Individual& ind : pop_.members)
    if (!ind.cached_fitness) ind.cached_fitness = fitness(ind.genome);
  std::stable_sort(pop_.members.begin(), pop_.members.end(),
                   [](const Individual& a, const Individual& b) {
                     return fitness_less(*a.cached_fitness, *b.cached_fitness);
                   });
}

ArcRef RankGa::draw_arc(const Digraph& genome) {
  const int m = genome.arc_count();
  if (m == 0) throw CannotRecombineError("population member has no arcs");
  return genome.arc_at(rng_.below_int(m));
}

void RankGa::recombination() {
  auto& members = pop_.members;
  // Appended offspring count as parents, so the loop bound moves: with N
  // members this performs exactly N joins and the last pair wraps to rank 0.
  for (std::size_t i = 0; i <= members.size() - 1; i += 2) {
    const std::size_t partner = (i + 1) % members.size();
    const ArcRef arc1 = draw_arc(members[i].genome);
    const ArcRef arc2 = draw_arc(members[partner].genome);

    const int joined_order = members[i].genome.order() + members[partner].genome.order() - 1;
    if (cfg_.max_order && joined_order > *cfg_.max_order) {
      // Joins past the order guard collapse to a clone of the better parent.
      const std::size_t better =
          fitness_less(*members[partner].cached_fitness, *members[i].cached_fitness) ? partner
                                                                                     : i;
      Individual clone{members[better].genome, members[better].cached_fitness,
                       store_.add_clone(members[better].lineage_id, pop_.generation)};
      members.push_back(std::move(clone));
      continue;
    }

    JoinSpec spec{members[i].genome, arc1, members[partner].genome, arc2};
    Individual child{hajos_join(spec), std::nullopt,
                     store_.add_join(members[i].lineage_id, arc1, members[partner].lineage_id,
                                     arc2, pop_.generation)};
    members.push_back(std::move(child));
  }
}

void RankGa::mutation() {
  auto& members = pop_.members;
  const std::size_t count = members.size();
  if (count < 2) return;
  for (std::size_t i = 0; i < count; ++i) {
    Individual& ind = members[i];
    // Budget fixed up front from the genome as it stands; rank i spends the
    // fraction i/(count-1) of its non-adjacent pairs, rounded down.
    const std::uint64_t non_adjacent =
        static_cast<std::uint64_t>(pair_counts(ind.genome).non_adjacent_pairs);
    const std::uint64_t attempts = i * non_adjacent / (count - 1);
    for (std::uint64_t j = 0; j < attempts; ++j) {
      const Digraph& g = ind.genome;
      const int u = rng_.below_int(g.order());
      int candidates = 0;
      for (int w = 0; w < g.order(); ++w)
        if (w != u && !g.arc_unchecked(u, w) && !g.arc_unchecked(w, u)) ++candidates;
      if (candidates == 0) continue;  // attempt aborted, vertex draw spent
      // pick the k-th independent partner in ascending order
      int pick = rng_.below_int(candidates);
      int v = -1;
      for (int w = 0; w < g.order(); ++w) {
        if (w == u || g.arc_unchecked(u, w) || g.arc_unchecked(w, u)) continue;
        if (pick-- == 0) {
          v = w;
          break;
        }
      }
      ind.genome = identify(ind.genome, v, u);
      ind.lineage_id = store_.add_identify(ind.lineage_id, v, u, pop_.generation);
      ind.cached_fitness.reset();
    }
  }
}

void RankGa::selection() {
  auto& members = pop_.members;
  const std::size_t count = members.size();
  const std::size_t target = count / 2;
  const double exponent = 2.0 * cfg_.pressure - 1.0;
  auto clone_curve = [&](std::size_t i) {
    const double r = static_cast<double>(i) / static_cast<double>(count - 1);
    return cfg_.pressure * std::pow(1.0 - r, exponent);
  };

  std::vector<std::size_t> chosen;
  chosen.reserve(target);
  for (std::size_t i = 0; i < count; ++i) {
    const auto clones = static_cast<std::size_t>(std::floor(clone_curve(i)));
    for (std::size_t c = 0; c < clones; ++c) chosen.push_back(i);
  }
  if (chosen.size() > target) chosen.resize(target);

  std::size_t fruitless = 0;
  for (std::size_t i = 0; chosen.size() < target; i = (i + 1) % count) {
    const double value = clone_curve(i);
    const double fractional = value - std::floor(value);
    if (rng_.unit() < fractional) chosen.push_back(i);
    if (fractional > 0)
      fruitless = 0;
    else if (++fruitless >= count)
      throw std::logic_error("rank selection cannot fill the population");
  }

  std::vector<Individual> next;
  next.reserve(target);
  for (std::size_t src : chosen)
    next.push_back({members[src].genome, members[src].cached_fitness,
                    store_.add_clone(members[src].lineage_id, pop_.generation)});
  members = std::move(next);
}

bool RankGa::step() {
  ++pop_.generation;
  recombination();
  evaluate_and_sort();
  mutation();
  evaluate_and_sort();
  selection();
  evaluate_and_sort();

  const Individual& best = pop_.members.front();
  if (!best.cached_fitness->is_zero()) return false;
  if (!is_isomorphic(best.genome, symmetric_cycle(5)))
    throw AnomalyError("fitness-0 genome is not the symmetric 5-cycle");
  return true;
}

StatsRecord RankGa::stats_record() const {
  StatsRecord rec;
  rec.generation = pop_.generation;
  const Individual& best = pop_.members.front();
  rec.best_fitness = best.cached_fitness->total();
  rec.best_order = best.genome.order();
  rec.best_arc_count = best.genome.arc_count();
  double fitness_sum = 0, order_sum = 0;
  for (const Individual& ind : pop_.members) {
    fitness_sum += ind.cached_fitness->total();
    order_sum += ind.genome.order();
  }
  rec.mean_fitness = fitness_sum / static_cast<double>(pop_.members.size());
  rec.population_mean_order = order_sum / static_cast<double>(pop_.members.size());
  return rec;
}

RunResult RankGa::run(const StatsSink& sink) {
  RunResult result;
  auto emit = [&](const StatsRecord& rec) {
    result.stats.push_back(rec);
    if (sink) sink(rec);
  };
  emit(stats_record());

  bool solved = false;
  while (!solved && pop_.generation < cfg_.max_generations) {
    solved = step();
    if (solved || pop_.generation % cfg_.stats_interval == 0 ||
        pop_.generation == cfg_.max_generations)
      emit(stats_record());
  }

  result.generations_used = pop_.generation;
  if (solved) result.solution = pop_.members.front();
  result.lineage = std::move(store_);
  return result;
}

RunResult run_ga(const GaConfig& cfg, const StatsSink& sink) {
  RankGa ga(cfg);
  return ga.run(sink);
}

namespace {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace

std::string stats_csv_header() {
  return "generation,best_fitness,mean_fitness,best_order,best_arc_count,"
         "population_mean_order\n";
}

std::string stats_csv_row(const StatsRecord& r) {
  return std::to_string(r.generation) + "," + format_double(r.best_fitness) + "," +
         format_double(r.mean_fitness) + "," + std::to_string(r.best_order) + "," +
         std::to_string(r.best_arc_count) + "," + format_double(r.population_mean_order) +
         "\n";
}

}  // namespace hajos
