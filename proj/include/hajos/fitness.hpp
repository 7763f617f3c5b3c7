#ifndef HAJOS_FITNESS_HPP
#define HAJOS_FITNESS_HPP

#include <cstdint>

#include "hajos/digraph.hpp"

namespace hajos {

/// Per-term breakdown of the minimized objective
///   |n-5| + 2a/n + |n-s| + 15*T_S + 5*T
/// where a counts asymmetric arcs, s digons, T_S all-digon triangles and T
/// triangles with at least one non-digon pair. Only 2a/n can be fractional,
/// so the whole value is the exact rational
///   scaled_numerator() / order  with  scaled_numerator = integer_terms*n + 2a.
struct FitnessBreakdown {
  int order = 0;
  int asymmetric_arcs = 0;
  int digons = 0;
  int symmetric_triangles = 0;
  int mixed_triangles = 0;

  double order_term() const { return order < 5 ? 5 - order : order - 5; }
  double asym_density_term() const { return 2.0 * asymmetric_arcs / order; }
  double sym_balance_term() const { return order < digons ? digons - order : order - digons; }
  double sym_triangle_term() const { return 15.0 * symmetric_triangles; }
  double mixed_triangle_term() const { return 5.0 * mixed_triangles; }
  double total() const {
    return order_term() + asym_density_term() + sym_balance_term() + sym_triangle_term() +
           mixed_triangle_term();
  }

  std::int64_t integer_terms() const {
    auto abs64 = [](std::int64_t x) { return x < 0 ? -x : x; };
    return abs64(order - 5) + abs64(order - digons) + 15LL * symmetric_triangles +
           5LL * mixed_triangles;
  }
  std::int64_t scaled_numerator() const { return integer_terms() * order + 2LL * asymmetric_arcs; }

  bool is_zero() const { return scaled_numerator() == 0; }
  /// Exact test total == num/den (den > 0).
  bool equals_ratio(std::int64_t num, std::int64_t den) const {
    return scaled_numerator() * den == num * static_cast<std::int64_t>(order);
  }
};

/// Exact comparison of two totals via cross-multiplied rationals; no
/// floating-point ties. Returns <0, 0 or >0.
int compare_fitness(const FitnessBreakdown& lhs, const FitnessBreakdown& rhs);

inline bool fitness_less(const FitnessBreakdown& lhs, const FitnessBreakdown& rhs) {
  return compare_fitness(lhs, rhs) < 0;
}

/// Evaluates the objective on a digraph of order >= 1.
FitnessBreakdown fitness(const Digraph& d);

}  // namespace hajos

#endif
