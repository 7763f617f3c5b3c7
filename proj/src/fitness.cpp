#include "hajos/fitness.hpp"

#include <stdexcept>

namespace hajos {

int compare_fitness(const FitnessBreakdown& lhs, const FitnessBreakdown& rhs) {
  // total = scaled_numerator/order; compare p1/q1 vs p2/q2 by cross product.
  const __int128 a = static_cast<__int128>(lhs.scaled_numerator()) * rhs.order;
  const __int128 b = static_cast<__int128>(rhs.scaled_numerator()) * lhs.order;
  return a < b ? -1 : (a > b ? 1 : 0);
}

FitnessBreakdown fitness(const Digraph& d) {
  if (d.order() < 1) throw std::invalid_argument("fitness requires order >= 1");
  const PairCounts pc = pair_counts(d);
  FitnessBreakdown fb;
  fb.order = d.order();
  fb.asymmetric_arcs = pc.asymmetric_arcs;
  fb.digons = pc.digons;
  fb.symmetric_triangles = symmetric_triangle_count(d);
  fb.mixed_triangles = mixed_triangle_count(d);
  return fb;
}

}  // namespace hajos
