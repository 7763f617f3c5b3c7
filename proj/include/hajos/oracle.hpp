#ifndef HAJOS_ORACLE_HPP
#define HAJOS_ORACLE_HPP

#include <vector>

#include "hajos/digraph.hpp"

namespace hajos {

/// Total color assignment, one color per vertex.
using Coloring = std::vector<int>;

/// True iff the subdigraph induced by the vertices of `color` has no
/// directed cycle.
bool color_class_acyclic(const Digraph& d, const Coloring& coloring, int color);

/// Minimum k admitting a coloring with no monochromatic directed cycle.
/// Brute force with canonical-color pruning; capped at order 10.
int dichromatic_number(const Digraph& d);

/// True iff dc(d) = r and every single-arc and single-vertex deletion drops
/// the dichromatic number below r.
bool is_r_critical(const Digraph& d, int r);

}  // namespace hajos

#endif
