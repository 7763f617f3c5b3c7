#include "hajos/hajos_ops.hpp"

#include <stdexcept>
#include <string>

#include "hajos/errors.hpp"

namespace hajos {

Digraph identify(const Digraph& d, int keep, int remove) {
  if (keep < 0 || keep >= d.order() || remove < 0 || remove >= d.order())
    throw std::invalid_argument("vertex index out of range");
  if (!are_independent(d, keep, remove))
    throw NotIndependentError("vertices " + std::to_string(keep) + " and " +
                              std::to_string(remove) + " are not independent");
  const int n = d.order();
  auto relabel = [&](int v) { return v < remove ? v : v - 1; };
  Digraph out(n - 1);
  for (int i = 0; i < n; ++i) {
    if (i == remove) continue;
    for (int j = 0; j < n; ++j) {
      if (j == remove || i == j || !d.arc_unchecked(i, j)) continue;
      out.add_arc_unchecked(relabel(i), relabel(j));
    }
  }
  const int merged = relabel(keep);
  for (int w = 0; w < n; ++w) {
    if (w == remove) continue;
    if (d.arc_unchecked(remove, w)) out.add_arc_unchecked(merged, relabel(w));
    if (d.arc_unchecked(w, remove)) out.add_arc_unchecked(relabel(w), merged);
  }
  return out;
}

Digraph hajos_join(const JoinSpec& spec) {
  const Digraph& left = spec.left;
  const Digraph& right = spec.right;
  const int u1 = spec.left_arc.tail, v1 = spec.left_arc.head;
  const int v2 = spec.right_arc.tail, u2 = spec.right_arc.head;

  if (u1 < 0 || u1 >= left.order() || v1 < 0 || v1 >= left.order() || !left.arc(u1, v1))
    throw std::invalid_argument("left operand has no arc " + std::to_string(u1) + "->" +
                                std::to_string(v1));
  if (v2 < 0 || v2 >= right.order() || u2 < 0 || u2 >= right.order() || !right.arc(v2, u2))
    throw std::invalid_argument("right operand has no arc " + std::to_string(v2) + "->" +
                                std::to_string(u2));

  const int n1 = left.order();
  // v2 merges into v1; other right vertices fill the tail indices in order.
  auto map_right = [&](int j) { return j == v2 ? v1 : (j < v2 ? n1 + j : n1 + j - 1); };

  Digraph out(n1 + right.order() - 1);
  for (const ArcRef& a : left.arcs()) {
    if (a.tail == u1 && a.head == v1) continue;
    out.add_arc(a.tail, a.head);
  }
  for (const ArcRef& a : right.arcs()) {
    if (a.tail == v2 && a.head == u2) continue;
    out.add_arc(map_right(a.tail), map_right(a.head));
  }
  out.add_arc(u1, map_right(u2));
  return out;
}

}  // namespace hajos
