#include "hajos/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "hajos/errors.hpp"

namespace hajos {

namespace {

// Iterative three-state DFS over the subdigraph induced by `members`.
bool induced_subgraph_acyclic(const Digraph& d, const std::vector<int>& members) {
  enum State : char { White, Gray, Black };
  std::vector<char> in_set(d.order(), 0);
  for (int v : members) in_set[v] = 1;
  std::vector<State> state(d.order(), White);
  std::vector<std::pair<int, int>> stack;  // vertex, next head to scan

  for (int root : members) {
    if (state[root] != White) continue;
    stack.emplace_back(root, 0);
    state[root] = Gray;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      bool descended = false;
      while (next < d.order()) {
        const int w = next++;
        if (!in_set[w] || !d.arc(v, w)) continue;
        if (state[w] == Gray) return false;
        if (state[w] == White) {
          state[w] = Gray;
          stack.emplace_back(w, 0);
          descended = true;
          break;
        }
      }
      if (!descended && next >= d.order()) {
        state[v] = Black;
        stack.pop_back();
      }
    }
  }
  return true;
}

bool partial_class_acyclic(const Digraph& d, const std::vector<int>& color, int assigned,
                           int c) {
  std::vector<int> members;
  for (int v = 0; v < assigned; ++v)
    if (color[v] == c) members.push_back(v);
  return induced_subgraph_acyclic(d, members);
}

// Vertex 0 is pinned to color 0 and color c+1 never appears before c.
bool colorable(const Digraph& d, int k, std::vector<int>& color, int vertex, int used) {
  if (vertex == d.order()) return true;
  const int limit = std::min(used + 1, k);
  for (int c = 0; c < limit; ++c) {
    color[vertex] = c;
    if (partial_class_acyclic(d, color, vertex + 1, c) &&
        colorable(d, k, color, vertex + 1, std::max(used, c + 1)))
      return true;
  }
  color[vertex] = -1;
  return false;
}

int dichromatic_unchecked(const Digraph& d) {
  if (d.order() == 0) return 0;
  for (int k = 1; k <= d.order(); ++k) {
    std::vector<int> color(d.order(), -1);
    if (colorable(d, k, color, 0, 0)) return k;
  }
  return d.order();  // unreachable: singletons always work
}

}  // namespace

bool color_class_acyclic(const Digraph& d, const Coloring& coloring, int color) {
  if (static_cast<int>(coloring.size()) != d.order())
    throw std::invalid_argument("coloring must assign every vertex");
  std::vector<int> members;
  for (int v = 0; v < d.order(); ++v)
    if (coloring[v] == color) members.push_back(v);
  return induced_subgraph_acyclic(d, members);
}

int dichromatic_number(const Digraph& d) {
  if (d.order() == 0) throw std::invalid_argument("dichromatic number needs order >= 1");
  if (d.order() > 10) throw TooLargeError("dichromatic brute force is capped at order 10");
  return dichromatic_unchecked(d);
}

bool is_r_critical(const Digraph& d, int r) {
  if (dichromatic_number(d) != r) return false;
  for (const ArcRef& a : d.arcs()) {
    Digraph sub = d;
    sub.remove_arc(a.tail, a.head);
    if (dichromatic_unchecked(sub) >= r) return false;
  }
  for (int v = 0; v < d.order(); ++v)
    if (dichromatic_unchecked(delete_vertex(d, v)) >= r) return false;
  return true;
}

}  // namespace hajos
