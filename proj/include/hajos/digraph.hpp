#ifndef HAJOS_DIGRAPH_HPP
#define HAJOS_DIGRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hajos {

/// Ordered vertex pair naming an arc tail->head. tail != head.
struct ArcRef {
  int tail = 0;
  int head = 0;
  friend bool operator==(const ArcRef&, const ArcRef&) = default;
};

/// Loop-free digraph on vertices 0..n-1, stored as a dense 0/1 adjacency
/// matrix. Set semantics: at most one arc per ordered pair, never a loop.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int order);

  int order() const { return order_; }
  bool arc(int tail, int head) const { return bits_[index(tail, head)] != 0; }
  /// arc() without index validation; callers guarantee the range.
  bool arc_unchecked(int tail, int head) const {
    return bits_[static_cast<std::size_t>(tail) * order_ + head] != 0;
  }

  /// Inserts the arc; a no-op if already present. Rejects loops and bad indices.
  void add_arc(int tail, int head);
  /// add_arc() without validation; callers guarantee range and tail != head.
  void add_arc_unchecked(int tail, int head) {
    bits_[static_cast<std::size_t>(tail) * order_ + head] = 1;
  }
  void remove_arc(int tail, int head);

  int arc_count() const;
  /// All arcs by tail, then head (row-major). The canonical enumeration order.
  std::vector<ArcRef> arcs() const;
  /// k-th arc in row-major order, 0 <= k < arc_count().
  ArcRef arc_at(int k) const;

  std::vector<int> out_neighbors(int v) const;
  std::vector<int> in_neighbors(int v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int index(int tail, int head) const;
  void check_vertex(int v) const;

  int order_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Pair classification of a digraph: a (asymmetric arcs), s (digons, counted
/// once per unordered pair) and the untouched pairs.
struct PairCounts {
  int asymmetric_arcs = 0;
  int digons = 0;
  int non_adjacent_pairs = 0;
  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

/// D(K_k): every ordered pair of distinct vertices is an arc. k >= 1.
Digraph complete_symmetric(int k);
/// D(C_k): arcs i->(i+1 mod k) and back. k >= 3.
Digraph symmetric_cycle(int k);
/// Directed cycle: arcs i->(i+1 mod k) only. k >= 2 (k=2 degenerates to a digon).
Digraph directed_cycle(int k);

PairCounts pair_counts(const Digraph& d);

/// 3-subsets whose three pairs are all digons.
int symmetric_triangle_count(const Digraph& d);
/// 3-subsets with every pair adjacent and at least one pair not a digon.
int mixed_triangle_count(const Digraph& d);

/// True iff u != v and no arc runs between them in either direction.
bool are_independent(const Digraph& d, int u, int v);

/// Ascending list of vertices independent from u (u itself excluded).
std::vector<int> non_adjacent_vertices(const Digraph& d, int u);

/// Removes a vertex; indices above it shift down by one.
Digraph delete_vertex(const Digraph& d, int v);

/// Brute-force isomorphism for order <= 9; unequal orders compare false.
bool is_isomorphic(const Digraph& d1, const Digraph& d2);

/// Relabels vertices: vertex v of d becomes perm[v].
Digraph permute(const Digraph& d, const std::vector<int>& perm);

/// Text format: optional '#' comments, one `n <order>` line, then `arc <tail> <head>`
/// lines. Duplicate arcs, loops and out-of-range indices are parse errors.
Digraph parse_digraph(std::string_view text);
std::string serialize_digraph(const Digraph& d);

/// DOT export; a digon becomes one edge with dir=both, arcs in row-major order.
std::string to_dot(const Digraph& d);

}  // namespace hajos

#endif
