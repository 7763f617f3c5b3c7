#include <doctest.h>

#include <set>
#include <stdexcept>

#include "hajos/errors.hpp"
#include "hajos/hajos_ops.hpp"
#include "hajos/oracle.hpp"
#include "test_util.hpp"

using namespace hajos;
using test::make_digraph;
using test::random_digraph;
using test::seed_join_fixture;

TEST_CASE("identify merges neighborhoods") {
  const Digraph path = make_digraph(3, {{0, 1}, {1, 2}});
  const Digraph merged = identify(path, 0, 2);
  CHECK(merged.order() == 2);
  CHECK(merged.arc(0, 1));
  CHECK(merged.arc(1, 0));
  CHECK(merged.arc_count() == 2);

  const Digraph isolated = identify(Digraph(2), 0, 1);
  CHECK(isolated.order() == 1);
  CHECK(isolated.arc_count() == 0);

  CHECK_THROWS_AS(identify(symmetric_cycle(5), 0, 1), NotIndependentError);
  CHECK_THROWS_AS(identify(symmetric_cycle(5), 2, 2), NotIndependentError);
  CHECK_THROWS_AS(identify(symmetric_cycle(5), 0, 9), std::invalid_argument);
}

TEST_CASE("identify keeps the kept label and shifts higher indices") {
  // 0->1, 2->3, 3->1; identify(keep=1, remove=2): 2's arcs transfer to 1.
  const Digraph d = make_digraph(4, {{0, 1}, {2, 3}, {3, 1}});
  const Digraph merged = identify(d, 1, 2);
  CHECK(merged.order() == 3);
  CHECK(merged.arc(0, 1));
  CHECK(merged.arc(1, 2));  // transferred 2->3, index 3 compacted to 2
  CHECK(merged.arc(2, 1));  // old 3->1
  CHECK(merged.arc_count() == 3);
}

TEST_CASE("join of two directed triangles gives the directed 5-cycle") {
  const JoinSpec spec{directed_cycle(3), {2, 0}, directed_cycle(3), {0, 1}};
  const Digraph joined = hajos_join(spec);
  CHECK(joined.order() == 5);
  CHECK(joined.arc_count() == 5);
  CHECK(is_isomorphic(joined, directed_cycle(5)));
}

TEST_CASE("join of two complete symmetric triangles") {
  const JoinSpec spec{complete_symmetric(3), {2, 0}, complete_symmetric(3), {0, 1}};
  const Digraph joined = hajos_join(spec);
  // Under the numbering contract right 1 lands at 3 and right 2 at 4.
  CHECK(joined == seed_join_fixture());
  CHECK(pair_counts(joined) == PairCounts{3, 4, 3});
}

TEST_CASE("join rejects missing arcs") {
  CHECK_THROWS_AS(hajos_join({directed_cycle(3), {0, 2}, directed_cycle(3), {0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(hajos_join({directed_cycle(3), {2, 0}, directed_cycle(3), {1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(hajos_join({directed_cycle(3), {9, 9}, directed_cycle(3), {0, 1}}),
                  std::invalid_argument);
}

namespace {

JoinSpec random_join_spec(SeededRng& rng) {
  Digraph left = random_digraph(rng, 2 + rng.below_int(7));
  while (left.arc_count() == 0) left = random_digraph(rng, 2 + rng.below_int(7));
  Digraph right = random_digraph(rng, 2 + rng.below_int(7));
  while (right.arc_count() == 0) right = random_digraph(rng, 2 + rng.below_int(7));
  const ArcRef left_arc = left.arc_at(rng.below_int(left.arc_count()));
  const ArcRef right_arc = right.arc_at(rng.below_int(right.arc_count()));
  return {std::move(left), left_arc, std::move(right), right_arc};
}

}  // namespace

TEST_CASE("join order and size formulas hold for random specs") {
  SeededRng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const JoinSpec spec = random_join_spec(rng);
    const Digraph joined = hajos_join(spec);
    REQUIRE(joined.order() == spec.left.order() + spec.right.order() - 1);
    REQUIRE(joined.arc_count() == spec.left.arc_count() + spec.right.arc_count() - 1);
    REQUIRE_FALSE(joined.arc(spec.left_arc.tail, spec.left_arc.head));
  }
}

TEST_CASE("merged join vertex carries both neighborhoods minus deleted arcs") {
  SeededRng rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    const JoinSpec spec = random_join_spec(rng);
    const Digraph joined = hajos_join(spec);
    const int n1 = spec.left.order();
    const int v1 = spec.left_arc.head, u1 = spec.left_arc.tail;
    const int v2 = spec.right_arc.tail, u2 = spec.right_arc.head;
    auto map_right = [&](int j) { return j == v2 ? v1 : (j < v2 ? n1 + j : n1 + j - 1); };

    std::set<int> expected_out, expected_in;
    for (int w : spec.left.out_neighbors(v1)) expected_out.insert(w);
    for (int w : spec.left.in_neighbors(v1))
      if (w != u1) expected_in.insert(w);
    for (int w : spec.right.out_neighbors(v2))
      if (w != u2) expected_out.insert(map_right(w));
    for (int w : spec.right.in_neighbors(v2)) expected_in.insert(map_right(w));

    std::set<int> actual_out, actual_in;
    for (int w : joined.out_neighbors(v1)) actual_out.insert(w);
    for (int w : joined.in_neighbors(v1)) actual_in.insert(w);
    REQUIRE(actual_out == expected_out);
    REQUIRE(actual_in == expected_in);
  }
}

TEST_CASE("identify decreases order and never loses surviving adjacency") {
  SeededRng rng(321);
  int performed = 0;
  while (performed < 1000) {
    const Digraph d = random_digraph(rng, 3 + rng.below_int(6));
    const int keep = rng.below_int(d.order());
    const int remove = rng.below_int(d.order());
    if (keep == remove || !are_independent(d, keep, remove)) continue;
    ++performed;
    const Digraph merged = identify(d, keep, remove);
    REQUIRE(merged.order() == d.order() - 1);
    for (int v = 0; v < merged.order(); ++v) REQUIRE_FALSE(merged.arc(v, v));

    // Adjacency between surviving pairs never drops.
    auto relabel = [&](int v) { return v < remove ? v : v - 1; };
    for (int i = 0; i < d.order(); ++i) {
      if (i == remove) continue;
      for (int j = 0; j < d.order(); ++j) {
        if (j == remove || i == j) continue;
        if (d.arc(i, j)) REQUIRE(merged.arc(relabel(i), relabel(j)));
      }
    }
  }
}

TEST_CASE("identify on adjacent vertices always errors") {
  SeededRng rng(555);
  int checked = 0;
  while (checked < 1000) {
    const Digraph d = random_digraph(rng, 2 + rng.below_int(7));
    const int keep = rng.below_int(d.order());
    const int remove = rng.below_int(d.order());
    if (keep != remove && are_independent(d, keep, remove)) continue;
    ++checked;
    REQUIRE_THROWS_AS(identify(d, keep, remove), NotIndependentError);
  }
}

TEST_CASE("joins preserve dichromatic number at least 3 on desk-scale samples") {
  // Closure of Hajos constructions over 3-dichromatic operands.
  const Digraph k3 = complete_symmetric(3);
  const Digraph c5 = symmetric_cycle(5);
  const std::vector<Digraph> pool{k3, c5};
  SeededRng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const Digraph& left = pool[rng.below_int(2)];
    const Digraph& right = pool[rng.below_int(2)];
    const JoinSpec spec{left, left.arc_at(rng.below_int(left.arc_count())), right,
                        right.arc_at(rng.below_int(right.arc_count()))};
    const Digraph joined = hajos_join(spec);
    REQUIRE(dichromatic_number(joined) >= 3);
  }
}
