#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>

#include "hajos/digraph.hpp"
#include "hajos/errors.hpp"
#include "test_util.hpp"

using namespace hajos;
using test::digraph_from_mask;
using test::make_digraph;
using test::random_digraph;
using test::random_permutation;
using test::seed_join_fixture;

TEST_CASE("complete symmetric digraphs") {
  const Digraph k3 = complete_symmetric(3);
  CHECK(k3.order() == 3);
  CHECK(k3.arc_count() == 6);
  CHECK(pair_counts(k3) == PairCounts{0, 3, 0});

  const Digraph k1 = complete_symmetric(1);
  CHECK(k1.order() == 1);
  CHECK(k1.arc_count() == 0);

  const Digraph k5 = complete_symmetric(5);
  CHECK(k5.arc_count() == 20);
  CHECK(pair_counts(k5).digons == 10);

  CHECK_THROWS_AS(complete_symmetric(0), std::invalid_argument);
}

TEST_CASE("symmetric cycles") {
  const Digraph c5 = symmetric_cycle(5);
  CHECK(c5.arc_count() == 10);
  const PairCounts pc = pair_counts(c5);
  CHECK(pc.asymmetric_arcs == 0);
  CHECK(pc.digons == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(c5.arc(i, (i + 1) % 5));
    CHECK(c5.arc((i + 1) % 5, i));
  }

  CHECK(symmetric_cycle(3) == complete_symmetric(3));
  CHECK(symmetric_cycle(4).arc_count() == 8);
  CHECK(pair_counts(symmetric_cycle(4)).digons == 4);
  CHECK_THROWS_AS(symmetric_cycle(2), std::invalid_argument);
}

TEST_CASE("directed cycles") {
  const Digraph c3 = directed_cycle(3);
  CHECK(c3.arc_count() == 3);
  CHECK(pair_counts(c3) == PairCounts{3, 0, 0});

  const Digraph c5 = directed_cycle(5);
  CHECK(c5.arc_count() == 5);
  CHECK(pair_counts(c5).digons == 0);

  // k=2 degenerates: both arcs of the "cycle" form one digon.
  const Digraph c2 = directed_cycle(2);
  CHECK(c2.arc_count() == 2);
  CHECK(pair_counts(c2).digons == 1);

  CHECK_THROWS_AS(directed_cycle(1), std::invalid_argument);
}

TEST_CASE("pair counts on the order-5 join fixture") {
  const PairCounts pc = pair_counts(seed_join_fixture());
  CHECK(pc.asymmetric_arcs == 3);
  CHECK(pc.digons == 4);
  CHECK(pc.non_adjacent_pairs == 3);
}

TEST_CASE("triangle counts") {
  CHECK(symmetric_triangle_count(complete_symmetric(3)) == 1);
  CHECK(symmetric_triangle_count(symmetric_cycle(5)) == 0);
  CHECK(symmetric_triangle_count(complete_symmetric(4)) == 4);

  CHECK(mixed_triangle_count(directed_cycle(3)) == 1);
  CHECK(mixed_triangle_count(symmetric_cycle(5)) == 0);
  // Triples {0,1,2}, {0,2,3} and {0,3,4} of the fixture are the mixed ones.
  CHECK(mixed_triangle_count(seed_join_fixture()) == 3);
  CHECK(symmetric_triangle_count(seed_join_fixture()) == 0);
}

TEST_CASE("independence") {
  const Digraph c5 = symmetric_cycle(5);
  CHECK(are_independent(c5, 0, 2));
  CHECK_FALSE(are_independent(c5, 0, 1));
  CHECK_FALSE(are_independent(c5, 3, 3));
  CHECK_THROWS_AS(are_independent(c5, 0, 7), std::invalid_argument);

  CHECK(non_adjacent_vertices(c5, 0) == std::vector<int>{2, 3});
  CHECK(non_adjacent_vertices(complete_symmetric(3), 1).empty());
}

TEST_CASE("vertex deletion compacts indices") {
  const Digraph path = make_digraph(4, {{0, 1}, {1, 2}, {2, 3}});
  const Digraph cut = delete_vertex(path, 1);
  CHECK(cut.order() == 3);
  CHECK(cut.arc_count() == 1);
  CHECK(cut.arc(1, 2));  // old 2->3
}

TEST_CASE("isomorphism") {
  const Digraph c5 = symmetric_cycle(5);
  CHECK(is_isomorphic(c5, permute(c5, {2, 3, 4, 0, 1})));

  const Digraph sym_path =
      make_digraph(5, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 3}});
  CHECK_FALSE(is_isomorphic(c5, sym_path));

  const Digraph c3 = directed_cycle(3);
  Digraph reversed(3);
  for (const ArcRef& a : c3.arcs()) reversed.add_arc(a.head, a.tail);
  CHECK(is_isomorphic(c3, reversed));

  CHECK_FALSE(is_isomorphic(c5, complete_symmetric(4)));  // unequal orders, no error
  CHECK_THROWS_AS(is_isomorphic(complete_symmetric(10), complete_symmetric(10)),
                  TooLargeError);
}

TEST_CASE("isomorphism behaves as an equivalence on samples") {
  SeededRng rng(20240811);
  std::vector<Digraph> samples;
  for (int i = 0; i < 6; ++i) samples.push_back(random_digraph(rng, 5));
  for (const Digraph& d : samples) {
    CHECK(is_isomorphic(d, d));
    const Digraph p = permute(d, random_permutation(rng, d.order()));
    CHECK(is_isomorphic(d, p));
    CHECK(is_isomorphic(p, d));
    // transitivity spot check through a second relabeling
    const Digraph q = permute(p, random_permutation(rng, p.order()));
    CHECK((is_isomorphic(d, q) == is_isomorphic(q, d)));
    CHECK(is_isomorphic(d, q));
  }
}

TEST_CASE("pair count identities hold exhaustively for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const int cells = n * (n - 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
      const Digraph d = digraph_from_mask(n, mask);
      const PairCounts pc = pair_counts(d);
      REQUIRE(pc.asymmetric_arcs + 2 * pc.digons == d.arc_count());
      REQUIRE(pc.non_adjacent_pairs + pc.asymmetric_arcs + pc.digons == n * (n - 1) / 2);

      // Independent triple counter: all three pairs adjacent.
      int adjacent_triples = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k) {
            auto adj = [&](int u, int v) { return d.arc(u, v) || d.arc(v, u); };
            if (adj(i, j) && adj(i, k) && adj(j, k)) ++adjacent_triples;
          }
      REQUIRE(symmetric_triangle_count(d) + mixed_triangle_count(d) == adjacent_triples);
    }
  }
}

TEST_CASE("digraph text format") {
  const Digraph d = parse_digraph("n 3\narc 0 1\narc 1 0\n");
  CHECK(d.order() == 3);
  CHECK(d.arc_count() == 2);
  CHECK(d.arc(0, 1));
  CHECK(d.arc(1, 0));
  CHECK(non_adjacent_vertices(d, 2) == std::vector<int>{0, 1});

  CHECK(serialize_digraph(complete_symmetric(3)) ==
        "n 3\narc 0 1\narc 0 2\narc 1 0\narc 1 2\narc 2 0\narc 2 1\n");

  CHECK(parse_digraph("# comment\n\nn 2\narc 1 0\n").arc(1, 0));

  CHECK_THROWS_WITH_AS(parse_digraph("n 2\narc 0 0\n"), "line 2: loop arcs are not allowed",
                       ParseError);
  CHECK_THROWS_AS(parse_digraph("n 2\narc 0 1\narc 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("n 2\narc 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("arc 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph(""), ParseError);
  CHECK_THROWS_AS(parse_digraph("n 2\nedge 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("n 2\narc 0\n"), ParseError);

  try {
    parse_digraph("n 3\narc 0 1\narc 3 1\n");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("parse/serialize round trip on random digraphs") {
  SeededRng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = random_digraph(rng, 1 + rng.below_int(6));
    REQUIRE(parse_digraph(serialize_digraph(d)) == d);
  }
}

TEST_CASE("dot export") {
  auto count = [](const std::string& text, const std::string& needle) {
    int c = 0;
    for (std::size_t p = text.find(needle); p != std::string::npos;
         p = text.find(needle, p + 1))
      ++c;
    return c;
  };

  const std::string sym = to_dot(symmetric_cycle(3));
  CHECK(sym.find("0 -> 1 [dir=both];") != std::string::npos);
  CHECK(count(sym, "->") == 3);
  CHECK(count(sym, "[dir=both]") == 3);

  const std::string dir = to_dot(directed_cycle(3));
  CHECK(count(dir, "->") == 3);
  CHECK(count(dir, "[dir=both]") == 0);

  // 4 digons as single dir=both edges plus 3 plain arcs.
  const std::string fixture = to_dot(seed_join_fixture());
  CHECK(count(fixture, "->") == 7);
  CHECK(count(fixture, "[dir=both]") == 4);
}
