#ifndef HAJOS_HAJOS_OPS_HPP
#define HAJOS_HAJOS_OPS_HPP

#include "hajos/digraph.hpp"

namespace hajos {

/// Operands of a directed Hajos join: arc u1->v1 in the left digraph and
/// arc v2->u2 in the right one. Both digraphs are held by value, so the
/// same digraph can serve as both operands.
struct JoinSpec {
  Digraph left;
  ArcRef left_arc;   // u1 -> v1
  Digraph right;
  ArcRef right_arc;  // v2 -> u2
};

/// Merges vertex `remove` into vertex `keep`: the kept vertex's in- and
/// out-neighborhoods become the unions of both, every other adjacency is
/// unchanged, and indices above `remove` shift down by one. The two
/// vertices must be independent.
Digraph identify(const Digraph& d, int keep, int remove);

/// Directed Hajos join. Deletes u1->v1 and v2->u2, merges v1 with v2 and
/// adds u1->u2. Resulting order is n1+n2-1 and arc count m1+m2-1.
/// Numbering: left vertices keep 0..n1-1 with the merged vertex at v1;
/// right vertex j lands at n1+j when j < v2 and n1+j-1 when j > v2.
Digraph hajos_join(const JoinSpec& spec);

}  // namespace hajos

#endif
