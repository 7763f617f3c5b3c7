#ifndef HAJOS_LINEAGE_HPP
#define HAJOS_LINEAGE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hajos/digraph.hpp"

namespace hajos {

using LineageId = std::uint64_t;

enum class OriginKind : std::uint8_t { Init, Clone, Join, Identify };

/// How an individual arose. Parents always precede children in the store.
struct OriginRecord {
  OriginKind kind = OriginKind::Init;
  LineageId left_parent = 0;   // Clone and Identify parent lives here too
  LineageId right_parent = 0;  // Join only
  ArcRef left_arc{0, 0};       // Join: u1->v1
  ArcRef right_arc{0, 0};      // Join: v2->u2
  int keep = -1;               // Identify
  int remove = -1;             // Identify
  std::uint64_t generation = 0;
};

/// Append-only origin DAG. Ids are insertion indices.
class LineageStore {
 public:
  LineageId add_init(std::uint64_t generation);
  LineageId add_clone(LineageId parent, std::uint64_t generation);
  LineageId add_join(LineageId left, ArcRef left_arc, LineageId right, ArcRef right_arc,
                     std::uint64_t generation);
  LineageId add_identify(LineageId parent, int keep, int remove, std::uint64_t generation);

  const OriginRecord& at(LineageId id) const;
  std::size_t size() const { return records_.size(); }

 private:
  LineageId check_parent(LineageId parent) const;
  std::vector<OriginRecord> records_;
};

/// One line of a construction script.
struct ScriptStatement {
  enum class Kind { Init, Join, Identify, Result };
  Kind kind = Kind::Init;
  std::string out;           // handle being defined; for Result, the handle returned
  int init_order = 3;        // Init: D(K_k)
  std::string left;          // Join left input, Identify input
  std::string right;         // Join right input
  ArcRef left_arc{0, 0};     // Join: u1->v1
  ArcRef right_arc{0, 0};    // Join: v2->u2
  int keep = -1;             // Identify
  int remove = -1;           // Identify
  friend bool operator==(const ScriptStatement&, const ScriptStatement&) = default;
};

/// Ordered, replayable init/join/identify statements over named handles,
/// ending in exactly one result statement.
struct ConstructionScript {
  std::vector<ScriptStatement> statements;
  friend bool operator==(const ConstructionScript&, const ConstructionScript&) = default;
};

/// Hajos operations in a script; init and result are free.
struct OpCount {
  int joins = 0;
  int identifications = 0;
  int total() const { return joins + identifications; }
};

OpCount op_count(const ConstructionScript& script);

/// Minimal replayable script for one individual. Clone nodes are skipped,
/// shared ancestry is emitted once, and handles are G0, G1, ... in
/// first-use order.
ConstructionScript extract_script(const LineageStore& store, LineageId id);

/// Called after each defining statement with its 1-based position and value.
using ReplayObserver =
    std::function<void(std::size_t, const ScriptStatement&, const Digraph&)>;

/// Executes a script; returns the result handle's digraph. Statement
/// preconditions are re-checked and failures name the offending statement.
Digraph replay_script(const ConstructionScript& script, const ReplayObserver& observer = {});

/// The built-in 16-operation construction of the symmetric 5-cycle from
/// D(K_3): one seeding join, then three stages of one join plus four
/// identifications each.
ConstructionScript paper_script();

/// Line format: '#' comments plus
///   init <handle> K <k>
///   join <out> = <left> <u1> <v1> <right> <v2> <u2>
///   identify <out> = <in> <keep> <remove>
///   result <handle>
/// Indices are 0-based and validated at replay.
ConstructionScript parse_script(std::string_view text);
std::string serialize_script(const ConstructionScript& script);

}  // namespace hajos

#endif
