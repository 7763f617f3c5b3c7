#include "hajos/lineage.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "hajos/errors.hpp"
#include "hajos/hajos_ops.hpp"

namespace hajos {

LineageId LineageStore::check_parent(LineageId parent) const {
  if (parent >= records_.size())
    throw CorruptStoreError("dangling parent reference " + std::to_string(parent));
  return parent;
}

LineageId LineageStore::add_init(std::uint64_t generation) {
  records_.push_back({OriginKind::Init, 0, 0, {}, {}, -1, -1, generation});
  return records_.size() - 1;
}

LineageId LineageStore::add_clone(LineageId parent, std::uint64_t generation) {
  records_.push_back({OriginKind::Clone, check_parent(parent), 0, {}, {}, -1, -1, generation});
  return records_.size() - 1;
}

LineageId LineageStore::add_join(LineageId left, ArcRef left_arc, LineageId right,
                                 ArcRef right_arc, std::uint64_t generation) {
  records_.push_back({OriginKind::Join, check_parent(left), check_parent(right), left_arc,
                      right_arc, -1, -1, generation});
  return records_.size() - 1;
}

LineageId LineageStore::add_identify(LineageId parent, int keep, int remove,
                                     std::uint64_t generation) {
  records_.push_back(
      {OriginKind::Identify, check_parent(parent), 0, {}, {}, keep, remove, generation});
  return records_.size() - 1;
}

const OriginRecord& LineageStore::at(LineageId id) const {
  if (id >= records_.size())
    throw CorruptStoreError("lineage id " + std::to_string(id) + " not in store");
  return records_[id];
}

OpCount op_count(const ConstructionScript& script) {
  OpCount oc;
  for (const ScriptStatement& s : script.statements) {
    if (s.kind == ScriptStatement::Kind::Join) ++oc.joins;
    if (s.kind == ScriptStatement::Kind::Identify) ++oc.identifications;
  }
  return oc;
}

namespace {

LineageId resolve_clones(const LineageStore& store, LineageId id) {
  while (store.at(id).kind == OriginKind::Clone) id = store.at(id).left_parent;
  return id;
}

}  // namespace

ConstructionScript extract_script(const LineageStore& store, LineageId id) {
  ConstructionScript script;
  std::unordered_map<LineageId, std::string> handle;
  auto assign_handle = [&](LineageId node) {
    return handle.emplace(node, "G" + std::to_string(handle.size())).first->second;
  };

  const LineageId root = resolve_clones(store, id);
  // Iterative post-order over the clone-collapsed DAG; parents emit first.
  std::vector<std::pair<LineageId, int>> stack{{root, 0}};
  while (!stack.empty()) {
    const LineageId node = stack.back().first;
    const OriginRecord& rec = store.at(node);
    LineageId parents[2];
    int parent_count = 0;
    if (rec.kind == OriginKind::Join) {
      parents[0] = rec.left_parent;
      parents[1] = rec.right_parent;
      parent_count = 2;
    } else if (rec.kind == OriginKind::Identify) {
      parents[0] = rec.left_parent;
      parent_count = 1;
    }
    if (stack.back().second < parent_count) {
      const LineageId next = resolve_clones(store, parents[stack.back().second]);
      ++stack.back().second;
      if (!handle.contains(next)) stack.emplace_back(next, 0);
      continue;
    }
    stack.pop_back();
    if (handle.contains(node)) continue;

    ScriptStatement stmt;
    switch (rec.kind) {
      case OriginKind::Init:
        stmt.kind = ScriptStatement::Kind::Init;
        stmt.init_order = 3;
        break;
      case OriginKind::Join:
        stmt.kind = ScriptStatement::Kind::Join;
        stmt.left = handle.at(resolve_clones(store, rec.left_parent));
        stmt.right = handle.at(resolve_clones(store, rec.right_parent));
        stmt.left_arc = rec.left_arc;
        stmt.right_arc = rec.right_arc;
        break;
      case OriginKind::Identify:
        stmt.kind = ScriptStatement::Kind::Identify;
        stmt.left = handle.at(resolve_clones(store, rec.left_parent));
        stmt.keep = rec.keep;
        stmt.remove = rec.remove;
        break;
      case OriginKind::Clone:
        throw CorruptStoreError("clone node survived resolution");
    }
    stmt.out = assign_handle(node);
    script.statements.push_back(std::move(stmt));
  }

  ScriptStatement result;
  result.kind = ScriptStatement::Kind::Result;
  result.out = handle.at(root);
  script.statements.push_back(std::move(result));
  return script;
}

Digraph replay_script(const ConstructionScript& script, const ReplayObserver& observer) {
  std::map<std::string, Digraph> env;
  auto lookup = [&](const std::string& name, std::size_t step) -> const Digraph& {
    auto it = env.find(name);
    if (it == env.end()) throw ReplayError(step, "undefined handle '" + name + "'");
    return it->second;
  };

  for (std::size_t k = 0; k < script.statements.size(); ++k) {
    const ScriptStatement& s = script.statements[k];
    const std::size_t step = k + 1;
    switch (s.kind) {
      case ScriptStatement::Kind::Init:
        if (s.init_order < 1) throw ReplayError(step, "init order must be >= 1");
        env[s.out] = complete_symmetric(s.init_order);
        break;
      case ScriptStatement::Kind::Join: {
        JoinSpec spec{lookup(s.left, step), s.left_arc, lookup(s.right, step), s.right_arc};
        try {
          env[s.out] = hajos_join(spec);
        } catch (const std::invalid_argument& e) {
          throw ReplayError(step, e.what());
        }
        break;
      }
      case ScriptStatement::Kind::Identify: {
        const Digraph& in = lookup(s.left, step);
        try {
          env[s.out] = identify(in, s.keep, s.remove);
        } catch (const NotIndependentError& e) {
          throw ReplayError(step, e.what());
        } catch (const std::invalid_argument& e) {
          throw ReplayError(step, e.what());
        }
        break;
      }
      case ScriptStatement::Kind::Result:
        return lookup(s.out, step);
    }
    if (observer) observer(step, s, env.at(s.out));
  }
  throw ReplayError(script.statements.size() + 1, "script has no result statement");
}

ConstructionScript paper_script() {
  // Four stages: the seeding join of two D(K_3) copies, then three rounds of
  // one join of a digraph with its own copy followed by four identifications.
  // Indices follow the join numbering and shift-down deletion contracts.
  ConstructionScript s;
  auto init = [&](const char* out) {
    ScriptStatement st;
    st.kind = ScriptStatement::Kind::Init;
    st.out = out;
    st.init_order = 3;
    s.statements.push_back(st);
  };
  auto join = [&](const char* out, const char* left, int u1, int v1, const char* right,
                  int v2, int u2) {
    ScriptStatement st;
    st.kind = ScriptStatement::Kind::Join;
    st.out = out;
    st.left = left;
    st.right = right;
    st.left_arc = {u1, v1};
    st.right_arc = {v2, u2};
    s.statements.push_back(st);
  };
  auto identify_stmt = [&](const char* out, const char* in, int keep, int remove) {
    ScriptStatement st;
    st.kind = ScriptStatement::Kind::Identify;
    st.out = out;
    st.left = in;
    st.keep = keep;
    st.remove = remove;
    s.statements.push_back(st);
  };

  init("H");
  join("D0", "H", 2, 0, "H", 0, 1);

  join("A0", "D0", 0, 2, "D0", 3, 0);
  identify_stmt("A1", "A0", 0, 6);
  identify_stmt("A2", "A1", 4, 5);
  identify_stmt("A3", "A2", 3, 6);
  identify_stmt("D1", "A3", 1, 5);

  join("B0", "D1", 3, 0, "D1", 4, 1);
  identify_stmt("B1", "B0", 1, 5);
  identify_stmt("B2", "B1", 2, 5);
  identify_stmt("B3", "B2", 3, 5);
  identify_stmt("D2", "B3", 4, 5);

  join("C0", "D2", 4, 1, "D2", 4, 1);
  identify_stmt("C1", "C0", 2, 5);
  identify_stmt("C2", "C1", 3, 5);
  identify_stmt("C3", "C2", 4, 5);
  identify_stmt("D3", "C3", 0, 5);

  ScriptStatement result;
  result.kind = ScriptStatement::Kind::Result;
  result.out = "D3";
  s.statements.push_back(result);
  return s;
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    Line line{line_no, {}};
    std::istringstream ss{std::string(raw)};
    std::string tok;
    while (ss >> tok) {
      if (tok.front() == '#') break;
      line.tokens.push_back(tok);
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (pos > text.size()) break;
  }
  return lines;
}

int parse_index(const std::string& tok, std::size_t line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
    throw ParseError(line, "expected nonnegative index, got '" + tok + "'");
  return value;
}

}  // namespace

ConstructionScript parse_script(std::string_view text) {
  ConstructionScript script;
  std::vector<std::string> defined;
  auto known = [&](const std::string& h) {
    for (const std::string& d : defined)
      if (d == h) return true;
    return false;
  };
  bool have_result = false;
  std::size_t last_line = 0;

  for (const Line& line : tokenize(text)) {
    last_line = line.number;
    const std::vector<std::string>& t = line.tokens;
    if (have_result) throw ParseError(line.number, "statement after result");
    ScriptStatement stmt;
    if (t[0] == "init") {
      if (t.size() != 4 || t[2] != "K")
        throw ParseError(line.number, "expected 'init <handle> K <k>'");
      stmt.kind = ScriptStatement::Kind::Init;
      stmt.out = t[1];
      stmt.init_order = parse_index(t[3], line.number);
      if (stmt.init_order < 1) throw ParseError(line.number, "init order must be >= 1");
    } else if (t[0] == "join") {
      if (t.size() != 9 || t[2] != "=")
        throw ParseError(line.number,
                         "expected 'join <out> = <left> <u1> <v1> <right> <v2> <u2>'");
      stmt.kind = ScriptStatement::Kind::Join;
      stmt.out = t[1];
      stmt.left = t[3];
      stmt.left_arc = {parse_index(t[4], line.number), parse_index(t[5], line.number)};
      stmt.right = t[6];
      stmt.right_arc = {parse_index(t[7], line.number), parse_index(t[8], line.number)};
      if (!known(stmt.left)) throw ParseError(line.number, "undefined handle '" + stmt.left + "'");
      if (!known(stmt.right))
        throw ParseError(line.number, "undefined handle '" + stmt.right + "'");
    } else if (t[0] == "identify") {
      if (t.size() != 6 || t[2] != "=")
        throw ParseError(line.number, "expected 'identify <out> = <in> <keep> <remove>'");
      stmt.kind = ScriptStatement::Kind::Identify;
      stmt.out = t[1];
      stmt.left = t[3];
      stmt.keep = parse_index(t[4], line.number);
      stmt.remove = parse_index(t[5], line.number);
      if (!known(stmt.left)) throw ParseError(line.number, "undefined handle '" + stmt.left + "'");
    } else if (t[0] == "result") {
      if (t.size() != 2) throw ParseError(line.number, "expected 'result <handle>'");
      stmt.kind = ScriptStatement::Kind::Result;
      stmt.out = t[1];
      if (!known(stmt.out)) throw ParseError(line.number, "undefined handle '" + stmt.out + "'");
      have_result = true;
    } else {
      throw ParseError(line.number, "unknown statement '" + t[0] + "'");
    }
    if (stmt.kind != ScriptStatement::Kind::Result) defined.push_back(stmt.out);
    script.statements.push_back(std::move(stmt));
  }

  if (!have_result) throw ParseError(last_line + 1, "missing result statement");
  return script;
}

std::string serialize_script(const ConstructionScript& script) {
  std::string out;
  for (const ScriptStatement& s : script.statements) {
    switch (s.kind) {
      case ScriptStatement::Kind::Init:
        out += "init " + s.out + " K " + std::to_string(s.init_order) + "\n";
        break;
      case ScriptStatement::Kind::Join:
        out += "join " + s.out + " = " + s.left + " " + std::to_string(s.left_arc.tail) +
               " " + std::to_string(s.left_arc.head) + " " + s.right + " " +
               std::to_string(s.right_arc.tail) + " " + std::to_string(s.right_arc.head) +
               "\n";
        break;
      case ScriptStatement::Kind::Identify:
        out += "identify " + s.out + " = " + s.left + " " + std::to_string(s.keep) + " " +
               std::to_string(s.remove) + "\n";
        break;
      case ScriptStatement::Kind::Result:
        out += "result " + s.out + "\n";
        break;
    }
  }
  return out;
}

}  // namespace hajos
