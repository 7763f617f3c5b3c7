#include "hajos/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hajos/errors.hpp"

namespace hajos {

Digraph::Digraph(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("digraph order must be nonnegative");
  bits_.assign(static_cast<std::size_t>(order) * order, 0);
}

int Digraph::index(int tail, int head) const {
  check_vertex(tail);
  check_vertex(head);
  return tail * order_ + head;
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= order_) throw std::invalid_argument("vertex index out of range");
}

void Digraph::add_arc(int tail, int head) {
  if (tail == head) throw std::invalid_argument("loop arcs are not allowed");
  bits_[index(tail, head)] = 1;
}

void Digraph::remove_arc(int tail, int head) { bits_[index(tail, head)] = 0; }

int Digraph::arc_count() const {
  return static_cast<int>(std::accumulate(bits_.begin(), bits_.end(), 0));
}

std::vector<ArcRef> Digraph::arcs() const {
  std::vector<ArcRef> out;
  out.reserve(bits_.size());
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j)
      if (bits_[static_cast<std::size_t>(i) * order_ + j]) out.push_back({i, j});
  return out;
}

ArcRef Digraph::arc_at(int k) const {
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j)
      if (bits_[static_cast<std::size_t>(i) * order_ + j] && k-- == 0) return {i, j};
  throw std::invalid_argument("arc index out of range");
}

std::vector<int> Digraph::out_neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int j = 0; j < order_; ++j)
    if (bits_[static_cast<std::size_t>(v) * order_ + j]) out.push_back(j);
  return out;
}

std::vector<int> Digraph::in_neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int i = 0; i < order_; ++i)
    if (bits_[static_cast<std::size_t>(i) * order_ + v]) out.push_back(i);
  return out;
}

Digraph complete_symmetric(int k) {
  if (k < 1) throw std::invalid_argument("complete_symmetric requires k >= 1");
  Digraph d(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) d.add_arc(i, j);
  return d;
}

Digraph symmetric_cycle(int k) {
  if (k < 3) throw std::invalid_argument("symmetric_cycle requires k >= 3");
  Digraph d(k);
  for (int i = 0; i < k; ++i) {
    d.add_arc(i, (i + 1) % k);
    d.add_arc((i + 1) % k, i);
  }
  return d;
}

Digraph directed_cycle(int k) {
  if (k < 2) throw std::invalid_argument("directed_cycle requires k >= 2");
  Digraph d(k);
  for (int i = 0; i < k; ++i) d.add_arc(i, (i + 1) % k);
  return d;
}

PairCounts pair_counts(const Digraph& d) {
  PairCounts pc;
  const int n = d.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool ij = d.arc_unchecked(i, j), ji = d.arc_unchecked(j, i);
      if (ij && ji)
        ++pc.digons;
      else if (ij || ji)
        ++pc.asymmetric_arcs;
      else
        ++pc.non_adjacent_pairs;
    }
  return pc;
}

namespace {

bool is_digon(const Digraph& d, int u, int v) {
  return d.arc_unchecked(u, v) && d.arc_unchecked(v, u);
}
bool adjacent(const Digraph& d, int u, int v) {
  return d.arc_unchecked(u, v) || d.arc_unchecked(v, u);
}

}  // namespace

int symmetric_triangle_count(const Digraph& d) {
  const int n = d.order();
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!is_digon(d, i, j)) continue;
      for (int k = j + 1; k < n; ++k)
        if (is_digon(d, i, k) && is_digon(d, j, k)) ++count;
    }
  return count;
}

int mixed_triangle_count(const Digraph& d) {
  const int n = d.order();
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!adjacent(d, i, j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!adjacent(d, i, k) || !adjacent(d, j, k)) continue;
        if (!(is_digon(d, i, j) && is_digon(d, i, k) && is_digon(d, j, k))) ++count;
      }
    }
  return count;
}

bool are_independent(const Digraph& d, int u, int v) {
  if (u < 0 || u >= d.order() || v < 0 || v >= d.order())
    throw std::invalid_argument("vertex index out of range");
  return u != v && !d.arc(u, v) && !d.arc(v, u);
}

std::vector<int> non_adjacent_vertices(const Digraph& d, int u) {
  std::vector<int> out;
  for (int w = 0; w < d.order(); ++w)
    if (w != u && !d.arc_unchecked(u, w) && !d.arc_unchecked(w, u)) out.push_back(w);
  return out;
}

Digraph delete_vertex(const Digraph& d, int v) {
  if (v < 0 || v >= d.order()) throw std::invalid_argument("vertex index out of range");
  Digraph out(d.order() - 1);
  for (int i = 0; i < d.order(); ++i) {
    if (i == v) continue;
    for (int j = 0; j < d.order(); ++j) {
      if (j == v || !d.arc(i, j)) continue;
      out.add_arc(i < v ? i : i - 1, j < v ? j : j - 1);
    }
  }
  return out;
}

Digraph permute(const Digraph& d, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != d.order())
    throw std::invalid_argument("permutation size must equal digraph order");
  Digraph out(d.order());
  for (const ArcRef& a : d.arcs()) out.add_arc(perm[a.tail], perm[a.head]);
  return out;
}

namespace {

// Backtracking vertex-by-vertex mapping with degree-pair pruning.
bool extend_isomorphism(const Digraph& d1, const Digraph& d2, std::vector<int>& map,
                        std::vector<bool>& used, int next) {
  const int n = d1.order();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      ok = d1.arc(next, prev) == d2.arc(cand, map[prev]) &&
           d1.arc(prev, next) == d2.arc(map[prev], cand);
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (extend_isomorphism(d1, d2, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

std::vector<std::pair<int, int>> sorted_degree_pairs(const Digraph& d) {
  std::vector<std::pair<int, int>> degs;
  degs.reserve(d.order());
  for (int v = 0; v < d.order(); ++v)
    degs.emplace_back(static_cast<int>(d.out_neighbors(v).size()),
                      static_cast<int>(d.in_neighbors(v).size()));
  std::sort(degs.begin(), degs.end());
  return degs;
}

}  // namespace

bool is_isomorphic(const Digraph& d1, const Digraph& d2) {
  if (d1.order() != d2.order()) return false;
  if (d1.order() > 9) throw TooLargeError("isomorphism search is capped at order 9");
  if (d1.arc_count() != d2.arc_count()) return false;
  if (sorted_degree_pairs(d1) != sorted_degree_pairs(d2)) return false;
  std::vector<int> map(d1.order(), -1);
  std::vector<bool> used(d1.order(), false);
  return extend_isomorphism(d1, d2, map, used, 0);
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
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string_view::npos || line[start] == '#') {
      if (pos > text.size()) break;
      continue;
    }
    Line out{line_no, {}};
    std::istringstream ss{std::string(line)};
    std::string tok;
    while (ss >> tok) {
      if (tok.front() == '#') break;
      out.tokens.push_back(tok);
    }
    lines.push_back(std::move(out));
    if (pos > text.size()) break;
  }
  return lines;
}

int parse_int(const std::string& tok, std::size_t line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
    throw ParseError(line, std::string("expected nonnegative integer for ") + what +
                               ", got '" + tok + "'");
  return value;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing 'n <order>' line");

  const Line& header = lines.front();
  if (header.tokens.size() != 2 || header.tokens[0] != "n")
    throw ParseError(header.number, "first statement must be 'n <order>'");
  Digraph d(parse_int(header.tokens[1], header.number, "order"));

  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0] != "arc")
      throw ParseError(line.number, "unknown statement '" + line.tokens[0] + "'");
    if (line.tokens.size() != 3)
      throw ParseError(line.number, "expected 'arc <tail> <head>'");
    const int tail = parse_int(line.tokens[1], line.number, "tail");
    const int head = parse_int(line.tokens[2], line.number, "head");
    if (tail >= d.order() || head >= d.order())
      throw ParseError(line.number, "vertex index out of range");
    if (tail == head) throw ParseError(line.number, "loop arcs are not allowed");
    if (d.arc(tail, head)) throw ParseError(line.number, "duplicate arc");
    d.add_arc(tail, head);
  }
  return d;
}

std::string serialize_digraph(const Digraph& d) {
  std::string out = "n " + std::to_string(d.order()) + "\n";
  for (const ArcRef& a : d.arcs())
    out += "arc " + std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  return out;
}

std::string to_dot(const Digraph& d) {
  std::string out = "digraph D {\n";
  for (int v = 0; v < d.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const ArcRef& a : d.arcs()) {
    if (d.arc(a.head, a.tail)) {
      if (a.tail > a.head) continue;  // digon already emitted at its first visit
      out += "  " + std::to_string(a.tail) + " -> " + std::to_string(a.head) +
             " [dir=both];\n";
    } else {
      out += "  " + std::to_string(a.tail) + " -> " + std::to_string(a.head) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace hajos
