#ifndef LEC_INSTANCE_HPP
#define LEC_INSTANCE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lec {

enum class ColorKind { PosLit, NegLit, AuxA, AuxB, AuxC, AuxD };

// Colors are structured tags: literal colors per variable, auxiliary a/b
// per variable and c/d per clause. The reduction checkers need the tags.
struct Color {
  ColorKind kind = ColorKind::PosLit;
  int index = 0;  // variable index for PosLit/NegLit/AuxA/AuxB, clause for AuxC/AuxD

  friend bool operator==(const Color&, const Color&) = default;
  friend auto operator<=>(const Color&, const Color&) = default;
};

inline std::string color_name(const Color& c) {
  switch (c.kind) {
    case ColorKind::PosLit: return "x" + std::to_string(c.index);
    case ColorKind::NegLit: return "~x" + std::to_string(c.index);
    case ColorKind::AuxA: return "a" + std::to_string(c.index);
    case ColorKind::AuxB: return "b" + std::to_string(c.index);
    case ColorKind::AuxC: return "c" + std::to_string(c.index);
    case ColorKind::AuxD: return "d" + std::to_string(c.index);
  }
  return "?";
}

inline Color parse_color_name(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty color name");
  size_t pos = 1;
  ColorKind kind;
  if (s[0] == 'x') kind = ColorKind::PosLit;
  else if (s[0] == '~') { kind = ColorKind::NegLit; pos = 2;
    if (s.size() < 2 || s[1] != 'x') throw std::invalid_argument("bad color name: " + s); }
  else if (s[0] == 'a') kind = ColorKind::AuxA;
  else if (s[0] == 'b') kind = ColorKind::AuxB;
  else if (s[0] == 'c') kind = ColorKind::AuxC;
  else if (s[0] == 'd') kind = ColorKind::AuxD;
  else throw std::invalid_argument("bad color name: " + s);
  return Color{kind, std::stoi(s.substr(pos))};
}

enum class GraphMode { Multigraph, Simple };

struct LecEdge {
  int u = 0;
  int v = 0;
  std::vector<int> list;  // sorted color ids, nonempty
};

struct LecInstance {
  GraphMode mode = GraphMode::Multigraph;
  int num_vertices = 0;
  std::vector<Color> colors;  // color id -> tag
  std::vector<LecEdge> edges; // edge id = position

  int num_edges() const { return static_cast<int>(edges.size()); }
  std::int64_t total_list_length() const {
    std::int64_t L = 0;
    for (const LecEdge& e : edges) L += static_cast<std::int64_t>(e.list.size());
    return L;
  }
};

// Interns colors and enforces the structural invariants at insertion time:
// no loops, nonempty lists, and in simple mode no repeated endpoint pair.
class InstanceBuilder {
 public:
  InstanceBuilder(GraphMode mode, int num_vertices) {
    inst_.mode = mode;
    inst_.num_vertices = num_vertices;
  }

  int color_id(const Color& c) {
    auto it = ids_.find(c);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(inst_.colors.size());
    inst_.colors.push_back(c);
    ids_.emplace(c, id);
    return id;
  }

  int add_edge(int u, int v, const std::vector<Color>& list) {
    if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
    if (u < 0 || v < 0 || u >= inst_.num_vertices || v >= inst_.num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (list.empty()) throw std::invalid_argument("empty color list");
    if (inst_.mode == GraphMode::Simple) {
      auto key = std::minmax(u, v);
      if (!pairs_.insert(key).second)
        throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" +
                                    std::to_string(v) + " in simple mode");
    }
    LecEdge e;
    e.u = u;
    e.v = v;
    for (const Color& c : list) e.list.push_back(color_id(c));
    std::sort(e.list.begin(), e.list.end());
    e.list.erase(std::unique(e.list.begin(), e.list.end()), e.list.end());
    inst_.edges.push_back(std::move(e));
    return static_cast<int>(inst_.edges.size()) - 1;
  }

  bool adjacent(int u, int v) const {
    return pairs_.count(std::minmax(u, v)) > 0;
  }

  const LecInstance& current() const { return inst_; }
  LecInstance finish() { return std::move(inst_); }

 private:
  LecInstance inst_;
  std::map<Color, int> ids_;
  std::set<std::pair<int, int>> pairs_;
};

// Edge-to-color map; -1 marks an uncolored edge.
struct Coloring {
  std::vector<int> assignment;

  bool total() const {
    return std::none_of(assignment.begin(), assignment.end(),
                        [](int c) { return c < 0; });
  }
};

struct ColoringViolation {
  enum Kind { NotInList, IncidentClash } kind;
  int edge_a = -1;
  int edge_b = -1;  // second edge for clashes
  std::string detail;
};

inline std::vector<ColoringViolation> validate_coloring(const LecInstance& inst,
                                                        const Coloring& c) {
  if (static_cast<int>(c.assignment.size()) != inst.num_edges() || !c.total())
    throw std::invalid_argument("validate_coloring: partial coloring");
  std::vector<ColoringViolation> out;
  for (int e = 0; e < inst.num_edges(); ++e) {
    const LecEdge& edge = inst.edges[static_cast<size_t>(e)];
    int col = c.assignment[static_cast<size_t>(e)];
    if (!std::binary_search(edge.list.begin(), edge.list.end(), col))
      out.push_back({ColoringViolation::NotInList, e, -1,
                     "edge " + std::to_string(e) + " colored outside its list"});
  }
  // incidence: group edges by endpoint
  std::vector<std::vector<int>> at(static_cast<size_t>(inst.num_vertices));
  for (int e = 0; e < inst.num_edges(); ++e) {
    at[static_cast<size_t>(inst.edges[static_cast<size_t>(e)].u)].push_back(e);
    at[static_cast<size_t>(inst.edges[static_cast<size_t>(e)].v)].push_back(e);
  }
  for (int v = 0; v < inst.num_vertices; ++v) {
    const auto& es = at[static_cast<size_t>(v)];
    for (size_t i = 0; i < es.size(); ++i)
      for (size_t j = i + 1; j < es.size(); ++j)
        if (c.assignment[static_cast<size_t>(es[i])] ==
            c.assignment[static_cast<size_t>(es[j])])
          out.push_back({ColoringViolation::IncidentClash, es[i], es[j],
                         "edges " + std::to_string(es[i]) + " and " +
                             std::to_string(es[j]) + " share vertex " +
                             std::to_string(v) + " and color"});
  }
  return out;
}

// Enumerates all proper list colorings by backtracking in edge-id order,
// colors tried in increasing id order. Callback may return false to stop.
inline void for_each_coloring(const LecInstance& inst,
                              const std::function<bool(const Coloring&)>& fn) {
  const int m = inst.num_edges();
  std::vector<std::vector<int>> incident(static_cast<size_t>(m));
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      const auto& a = inst.edges[static_cast<size_t>(e)];
      const auto& b = inst.edges[static_cast<size_t>(f)];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
        incident[static_cast<size_t>(e)].push_back(f);
        incident[static_cast<size_t>(f)].push_back(e);
      }
    }
  Coloring c;
  c.assignment.assign(static_cast<size_t>(m), -1);
  bool stop = false;
  std::function<void(int)> rec = [&](int e) {
    if (stop) return;
    if (e == m) {
      if (!fn(c)) stop = true;
      return;
    }
    for (int col : inst.edges[static_cast<size_t>(e)].list) {
      bool ok = true;
      for (int f : incident[static_cast<size_t>(e)])
        if (c.assignment[static_cast<size_t>(f)] == col) { ok = false; break; }
      if (!ok) continue;
      c.assignment[static_cast<size_t>(e)] = col;
      rec(e + 1);
      c.assignment[static_cast<size_t>(e)] = -1;
      if (stop) return;
    }
  };
  rec(0);
}

struct BruteForceResult {
  std::int64_t count = 0;
  std::optional<Coloring> witness;
};

// Exact count of valid colorings with the lexicographically first witness.
// Guard: product of list sizes <= 1e7 or at most 20 edges.
inline BruteForceResult brute_force_colorings(const LecInstance& inst,
                                              std::int64_t limit = -1) {
  double product = 1.0;
  for (const LecEdge& e : inst.edges) product *= static_cast<double>(e.list.size());
  if (product > 1e7 && inst.num_edges() > 20)
    throw std::invalid_argument("brute_force_colorings: guard exceeded");
  BruteForceResult r;
  for_each_coloring(inst, [&](const Coloring& c) {
    if (!r.witness) r.witness = c;
    ++r.count;
    return limit < 0 || r.count < limit;
  });
  return r;
}

}  // namespace lec

#endif
