#ifndef LEC_SOLVER_HPP
#define LEC_SOLVER_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lec/instance.hpp"

namespace lec {

struct SearchConfig {
  std::int64_t node_budget = -1;  // < 0 means unlimited
  bool propagation = true;
};

enum class SolveStatus { Colorable, NotColorable, BudgetExceeded };

struct SolveOutcome {
  SolveStatus status = SolveStatus::NotColorable;
  std::optional<Coloring> witness;
  std::int64_t nodes = 0;
};

namespace detail {

// fixed-width bitset over color ids
struct ColorSet {
  std::vector<std::uint64_t> w;

  explicit ColorSet(int bits = 0) : w(static_cast<size_t>((bits + 63) / 64), 0) {}
  void set(int i) { w[static_cast<size_t>(i) / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(int i) const {
    return (w[static_cast<size_t>(i) / 64] >> (i % 64)) & 1;
  }
  void reset(int i) { w[static_cast<size_t>(i) / 64] &= ~(std::uint64_t{1} << (i % 64)); }
};

struct BacktrackState {
  const LecInstance* inst;
  std::vector<ColorSet> used;              // per vertex
  std::vector<int> color_of;               // per edge, -1 uncolored
  std::vector<std::vector<int>> incident;  // per edge
  int uncolored;
  std::int64_t nodes = 0;
  std::int64_t budget;
  bool propagate;

  int remaining(int e, int* only = nullptr) const {
    const LecEdge& edge = inst->edges[static_cast<size_t>(e)];
    int cnt = 0;
    for (int col : edge.list)
      if (!used[static_cast<size_t>(edge.u)].test(col) &&
          !used[static_cast<size_t>(edge.v)].test(col)) {
        ++cnt;
        if (only) *only = col;
      }
    return cnt;
  }

  void assign(int e, int col) {
    color_of[static_cast<size_t>(e)] = col;
    used[static_cast<size_t>(inst->edges[static_cast<size_t>(e)].u)].set(col);
    used[static_cast<size_t>(inst->edges[static_cast<size_t>(e)].v)].set(col);
    --uncolored;
  }

  void unassign(int e) {
    int col = color_of[static_cast<size_t>(e)];
    color_of[static_cast<size_t>(e)] = -1;
    used[static_cast<size_t>(inst->edges[static_cast<size_t>(e)].u)].reset(col);
    used[static_cast<size_t>(inst->edges[static_cast<size_t>(e)].v)].reset(col);
    ++uncolored;
  }

  // returns false on a wipeout; trail records forced assignments for undo
  bool propagate_from(int seed, std::vector<int>& trail) {
    std::vector<int> queue{seed};
    while (!queue.empty()) {
      int e = queue.back();
      queue.pop_back();
      for (int f : incident[static_cast<size_t>(e)]) {
        if (color_of[static_cast<size_t>(f)] >= 0) continue;
        int only = -1;
        int cnt = remaining(f, &only);
        if (cnt == 0) return false;
        if (cnt == 1) {
          ++nodes;
          if (budget >= 0 && nodes > budget) throw budget_exhausted{};
          assign(f, only);
          trail.push_back(f);
          queue.push_back(f);
        }
      }
    }
    return true;
  }

  struct budget_exhausted {};

  bool search() {
    if (uncolored == 0) return true;
    // min-remaining-values edge, ties by edge id
    int best = -1, best_cnt = std::numeric_limits<int>::max();
    for (int e = 0; e < inst->num_edges(); ++e) {
      if (color_of[static_cast<size_t>(e)] >= 0) continue;
      int cnt = remaining(e);
      if (cnt < best_cnt) { best_cnt = cnt; best = e; }
      if (best_cnt == 0) break;
    }
    if (best_cnt == 0) return false;
    const LecEdge& edge = inst->edges[static_cast<size_t>(best)];
    for (int col : edge.list) {
      if (used[static_cast<size_t>(edge.u)].test(col) ||
          used[static_cast<size_t>(edge.v)].test(col))
        continue;
      ++nodes;
      if (budget >= 0 && nodes > budget) throw budget_exhausted{};
      assign(best, col);
      std::vector<int> trail;
      bool ok = !propagate || propagate_from(best, trail);
      if (ok && search()) return true;
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) unassign(*it);
      unassign(best);
    }
    return false;
  }
};

}  // namespace detail

// Complete search with min-remaining-values ordering and optional singleton
// propagation. Deterministic: colors are tried in increasing id order.
inline SolveOutcome solve_backtracking(const LecInstance& inst,
                                       const SearchConfig& cfg = {}) {
  detail::BacktrackState st;
  st.inst = &inst;
  st.used.assign(static_cast<size_t>(inst.num_vertices),
                 detail::ColorSet(static_cast<int>(inst.colors.size())));
  st.color_of.assign(static_cast<size_t>(inst.num_edges()), -1);
  st.uncolored = inst.num_edges();
  st.budget = cfg.node_budget;
  st.propagate = cfg.propagation;
  st.incident.assign(static_cast<size_t>(inst.num_edges()), {});
  for (int e = 0; e < inst.num_edges(); ++e)
    for (int f = e + 1; f < inst.num_edges(); ++f) {
      const auto& a = inst.edges[static_cast<size_t>(e)];
      const auto& b = inst.edges[static_cast<size_t>(f)];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
        st.incident[static_cast<size_t>(e)].push_back(f);
        st.incident[static_cast<size_t>(f)].push_back(e);
      }
    }

  SolveOutcome out;
  try {
    bool found = st.search();
    out.nodes = st.nodes;
    if (found) {
      out.status = SolveStatus::Colorable;
      Coloring w;
      w.assignment = st.color_of;
      out.witness = std::move(w);
    } else {
      out.status = SolveStatus::NotColorable;
    }
  } catch (const detail::BacktrackState::budget_exhausted&) {
    out.status = SolveStatus::BudgetExceeded;
    out.nodes = st.nodes;
  }
  return out;
}

// Exact number of proper list edge colorings by inclusion-exclusion over
// edge subsets. For each color, the matching-counting polynomial of the
// subset restricted to edges listing that color; the signed sum of products
// has the coloring count as its z^m coefficient. Size tracking forces the
// per-color matchings to partition the edge set.
inline std::int64_t count_colorings_ie(const LecInstance& inst) {
  const int m = inst.num_edges();
  if (m > 26) throw std::invalid_argument("count_colorings_ie: more than 26 edges");
  if (m == 0) return 1;

  std::vector<std::vector<char>> conflicts(static_cast<size_t>(m),
                                           std::vector<char>(static_cast<size_t>(m), 0));
  for (int e = 0; e < m; ++e)
    for (int f = 0; f < m; ++f) {
      const auto& a = inst.edges[static_cast<size_t>(e)];
      const auto& b = inst.edges[static_cast<size_t>(f)];
      if (e != f && (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v))
        conflicts[static_cast<size_t>(e)][static_cast<size_t>(f)] = 1;
    }

  const int num_colors = static_cast<int>(inst.colors.size());
  struct ColorTable {
    std::vector<int> edges;                       // member edge ids, ascending
    std::vector<std::vector<std::int64_t>> poly;  // per subset, matching counts by size
  };
  std::vector<ColorTable> tables;
  for (int col = 0; col < num_colors; ++col) {
    ColorTable t;
    for (int e = 0; e < m; ++e)
      if (std::binary_search(inst.edges[static_cast<size_t>(e)].list.begin(),
                             inst.edges[static_cast<size_t>(e)].list.end(), col))
        t.edges.push_back(e);
    if (t.edges.empty()) continue;  // identity factor
    const int k = static_cast<int>(t.edges.size());
    // conflict masks within this color's edge set
    std::vector<std::uint32_t> cmask(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (conflicts[static_cast<size_t>(t.edges[static_cast<size_t>(i)])]
                     [static_cast<size_t>(t.edges[static_cast<size_t>(j)])])
          cmask[static_cast<size_t>(i)] |= std::uint32_t{1} << j;
    t.poly.resize(static_cast<size_t>(1) << k);
    t.poly[0] = {1};
    for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << k); ++sub) {
      int low = 0;
      while (!((sub >> low) & 1)) ++low;
      std::uint32_t without = sub & ~(std::uint32_t{1} << low);
      std::uint32_t matched = without & ~cmask[static_cast<size_t>(low)];
      const auto& a = t.poly[without];
      const auto& b = t.poly[matched];
      std::vector<std::int64_t> p(std::max(a.size(), b.size() + 1), 0);
      for (size_t i = 0; i < a.size(); ++i) p[i] += a[i];
      for (size_t i = 0; i < b.size(); ++i) p[i + 1] += b[i];
      t.poly[sub] = std::move(p);
    }
    tables.push_back(std::move(t));
  }

  __int128 total = 0;
  std::vector<__int128> prod(static_cast<size_t>(m) + 1);
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << m); ++subset) {
    prod.assign(static_cast<size_t>(m) + 1, 0);
    prod[0] = 1;
    int prod_deg = 0;
    bool zero = false;
    for (const auto& t : tables) {
      std::uint32_t sub = 0;
      for (size_t i = 0; i < t.edges.size(); ++i)
        if ((subset >> t.edges[i]) & 1) sub |= std::uint32_t{1} << i;
      const auto& pol = t.poly[sub];
      if (pol.size() == 1 && pol[0] == 1) continue;
      int new_deg = std::min(m, prod_deg + static_cast<int>(pol.size()) - 1);
      std::vector<__int128> next(static_cast<size_t>(new_deg) + 1, 0);
      for (int i = 0; i <= prod_deg; ++i) {
        if (prod[static_cast<size_t>(i)] == 0) continue;
        for (size_t j = 0; j < pol.size() && i + static_cast<int>(j) <= m; ++j)
          next[static_cast<size_t>(i) + j] += prod[static_cast<size_t>(i)] * pol[j];
      }
      prod_deg = new_deg;
      zero = true;
      for (int i = 0; i <= prod_deg; ++i) {
        prod[static_cast<size_t>(i)] = next[static_cast<size_t>(i)];
        if (next[static_cast<size_t>(i)] != 0) zero = false;
      }
      if (zero) break;
    }
    if (zero || prod_deg < m) continue;  // cannot contribute to z^m
    int missing = m - __builtin_popcount(subset);
    if (missing % 2 == 0)
      total += prod[static_cast<size_t>(m)];
    else
      total -= prod[static_cast<size_t>(m)];
  }
  if (total < 0 || total > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("coloring count exceeds 64 bits");
  return static_cast<std::int64_t>(total);
}

enum class Verdict { Yes, No, Unknown };

// Exact dispatch: the subset sweep for small edge counts, the backtracker
// beyond it.
inline Verdict decide(const LecInstance& inst, const SearchConfig& cfg = {}) {
  if (inst.num_edges() <= 26)
    return count_colorings_ie(inst) > 0 ? Verdict::Yes : Verdict::No;
  SolveOutcome o = solve_backtracking(inst, cfg);
  switch (o.status) {
    case SolveStatus::Colorable: return Verdict::Yes;
    case SolveStatus::NotColorable: return Verdict::No;
    default: return Verdict::Unknown;
  }
}

}  // namespace lec

#endif
