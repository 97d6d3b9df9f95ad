#ifndef LEC_REDUCE_MULTI_HPP
#define LEC_REDUCE_MULTI_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lec/conflict.hpp"
#include "lec/instance.hpp"

namespace lec {

// Edge roles in the 2R+1-vertex multigraph. Positive edges run v_{2r}v_{2r+1},
// negative edges v_{2r+1}v_{2r+2}; clause edges are positive.
struct MultiRole {
  enum Kind { ClauseEdge1, ClauseEdge23, PositiveVar, NegativeVar } kind;
  int r = 0;
  int clause = -1;  // ClauseEdge1 / ClauseEdge23
  int slot = 0;     // 2 or 3 for ClauseEdge23
  int var = -1;     // PositiveVar / NegativeVar

  bool positive() const { return kind != NegativeVar; }
};

struct MultiProvenance {
  int R = 0;
  int num_vars = 0;
  std::vector<MultiRole> roles;  // indexed by edge id
};

struct MultiReduction {
  LecInstance instance;
  MultiProvenance provenance;
};

inline Color literal_color(const Literal& l) {
  return Color{l.positive ? ColorKind::PosLit : ColorKind::NegLit, l.var};
}

inline std::vector<Color> variable_pair_colors(int var) {
  return {Color{ColorKind::PosLit, var}, Color{ColorKind::NegLit, var}};
}

// Multigraph construction: vertices v_0..v_{2R}; per class r and
// clause C in C_r one edge listed with C's literals plus two edges listed
// with all six literal colors of C's variables; per variable absent from C_r
// one positive {x,~x} edge; per variable one negative {x,~x} edge.
inline MultiReduction build_multi(const Sat34Formula& psi,
                                  const ConflictGraph& cg) {
  const int n = psi.inner.num_vars;
  if (cg.num_clauses != static_cast<int>(psi.inner.clauses.size()))
    throw std::invalid_argument("conflict graph does not match formula");
  const int R = std::max(1, cg.num_classes);

  InstanceBuilder b(GraphMode::Multigraph, 2 * R + 1);
  for (int i = 0; i < n; ++i) {
    b.color_id(Color{ColorKind::PosLit, i});
    b.color_id(Color{ColorKind::NegLit, i});
  }

  MultiProvenance prov;
  prov.R = R;
  prov.num_vars = n;

  auto by_class = cg.members();
  by_class.resize(static_cast<size_t>(R));
  for (int r = 0; r < R; ++r) {
    std::vector<char> in_class(static_cast<size_t>(n), 0);
    for (int ci : by_class[static_cast<size_t>(r)]) {
      const Clause& c = psi.inner.clauses[static_cast<size_t>(ci)];
      for (const Literal& l : c) in_class[static_cast<size_t>(l.var)] = 1;
      std::vector<Color> clause_list;
      for (const Literal& l : c) clause_list.push_back(literal_color(l));
      b.add_edge(2 * r, 2 * r + 1, clause_list);
      prov.roles.push_back({MultiRole::ClauseEdge1, r, ci, 0, -1});
      std::vector<Color> six;
      for (const Literal& l : c) {
        six.push_back(Color{ColorKind::PosLit, l.var});
        six.push_back(Color{ColorKind::NegLit, l.var});
      }
      for (int slot = 2; slot <= 3; ++slot) {
        b.add_edge(2 * r, 2 * r + 1, six);
        prov.roles.push_back({MultiRole::ClauseEdge23, r, ci, slot, -1});
      }
    }
    for (int i = 0; i < n; ++i) {
      if (in_class[static_cast<size_t>(i)]) continue;
      b.add_edge(2 * r, 2 * r + 1, variable_pair_colors(i));
      prov.roles.push_back({MultiRole::PositiveVar, r, -1, 0, i});
    }
    for (int i = 0; i < n; ++i) {
      b.add_edge(2 * r + 1, 2 * r + 2, variable_pair_colors(i));
      prov.roles.push_back({MultiRole::NegativeVar, r, -1, 0, i});
    }
  }
  return {b.finish(), prov};
}

// Forward translation: clause edge 1 takes the first satisfied literal (by
// variable index), edges 2 and 3 the satisfied literals of the remaining two
// variables; other positive edges the satisfied literal, negative edges the
// unsatisfied one.
inline Coloring assignment_to_coloring_multi(const Sat34Formula& psi,
                                             const MultiProvenance& prov,
                                             const LecInstance& inst,
                                             const Assignment& f) {
  auto satisfied = [&](int var) {
    return Color{f.values[static_cast<size_t>(var)] ? ColorKind::PosLit
                                                    : ColorKind::NegLit,
                 var};
  };
  auto unsatisfied = [&](int var) {
    return Color{f.values[static_cast<size_t>(var)] ? ColorKind::NegLit
                                                    : ColorKind::PosLit,
                 var};
  };
  auto id_of = [&](const Color& c) {
    for (size_t i = 0; i < inst.colors.size(); ++i)
      if (inst.colors[i] == c) return static_cast<int>(i);
    throw std::logic_error("color not interned: " + color_name(c));
  };

  Coloring out;
  out.assignment.assign(static_cast<size_t>(inst.num_edges()), -1);
  for (int e = 0; e < inst.num_edges(); ++e) {
    const MultiRole& role = prov.roles[static_cast<size_t>(e)];
    switch (role.kind) {
      case MultiRole::ClauseEdge1: {
        const Clause& c = psi.inner.clauses[static_cast<size_t>(role.clause)];
        const Literal* first = nullptr;
        for (const Literal& l : c)
          if (f.satisfies(l)) { first = &l; break; }
        if (!first)
          throw std::invalid_argument("assignment violates clause " +
                                      std::to_string(role.clause));
        out.assignment[static_cast<size_t>(e)] = id_of(literal_color(*first));
        break;
      }
      case MultiRole::ClauseEdge23: {
        const Clause& c = psi.inner.clauses[static_cast<size_t>(role.clause)];
        int first_var = -1;
        for (const Literal& l : c)
          if (f.satisfies(l)) { first_var = l.var; break; }
        if (first_var < 0)
          throw std::invalid_argument("assignment violates clause " +
                                      std::to_string(role.clause));
        std::vector<int> others;
        for (const Literal& l : c)
          if (l.var != first_var) others.push_back(l.var);
        int var = others[static_cast<size_t>(role.slot - 2)];
        out.assignment[static_cast<size_t>(e)] = id_of(satisfied(var));
        break;
      }
      case MultiRole::PositiveVar:
        out.assignment[static_cast<size_t>(e)] = id_of(satisfied(role.var));
        break;
      case MultiRole::NegativeVar:
        out.assignment[static_cast<size_t>(e)] = id_of(unsatisfied(role.var));
        break;
    }
  }
  return out;
}

// Backward translation: x_i is true iff every edge of color x_i sits on a
// positive role. A literal color split across positive and negative roles
// signals a malformed coloring or instance.
inline Assignment coloring_to_assignment_multi(const MultiProvenance& prov,
                                               const LecInstance& inst,
                                               const Coloring& c) {
  const int n = prov.num_vars;
  std::vector<int> pos_seen(static_cast<size_t>(n), 0),
      neg_seen(static_cast<size_t>(n), 0);
  // per variable: roles of edges colored PosLit(i): +1 positive, -1 negative
  std::vector<int> pos_on_positive(static_cast<size_t>(n), 0),
      pos_on_negative(static_cast<size_t>(n), 0);
  for (int e = 0; e < inst.num_edges(); ++e) {
    const Color& col = inst.colors[static_cast<size_t>(
        c.assignment[static_cast<size_t>(e)])];
    if (col.kind != ColorKind::PosLit && col.kind != ColorKind::NegLit)
      continue;
    bool positive_role = prov.roles[static_cast<size_t>(e)].positive();
    if (col.kind == ColorKind::PosLit) {
      ++pos_seen[static_cast<size_t>(col.index)];
      (positive_role ? pos_on_positive : pos_on_negative)
          [static_cast<size_t>(col.index)]++;
    } else {
      ++neg_seen[static_cast<size_t>(col.index)];
    }
  }
  Assignment f;
  f.values.assign(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (pos_on_positive[static_cast<size_t>(i)] > 0 &&
        pos_on_negative[static_cast<size_t>(i)] > 0)
      throw std::logic_error("color x" + std::to_string(i) +
                             " appears on both positive and negative edges");
    f.values[static_cast<size_t>(i)] =
        pos_seen[static_cast<size_t>(i)] == 0 ||
        pos_on_negative[static_cast<size_t>(i)] == 0;
  }
  return f;
}

struct PathVerdict {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

// Checks that the edges colored {x_i, ~x_i} form the alternating path
// v_0..v_{2R}, with R edges per literal color, one color class entirely on
// positive edges and the other entirely on negative ones.
inline PathVerdict check_variable_path_multi(const LecInstance& inst,
                                             const MultiProvenance& prov,
                                             const Coloring& c, int var) {
  PathVerdict v;
  const int R = prov.R;
  // slot t = consecutive pair (v_t, v_{t+1})
  std::vector<std::vector<int>> per_slot(static_cast<size_t>(2 * R));
  int pos_count = 0, neg_count = 0;
  int pos_on_positive = 0, pos_on_negative = 0;
  int neg_on_positive = 0, neg_on_negative = 0;
  for (int e = 0; e < inst.num_edges(); ++e) {
    const Color& col = inst.colors[static_cast<size_t>(
        c.assignment[static_cast<size_t>(e)])];
    if (col.index != var ||
        (col.kind != ColorKind::PosLit && col.kind != ColorKind::NegLit))
      continue;
    const LecEdge& edge = inst.edges[static_cast<size_t>(e)];
    int lo = std::min(edge.u, edge.v), hi = std::max(edge.u, edge.v);
    if (hi != lo + 1) {
      v.fail("edge " + std::to_string(e) + " skips vertices");
      continue;
    }
    per_slot[static_cast<size_t>(lo)].push_back(e);
    bool positive_role = prov.roles[static_cast<size_t>(e)].positive();
    if (col.kind == ColorKind::PosLit) {
      ++pos_count;
      (positive_role ? pos_on_positive : pos_on_negative)++;
    } else {
      ++neg_count;
      (positive_role ? neg_on_positive : neg_on_negative)++;
    }
  }
  for (int t = 0; t < 2 * R; ++t)
    if (per_slot[static_cast<size_t>(t)].size() != 1)
      v.fail("expected exactly one edge on pair v" + std::to_string(t) + "v" +
             std::to_string(t + 1) + ", found " +
             std::to_string(per_slot[static_cast<size_t>(t)].size()));
  if (pos_count != R || neg_count != R)
    v.fail("color class sizes " + std::to_string(pos_count) + "/" +
           std::to_string(neg_count) + ", expected " + std::to_string(R) +
           " each");
  if (v.ok) {
    for (int t = 0; t + 1 < 2 * R; ++t) {
      int a = per_slot[static_cast<size_t>(t)][0];
      int b = per_slot[static_cast<size_t>(t + 1)][0];
      if (c.assignment[static_cast<size_t>(a)] ==
          c.assignment[static_cast<size_t>(b)])
        v.fail("colors do not alternate at pair " + std::to_string(t));
    }
  }
  bool pos_pure = pos_on_positive == 0 || pos_on_negative == 0;
  bool neg_pure = neg_on_positive == 0 || neg_on_negative == 0;
  if (!pos_pure || !neg_pure)
    v.fail("a literal color class mixes positive and negative edges");
  else if (pos_count > 0 && neg_count > 0 &&
           (pos_on_positive > 0) == (neg_on_positive > 0))
    v.fail("both literal color classes lie on the same edge side");
  return v;
}

}  // namespace lec

#endif
