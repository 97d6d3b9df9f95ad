#ifndef LEC_REDUCE_SIMPLE_HPP
#define LEC_REDUCE_SIMPLE_HPP

#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lec/conflict.hpp"
#include "lec/instance.hpp"
#include "lec/reduce_multi.hpp"  // literal_color, variable_pair_colors, PathVerdict

namespace lec {

// Layer geometry of the layered simple-graph construction. Vertex ids are
// assigned layer-major: |L_0| = |L_1| = s, |L_i| = 6s+3 for the gadget
// layers 2..6R+1, |L_{6R+2}| = s+1.
struct LayerLayout {
  int s = 0;  // sqrt(n)
  int R = 0;

  int num_layers() const { return 6 * R + 3; }
  int layer_size(int i) const {
    if (i == 0 || i == 1) return s;
    if (i == num_layers() - 1) return s + 1;
    return 6 * s + 3;
  }
  int layer_start(int i) const {
    int off = 0;
    for (int j = 0; j < i; ++j) off += layer_size(j);
    return off;
  }
  int total_vertices() const { return layer_start(num_layers()); }
  int layer_of(int vertex) const {
    int off = 0;
    for (int i = 0; i < num_layers(); ++i) {
      off += layer_size(i);
      if (vertex < off) return i;
    }
    throw std::out_of_range("vertex beyond last layer");
  }
};

struct SimpleRole {
  enum Kind {
    InitEdge,     // L_0 - L_1, variable var
    FinalEdge,    // L_{6R+1} - L_{6R+2}, variable var
    VarStep,      // non-clause variable edge into `layer`
    ClauseStep1,  // clause edge into even layer, slot j in 1..3
    ClauseStep2,  // clause edge into odd layer, slot j in 1..3
    JumpA,        // v_{6r+2,i_j} -> w_j at layer 6r+6
    JumpB,        // v_{6r+4,i_j} -> w_j at layer 6r+6
    JumpZ3,       // z_{6r+3,C} -> z_{6r+7,C}
    JumpZ5        // z_{6r+5,C} -> z_{6r+7,C}
  } kind;
  int var = -1;
  int clause = -1;
  int j = 0;      // slot within the clause for ClauseStep/Jump roles
  int layer = 0;  // target layer of the edge
};

struct SimpleProvenance {
  LayerLayout layout;
  std::vector<std::vector<int>> vtab;       // [layer][var] -> vertex, -1 unset
  std::map<std::pair<int, int>, int> ztab;  // (odd layer, clause) -> vertex
  std::vector<SimpleRole> roles;            // indexed by edge id
  // carried formula context, so checkers need no extra inputs
  int num_vars = 0;
  std::vector<Clause> clauses;
  std::vector<int> clause_class;
};

struct SimpleReduction {
  LecInstance instance;
  SimpleProvenance provenance;
};

class construction_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Mutable state of the layered build.
struct SimpleBuildState {
  LayerLayout layout;
  InstanceBuilder* b;
  SimpleProvenance* prov;
  std::vector<int> cons_indeg;   // edges from the previous layer
  std::vector<int> jump_out;     // edges to layers beyond the next one

  int pick(int layer, int max_indeg, const std::vector<int>& avoid_adjacent,
           const std::vector<int>& avoid_vertices, const std::string& what) {
    int start = layout.layer_start(layer);
    int size = layout.layer_size(layer);
    for (int v = start; v < start + size; ++v) {
      if (cons_indeg[static_cast<size_t>(v)] > max_indeg) continue;
      bool bad = false;
      for (int a : avoid_adjacent)
        if (b->adjacent(a, v)) { bad = true; break; }
      if (bad) continue;
      for (int a : avoid_vertices)
        if (a == v) { bad = true; break; }
      if (bad) continue;
      return v;
    }
    throw construction_error("no candidate vertex in layer " +
                             std::to_string(layer) + " for " + what);
  }

  int add_consecutive(int u, int v, const std::vector<Color>& list,
                      SimpleRole role) {
    int id = b->add_edge(u, v, list);
    prov->roles.push_back(role);
    ++cons_indeg[static_cast<size_t>(v)];
    return id;
  }

  int add_jump(int u, int v, const std::vector<Color>& list, SimpleRole role) {
    int id = b->add_edge(u, v, list);
    prov->roles.push_back(role);
    ++jump_out[static_cast<size_t>(u)];
    return id;
  }
};

}  // namespace detail

// Layered construction. Requires the variable count to be a
// perfect square (run pad_to_square first). Candidate selection is the
// smallest vertex index satisfying the constraints, so identical inputs
// produce identical instances.
inline SimpleReduction build_simple(const Sat34Formula& psi,
                                    const ConflictGraph& cg) {
  const int n = psi.inner.num_vars;
  if (!is_perfect_square(n))
    throw std::invalid_argument("variable count " + std::to_string(n) +
                                " is not a perfect square; pad first");
  if (cg.num_clauses != static_cast<int>(psi.inner.clauses.size()))
    throw std::invalid_argument("conflict graph does not match formula");
  const int s = int_sqrt(n);
  const int R = std::max(1, cg.num_classes);

  SimpleReduction out;
  SimpleProvenance& prov = out.provenance;
  prov.layout = LayerLayout{s, R};
  prov.num_vars = n;
  prov.clauses = psi.inner.clauses;
  prov.clause_class = cg.classes;
  prov.clause_class.resize(psi.inner.clauses.size());

  const LayerLayout& lay = prov.layout;
  InstanceBuilder b(GraphMode::Simple, lay.total_vertices());
  for (int i = 0; i < n; ++i) {
    b.color_id(Color{ColorKind::PosLit, i});
    b.color_id(Color{ColorKind::NegLit, i});
  }

  prov.vtab.assign(static_cast<size_t>(lay.num_layers()),
                   std::vector<int>(static_cast<size_t>(n), -1));
  detail::SimpleBuildState st{lay, &b, &prov,
                              std::vector<int>(static_cast<size_t>(lay.total_vertices()), 0),
                              std::vector<int>(static_cast<size_t>(lay.total_vertices()), 0)};

  // L_0 - L_1: complete bipartite, variable i on the edge (i / s, i % s).
  for (int i = 0; i < n; ++i) {
    int u = lay.layer_start(0) + i / s;
    int v = lay.layer_start(1) + i % s;
    st.add_consecutive(u, v, variable_pair_colors(i),
                       SimpleRole{SimpleRole::InitEdge, i, -1, 0, 1});
    prov.vtab[0][static_cast<size_t>(i)] = u;
    prov.vtab[1][static_cast<size_t>(i)] = v;
  }

  auto by_class = cg.members();
  by_class.resize(static_cast<size_t>(R));

  for (int r = 0; r < R; ++r) {
    std::vector<char> in_class(static_cast<size_t>(n), 0);
    for (int ci : by_class[static_cast<size_t>(r)])
      for (const Literal& l : psi.inner.clauses[static_cast<size_t>(ci)])
        in_class[static_cast<size_t>(l.var)] = 1;

    for (int ell = 6 * r + 2; ell <= 6 * r + 7; ++ell) {
      const bool even_step = (ell - 6 * r) % 2 == 0;
      for (int ci : by_class[static_cast<size_t>(r)]) {
        const Clause& c = psi.inner.clauses[static_cast<size_t>(ci)];
        if (even_step) {
          // step 1: one target vertex per clause variable
          std::vector<int> chosen;
          for (int j = 0; j < 3; ++j) {
            int var = c[static_cast<size_t>(j)].var;
            int src = prov.vtab[static_cast<size_t>(ell - 1)][static_cast<size_t>(var)];
            std::vector<int> avoid_adj{src};
            if (ell == 6 * r + 6) {
              avoid_adj.push_back(
                  prov.vtab[static_cast<size_t>(6 * r + 2)][static_cast<size_t>(var)]);
              avoid_adj.push_back(
                  prov.vtab[static_cast<size_t>(6 * r + 4)][static_cast<size_t>(var)]);
            }
            int w = st.pick(ell, s - 1, avoid_adj, chosen,
                            "clause " + std::to_string(ci) + " slot " +
                                std::to_string(j + 1));
            chosen.push_back(w);
            st.add_consecutive(src, w, variable_pair_colors(var),
                               SimpleRole{SimpleRole::ClauseStep1, var, ci, j + 1, ell});
            prov.vtab[static_cast<size_t>(ell)][static_cast<size_t>(var)] = w;
            if (ell == 6 * r + 6) {
              st.add_jump(avoid_adj[1], w,
                          {Color{ColorKind::PosLit, var},
                           Color{ColorKind::NegLit, var},
                           Color{ColorKind::AuxA, var}},
                          SimpleRole{SimpleRole::JumpA, var, ci, j + 1, ell});
              st.add_jump(avoid_adj[2], w,
                          {Color{ColorKind::PosLit, var},
                           Color{ColorKind::NegLit, var},
                           Color{ColorKind::AuxB, var}},
                          SimpleRole{SimpleRole::JumpB, var, ci, j + 1, ell});
            }
          }
        } else {
          // step 2: the three variable paths meet in a single vertex
          std::vector<int> sources;
          for (int j = 0; j < 3; ++j)
            sources.push_back(prov.vtab[static_cast<size_t>(ell - 1)][static_cast<size_t>(
                c[static_cast<size_t>(j)].var)]);
          std::vector<int> avoid_adj = sources;
          if (ell == 6 * r + 7) {
            avoid_adj.push_back(prov.ztab.at({6 * r + 3, ci}));
            avoid_adj.push_back(prov.ztab.at({6 * r + 5, ci}));
          }
          int z = st.pick(ell, s - 3, avoid_adj, {},
                          "clause " + std::to_string(ci) + " meeting point");
          for (int j = 0; j < 3; ++j) {
            const Literal& lit = c[static_cast<size_t>(j)];
            std::vector<Color> list;
            if (ell == 6 * r + 3)
              list = {Color{ColorKind::PosLit, lit.var},
                      Color{ColorKind::NegLit, lit.var},
                      Color{ColorKind::AuxA, lit.var}};
            else if (ell == 6 * r + 5)
              list = {Color{ColorKind::PosLit, lit.var},
                      Color{ColorKind::NegLit, lit.var},
                      Color{ColorKind::AuxB, lit.var}};
            else
              list = {literal_color(lit), Color{ColorKind::AuxC, ci},
                      Color{ColorKind::AuxD, ci}};
            st.add_consecutive(sources[static_cast<size_t>(j)], z, list,
                               SimpleRole{SimpleRole::ClauseStep2, lit.var, ci,
                                          j + 1, ell});
            prov.vtab[static_cast<size_t>(ell)][static_cast<size_t>(lit.var)] = z;
          }
          prov.ztab[{ell, ci}] = z;
          if (ell == 6 * r + 7) {
            std::vector<Color> six;
            for (const Literal& l : c) {
              six.push_back(Color{ColorKind::PosLit, l.var});
              six.push_back(Color{ColorKind::NegLit, l.var});
            }
            st.add_jump(prov.ztab.at({6 * r + 3, ci}), z, six,
                        SimpleRole{SimpleRole::JumpZ3, -1, ci, 0, ell});
            st.add_jump(prov.ztab.at({6 * r + 5, ci}), z, six,
                        SimpleRole{SimpleRole::JumpZ5, -1, ci, 0, ell});
          }
        }
      }
      for (int i = 0; i < n; ++i) {
        if (in_class[static_cast<size_t>(i)]) continue;
        int src = prov.vtab[static_cast<size_t>(ell - 1)][static_cast<size_t>(i)];
        int w = st.pick(ell, s - 1, {src}, {},
                        "variable x" + std::to_string(i));
        st.add_consecutive(src, w, variable_pair_colors(i),
                           SimpleRole{SimpleRole::VarStep, i, -1, 0, ell});
        prov.vtab[static_cast<size_t>(ell)][static_cast<size_t>(i)] = w;
      }
      // per-layer checkpoint: every variable crossed this pair exactly once
      for (int i = 0; i < n; ++i)
        if (prov.vtab[static_cast<size_t>(ell)][static_cast<size_t>(i)] < 0)
          throw construction_error("variable x" + std::to_string(i) +
                                   " has no carrier in layer " +
                                   std::to_string(ell));
    }
  }

  // final layer
  const int last = lay.num_layers() - 1;
  for (int i = 0; i < n; ++i) {
    int src = prov.vtab[static_cast<size_t>(last - 1)][static_cast<size_t>(i)];
    int w = st.pick(last, std::numeric_limits<int>::max(), {src}, {},
                    "final edge of x" + std::to_string(i));
    st.add_consecutive(src, w, variable_pair_colors(i),
                       SimpleRole{SimpleRole::FinalEdge, i, -1, 0, last});
    prov.vtab[static_cast<size_t>(last)][static_cast<size_t>(i)] = w;
  }

  out.instance = b.finish();
  return out;
}

struct InvariantViolation {
  std::string rule;
  std::string detail;
};

// Global audit of the five build invariants (uniqueness, flow, lists,
// indegrees, jumping edges) and the four structural claims (outdegrees,
// per-pair edge bound, meeting points, carrier endpoints).
inline std::vector<InvariantViolation> check_invariants(
    const LecInstance& inst, const SimpleProvenance& prov) {
  std::vector<InvariantViolation> out;
  const LayerLayout& lay = prov.layout;
  const int n = prov.num_vars;
  const int layers = lay.num_layers();
  auto add = [&out](const std::string& rule, const std::string& detail) {
    out.push_back({rule, detail});
  };

  std::vector<int> layer_of(static_cast<size_t>(inst.num_vertices));
  for (int v = 0; v < inst.num_vertices; ++v)
    layer_of[static_cast<size_t>(v)] = lay.layer_of(v);

  auto literal_var = [&](int color_id) {
    const Color& c = inst.colors[static_cast<size_t>(color_id)];
    return (c.kind == ColorKind::PosLit || c.kind == ColorKind::NegLit)
               ? c.index
               : -1;
  };

  // uniqueness + flow + carrier endpoints, per consecutive layer pair
  std::vector<std::vector<std::vector<int>>> pair_edges(
      static_cast<size_t>(layers - 1),
      std::vector<std::vector<int>>(static_cast<size_t>(n)));
  std::vector<int> cons_indeg(static_cast<size_t>(inst.num_vertices), 0);
  std::vector<int> cons_outdeg(static_cast<size_t>(inst.num_vertices), 0);
  std::vector<int> jump_out(static_cast<size_t>(inst.num_vertices), 0);
  std::vector<int> pair_count(static_cast<size_t>(layers - 1), 0);

  for (int e = 0; e < inst.num_edges(); ++e) {
    const LecEdge& edge = inst.edges[static_cast<size_t>(e)];
    int lu = layer_of[static_cast<size_t>(edge.u)];
    int lv = layer_of[static_cast<size_t>(edge.v)];
    int lo = std::min(lu, lv), hi = std::max(lu, lv);
    int lo_v = lu < lv ? edge.u : edge.v;
    int hi_v = lu < lv ? edge.v : edge.u;
    if (lo == hi) add("layering", "edge " + std::to_string(e) + " stays inside one layer");
    bool has_literal = false;
    std::set<int> vars;
    for (int col : edge.list) {
      int var = literal_var(col);
      if (var >= 0) { has_literal = true; vars.insert(var); }
    }
    if (!has_literal)
      add("lists", "edge " + std::to_string(e) + " has no literal color");
    if (hi == lo + 1) {
      ++cons_indeg[static_cast<size_t>(hi_v)];
      ++cons_outdeg[static_cast<size_t>(lo_v)];
      ++pair_count[static_cast<size_t>(lo)];
      for (int var : vars) pair_edges[static_cast<size_t>(lo)][static_cast<size_t>(var)].push_back(e);
    } else {
      ++jump_out[static_cast<size_t>(lo_v)];
    }
    // endpoints must be the carrier vertices of every listed variable
    for (int var : vars) {
      if (prov.vtab[static_cast<size_t>(lu)][static_cast<size_t>(var)] != edge.u ||
          prov.vtab[static_cast<size_t>(lv)][static_cast<size_t>(var)] != edge.v)
        add("carrier-endpoints", "edge " + std::to_string(e) +
                                     " lists x" + std::to_string(var) +
                                     " but misses its carrier vertex");
    }
  }

  for (int i = 0; i + 1 < layers; ++i)
    for (int var = 0; var < n; ++var)
      if (pair_edges[static_cast<size_t>(i)][static_cast<size_t>(var)].size() != 1)
        add("uniqueness", "layers " + std::to_string(i) + "-" +
                              std::to_string(i + 1) + ": " +
                              std::to_string(pair_edges[static_cast<size_t>(i)][static_cast<size_t>(var)].size()) +
                              " edges carry x" + std::to_string(var));

  // flow: the carrier entering L_i equals the carrier leaving L_i
  for (int i = 1; i + 1 < layers; ++i)
    for (int var = 0; var < n; ++var) {
      const auto& in_e = pair_edges[static_cast<size_t>(i - 1)][static_cast<size_t>(var)];
      const auto& out_e = pair_edges[static_cast<size_t>(i)][static_cast<size_t>(var)];
      if (in_e.size() != 1 || out_e.size() != 1) continue;
      const LecEdge& a = inst.edges[static_cast<size_t>(in_e[0])];
      const LecEdge& b2 = inst.edges[static_cast<size_t>(out_e[0])];
      int enter = layer_of[static_cast<size_t>(a.u)] == i ? a.u : a.v;
      int leave = layer_of[static_cast<size_t>(b2.u)] == i ? b2.u : b2.v;
      if (enter != leave)
        add("flow", "x" + std::to_string(var) + " enters layer " +
                        std::to_string(i) + " at v" + std::to_string(enter) +
                        " but leaves from v" + std::to_string(leave));
    }

  for (int v = 0; v < inst.num_vertices; ++v) {
    int l = layer_of[static_cast<size_t>(v)];
    if (l <= layers - 2 && cons_indeg[static_cast<size_t>(v)] > lay.s)
      add("indegrees", "vertex " + std::to_string(v) + " has indegree " +
                           std::to_string(cons_indeg[static_cast<size_t>(v)]));
    if (l <= layers - 2 && cons_outdeg[static_cast<size_t>(v)] > lay.s)
      add("outdegrees", "vertex " + std::to_string(v) + " has outdegree " +
                            std::to_string(cons_outdeg[static_cast<size_t>(v)]));
    if (jump_out[static_cast<size_t>(v)] > lay.s)
      add("jumping-edges", "vertex " + std::to_string(v) + " starts " +
                               std::to_string(jump_out[static_cast<size_t>(v)]) +
                               " jumping edges");
  }

  for (int i = 0; i + 1 < layers; ++i)
    if (pair_count[static_cast<size_t>(i)] > n)
      add("pair-edge-bound", "layers " + std::to_string(i) + "-" +
                                 std::to_string(i + 1) + " carry " +
                                 std::to_string(pair_count[static_cast<size_t>(i)]) +
                                 " edges, bound " + std::to_string(n));

  // meeting points and their outgoing {x,~x} lists
  for (size_t ci = 0; ci < prov.clauses.size(); ++ci) {
    int r = prov.clause_class[ci];
    const Clause& c = prov.clauses[ci];
    for (int ell : {6 * r + 3, 6 * r + 5, 6 * r + 7}) {
      auto it = prov.ztab.find({ell, static_cast<int>(ci)});
      if (it == prov.ztab.end()) {
        add("meeting-points", "clause " + std::to_string(ci) +
                                  " has no meeting vertex at layer " +
                                  std::to_string(ell));
        continue;
      }
      for (const Literal& l : c) {
        if (prov.vtab[static_cast<size_t>(ell)][static_cast<size_t>(l.var)] != it->second)
          add("meeting-points", "x" + std::to_string(l.var) +
                                    " misses z at layer " + std::to_string(ell));
        const auto& next = pair_edges[static_cast<size_t>(ell)][static_cast<size_t>(l.var)];
        if (next.size() == 1) {
          const LecEdge& ne = inst.edges[static_cast<size_t>(next[0])];
          if (static_cast<int>(ne.list.size()) != 2)
            add("meeting-points", "edge after z at layer " + std::to_string(ell) +
                                      " for x" + std::to_string(l.var) +
                                      " is not a bare literal pair");
        }
      }
    }
  }

  return out;
}

// Forward translation following the three edge-disjoint gadget paths. The
// first satisfied literal of each clause takes the straight path; the other
// two take the detours through the jumping edges.
inline Coloring assignment_to_coloring_simple(const Sat34Formula& psi,
                                              const SimpleProvenance& prov,
                                              const LecInstance& inst,
                                              const Assignment& f) {
  const int n = prov.num_vars;
  std::map<std::pair<int, int>, int> edge_at;
  for (int e = 0; e < inst.num_edges(); ++e) {
    const LecEdge& edge = inst.edges[static_cast<size_t>(e)];
    edge_at[std::minmax(edge.u, edge.v)] = e;
  }
  std::map<Color, int> color_id;
  for (size_t i = 0; i < inst.colors.size(); ++i)
    color_id[inst.colors[i]] = static_cast<int>(i);

  Coloring out;
  out.assignment.assign(static_cast<size_t>(inst.num_edges()), -1);
  auto vtx = [&](int layer, int var) {
    return prov.vtab[static_cast<size_t>(layer)][static_cast<size_t>(var)];
  };
  auto eid = [&](int u, int v) { return edge_at.at(std::minmax(u, v)); };
  auto set_color = [&](int e, const Color& c) {
    out.assignment[static_cast<size_t>(e)] = color_id.at(c);
  };
  auto sat = [&](int var) {
    return Color{f.values[static_cast<size_t>(var)] ? ColorKind::PosLit
                                                    : ColorKind::NegLit, var};
  };
  auto unsat = [&](int var) {
    return Color{f.values[static_cast<size_t>(var)] ? ColorKind::NegLit
                                                    : ColorKind::PosLit, var};
  };
  // colors a vertex walk alternately, starting with the unsatisfied literal
  auto color_walk = [&](const std::vector<int>& verts, int var) {
    for (size_t k = 0; k + 1 < verts.size(); ++k)
      set_color(eid(verts[k], verts[k + 1]), k % 2 == 0 ? unsat(var) : sat(var));
  };

  for (int i = 0; i < n; ++i) {
    set_color(eid(vtx(0, i), vtx(1, i)), sat(i));
    int last = prov.layout.num_layers() - 1;
    set_color(eid(vtx(last - 1, i), vtx(last, i)), unsat(i));
  }

  const int R = prov.layout.R;
  std::vector<std::vector<int>> by_class(static_cast<size_t>(R));
  std::vector<char> clause_var(static_cast<size_t>(n), 0);
  for (size_t ci = 0; ci < prov.clauses.size(); ++ci)
    by_class[static_cast<size_t>(prov.clause_class[ci])].push_back(
        static_cast<int>(ci));

  for (int r = 0; r < R; ++r) {
    std::vector<char> in_class(static_cast<size_t>(n), 0);
    for (int ci : by_class[static_cast<size_t>(r)]) {
      const Clause& c = psi.inner.clauses[static_cast<size_t>(ci)];
      for (const Literal& l : c) in_class[static_cast<size_t>(l.var)] = 1;
      int sat_j = -1;
      for (int j = 0; j < 3; ++j)
        if (f.satisfies(c[static_cast<size_t>(j)])) { sat_j = j; break; }
      if (sat_j < 0)
        throw std::invalid_argument("assignment violates clause " +
                                    std::to_string(ci));
      std::vector<int> order{sat_j};
      for (int j = 0; j < 3; ++j)
        if (j != sat_j) order.push_back(j);
      int A = c[static_cast<size_t>(order[0])].var;  // straight path
      int B = c[static_cast<size_t>(order[1])].var;  // detour via a / z3
      int D = c[static_cast<size_t>(order[2])].var;  // detour via b / z5

      auto L = [&](int k, int var) { return vtx(6 * r + k, var); };

      color_walk({L(1, A), L(2, A), L(3, A), L(4, A), L(5, A), L(6, A), L(7, A)}, A);
      set_color(eid(L(2, A), L(6, A)), Color{ColorKind::AuxA, A});
      set_color(eid(L(4, A), L(6, A)), Color{ColorKind::AuxB, A});

      color_walk({L(1, B), L(2, B), L(6, B), L(5, B), L(4, B), L(3, B), L(7, B)}, B);
      set_color(eid(L(2, B), L(3, B)), Color{ColorKind::AuxA, B});
      set_color(eid(L(4, B), L(6, B)), Color{ColorKind::AuxB, B});
      set_color(eid(L(6, B), L(7, B)), Color{ColorKind::AuxC, ci});

      color_walk({L(1, D), L(2, D), L(3, D), L(4, D), L(6, D), L(5, D), L(7, D)}, D);
      set_color(eid(L(2, D), L(6, D)), Color{ColorKind::AuxA, D});
      set_color(eid(L(4, D), L(5, D)), Color{ColorKind::AuxB, D});
      set_color(eid(L(6, D), L(7, D)), Color{ColorKind::AuxD, ci});
    }
    for (int i = 0; i < n; ++i) {
      if (in_class[static_cast<size_t>(i)]) continue;
      std::vector<int> walk;
      for (int k = 1; k <= 7; ++k) walk.push_back(vtx(6 * r + k, i));
      color_walk(walk, i);
    }
  }
  (void)clause_var;
  return out;
}

// Backward translation: x_i is true iff the L_0-L_1 edge of variable i is
// colored with the positive literal.
inline Assignment coloring_to_assignment_simple(const SimpleProvenance& prov,
                                                const LecInstance& inst,
                                                const Coloring& c) {
  Assignment f;
  f.values.assign(static_cast<size_t>(prov.num_vars), false);
  for (int e = 0; e < inst.num_edges(); ++e) {
    const SimpleRole& role = prov.roles[static_cast<size_t>(e)];
    if (role.kind != SimpleRole::InitEdge) continue;
    const Color& col = inst.colors[static_cast<size_t>(
        c.assignment[static_cast<size_t>(e)])];
    f.values[static_cast<size_t>(role.var)] =
        col.kind == ColorKind::PosLit && col.index == role.var;
  }
  return f;
}

// Checks that the edges colored {x_i, ~x_i} form a single alternating path
// from L_0 to the last layer, that each gadget segment is one of the three
// admissible shapes, and that any edge between layers 6r+6 and 6r+7 sits at
// an even position along the path.
inline PathVerdict trace_variable_path(const LecInstance& inst,
                                       const SimpleProvenance& prov,
                                       const Coloring& c, int var) {
  PathVerdict v;
  const LayerLayout& lay = prov.layout;
  std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (other, edge)
  int edge_count = 0;
  for (int e = 0; e < inst.num_edges(); ++e) {
    const Color& col = inst.colors[static_cast<size_t>(
        c.assignment[static_cast<size_t>(e)])];
    if (col.index != var ||
        (col.kind != ColorKind::PosLit && col.kind != ColorKind::NegLit))
      continue;
    const LecEdge& edge = inst.edges[static_cast<size_t>(e)];
    adj[edge.u].push_back({edge.v, e});
    adj[edge.v].push_back({edge.u, e});
    ++edge_count;
  }
  const int expect_len = 6 * lay.R + 2;
  if (edge_count != expect_len) {
    v.fail("path of x" + std::to_string(var) + " has " +
           std::to_string(edge_count) + " edges, expected " +
           std::to_string(expect_len));
    return v;
  }
  int start = prov.vtab[0][static_cast<size_t>(var)];
  if (adj.find(start) == adj.end() || adj[start].size() != 1) {
    v.fail("path does not start with a single edge at the L_0 carrier");
    return v;
  }
  // walk, never reusing the arriving edge
  std::vector<int> verts{start};
  std::vector<int> edges;
  int cur = start, last_e = -1;
  while (true) {
    const auto& nb = adj[cur];
    if (nb.size() > 2) { v.fail("vertex degree exceeds 2 on the path"); return v; }
    int next = -1, via = -1;
    for (const auto& [w, e] : nb)
      if (e != last_e) { next = w; via = e; }
    if (next < 0) break;
    cur = next;
    last_e = via;
    verts.push_back(cur);
    edges.push_back(via);
  }
  if (static_cast<int>(edges.size()) != edge_count) {
    v.fail("colored edges do not form a single path");
    return v;
  }
  int last_layer = lay.num_layers() - 1;
  if (lay.layer_of(verts.back()) != last_layer) {
    v.fail("path does not end in the last layer");
    return v;
  }
  for (size_t k = 0; k + 1 < edges.size(); ++k)
    if (c.assignment[static_cast<size_t>(edges[k])] ==
        c.assignment[static_cast<size_t>(edges[k + 1])])
      v.fail("colors do not alternate at path position " + std::to_string(k));

  // gadget segments: positions 1+6r .. 6+6r, layer patterns relative to 6r
  static const std::vector<std::vector<int>> shapes = {
      {1, 2, 3, 4, 5, 6, 7}, {1, 2, 6, 5, 4, 3, 7}, {1, 2, 3, 4, 6, 5, 7}};
  for (int r = 0; r < lay.R; ++r) {
    std::vector<int> seg;
    for (int k = 0; k <= 6; ++k)
      seg.push_back(lay.layer_of(verts[static_cast<size_t>(6 * r + 1 + k)]) - 6 * r);
    bool match = false;
    for (const auto& sh : shapes)
      if (seg == sh) { match = true; break; }
    if (!match)
      v.fail("gadget " + std::to_string(r) +
             " segment is not one of the three admissible shapes");
  }

  // parity: an edge between layers 6r+6 and 6r+7 is preceded by an even
  // number of path edges
  for (size_t k = 0; k < edges.size(); ++k) {
    int la = lay.layer_of(verts[k]);
    int lb = lay.layer_of(verts[k + 1]);
    int lo = std::min(la, lb), hi = std::max(la, lb);
    if (hi == lo + 1 && (lo - 6) % 6 == 0 && lo >= 6 && lo < 6 * lay.R + 2) {
      // consecutive edge into a layer 6r+7 (shared layers are 6r+1 = 6(r-1)+7)
      if (k % 2 != 0)
        v.fail("edge into layer " + std::to_string(hi) +
               " sits at odd position " + std::to_string(k));
    }
  }
  return v;
}

}  // namespace lec

#endif
