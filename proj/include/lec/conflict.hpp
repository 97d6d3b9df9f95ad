#ifndef LEC_CONFLICT_HPP
#define LEC_CONFLICT_HPP

#include <stdexcept>
#include <vector>

#include "lec/regularize.hpp"

namespace lec {

// Clause conflict graph: clauses adjacent when they share a variable.
// Greedy coloring over clauses in index order yields the clause classes.
struct ConflictGraph {
  int num_clauses = 0;
  std::vector<std::vector<int>> adj;
  std::vector<int> classes;  // clause -> class index
  int num_classes = 0;       // R

  std::vector<std::vector<int>> members() const {
    std::vector<std::vector<int>> by_class(static_cast<size_t>(num_classes));
    for (int c = 0; c < num_clauses; ++c)
      by_class[static_cast<size_t>(classes[static_cast<size_t>(c)])].push_back(c);
    return by_class;
  }
};

inline ConflictGraph build_conflict_graph(const Sat34Formula& psi) {
  const auto& clauses = psi.inner.clauses;
  ConflictGraph g;
  g.num_clauses = static_cast<int>(clauses.size());
  g.adj.assign(static_cast<size_t>(g.num_clauses), {});

  // var -> clauses containing it
  std::vector<std::vector<int>> by_var(static_cast<size_t>(psi.inner.num_vars));
  for (int c = 0; c < g.num_clauses; ++c)
    for (const Literal& l : clauses[static_cast<size_t>(c)])
      by_var[static_cast<size_t>(l.var)].push_back(c);

  std::vector<std::vector<char>> seen(
      static_cast<size_t>(g.num_clauses));
  for (auto& row : seen) row.assign(static_cast<size_t>(g.num_clauses), 0);
  for (const auto& group : by_var)
    for (size_t i = 0; i < group.size(); ++i)
      for (size_t j = i + 1; j < group.size(); ++j) {
        int a = group[i], b = group[j];
        if (!seen[static_cast<size_t>(a)][static_cast<size_t>(b)]) {
          seen[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
          seen[static_cast<size_t>(b)][static_cast<size_t>(a)] = 1;
          g.adj[static_cast<size_t>(a)].push_back(b);
          g.adj[static_cast<size_t>(b)].push_back(a);
        }
      }

  g.classes.assign(static_cast<size_t>(g.num_clauses), -1);
  int max_class = -1;
  for (int c = 0; c < g.num_clauses; ++c) {
    std::vector<char> used(static_cast<size_t>(g.num_clauses) + 1, 0);
    for (int nb : g.adj[static_cast<size_t>(c)])
      if (g.classes[static_cast<size_t>(nb)] >= 0)
        used[static_cast<size_t>(g.classes[static_cast<size_t>(nb)])] = 1;
    int k = 0;
    while (used[static_cast<size_t>(k)]) ++k;
    g.classes[static_cast<size_t>(c)] = k;
    max_class = std::max(max_class, k);
  }
  g.num_classes = max_class + 1;

  if (psi.occurrence_bound == 4 && g.num_classes > 10)
    throw std::logic_error("greedy clause classes exceed 10 on a (3,4) input");
  return g;
}

}  // namespace lec

#endif
