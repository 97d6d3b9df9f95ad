#ifndef TEST_HELPERS_HPP
#define TEST_HELPERS_HPP

#include <random>
#include <set>
#include <vector>

#include "lec/cnf.hpp"
#include "lec/instance.hpp"

namespace testutil {

// random CNF with exactly-3-distinct-variable clauses
inline lec::CnfFormula random_3cnf(std::mt19937& rng, int num_vars,
                                   int num_clauses) {
  lec::CnfFormula f;
  f.num_vars = num_vars;
  std::uniform_int_distribution<int> var(0, num_vars - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < num_clauses; ++i) {
    std::set<int> vs;
    while (static_cast<int>(vs.size()) < 3) vs.insert(var(rng));
    lec::Clause c;
    for (int v : vs) c.push_back(lec::Literal{v, sign(rng) == 1});
    f.clauses.push_back(c);
  }
  return f;
}

// random CNF with mixed clause arities (0..5), for the regularizer
inline lec::CnfFormula random_mixed_cnf(std::mt19937& rng, int num_vars,
                                        int num_clauses) {
  lec::CnfFormula f;
  f.num_vars = num_vars;
  std::uniform_int_distribution<int> var(0, num_vars - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> arity(1, 5);
  for (int i = 0; i < num_clauses; ++i) {
    int k = std::min(arity(rng), num_vars);
    std::set<int> vs;
    while (static_cast<int>(vs.size()) < k) vs.insert(var(rng));
    lec::Clause c;
    for (int v : vs) c.push_back(lec::Literal{v, sign(rng) == 1});
    f.clauses.push_back(c);
  }
  return f;
}

// random small list edge coloring instance; multigraph mode so parallel
// edges are allowed
inline lec::LecInstance random_instance(std::mt19937& rng, int max_edges = 10) {
  std::uniform_int_distribution<int> nv(2, 6);
  int vertices = nv(rng);
  std::uniform_int_distribution<int> ne(1, max_edges);
  int edges = ne(rng);
  std::uniform_int_distribution<int> vx(0, vertices - 1);
  std::uniform_int_distribution<int> ncol(1, 4);
  std::uniform_int_distribution<int> col(0, 5);
  lec::InstanceBuilder b(lec::GraphMode::Multigraph, vertices);
  for (int e = 0; e < edges; ++e) {
    int u = vx(rng), v = vx(rng);
    while (u == v) v = vx(rng);
    std::set<int> ids;
    int k = ncol(rng);
    while (static_cast<int>(ids.size()) < k) ids.insert(col(rng));
    std::vector<lec::Color> list;
    for (int c : ids) list.push_back(lec::Color{lec::ColorKind::PosLit, c});
    b.add_edge(u, v, list);
  }
  return b.finish();
}

}  // namespace testutil

#endif
