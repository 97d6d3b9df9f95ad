#ifndef LEC_REGULARIZE_HPP
#define LEC_REGULARIZE_HPP

#include <cmath>
#include <string>
#include <vector>

#include "lec/cnf.hpp"

namespace lec {

// A formula in bounded-occurrence form: every clause has exactly 3 distinct
// variables and every variable occurs in at most occurrence_bound clauses.
struct Sat34Formula {
  CnfFormula inner;
  int occurrence_bound = 5;
};

struct RegularityViolation {
  enum Kind { ClauseArity, OccurrenceBound } kind;
  int index = 0;  // clause index or variable index
  std::string detail;
};

inline std::vector<RegularityViolation> check_34(const Sat34Formula& psi) {
  std::vector<RegularityViolation> out;
  for (size_t ci = 0; ci < psi.inner.clauses.size(); ++ci) {
    if (psi.inner.clauses[ci].size() != 3)
      out.push_back({RegularityViolation::ClauseArity, static_cast<int>(ci),
                     "clause has " +
                         std::to_string(psi.inner.clauses[ci].size()) +
                         " distinct variables, want 3"});
  }
  std::vector<int> occ = occurrence_counts(psi.inner);
  for (int v = 0; v < psi.inner.num_vars; ++v) {
    if (occ[static_cast<size_t>(v)] > psi.occurrence_bound)
      out.push_back({RegularityViolation::OccurrenceBound, v,
                     "variable x" + std::to_string(v) + " occurs " +
                         std::to_string(occ[static_cast<size_t>(v)]) +
                         " times, bound " +
                         std::to_string(psi.occurrence_bound)});
  }
  return out;
}

// Equisatisfiable rewrite into exactly-3-distinct-variable clauses with all
// occurrence counts at most 5.
//
// Arity normalization: an empty clause becomes an unsatisfiable block over
// fresh variables; long clauses are chain-split with
// fresh link variables; 2-clauses gain one fresh variable in both phases;
// 1-clauses gain two fresh variables in all four phase patterns.
//
// Occurrence reduction: a variable occurring k > 5 times is replaced by k
// fresh copies, one per occurrence, tied together by an implication cycle:
// for each cyclically consecutive pair, the clauses (~c_t v c_{t+1} v w_t)
// and (~c_t v c_{t+1} v ~w_t) with a fresh helper w_t. Each copy then
// occurs exactly 5 times and each helper twice.
inline Sat34Formula regularize(const CnfFormula& phi) {
  CnfFormula f;
  f.num_vars = phi.num_vars;
  auto fresh = [&f]() { return f.num_vars++; };

  // Pass 1: clause arity.
  for (const Clause& c : phi.clauses) {
    if (c.empty()) {
      // unsatisfiable block within the occurrence bound: force three fresh
      // variables true by exhausting their partners' sign patterns, then
      // deny all three at once
      int y[3];
      for (int i = 0; i < 3; ++i) {
        y[i] = fresh();
        int a = fresh(), b = fresh();
        for (int mask = 0; mask < 4; ++mask) {
          Clause cl{{y[i], true}, {a, (mask & 1) != 0}, {b, (mask & 2) != 0}};
          std::sort(cl.begin(), cl.end());
          f.clauses.push_back(cl);
        }
      }
      f.clauses.push_back({{y[0], false}, {y[1], false}, {y[2], false}});
      std::sort(f.clauses.back().begin(), f.clauses.back().end());
    } else if (c.size() == 1) {
      int w1 = fresh(), w2 = fresh();
      for (int mask = 0; mask < 4; ++mask) {
        Clause cl{c[0], {w1, (mask & 1) != 0}, {w2, (mask & 2) != 0}};
        std::sort(cl.begin(), cl.end());
        f.clauses.push_back(cl);
      }
    } else if (c.size() == 2) {
      int w = fresh();
      for (int phase = 0; phase < 2; ++phase) {
        Clause cl{c[0], c[1], {w, phase != 0}};
        std::sort(cl.begin(), cl.end());
        f.clauses.push_back(cl);
      }
    } else if (c.size() == 3) {
      f.clauses.push_back(c);
    } else {
      // (l1 v l2 v w1), (~w1 v l3 v w2), ..., (~w_{k-3} v l_{k-1} v l_k)
      Clause head{c[0], c[1]};
      int link = fresh();
      head.push_back({link, true});
      std::sort(head.begin(), head.end());
      f.clauses.push_back(head);
      for (size_t i = 2; i + 2 < c.size(); ++i) {
        int next = fresh();
        Clause mid{{link, false}, c[i], {next, true}};
        std::sort(mid.begin(), mid.end());
        f.clauses.push_back(mid);
        link = next;
      }
      Clause tail{{link, false}, c[c.size() - 2], c[c.size() - 1]};
      std::sort(tail.begin(), tail.end());
      f.clauses.push_back(tail);
    }
  }

  // Pass 2: occurrence reduction for variables occurring more than 5 times.
  const int pre_split_vars = f.num_vars;
  std::vector<int> occ = occurrence_counts(f);
  occ.resize(static_cast<size_t>(f.num_vars), 0);
  for (int v = 0; v < pre_split_vars; ++v) {
    int k = occ[static_cast<size_t>(v)];
    if (k <= 5) continue;
    std::vector<int> copies;
    copies.push_back(v);
    for (int t = 1; t < k; ++t) copies.push_back(fresh());
    int next_copy = 0;
    for (Clause& cl : f.clauses) {
      if (next_copy >= k) break;
      for (Literal& l : cl) {
        if (l.var == v) {
          l.var = copies[static_cast<size_t>(next_copy++)];
          break;  // distinct variables per clause: at most one occurrence
        }
      }
    }
    for (Clause& cl : f.clauses) std::sort(cl.begin(), cl.end());
    for (int t = 0; t < k; ++t) {
      int a = copies[static_cast<size_t>(t)];
      int b = copies[static_cast<size_t>((t + 1) % k)];
      int w = fresh();
      for (int phase = 0; phase < 2; ++phase) {
        Clause cl{{a, false}, {b, true}, {w, phase != 0}};
        std::sort(cl.begin(), cl.end());
        f.clauses.push_back(cl);
      }
    }
  }

  Sat34Formula out;
  out.inner = std::move(f);
  std::vector<int> final_occ = occurrence_counts(out.inner);
  int max_occ = 0;
  for (int o : final_occ) max_occ = std::max(max_occ, o);
  out.occurrence_bound = max_occ <= 4 ? 4 : 5;
  return out;
}

inline bool is_perfect_square(int n) {
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  return r * r == n;
}

inline int int_sqrt(int n) {
  return static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
}

// Pads the variable count to a perfect square s^2 with s >= min_root by
// adding fresh variables y_1..y_{n+} and the sliding-window clauses
// {y1,y2,y3}, {y2,y3,y4}, ... (all satisfied by setting every y true).
inline Sat34Formula pad_to_square(const Sat34Formula& psi, int min_root = 0) {
  const int n = psi.inner.num_vars;
  if (is_perfect_square(n) && int_sqrt(n) >= min_root) return psi;

  int s;
  if (min_root > static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))))) {
    s = min_root;
    while (s * s - n < 3) ++s;
  } else {
    s = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
  }
  const int n_plus = s * s - n;

  Sat34Formula out = psi;
  out.inner.num_vars = s * s;
  for (int i = 0; i + 2 < n_plus; ++i) {
    Clause cl{{n + i, true}, {n + i + 1, true}, {n + i + 2, true}};
    out.inner.clauses.push_back(cl);
  }
  return out;
}

}  // namespace lec

#endif
