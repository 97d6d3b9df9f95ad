#ifndef LEC_CNF_HPP
#define LEC_CNF_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lec {

struct Literal {
  int var = 0;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend bool operator<(const Literal& a, const Literal& b) {
    return a.var != b.var ? a.var < b.var : a.positive < b.positive;
  }
};

// A clause is kept sorted by variable index with distinct variables.
using Clause = std::vector<Literal>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

struct Assignment {
  std::vector<bool> values;

  bool satisfies(const Literal& l) const { return values[l.var] == l.positive; }
  bool satisfies(const Clause& c) const {
    return std::any_of(c.begin(), c.end(),
                       [&](const Literal& l) { return satisfies(l); });
  }
  bool satisfies(const CnfFormula& f) const {
    return std::all_of(f.clauses.begin(), f.clauses.end(),
                       [&](const Clause& c) { return satisfies(c); });
  }
};

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sorts, deduplicates, and rejects tautological clauses. Literals are given
// as DIMACS-style signed integers relative to num_vars.
inline Clause normalize_clause(const std::vector<int>& raw, int num_vars) {
  Clause c;
  for (int x : raw) {
    if (x == 0) throw parse_error("zero literal inside clause");
    int v = std::abs(x) - 1;
    if (v >= num_vars)
      throw parse_error("literal " + std::to_string(x) + " out of range");
    c.push_back(Literal{v, x > 0});
  }
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i].var == c[i - 1].var) throw parse_error("tautological clause");
  return c;
}

inline CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  bool header_seen = false;
  int declared_clauses = 0;
  std::vector<int> pending;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      if (header_seen) throw parse_error("duplicate header");
      std::string fmt;
      if (!(ls >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf" ||
          f.num_vars < 0 || declared_clauses < 0)
        throw parse_error("malformed header");
      header_seen = true;
      continue;
    }
    if (!header_seen) throw parse_error("clause before header");
    ls.clear();
    ls.seekg(0);
    int x;
    while (ls >> x) {
      if (x == 0) {
        f.clauses.push_back(normalize_clause(pending, f.num_vars));
        pending.clear();
      } else {
        pending.push_back(x);
      }
    }
    if (ls.fail() && !ls.eof()) throw parse_error("bad token in clause line");
  }
  if (!header_seen) throw parse_error("missing header");
  if (!pending.empty()) throw parse_error("unterminated clause");
  if (static_cast<int>(f.clauses.size()) != declared_clauses)
    throw parse_error("clause count mismatch: header says " +
                      std::to_string(declared_clauses) + ", found " +
                      std::to_string(f.clauses.size()));
  return f;
}

inline CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

inline void write_dimacs(const CnfFormula& f, std::ostream& out) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c) out << (l.positive ? l.var + 1 : -(l.var + 1)) << ' ';
    out << "0\n";
  }
}

inline std::string write_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  write_dimacs(f, out);
  return out.str();
}

// Exhaustive SAT oracle. Returns the lexicographically first satisfying
// assignment over (x0, x1, ...), with F < T, or nullopt.
inline std::optional<Assignment> brute_force_sat(const CnfFormula& f) {
  if (f.num_vars > 30)
    throw std::invalid_argument("brute_force_sat: more than 30 variables");
  const int n = f.num_vars;
  Assignment a;
  a.values.assign(static_cast<size_t>(n), false);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    for (int i = 0; i < n; ++i)
      a.values[static_cast<size_t>(i)] = (k >> (n - 1 - i)) & 1;
    if (a.satisfies(f)) return a;
  }
  return std::nullopt;
}

inline std::vector<int> occurrence_counts(const CnfFormula& f) {
  std::vector<int> occ(static_cast<size_t>(f.num_vars), 0);
  for (const Clause& c : f.clauses)
    for (const Literal& l : c) ++occ[static_cast<size_t>(l.var)];
  return occ;
}

}  // namespace lec

#endif
