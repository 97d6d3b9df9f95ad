#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "lec/cnf.hpp"

using namespace lec;

TEST_CASE("dimacs parsing accepts a plain formula") {
  CnfFormula f = parse_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 0\n");
  REQUIRE(f.num_vars == 3);
  REQUIRE(f.clauses.size() == 2);
  REQUIRE(f.clauses[0] == Clause{{0, true}, {1, false}, {2, true}});
  REQUIRE(f.clauses[1] == Clause{{0, false}, {1, true}});
}

TEST_CASE("dimacs parsing handles clauses split across lines") {
  CnfFormula f = parse_dimacs("p cnf 2 1\n1\n2 0\n");
  REQUIRE(f.clauses.size() == 1);
  REQUIRE(f.clauses[0].size() == 2);
}

TEST_CASE("dimacs parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), parse_error);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 3 0\n"), parse_error);   // out of range
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 -1 0\n"), parse_error);  // tautology
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 2 0\n"), parse_error);   // count mismatch
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), parse_error);     // unterminated
  CHECK_THROWS_AS(parse_dimacs("p dnf 2 1\n1 2 0\n"), parse_error);
}

TEST_CASE("normalize_clause dedupes repeated literals") {
  Clause c = normalize_clause({2, 2, -1}, 3);
  REQUIRE(c == Clause{{0, false}, {1, true}});
}

TEST_CASE("write then parse is the identity") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    CnfFormula f = testutil::random_3cnf(rng, 3 + i % 6, 1 + i % 5);
    REQUIRE(parse_dimacs(write_dimacs(f)) == f);
  }
}

TEST_CASE("brute force oracle returns the lexicographically first model") {
  // x0 v x1: first model over (x0, x1) with F < T is (F, T)
  CnfFormula f = parse_dimacs("p cnf 2 1\n1 2 0\n");
  auto a = brute_force_sat(f);
  REQUIRE(a.has_value());
  CHECK(a->values == std::vector<bool>{false, true});

  CnfFormula unsat = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
  CHECK_FALSE(brute_force_sat(unsat).has_value());

  CnfFormula empty = parse_dimacs("p cnf 2 0\n");
  auto e = brute_force_sat(empty);
  REQUIRE(e.has_value());
  CHECK(e->values == std::vector<bool>{false, false});
}

TEST_CASE("occurrence counts per variable") {
  CnfFormula f = parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 2 0\n");
  CHECK(occurrence_counts(f) == std::vector<int>{2, 2, 1});
}
