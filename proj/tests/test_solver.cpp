#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "lec/solver.hpp"

using namespace lec;

namespace {
Color pc(int i) { return Color{ColorKind::PosLit, i}; }

LecInstance two_color_triangle() {
  InstanceBuilder b(GraphMode::Simple, 3);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}})
    b.add_edge(u, v, {pc(0), pc(1)});
  return b.finish();
}
}  // namespace

TEST_CASE("backtracking solver on tiny instances") {
  SECTION("two-edge path is colorable") {
    InstanceBuilder b(GraphMode::Simple, 3);
    b.add_edge(0, 1, {pc(0), pc(1)});
    b.add_edge(1, 2, {pc(0), pc(1)});
    LecInstance inst = b.finish();
    SolveOutcome o = solve_backtracking(inst);
    REQUIRE(o.status == SolveStatus::Colorable);
    REQUIRE(o.witness.has_value());
    CHECK(validate_coloring(inst, *o.witness).empty());
  }
  SECTION("two-color triangle is not") {
    SolveOutcome o = solve_backtracking(two_color_triangle());
    CHECK(o.status == SolveStatus::NotColorable);
    CHECK_FALSE(o.witness.has_value());
  }
  SECTION("zero budget reports exhaustion") {
    SearchConfig cfg;
    cfg.node_budget = 0;
    SolveOutcome o = solve_backtracking(two_color_triangle(), cfg);
    CHECK(o.status == SolveStatus::BudgetExceeded);
  }
  SECTION("propagation off gives the same answers") {
    std::mt19937 rng(5);
    for (int i = 0; i < 30; ++i) {
      LecInstance inst = testutil::random_instance(rng, 8);
      SearchConfig off;
      off.propagation = false;
      CHECK(solve_backtracking(inst).status ==
            solve_backtracking(inst, off).status);
    }
  }
}

TEST_CASE("inclusion-exclusion counter on known instances") {
  CHECK(count_colorings_ie(two_color_triangle()) == 0);

  InstanceBuilder b(GraphMode::Simple, 3);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}})
    b.add_edge(u, v, {pc(0), pc(1), pc(2)});
  CHECK(count_colorings_ie(b.finish()) == 6);

  InstanceBuilder p(GraphMode::Simple, 3);
  p.add_edge(0, 1, {pc(0), pc(1)});
  p.add_edge(1, 2, {pc(0), pc(1)});
  CHECK(count_colorings_ie(p.finish()) == 2);

  LecInstance empty;
  CHECK(count_colorings_ie(empty) == 1);
}

TEST_CASE("inclusion-exclusion counter matches brute force") {
  std::mt19937 rng(13);
  for (int i = 0; i < 120; ++i) {
    LecInstance inst = testutil::random_instance(rng, 10);
    CAPTURE(i, inst.num_edges());
    CHECK(count_colorings_ie(inst) == brute_force_colorings(inst).count);
  }
}

TEST_CASE("inclusion-exclusion counter guards its edge bound") {
  InstanceBuilder b(GraphMode::Multigraph, 2);
  for (int i = 0; i < 27; ++i) b.add_edge(0, 1, {pc(i)});
  CHECK_THROWS_AS(count_colorings_ie(b.finish()), std::invalid_argument);
}

TEST_CASE("decide agrees with brute force on random instances") {
  std::mt19937 rng(31);
  for (int i = 0; i < 60; ++i) {
    LecInstance inst = testutil::random_instance(rng, 9);
    Verdict v = decide(inst);
    bool colorable = brute_force_colorings(inst, 1).count > 0;
    CHECK(v == (colorable ? Verdict::Yes : Verdict::No));
  }
}
