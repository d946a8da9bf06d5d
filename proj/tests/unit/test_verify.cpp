#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symeq/constructions.hpp"
#include "symeq/solver.hpp"
#include "symeq/verify.hpp"

using namespace symeq;

TEST_CASE("pair-sum product bound is tight at (1,2,4,14)") {
  const BoundReport r = check_bounds(SolutionTuple{1, 2, 4, 14}, 2);
  CHECK(r.all_hold());
  const BoundCheck* c = r.find("k2_max_entry");
  REQUIRE(c);
  CHECK(c->slack == 0);
  // k = 2 = n - 2 here, so the pair-reciprocal bounds apply as well.
  REQUIRE(r.find("pair_max_entry"));
  CHECK(r.find("pair_max_entry")->slack == 0);
}

TEST_CASE("x_n <= v_n - 1 is tight at v_solution(5)") {
  const BoundReport r = check_bounds(SolutionTuple{1, 2, 4, 15, 218}, 3);
  CHECK(r.all_hold());
  REQUIRE(r.find("pair_max_entry"));
  CHECK(r.find("pair_max_entry")->slack == 0);
  CHECK(r.find("pair_max_entry")->rhs == 218);
}

TEST_CASE("k = 1 and k = 2 bounds are tight at (1,1,2,4)") {
  const BoundReport r = check_bounds(SolutionTuple{1, 1, 2, 4}, 1);
  CHECK(r.all_hold());
  CHECK(r.find("k1_max_entry")->slack == 0);
  CHECK(r.find("k1_product")->lhs == 8);
  CHECK(r.find("k1_product")->slack == 0);
}

TEST_CASE("check_bounds rejects non-solutions") {
  CHECK_THROWS_AS(check_bounds(SolutionTuple{1, 2, 4, 15}, 2), std::invalid_argument);
}

TEST_CASE("every enumerated and constructed solution satisfies every applicable bound") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = (n == 2 ? 0 : 1); k < n; ++k) {
      if (n == 6 && k == 5) continue;  // 3462 tuples, covered by the Egyptian check below
      CAPTURE(n);
      CAPTURE(k);
      for (const auto& t : enumerate(n, k).solutions) REQUIRE(check_bounds(t, k).all_hold());
    }
  }
  for (const auto& t : enumerate(6, 5).solutions) REQUIRE(check_bounds(t, 5).all_hold());
  for (int n = 2; n <= 9; ++n) {
    CAPTURE(n);
    REQUIRE(check_bounds(v_solution(n), n - 2).all_hold());
    REQUIRE(check_bounds(sylvester_solution(n), n - 1).all_hold());
    for (int k = 1; k < n; ++k) REQUIRE(check_bounds(pk_solution(n, k), k).all_hold());
    if (n >= 4) {
      for (const auto& t : lower_bound_family(n)) REQUIRE(check_bounds(t, n - 2).all_hold());
    }
  }
}

TEST_CASE("dominance for single tuples") {
  const auto a = check_dominance(SolutionTuple{1, 2, 5});
  CHECK(a.applies);
  CHECK(a.pair_sum == Ratio(4, 5));
  CHECK(a.reciprocal_sum == Ratio(17, 10));
  CHECK(a.q_ok);
  CHECK(a.s_ok);

  const auto b = check_dominance(SolutionTuple{1, 2, 4});
  CHECK(b.applies);
  CHECK(b.pair_sum == Ratio(7, 8));  // equality with 1 - 1/8
  CHECK(b.q_ok);
  CHECK(b.s_ok);

  CHECK_FALSE(check_dominance(SolutionTuple{1, 1, 1}).applies);
}

TEST_CASE("dominance sweeps") {
  const SweepResult three = dominance_sweep(3, 50);
  CHECK(three.max_pair_sum == Ratio(7, 8));
  CHECK(three.argmax_pair_sum == SolutionTuple{1, 2, 4});
  CHECK(three.max_reciprocal_sum == Ratio(7, 4));
  CHECK(three.argmax_reciprocal_sum == SolutionTuple{1, 2, 4});

  const SweepResult four = dominance_sweep(4, 40);
  CHECK(four.max_pair_sum == Ratio(119, 120));
  CHECK(four.argmax_pair_sum == SolutionTuple{1, 2, 4, 15});
  CHECK(four.max_reciprocal_sum == Ratio(109, 60));
  CHECK(four.argmax_reciprocal_sum == SolutionTuple{1, 2, 4, 15});

  CHECK_THROWS_AS(dominance_sweep(4, 14), std::invalid_argument);
  CHECK_THROWS_AS(dominance_sweep(5, 300), std::invalid_argument);
}

TEST_CASE("equality cases of the product lower bound") {
  const auto nine = equality_case(9, 7);
  REQUIRE(nine);
  CHECK(*nine == SolutionTuple(std::vector<Natural>(9, Natural(6))));
  const auto r9 = check_bounds(*nine, 7);
  CHECK(r9.find("product_lower_bound")->slack == 0);

  const auto four = equality_case(4, 3);
  REQUIRE(four);
  CHECK(*four == SolutionTuple{4, 4, 4, 4});
  CHECK(check_bounds(*four, 3).find("product_lower_bound")->slack == 0);

  CHECK_FALSE(equality_case(5, 3).has_value());
  for (int n = 2; n <= 60; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto e = equality_case(n, k);
      if (k == n - 1) REQUIRE(e.has_value());
      if (k <= n - 3) REQUIRE_FALSE(e.has_value());
      if (e) REQUIRE(check_bounds(*e, k).find("product_lower_bound")->slack == 0);
    }
  }
  CHECK(equality_case(50, 48).has_value());  // C(50,2) = 35^2
  // Sequence bounds are only evaluated while u_n and v_n stay computable.
  CHECK(check_bounds(*equality_case(50, 48), 48).find("pair_max_entry") == nullptr);
  CHECK(check_bounds(*equality_case(9, 7), 7).find("pair_max_entry") != nullptr);
  CHECK_THROWS_AS(equality_case(4, 0), std::invalid_argument);
}

TEST_CASE("product conjecture monitor") {
  for (int n = 3; n <= 6; ++n) {
    const auto r = product_conjecture(enumerate(n, n - 2));
    MESSAGE("n = " << n << ": max product " << r.observed_max_product.get_str() << " vs "
                   << r.conjectured_bound.get_str());
  }
  CHECK_THROWS_AS(product_conjecture(enumerate(4, 1)), std::invalid_argument);
}
