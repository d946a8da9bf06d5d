#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symeq/sequences.hpp"

using namespace symeq;

TEST_CASE("Sylvester's sequence") {
  CHECK(sylvester_u(5).values == std::vector<Natural>{2, 3, 7, 43, 1807});
  CHECK(sylvester_u(1).values == std::vector<Natural>{2});
  const SequenceTable u = sylvester_u(17);
  CHECK(u.at(6) == 3263443);
  for (std::size_t n = 1; n <= 16; ++n) REQUIRE(u.at(n + 1) == u.product(n) + 1);
  CHECK_THROWS_AS(sylvester_u(0), std::invalid_argument);
}

TEST_CASE("v sequence, first seven terms by every method") {
  const std::vector<Natural> expected{1, 2, 4, 15, 219, 47863, 2290845187ul};
  for (VMethod m : {VMethod::Definition, VMethod::Rec1, VMethod::Rec2, VMethod::Rec3}) {
    CAPTURE(to_string(m));
    CHECK(v_sequence(7, m).values == expected);
  }
  // 4^2 - 4 + 1 + 1*2
  CHECK(v_sequence(4, VMethod::Rec2).at(4) == 15);
  CHECK_THROWS_AS(v_sequence(1), std::invalid_argument);
}

TEST_CASE("all four v methods agree for 16 terms") {
  const SequenceTable def = v_sequence(16, VMethod::Definition);
  for (VMethod m : {VMethod::Rec1, VMethod::Rec2, VMethod::Rec3}) {
    CAPTURE(to_string(m));
    CHECK(v_sequence(16, m).values == def.values);
  }
}

TEST_CASE("v sequence identities for n <= 16") {
  const SequenceTable v = v_sequence(17);
  for (std::size_t n = 2; n <= 16; ++n) {
    CAPTURE(n);
    // S_{n-1} (v_{n+1} - v_n (v_n - 1) - 1) = v_n - 1
    REQUIRE(v.S(n - 1) * Ratio(v.at(n + 1) - v.at(n) * (v.at(n) - 1) - 1) == Ratio(v.at(n) - 1));
    REQUIRE(v.at(n + 1) - 1 > v.product(n));
    REQUIRE(v.at(n + 1) > v.at(n));
    if (n > 2) {
      REQUIRE((v.at(n) - 1) * (v.at(n) - 1) < v.at(n + 1));
      REQUIRE(v.at(n + 1) <= v.at(n) * v.at(n));
    }
    // S_n (v_1 ... v_n) = v_{n+1} - 1
    REQUIRE(v.S(n) * Ratio(v.product(n)) == Ratio(v.at(n + 1) - 1));
  }
}

TEST_CASE("defect identity 1 - Q_n = 1/(v_1 ... v_n)") {
  const SequenceTable v = v_sequence(10);
  CHECK(v.Q(2) == Ratio(1, 2));
  CHECK(v.product(2) == 2);
  CHECK(v.Q(3) == Ratio(7, 8));
  CHECK(v.product(3) == 8);
  for (std::size_t n = 2; n <= 10; ++n) CHECK(defect_identity_check(v, n) == 0);
  CHECK_THROWS_AS(defect_identity_check(sylvester_u(4), 3), std::invalid_argument);
  CHECK_THROWS_AS(defect_identity_check(v, 11), std::invalid_argument);
}

TEST_CASE("limit constants") {
  const LimitEstimate c2 = limit_constant(SequenceKind::V, 12, 256, 20);
  const mpf_class c2_value(c2.value, 256);
  CHECK(abs(c2_value - mpf_class("1.183382020799312", 256)) < mpf_class("1e-12", 256));
  CHECK(c2.error_bound < 1e-12);
  CHECK(mpf_class(c2.lower, 256) <= c2_value);
  CHECK(c2_value <= mpf_class(c2.upper, 256));

  const LimitEstimate c1 = limit_constant(SequenceKind::U, 12, 256, 20);
  CHECK(abs(mpf_class(c1.value, 256) - mpf_class("1.2640847353", 256)) < mpf_class("1e-8", 256));

  CHECK_THROWS_AS(limit_constant(SequenceKind::V, 7, 256), std::invalid_argument);
  CHECK_THROWS_AS(limit_constant(SequenceKind::V, 12, 32, 20), std::invalid_argument);
}

TEST_CASE("limit approximations decrease and their differences shrink geometrically") {
  for (SequenceKind kind : {SequenceKind::U, SequenceKind::V}) {
    std::vector<mpf_class> values;
    for (std::size_t n = 8; n <= 13; ++n) {
      values.emplace_back(limit_constant(kind, n, 4096, 1000).value, 4096);
    }
    for (std::size_t i = 1; i < values.size(); ++i) REQUIRE(values[i] <= values[i - 1]);
    for (std::size_t i = 2; i < values.size(); ++i) {
      const mpf_class prev = values[i - 2] - values[i - 1];
      const mpf_class cur = values[i - 1] - values[i];
      REQUIRE(cur * 2 <= prev);
    }
  }
}
