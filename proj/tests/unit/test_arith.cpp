#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support/oracles.hpp"
#include "symeq/arith.hpp"

using namespace symeq;

TEST_CASE("factorize small values") {
  CHECK(factorize(1).empty());
  CHECK(factorize(28) == Factorization{{2, 2}, {7, 1}});
  CHECK(factorize(2) == Factorization{{2, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize agrees with trial division") {
  // v_7 happens to be prime.
  const std::uint64_t v7 = 2290845187ULL;
  const Factorization f = factorize(Natural(static_cast<unsigned long>(v7)));
  const auto expected = oracle::trial_factor(v7);
  REQUIRE(f.size() == expected.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(f[i].prime == Natural(static_cast<unsigned long>(expected[i].first)));
    CHECK(f[i].exponent == expected[i].second);
  }
  CHECK(factorization_product(f) == Natural(static_cast<unsigned long>(v7)));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t m = rng() % 2000000000ULL + 1;
    const auto ref = oracle::trial_factor(m);
    const Factorization got = factorize(Natural(static_cast<unsigned long>(m)));
    REQUIRE(got.size() == ref.size());
    for (std::size_t j = 0; j < got.size(); ++j) {
      CHECK(got[j].prime == Natural(static_cast<unsigned long>(ref[j].first)));
      CHECK(got[j].exponent == ref[j].second);
    }
  }
}

TEST_CASE("factorization reconstructs m and d(m) matches the divisor list up to 10^6") {
  for (unsigned long m = 1; m <= 1000000; m += (m < 5000 ? 1 : 997)) {
    const Factorization f = factorize(m);
    for (std::size_t i = 1; i < f.size(); ++i) REQUIRE(f[i - 1].prime < f[i].prime);
    for (const auto& pp : f) REQUIRE(is_prime(pp.prime));
    REQUIRE(factorization_product(f) == m);
    REQUIRE(divisor_count(f) == divisors(f).size());
  }
}

TEST_CASE("factorize multi-word composites") {
  // (2^31 - 1) * (2^89 - 1) * 1000003^2, about 50 digits.
  const Natural m31 = (Natural(1) << 31) - 1;
  const Natural m89 = (Natural(1) << 89) - 1;
  const Natural p = 1000003;
  const Factorization f = factorize(m31 * m89 * p * p);
  CHECK(f == Factorization{{p, 2}, {m31, 1}, {m89, 1}});

  // 21-digit semiprime, the size that shows up in k = n-1 completions.
  const Natural a("10000000019"), b("30000000001");
  REQUIRE(is_prime(a));
  REQUIRE(is_prime(b));
  CHECK(factorize(a * b) == Factorization{{a, 1}, {b, 1}});
  CHECK(factorization_product(factorize(a * b * b * 12)) == a * b * b * 12);
}

TEST_CASE("primality") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(Natural("3317044064679887385961981")));  // strong pseudoprime to 13 bases
  CHECK_FALSE(is_prime(Natural("3825123056546413051")));        // strong pseudoprime to bases 2..23
  CHECK(is_prime((Natural(1) << 127) - 1));
}

TEST_CASE("divisors") {
  CHECK(divisors(12) == std::vector<Natural>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<Natural>{1});
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);

  const auto ref = oracle::divisors_by_loop(28);
  const auto got = divisors(28);
  REQUIRE(got.size() == ref.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == Natural(static_cast<unsigned long>(ref[i])));
  CHECK(got == std::vector<Natural>{1, 2, 4, 7, 14, 28});

  for (unsigned long m = 1; m <= 3000; ++m) {
    const auto loop = oracle::divisors_by_loop(m);
    const auto fast = divisors(m);
    REQUIRE(fast.size() == loop.size());
    for (std::size_t i = 0; i < fast.size(); ++i) REQUIRE(fast[i] == Natural(static_cast<unsigned long>(loop[i])));
  }
}

TEST_CASE("multiplicative partitions") {
  CHECK(multiplicative_partitions(1) == 1);
  CHECK(multiplicative_partitions(12) == 4);
  CHECK(multiplicative_partitions(16) == 5);
  CHECK(multiplicative_partitions(24) == 7);
  for (unsigned long p : {2ul, 3ul, 97ul, 7919ul}) CHECK(multiplicative_partitions(p) == 1);
  CHECK_THROWS_AS(multiplicative_partitions(0), std::invalid_argument);

  for (std::uint64_t m = 1; m <= 10000; ++m) {
    REQUIRE_MESSAGE(multiplicative_partitions(Natural(static_cast<unsigned long>(m))) ==
                        Natural(static_cast<unsigned long>(oracle::factor_lists(m))),
                    "m = " << m);
  }
}

TEST_CASE("lcm of pairwise products") {
  CHECK(lcm_pairwise_products(std::vector<Natural>{2, 2, 2}) == 4);
  CHECK(lcm_pairwise_products(std::vector<Natural>{2, 2, 2, 7}) == 28);
  CHECK(lcm_pairwise_products(std::vector<Natural>{1, 1}) == 1);
  CHECK_THROWS_AS(lcm_pairwise_products(std::vector<Natural>{5}), std::invalid_argument);
}

TEST_CASE("ratios stay reduced") {
  const Ratio r = make_ratio(6, 8);
  CHECK(r.get_num() == 3);
  CHECK(r.get_den() == 4);
  const Ratio neg = make_ratio(3, -9);
  CHECK(neg.get_num() == -1);
  CHECK(neg.get_den() == 3);
  CHECK_THROWS_AS(make_ratio(1, 0), std::invalid_argument);

  const Ratio sum = make_ratio(1, 6) + make_ratio(1, 3);
  CHECK(sum.get_num() == 1);
  CHECK(sum.get_den() == 2);
  const Ratio prod = make_ratio(2, 3) * make_ratio(9, 4);
  CHECK(prod.get_num() == 3);
  CHECK(prod.get_den() == 2);
}

TEST_CASE("misc helpers") {
  CHECK(binomial(9, 2) == 36);
  CHECK(factorial(6) == 720);
  CHECK(exact_root(36, 2) == Natural(6));
  CHECK_FALSE(exact_root(10, 2).has_value());
  CHECK(to_u64(Natural("18446744073709551615")) == 18446744073709551615ULL);
  CHECK_THROWS_AS(to_u64(Natural("18446744073709551616")), std::overflow_error);
  CHECK(parse_integer("-42") == -42);
  CHECK_THROWS_AS(parse_integer("4x2"), std::invalid_argument);
}
