#pragma once

// Exact integer and rational arithmetic shared by every symeq module.
//
// Natural and Integer are GMP integers; Natural is used where the value is
// nonnegative by construction. Ratio is a GMP rational and is kept in
// canonical (reduced, positive denominator) form by every function here.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symeq {

using Natural = mpz_class;
using Integer = mpz_class;
using Ratio = mpq_class;

struct PrimePower {
  Natural prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

/// Prime factorization with strictly increasing primes.
using Factorization = std::vector<PrimePower>;

/// Builds a reduced rational; throws std::invalid_argument on a zero denominator.
Ratio make_ratio(const Integer& numerator, const Integer& denominator);

/// Miller-Rabin. Deterministic below 3.3e24 (first 13 prime bases); above
/// that a fixed set of 24 prime bases is used, so results are reproducible.
bool is_prime(const Natural& m);

/// Trial division by primes below 2^14, then Brent's variant of Pollard rho
/// with deterministic seeds. Throws std::invalid_argument for m == 0.
Factorization factorize(const Natural& m);

Natural factorization_product(const Factorization& f);

/// d(m) computed from the exponents as prod(e_i + 1).
Natural divisor_count(const Factorization& f);

/// All positive divisors in increasing order. Throws for m == 0.
std::vector<Natural> divisors(const Natural& m);
std::vector<Natural> divisors(const Factorization& f);

/// Number of unordered factorizations of m into factors >= 2, with f(1) = 1.
Natural multiplicative_partitions(const Natural& m);

/// lcm { t_i * t_j : i < j }. Throws std::invalid_argument when fewer than
/// two entries are given.
Natural lcm_pairwise_products(std::span<const Natural> t);

Natural binomial(unsigned long n, unsigned long k);
Natural factorial(unsigned long n);
Natural power(const Natural& base, unsigned long exponent);

/// r with r^k == m, if m is a perfect k-th power.
std::optional<Natural> exact_root(const Natural& m, unsigned long k);

/// Converts a value that is known to fit; throws std::overflow_error otherwise.
std::uint64_t to_u64(const Natural& m);

/// Parses a base-10 integer; throws std::invalid_argument on malformed input.
Integer parse_integer(const std::string& text);

}  // namespace symeq
