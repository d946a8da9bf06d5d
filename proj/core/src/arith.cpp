#include "symeq/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace symeq {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

constexpr u64 kTrialBound = 1u << 14;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialBound, false);
    std::vector<u64> out;
    for (u64 i = 2; i < kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j < kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

constexpr std::array<unsigned, 24> kWitnesses = {2,  3,  5,  7,  11, 13, 17, 19,
                                                 23, 29, 31, 37, 41, 43, 47, 53,
                                                 59, 61, 67, 71, 73, 79, 83, 89};

// ---- 64-bit fast path -------------------------------------------------------

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first 12 prime bases are deterministic for all 64-bit inputs.
  for (std::size_t i = 0; i < 12; ++i) {
    u64 x = pow_mod(kWitnesses[i], d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

u64 rho_u64(u64 n) {
  if ((n & 1) == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return static_cast<u64>((u128(mul_mod(x, x, n)) + c) % n); };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 block = 128;
    u64 r = 1;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(block, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += block;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_u64(u64 n, std::vector<Natural>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.emplace_back(static_cast<unsigned long>(n));
    return;
  }
  u64 d = rho_u64(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

// ---- arbitrary precision path ----------------------------------------------

bool fits_u64(const Natural& m) { return mpz_sizeinbase(m.get_mpz_t(), 2) <= 64; }

bool miller_rabin(const Natural& n, std::span<const unsigned> bases) {
  Natural d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const Natural n_minus_one = n - 1;
  Natural x;
  for (unsigned a : bases) {
    Natural base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_one) continue;
    bool witness = true;
    for (unsigned long r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n_minus_one) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Natural rho_big(const Natural& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    auto f = [&](const Natural& v) -> Natural { return (v * v + c) % n; };
    Natural y = 2, x = 2, ys = 2, q = 1, g = 1, diff;
    const unsigned long block = 128;
    unsigned long r = 1;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(block, r - k); ++i) {
          y = f(y);
          diff = abs(x - y);
          q = q * diff % n;
        }
        g = gcd(q, n);
        k += block;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_big(const Natural& n, std::vector<Natural>& out) {
  if (n == 1) return;
  if (fits_u64(n)) {
    factor_u64(to_u64(n), out);
    return;
  }
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Natural d = rho_big(n);
  factor_big(d, out);
  factor_big(n / d, out);
}

Factorization collect(std::vector<Natural> primes) {
  std::sort(primes.begin(), primes.end());
  Factorization f;
  for (auto& p : primes) {
    if (!f.empty() && f.back().prime == p) {
      ++f.back().exponent;
    } else {
      f.push_back({std::move(p), 1});
    }
  }
  return f;
}

void require_positive(const Natural& m, const char* what) {
  if (sgn(m) <= 0) throw std::invalid_argument(std::string(what) + ": argument must be >= 1");
}

}  // namespace

Ratio make_ratio(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::invalid_argument("make_ratio: zero denominator");
  Ratio r(numerator, denominator);
  r.canonicalize();
  return r;
}

bool is_prime(const Natural& m) {
  if (m < 2) return false;
  if (fits_u64(m)) return is_prime_u64(to_u64(m));
  for (unsigned p : kWitnesses) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
  }
  // 3317044064679887385961981 is the smallest strong pseudoprime to the first
  // 13 prime bases.
  static const Natural deterministic_limit("3317044064679887385961981");
  const std::size_t bases = m < deterministic_limit ? 13 : kWitnesses.size();
  return miller_rabin(m, std::span<const unsigned>(kWitnesses.data(), bases));
}

Factorization factorize(const Natural& m) {
  require_positive(m, "factorize");
  std::vector<Natural> primes;
  if (fits_u64(m)) {
    u64 n = to_u64(m);
    for (u64 p : small_primes()) {
      if (p * p > n) break;
      while (n % p == 0) {
        primes.emplace_back(static_cast<unsigned long>(p));
        n /= p;
      }
    }
    factor_u64(n, primes);
    return collect(std::move(primes));
  }
  Natural n = m;
  for (u64 p : small_primes()) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(static_cast<unsigned long>(p));
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  factor_big(n, primes);
  return collect(std::move(primes));
}

Natural factorization_product(const Factorization& f) {
  Natural out = 1;
  for (const auto& [p, e] : f) out *= power(p, e);
  return out;
}

Natural divisor_count(const Factorization& f) {
  Natural out = 1;
  for (const auto& pp : f) out *= pp.exponent + 1;
  return out;
}

std::vector<Natural> divisors(const Factorization& f) {
  std::vector<Natural> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    Natural pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Natural> divisors(const Natural& m) {
  require_positive(m, "divisors");
  return divisors(factorize(m));
}

Natural multiplicative_partitions(const Natural& m) {
  require_positive(m, "multiplicative_partitions");
  if (m == 1) return 1;
  const std::vector<Natural> divs = divisors(m);
  auto index_of = [&](const Natural& d) {
    return static_cast<std::size_t>(std::lower_bound(divs.begin(), divs.end(), d) - divs.begin());
  };
  // count(x, lo): factorizations of divs[x] into nondecreasing factors >= divs[lo].
  std::map<std::pair<std::size_t, std::size_t>, Natural> memo;
  auto count = [&](auto&& self, std::size_t x, std::size_t lo) -> Natural {
    if (auto it = memo.find({x, lo}); it != memo.end()) return it->second;
    const Natural& value = divs[x];
    Natural total = 1;
    for (std::size_t d = lo; d < divs.size(); ++d) {
      const Natural& factor = divs[d];
      if (factor * factor > value) break;
      if (mpz_divisible_p(value.get_mpz_t(), factor.get_mpz_t())) {
        total += self(self, index_of(value / factor), d);
      }
    }
    memo.emplace(std::make_pair(x, lo), total);
    return total;
  };
  return count(count, divs.size() - 1, 1);
}

Natural lcm_pairwise_products(std::span<const Natural> t) {
  if (t.size() < 2) throw std::invalid_argument("lcm_pairwise_products: need at least two entries");
  Natural out = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) out = lcm(out, t[i] * t[j]);
  }
  return out;
}

Natural binomial(unsigned long n, unsigned long k) {
  Natural out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Natural factorial(unsigned long n) {
  Natural out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Natural power(const Natural& base, unsigned long exponent) {
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::optional<Natural> exact_root(const Natural& m, unsigned long k) {
  if (k == 0 || sgn(m) < 0) return std::nullopt;
  Natural r;
  if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

std::uint64_t to_u64(const Natural& m) {
  if (sgn(m) < 0 || !fits_u64(m)) throw std::overflow_error("to_u64: value out of range");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, m.get_mpz_t());
  return out;
}

Integer parse_integer(const std::string& text) {
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a base-10 integer: '" + text + "'");
  }
  return out;
}

}  // namespace symeq
