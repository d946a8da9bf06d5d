#pragma once

// Independent reference implementations used only by tests. Nothing here
// calls into the symeq search or completion code.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace symeq::oracle {

// sigma_j by explicit subset enumeration.
inline mpz_class subset_sigma(const std::vector<mpz_class>& x, std::size_t j) {
  mpz_class total = 0;
  const std::size_t n = x.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != j) continue;
    mpz_class term = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) term *= x[i];
    }
    total += term;
  }
  return total;
}

inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

inline std::vector<std::uint64_t> divisors_by_loop(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

// Nondecreasing factor lists, every factor >= least, product m.
inline std::uint64_t factor_lists(std::uint64_t m, std::uint64_t least = 2) {
  if (m == 1) return 1;
  std::uint64_t count = 0;
  for (std::uint64_t d = least; d <= m; ++d) {
    if (m % d == 0) count += factor_lists(m / d, d);
  }
  return count;
}

// sigma_k / sigma_n >= 1 for the tuple, via subset sums.
inline bool reaches_one(const std::vector<mpz_class>& x, int k) {
  return subset_sigma(x, static_cast<std::size_t>(k)) >= subset_sigma(x, x.size());
}

// Every nondecreasing tuple with entries <= bound solving sigma_k = sigma_n.
// Pruning is by monotonicity: once the prefix followed by copies of the
// current value drops below 1, larger values cannot recover. Both sides are
// affine in the last entry, so it is solved for rather than looped over.
inline std::vector<std::vector<mpz_class>> brute_solutions(int n, int k, std::uint64_t bound) {
  std::vector<std::vector<mpz_class>> out;
  std::vector<mpz_class> x;
  const auto last_entry = [&](std::uint64_t from) {
    // sigma_k(x, w) = sigma_k(x) + w sigma_{k-1}(x), sigma_n(x, w) = w prod(x).
    const mpz_class a = subset_sigma(x, static_cast<std::size_t>(k));
    const mpz_class b = k >= 1 ? subset_sigma(x, static_cast<std::size_t>(k - 1)) : mpz_class(0);
    const mpz_class den = subset_sigma(x, x.size()) - b;
    if (den <= 0 || a % den != 0) return;
    const mpz_class w = a / den;
    if (w < static_cast<unsigned long>(from) || w > static_cast<unsigned long>(bound)) return;
    x.push_back(w);
    out.push_back(x);
    x.pop_back();
  };
  auto rec = [&](auto&& self, std::uint64_t from) -> void {
    if (x.size() + 1 == static_cast<std::size_t>(n)) {
      last_entry(from);
      return;
    }
    for (std::uint64_t w = from; w <= bound; ++w) {
      std::vector<mpz_class> probe = x;
      probe.resize(static_cast<std::size_t>(n), mpz_class(static_cast<unsigned long>(w)));
      if (!reaches_one(probe, k)) break;
      x.push_back(mpz_class(static_cast<unsigned long>(w)));
      // Terms of sigma_k / sigma_n built from the prefix alone already reach 1,
      // and every later term is positive.
      const long fixed_degree = static_cast<long>(x.size()) - (n - k);
      const bool saturated =
          fixed_degree >= 0 &&
          subset_sigma(x, static_cast<std::size_t>(fixed_degree)) >= subset_sigma(x, x.size());
      if (!saturated) self(self, w);
      x.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace symeq::oracle
