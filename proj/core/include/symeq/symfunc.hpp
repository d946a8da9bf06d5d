#pragma once

// Elementary symmetric polynomials and the reciprocal forms of
// sigma_k(x_1..x_n) = sigma_n(x_1..x_n).

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "symeq/arith.hpp"

namespace symeq {

/// A nondecreasing tuple of positive integers. The constructor sorts its
/// input and rejects entries below 1.
class SolutionTuple {
 public:
  SolutionTuple() = default;
  explicit SolutionTuple(std::vector<Natural> entries);
  SolutionTuple(std::initializer_list<long> entries);

  std::size_t size() const { return entries_.size(); }
  const Natural& operator[](std::size_t i) const { return entries_[i]; }
  const Natural& back() const { return entries_.back(); }
  std::span<const Natural> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Natural product() const;
  /// "(1,2,4,14)"
  std::string to_string() const;

  friend bool operator==(const SolutionTuple& a, const SolutionTuple& b) {
    return a.entries_ == b.entries_;
  }
  /// Lexicographic; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const SolutionTuple& a, const SolutionTuple& b);

 private:
  std::vector<Natural> entries_;
};

/// sigma[j] = sigma_j(entries) for j = 0..n, sigma[0] = 1.
struct SymmetricProfile {
  std::vector<Natural> sigma;

  const Natural& operator[](std::size_t j) const { return sigma[j]; }
  std::size_t degree() const { return sigma.size() - 1; }
};

/// One-variable-at-a-time recurrence, O(n^2) multiplications.
SymmetricProfile elementary_symmetric(std::span<const Natural> values);
inline SymmetricProfile elementary_symmetric(const SolutionTuple& t) {
  return elementary_symmetric(t.entries());
}

/// sigma_k(t) - sigma_n(t). Zero exactly when t solves the equation.
/// k = 0 uses sigma_0 = 1. Throws std::invalid_argument unless 0 <= k < n.
Integer residual(const SolutionTuple& t, int k);

bool is_solution(const SolutionTuple& t, int k);

/// sigma_{n-k}(1/x_1, ..., 1/x_n) = sigma_k(t) / sigma_n(t).
Ratio reciprocal_form(const SolutionTuple& t, int k);

/// sum_{i<j} 1/(t_i t_j), the k = n-2 reciprocal form. Requires n >= 2.
Ratio pair_sum(const SolutionTuple& t);

/// sum_i 1/t_i
Ratio reciprocal_sum(const SolutionTuple& t);

}  // namespace symeq
