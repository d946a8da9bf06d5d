#pragma once

// Exact checks of known inequalities for solutions, the pair-sum
// dominance property of v_n, and the equality cases of the product bound.

#include <optional>
#include <string>
#include <vector>

#include "symeq/arith.hpp"
#include "symeq/solver.hpp"
#include "symeq/symfunc.hpp"

namespace symeq {

struct BoundCheck {
  std::string name;
  Ratio lhs;
  Ratio rhs;
  bool holds = false;
  Ratio slack;  // rhs - lhs for upper bounds, lhs - rhs for lower bounds
};

struct BoundReport {
  SolutionTuple subject;
  int k = 0;
  std::vector<BoundCheck> checks;

  bool all_hold() const;
  const BoundCheck* find(const std::string& name) const;
};

/// Evaluates every applicable bound for a solution of the (n, k) equation.
/// Fractional exponents are cleared by raising both sides to an integer
/// power. Bounds built from u_n or v_n are skipped above
/// kSequenceBoundLimit, where those terms have too many digits to compute.
/// Throws std::invalid_argument if t is not a solution.
inline constexpr int kSequenceBoundLimit = 24;
BoundReport check_bounds(const SolutionTuple& t, int k);

struct DominanceResult {
  bool applies = false;  // pair_sum(b) < 1
  bool q_ok = false;     // pair_sum(b) <= 1 - 1/(v_1 ... v_n)
  bool s_ok = false;     // sum 1/b_i <= S_n
  Ratio pair_sum;
  Ratio reciprocal_sum;
};

DominanceResult check_dominance(const SolutionTuple& b);

struct SweepResult {
  int n = 0;
  Natural cap;
  std::uint64_t tuples_checked = 0;  // tuples with pair_sum < 1
  Ratio max_pair_sum;
  SolutionTuple argmax_pair_sum;
  Ratio max_reciprocal_sum;
  SolutionTuple argmax_reciprocal_sum;
};

/// Scans every nondecreasing tuple with entries <= cap and pair sum < 1.
/// Ties keep the lexicographically smallest tuple. Throws
/// std::invalid_argument unless n is 3 or 4 and cap >= v_n.
SweepResult dominance_sweep(int n, const Natural& cap);

/// The constant tuple attaining sigma_n = C(n,k)^(n/(n-k)), if C(n,k) is a
/// perfect (n-k)-th power. Throws std::invalid_argument unless 1 <= k < n.
std::optional<SolutionTuple> equality_case(int n, int k);

/// Informational: whether the largest product over a complete k = n-2 set
/// stays below v_1 ... v_{n-1} (v_n - 1).
struct ConjectureReport {
  Natural observed_max_product;
  Natural conjectured_bound;
  bool within = false;
};
ConjectureReport product_conjecture(const SolutionSet& set);

}  // namespace symeq
