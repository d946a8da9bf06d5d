#pragma once

// Exhaustive enumeration of nondecreasing positive solutions of
// sigma_k(x_1..x_n) = sigma_n(x_1..x_n).
//
// The search walks nondecreasing prefixes x_1..x_t for t <= n-2. Every term
// of the reciprocal form sigma_k/sigma_n strictly decreases in each variable,
// so the admissible range of x_{t+1} is an interval [x_t, hi]. Once n-2
// values are fixed the last two are recovered from divisor pairs of
//
//   (D*y - C) * (D*z - C) = C^2 + D*F,   D = P - E_{k-2}, C = E_{k-1}, F = E_k,
//
// where P and E_j are the product and elementary symmetric values of the
// prefix.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symeq/arith.hpp"
#include "symeq/symfunc.hpp"

namespace symeq {

/// A fixed search prefix with its cached product and E_0..E_min(k,t).
class PrefixState {
 public:
  PrefixState(int n, int k);
  /// Throws std::invalid_argument if values is not a valid nondecreasing prefix.
  PrefixState(int n, int k, std::vector<Natural> values);

  PrefixState extended(const Natural& next) const;

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t length() const { return values_.size(); }
  std::size_t remaining() const { return static_cast<std::size_t>(n_) - values_.size(); }
  const std::vector<Natural>& values() const { return values_; }
  const Natural& product() const { return product_; }
  /// Smallest admissible next value: the last prefix entry, or 1.
  Natural floor() const { return values_.empty() ? Natural(1) : values_.back(); }

  /// E_j of the prefix; zero outside 0..length().
  const Natural& sigma(long j) const;

  /// Sum of the reciprocal-form terms that involve prefix variables only.
  Ratio fixed_sum() const;

 private:
  int n_;
  int k_;
  std::vector<Natural> values_;
  Natural product_ = 1;
  std::vector<Natural> sigma_;  // E_0..E_min(k, t)
};

struct ValueRange {
  Natural lo;
  Natural hi;
};

/// Candidate interval for the next prefix value, or nullopt when no value can
/// still reach a reciprocal form of 1. With `use_known_bounds` the interval is
/// intersected with the known bounds for k = 1, 2, n-2, n-1.
std::optional<ValueRange> expand_range(const PrefixState& state, bool use_known_bounds = true);

/// Upper bound for x_position (1-based) valid for every solution, when one is
/// known for (n, k); nullopt otherwise.
std::optional<Natural> known_bound(int n, int k, int position);

/// The unique last value completing a prefix of length n-1, if any.
std::optional<Natural> complete_last_one(const PrefixState& state);

struct CompletionIdentity {
  Integer D;  // P - E_{k-2}
  Integer C;  // E_{k-1}
  Integer F;  // E_k
  Integer m;  // C^2 + D*F
};

/// Coefficients of the divisor identity for a prefix of length n-2.
CompletionIdentity completion_identity(const PrefixState& state);

/// All pairs (y, z), floor <= y <= z, completing a prefix of length n-2.
std::vector<std::pair<Natural, Natural>> complete_last_two(const PrefixState& state);

struct SearchOptions {
  unsigned threads = 1;
  std::uint64_t max_nodes = 0;  // 0: unlimited
  double max_seconds = 0;       // 0: unlimited
  bool use_known_bounds = true;
};

struct ExtremalStats {
  Natural M;   // max x_n
  Natural N0;  // max x_1 ... x_n
  Natural N2;  // max x_1 ... x_{n-2}
  Natural min_product;
};

struct SolutionSet {
  int n = 0;
  int k = 0;
  std::vector<SolutionTuple> solutions;  // sorted, unique
  bool complete = false;
  ExtremalStats stats;
  std::uint64_t nodes = 0;
};

/// Thrown when the node or time budget runs out; no partial set is returned.
class SearchIncomplete : public std::runtime_error {
 public:
  SearchIncomplete(const std::string& what, std::uint64_t nodes)
      : std::runtime_error(what), nodes_(nodes) {}
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

/// Throws std::invalid_argument unless n >= 2 and 0 <= k < n, and
/// SearchIncomplete when the budget is exceeded.
SolutionSet enumerate(int n, int k, const SearchOptions& options = {});

Natural count_solutions(int n, int k, const SearchOptions& options = {});

/// Throws std::invalid_argument for an incomplete or empty set.
ExtremalStats extremal_stats(const SolutionSet& set);

/// Bumped whenever a change could alter enumerate() output; part of cache keys.
inline constexpr const char* kSolverVersion = "symeq-solver-1";

}  // namespace symeq
