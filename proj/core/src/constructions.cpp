#include "symeq/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "symeq/sequences.hpp"

namespace symeq {

namespace {

SolutionTuple verified(SolutionTuple t, int k, const char* what) {
  if (!is_solution(t, k)) {
    throw std::logic_error(std::string(what) + " produced a non-solution " + t.to_string() +
                           " for k = " + std::to_string(k));
  }
  return t;
}

// Entries of the (n, k) tuple before its last value.
std::vector<Natural> pk_head(int n, int k, std::map<std::pair<int, int>, Natural>& memo);

Natural pk_memo(int n, int k, std::map<std::pair<int, int>, Natural>& memo) {
  if (k == 1) return n;
  if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
  const std::vector<Natural> head = pk_head(n, k, memo);
  Natural value = elementary_symmetric(head)[static_cast<std::size_t>(k)];
  memo.emplace(std::make_pair(n, k), value);
  return value;
}

std::vector<Natural> pk_head(int n, int k, std::map<std::pair<int, int>, Natural>& memo) {
  std::vector<Natural> head(static_cast<std::size_t>(n - k - 1), Natural(1));
  head.emplace_back(2);
  for (int i = 1; i < k; ++i) head.push_back(pk_memo(n - k + i, i, memo) + 1);
  return head;
}

void require_nk(int n, int k, const char* what) {
  if (k < 1 || k >= n) {
    throw std::invalid_argument(std::string(what) + ": need 1 <= k < n, got n = " + std::to_string(n) +
                                ", k = " + std::to_string(k));
  }
}

void require_n(int n, int least, const char* what) {
  if (n < least) {
    throw std::invalid_argument(std::string(what) + ": need n >= " + std::to_string(least) + ", got " +
                                std::to_string(n));
  }
}

}  // namespace

Natural pk_value(int n, int k) {
  require_nk(n, k, "pk_value");
  std::map<std::pair<int, int>, Natural> memo;
  return pk_memo(n, k, memo);
}

SolutionTuple pk_solution(int n, int k) {
  require_nk(n, k, "pk_solution");
  std::map<std::pair<int, int>, Natural> memo;
  std::vector<Natural> entries = pk_head(n, k, memo);
  entries.push_back(pk_memo(n, k, memo));
  return verified(SolutionTuple(std::move(entries)), k, "pk_solution");
}

SolutionTuple canonical_k1(int n) {
  require_n(n, 2, "canonical_k1");
  std::vector<Natural> entries(static_cast<std::size_t>(n - 2), Natural(1));
  entries.emplace_back(2);
  entries.emplace_back(n);
  return verified(SolutionTuple(std::move(entries)), 1, "canonical_k1");
}

SolutionTuple canonical_k2(int n) {
  require_n(n, 3, "canonical_k2");
  std::vector<Natural> entries(static_cast<std::size_t>(n - 3), Natural(1));
  entries.emplace_back(2);
  entries.emplace_back(n);
  entries.push_back(Natural(n) * (3 * n - 5) / 2);
  return verified(SolutionTuple(std::move(entries)), 2, "canonical_k2");
}

SolutionTuple sylvester_solution(int n) {
  require_n(n, 2, "sylvester_solution");
  const SequenceTable u = sylvester_u(static_cast<std::size_t>(n));
  std::vector<Natural> entries = u.values;
  entries.back() -= 1;
  return verified(SolutionTuple(std::move(entries)), n - 1, "sylvester_solution");
}

SolutionTuple v_solution(int n) {
  require_n(n, 2, "v_solution");
  const SequenceTable v = v_sequence(static_cast<std::size_t>(n));
  std::vector<Natural> entries = v.values;
  entries.back() -= 1;
  return verified(SolutionTuple(std::move(entries)), n - 2, "v_solution");
}

FamilyWitness make_witness(const SolutionTuple& tuple) {
  if (tuple.size() < 2) throw std::invalid_argument("make_witness: need at least two entries");
  FamilyWitness w{tuple, lcm_pairwise_products(tuple.entries()), WitnessTag::Base};
  if (pair_sum(tuple) != Ratio(1) - Ratio(Natural(1), w.lcm)) {
    throw std::invalid_argument("make_witness: " + tuple.to_string() + " does not satisfy the defect identity");
  }
  return w;
}

Natural closing_value(const FamilyWitness& w) {
  const Ratio value = Ratio(w.lcm) * reciprocal_sum(w.tuple);
  if (value.get_den() != 1) throw std::logic_error("closing_value: lcm * sum 1/x_i is not an integer");
  return value.get_num();
}

SolutionTuple close_witness(const FamilyWitness& w) {
  std::vector<Natural> entries(w.tuple.begin(), w.tuple.end());
  entries.push_back(closing_value(w));
  SolutionTuple out(std::move(entries));
  if (pair_sum(out) != 1) throw std::logic_error("close_witness: pair sum of " + out.to_string() + " is not 1");
  return verified(std::move(out), static_cast<int>(w.tuple.size()) - 1, "close_witness");
}

FamilyWitness extend_witness(const FamilyWitness& w, WitnessTag step) {
  Natural offset;
  switch (step) {
    case WitnessTag::PlusOne:
      offset = 1;
      break;
    case WitnessTag::PlusTwo:
      for (const auto& x : w.tuple) {
        if (mpz_odd_p(x.get_mpz_t())) {
          throw std::invalid_argument("extend_witness: +2 step needs all entries even, got " + w.tuple.to_string());
        }
      }
      offset = 2;
      break;
    case WitnessTag::Base:
      throw std::invalid_argument("extend_witness: step must be PlusOne or PlusTwo");
  }
  std::vector<Natural> entries(w.tuple.begin(), w.tuple.end());
  entries.push_back(closing_value(w) + offset);
  FamilyWitness out = make_witness(SolutionTuple(std::move(entries)));
  out.tag = step;
  return out;
}

std::variant<SolutionTuple, FamilyWitness> lcm_extend(const SolutionTuple& base, Extension delta) {
  const FamilyWitness w = make_witness(base);
  switch (delta) {
    case Extension::Zero: return close_witness(w);
    case Extension::One: return extend_witness(w, WitnessTag::PlusOne);
    case Extension::Two: return extend_witness(w, WitnessTag::PlusTwo);
  }
  throw std::invalid_argument("lcm_extend: unknown extension");
}

std::vector<FamilyWitness> witness_chains(int m) {
  require_n(m, 3, "witness_chains");
  std::vector<FamilyWitness> chains{make_witness(SolutionTuple{2, 2, 2})};
  for (int len = 3; len < m; ++len) {
    std::vector<FamilyWitness> next;
    next.reserve(chains.size() + 1);
    for (const auto& w : chains) next.push_back(extend_witness(w, WitnessTag::PlusOne));
    // The last chain is the all-even one.
    next.push_back(extend_witness(chains.back(), WitnessTag::PlusTwo));
    chains = std::move(next);
  }
  return chains;
}

std::vector<SolutionTuple> lower_bound_family(int n) {
  require_n(n, 4, "lower_bound_family");
  std::vector<SolutionTuple> out;
  for (const auto& w : witness_chains(n - 1)) out.push_back(close_witness(w));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::logic_error("lower_bound_family: constructed solutions are not distinct");
  }
  if (out.size() < static_cast<std::size_t>(n - 3)) throw std::logic_error("lower_bound_family: fewer than n-3 solutions");
  return out;
}

std::string to_string(WitnessTag tag) {
  switch (tag) {
    case WitnessTag::Base: return "base";
    case WitnessTag::PlusOne: return "plus-one";
    case WitnessTag::PlusTwo: return "plus-two";
  }
  return "?";
}

}  // namespace symeq
