#pragma once

// Explicit solution families. Every function verifies its output against the
// equation before returning and throws std::logic_error if that check fails.

#include <variant>
#include <vector>

#include "symeq/arith.hpp"
#include "symeq/symfunc.hpp"

namespace symeq {

/// (1_{n-k-1}, 2, p_1(n-k+1)+1, ..., p_{k-1}(n-1)+1, p_k(n)) with p_1(m) = m and
/// p_k(m) = sigma_k of the first m-1 entries of the (m, k) tuple. Needs 1 <= k < n.
SolutionTuple pk_solution(int n, int k);

/// p_k(n) itself.
Natural pk_value(int n, int k);

/// (1_{n-3}, 2, n, n(3n-5)/2), a k = 2 solution for n >= 3.
SolutionTuple canonical_k2(int n);

/// (1_{n-2}, 2, n), a k = 1 solution for n >= 2.
SolutionTuple canonical_k1(int n);

/// (u_1, ..., u_{n-1}, u_n - 1), a k = n-1 solution.
SolutionTuple sylvester_solution(int n);

/// (v_1, ..., v_{n-1}, v_n - 1), a k = n-2 solution.
SolutionTuple v_solution(int n);

enum class WitnessTag { Base, PlusOne, PlusTwo };

/// A tuple whose pair-reciprocal sum misses 1 by exactly 1/lcm(t_i t_j).
struct FamilyWitness {
  SolutionTuple tuple;
  Natural lcm;
  WitnessTag tag = WitnessTag::Base;
};

/// Validates the defect identity; throws std::invalid_argument if it fails.
FamilyWitness make_witness(const SolutionTuple& tuple);

/// lcm * sum 1/t_i, the value that closes a witness into a solution.
Natural closing_value(const FamilyWitness& w);

/// Appends closing_value: a full solution of sum_{i<j} 1/(x_i x_j) = 1.
SolutionTuple close_witness(const FamilyWitness& w);

/// Appends closing_value + 1 (PlusOne) or + 2 (PlusTwo, all entries even) and
/// re-verifies the defect identity for the longer tuple.
FamilyWitness extend_witness(const FamilyWitness& w, WitnessTag step);

enum class Extension { Zero, One, Two };

/// Dispatches to close_witness (Zero) or extend_witness (One, Two).
std::variant<SolutionTuple, FamilyWitness> lcm_extend(const SolutionTuple& base, Extension delta);

/// Witness chains of length m grown from (2,2,2); chain m-3 (0-based) is the
/// all-even one. Needs m >= 3.
std::vector<FamilyWitness> witness_chains(int m);

/// At least n-3 distinct k = n-2 solutions for n >= 4, obtained by closing
/// every witness chain of length n-1.
std::vector<SolutionTuple> lower_bound_family(int n);

std::string to_string(WitnessTag tag);

}  // namespace symeq
