#pragma once

// Sylvester's sequence u_n and the pair-reciprocal sequence v_n, with exact
// partial sums and the limits lim a_n^(1/2^n).

#include <string>
#include <vector>

#include "symeq/arith.hpp"

namespace symeq {

enum class SequenceKind { U, V };

/// How v_n is generated. Definition evaluates 1 + S_n / (1 - Q_n) in exact
/// rationals; the three recurrences are pure integer.
enum class VMethod {
  Definition,
  /// v_{n+1} = v_n^2 + v_n v_{n-1} + v_{n-1}^2 - v_{n-1}^3 - v_n - v_{n-1} + 1
  Rec1,
  /// v_{n+1} = v_n^2 - v_n + 1 + v_1 ... v_{n-1}
  Rec2,
  /// v_{n+1} = 1 + (v_1 ... v_n)(1/v_1 + ... + 1/v_n)
  Rec3,
};

/// Terms indexed from 1; element i of each vector describes index i + 1.
struct SequenceTable {
  SequenceKind kind = SequenceKind::V;
  std::vector<Natural> values;
  std::vector<Ratio> partial_sum_S;       // sum_{i<=n} 1/a_i
  std::vector<Ratio> partial_sum_Q;       // sum_{i<j<=n} 1/(a_i a_j)
  std::vector<Natural> partial_product;   // prod_{i<=n} a_i

  std::size_t size() const { return values.size(); }
  /// 1-based access, a(1) is the first term.
  const Natural& at(std::size_t n) const { return values.at(n - 1); }
  const Ratio& S(std::size_t n) const { return partial_sum_S.at(n - 1); }
  const Ratio& Q(std::size_t n) const { return partial_sum_Q.at(n - 1); }
  const Natural& product(std::size_t n) const { return partial_product.at(n - 1); }
};

/// u_1 = 2, u_{n+1} = u_n^2 - u_n + 1. Throws for count < 1.
SequenceTable sylvester_u(std::size_t count);

/// v_1 = 1, v_2 = 2, then by the chosen method. Throws for count < 2.
SequenceTable v_sequence(std::size_t count, VMethod method = VMethod::Rec2);

/// 1 - Q_n - 1/(v_1 ... v_n); zero for every n >= 2.
Ratio defect_identity_check(const SequenceTable& table, std::size_t n);

/// a_N^(1/2^N) with a rigorous bracket. The limit lies in [lower, upper]
/// because (a_n - 1)^(1/2^n) increases and a_n^(1/2^n) decreases in n.
struct LimitEstimate {
  SequenceKind kind = SequenceKind::V;
  std::size_t terms = 0;
  std::string value;        // a_N^(1/2^N), decimal
  std::string lower;        // (a_N - 1)^(1/2^N) rounded down
  std::string upper;        // a_N^(1/2^N) rounded up
  double error_bound = 0;   // upper - lower, rounded up
  long double value_ld = 0;
};

/// `digits` is the number of decimals rendered. Throws std::invalid_argument
/// for terms < 8, and when precision_bits cannot carry `digits` decimals plus
/// 16 guard bits.
LimitEstimate limit_constant(SequenceKind kind, std::size_t terms, unsigned long precision_bits,
                             unsigned digits = 20);

std::string to_string(SequenceKind kind);
std::string to_string(VMethod method);

}  // namespace symeq
