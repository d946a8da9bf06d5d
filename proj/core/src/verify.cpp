#include "symeq/verify.hpp"

#include <stdexcept>

#include "symeq/sequences.hpp"

namespace symeq {

namespace {

BoundCheck upper(std::string name, const Ratio& lhs, const Ratio& rhs) {
  Ratio slack = rhs - lhs;
  const bool holds = sgn(slack) >= 0;
  return {std::move(name), lhs, rhs, holds, std::move(slack)};
}

BoundCheck lower(std::string name, const Ratio& lhs, const Ratio& rhs) {
  Ratio slack = lhs - rhs;
  const bool holds = sgn(slack) >= 0;
  return {std::move(name), lhs, rhs, holds, std::move(slack)};
}

Ratio as_ratio(const Natural& v) { return Ratio(v); }

}  // namespace

bool BoundReport::all_hold() const {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

const BoundCheck* BoundReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

BoundReport check_bounds(const SolutionTuple& t, int k) {
  if (!is_solution(t, k)) {
    throw std::invalid_argument("check_bounds: " + t.to_string() + " is not a solution for k = " + std::to_string(k));
  }
  const int n = static_cast<int>(t.size());
  const auto un = static_cast<unsigned long>(n);
  const Natural product = t.product();
  BoundReport report{t, k, {}};
  auto& checks = report.checks;

  // sigma_n >= C(n,k)^(n/(n-k)), raised to the (n-k)-th power.
  checks.push_back(lower("product_lower_bound", as_ratio(power(product, un - k)),
                         as_ratio(power(binomial(un, k), un))));

  if (k == 1) {
    checks.push_back(upper("k1_max_entry", as_ratio(t.back()), Ratio(n)));
    checks.push_back(upper("k1_product", as_ratio(product), Ratio(2 * n)));
  }
  if (k == 2 && n >= 3) {
    checks.push_back(upper("k2_max_entry", as_ratio(t.back()), Ratio(Natural(n) * (3 * n - 5) / 2)));
    checks.push_back(upper("k2_product", as_ratio(product), Ratio(Natural(n) * n * (3 * n - 5))));
  }
  const bool sequences = n <= kSequenceBoundLimit;
  if (k == n - 1 && sequences) {
    const SequenceTable u = sylvester_u(un);
    checks.push_back(upper("egyptian_max_entry", as_ratio(t.back()), as_ratio(u.at(un) - 1)));
    for (std::size_t p = 1; p < un; ++p) {
      checks.push_back(upper("egyptian_tail_x" + std::to_string(p), as_ratio(t[p - 1]),
                             as_ratio((un - p + 1) * u.at(p))));
    }
    checks.push_back(upper("egyptian_product", as_ratio(product), as_ratio(factorial(un) * u.product(un))));
  }
  if (k == n - 2) {
    // C(n,2)^(n/2) <= x_1 ... x_n, squared.
    checks.push_back(lower("pair_product_lower", as_ratio(product * product), as_ratio(power(binomial(un, 2), un))));
  }
  if (k == n - 2 && sequences) {
    const SequenceTable v = v_sequence(std::max<std::size_t>(un, 2));
    checks.push_back(upper("pair_max_entry", as_ratio(t.back()), as_ratio(v.at(un) - 1)));
    for (std::size_t p = 1; p <= un; ++p) {
      checks.push_back(upper("pair_tail_x" + std::to_string(p), as_ratio(t[p - 1]),
                             as_ratio(2 * (un - p + 1) * v.at(p))));
    }
    checks.push_back(upper("pair_product_upper", as_ratio(product),
                           as_ratio(power(2, un - 1) * factorial(un) * v.product(un))));
    Natural head = 1, head_bound = power(2, un - 2) * factorial(un - 1);
    for (std::size_t p = 1; p + 2 <= un; ++p) {
      head *= t[p - 1];
      head_bound *= v.at(p);
    }
    checks.push_back(upper("pair_head_product", as_ratio(head), as_ratio(head_bound)));
  }
  return report;
}

DominanceResult check_dominance(const SolutionTuple& b) {
  DominanceResult r;
  r.pair_sum = b.size() >= 2 ? pair_sum(b) : Ratio(0);
  r.reciprocal_sum = reciprocal_sum(b);
  r.applies = r.pair_sum < 1;
  if (!r.applies) return r;
  const SequenceTable v = v_sequence(std::max<std::size_t>(b.size(), 2));
  r.q_ok = r.pair_sum <= Ratio(1) - Ratio(Natural(1), v.product(b.size()));
  r.s_ok = r.reciprocal_sum <= v.S(b.size());
  return r;
}

SweepResult dominance_sweep(int n, const Natural& cap) {
  if (n != 3 && n != 4) throw std::invalid_argument("dominance_sweep: n must be 3 or 4");
  const SequenceTable v = v_sequence(static_cast<std::size_t>(n));
  if (cap < v.at(static_cast<std::size_t>(n))) {
    throw std::invalid_argument("dominance_sweep: cap " + cap.get_str() + " excludes v_n = " +
                                v.at(static_cast<std::size_t>(n)).get_str());
  }
  const unsigned long top = to_u64(cap);
  SweepResult out;
  out.n = n;
  out.cap = cap;
  std::vector<unsigned long> b(static_cast<std::size_t>(n), 1);

  auto visit = [&] {
    Ratio q = 0, s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const Ratio inv(Natural(1), Natural(b[i]));
      q += s * inv;
      s += inv;
    }
    if (q >= 1) return;
    ++out.tuples_checked;
    auto tuple = [&] { return SolutionTuple(std::vector<Natural>(b.begin(), b.end())); };
    if (q > out.max_pair_sum) {
      out.max_pair_sum = q;
      out.argmax_pair_sum = tuple();
    }
    if (s > out.max_reciprocal_sum) {
      out.max_reciprocal_sum = s;
      out.argmax_reciprocal_sum = tuple();
    }
  };
  auto loop = [&](auto&& self, std::size_t depth, unsigned long from) -> void {
    if (depth == b.size()) {
      visit();
      return;
    }
    for (unsigned long x = from; x <= top; ++x) {
      b[depth] = x;
      self(self, depth + 1, x);
    }
  };
  loop(loop, 0, 1);
  return out;
}

std::optional<SolutionTuple> equality_case(int n, int k) {
  if (k < 1 || k >= n) throw std::invalid_argument("equality_case: need 1 <= k < n");
  const auto root = exact_root(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)),
                               static_cast<unsigned long>(n - k));
  if (!root) return std::nullopt;
  SolutionTuple t(std::vector<Natural>(static_cast<std::size_t>(n), *root));
  if (!is_solution(t, k)) throw std::logic_error("equality_case: constant tuple is not a solution");
  return t;
}

ConjectureReport product_conjecture(const SolutionSet& set) {
  if (set.k != set.n - 2) throw std::invalid_argument("product_conjecture: needs a k = n-2 set");
  const ExtremalStats stats = extremal_stats(set);
  const auto n = static_cast<std::size_t>(set.n);
  const SequenceTable v = v_sequence(std::max<std::size_t>(n, 2));
  ConjectureReport r;
  r.observed_max_product = stats.N0;
  r.conjectured_bound = (n >= 2 ? v.product(n - 1) : Natural(1)) * (v.at(n) - 1);
  r.within = r.observed_max_product <= r.conjectured_bound;
  return r;
}

}  // namespace symeq
