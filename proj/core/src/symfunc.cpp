#include "symeq/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace symeq {

namespace {

void require_k(const SolutionTuple& t, int k, const char* what) {
  if (k < 0 || static_cast<std::size_t>(k) >= t.size()) {
    throw std::invalid_argument(std::string(what) + ": need 0 <= k < n, got k = " +
                                std::to_string(k) + ", n = " + std::to_string(t.size()));
  }
}

}  // namespace

SolutionTuple::SolutionTuple(std::vector<Natural> entries) : entries_(std::move(entries)) {
  for (const auto& x : entries_) {
    if (x < 1) throw std::invalid_argument("SolutionTuple: entries must be >= 1");
  }
  std::sort(entries_.begin(), entries_.end());
}

SolutionTuple::SolutionTuple(std::initializer_list<long> entries)
    : SolutionTuple(std::vector<Natural>(entries.begin(), entries.end())) {}

Natural SolutionTuple::product() const {
  Natural p = 1;
  for (const auto& x : entries_) p *= x;
  return p;
}

std::string SolutionTuple::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i].get_str();
  }
  return out + ")";
}

std::strong_ordering operator<=>(const SolutionTuple& a, const SolutionTuple& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

SymmetricProfile elementary_symmetric(std::span<const Natural> values) {
  SymmetricProfile p;
  p.sigma.assign(values.size() + 1, Natural(0));
  p.sigma[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j >= 1; --j) p.sigma[j] += p.sigma[j - 1] * values[i];
  }
  return p;
}

Integer residual(const SolutionTuple& t, int k) {
  require_k(t, k, "residual");
  const SymmetricProfile p = elementary_symmetric(t);
  return p[static_cast<std::size_t>(k)] - p[t.size()];
}

bool is_solution(const SolutionTuple& t, int k) { return residual(t, k) == 0; }

Ratio reciprocal_form(const SolutionTuple& t, int k) {
  require_k(t, k, "reciprocal_form");
  const SymmetricProfile p = elementary_symmetric(t);
  return make_ratio(p[static_cast<std::size_t>(k)], p[t.size()]);
}

Ratio pair_sum(const SolutionTuple& t) {
  if (t.size() < 2) throw std::invalid_argument("pair_sum: need at least two entries");
  Ratio total = 0, prefix = 0;
  for (const auto& x : t) {
    Ratio inv(Natural(1), x);
    total += prefix * inv;
    prefix += inv;
  }
  return total;
}

Ratio reciprocal_sum(const SolutionTuple& t) {
  Ratio total = 0;
  for (const auto& x : t) total += Ratio(Natural(1), x);
  return total;
}

}  // namespace symeq
