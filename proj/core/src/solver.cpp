#include "symeq/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "symeq/sequences.hpp"

namespace symeq {

namespace {

void require_params(int n, int k) {
  if (n < 2) throw std::invalid_argument("need n >= 2, got n = " + std::to_string(n));
  if (k < 0 || k >= n) {
    throw std::invalid_argument("need 0 <= k < n, got k = " + std::to_string(k) +
                                ", n = " + std::to_string(n));
  }
}

const Natural& zero() {
  static const Natural z = 0;
  return z;
}

// Coefficients of g(w) = sum_j C(r,j) E_{k-j} w^j - P w^r, lowest degree
// first. g(w) >= 0 iff the prefix followed by r copies of w still has a
// reciprocal form >= 1.
std::vector<Integer> feasibility_polynomial(const PrefixState& s) {
  const std::size_t r = s.remaining();
  std::vector<Integer> coeffs(r + 1);
  for (std::size_t j = 0; j <= r; ++j) {
    coeffs[j] = binomial(r, j) * s.sigma(static_cast<long>(s.k()) - static_cast<long>(j));
  }
  coeffs[r] -= s.product();
  return coeffs;
}

bool feasible(const std::vector<Integer>& coeffs, const Natural& w) {
  Integer acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * w + *it;
  return sgn(acc) >= 0;
}

std::optional<ValueRange> expand_with_clamp(const PrefixState& s, const std::optional<Natural>& clamp) {
  if (s.remaining() < 1) return std::nullopt;
  // A finite range exists only if the prefix-only terms stay below 1.
  const std::size_t r = s.remaining();
  if (s.sigma(static_cast<long>(s.k()) - static_cast<long>(r)) >= s.product()) return std::nullopt;

  const auto coeffs = feasibility_polynomial(s);
  ValueRange range{s.floor(), 0};
  if (clamp && *clamp < range.lo) return std::nullopt;
  if (!feasible(coeffs, range.lo)) return std::nullopt;
  if (clamp && feasible(coeffs, *clamp)) {
    range.hi = *clamp;
    return range;
  }
  // good is feasible, bad is not.
  Natural good = range.lo;
  Natural bad = 2 * good;
  while (feasible(coeffs, bad)) {
    good = bad;
    bad *= 2;
  }
  if (clamp && bad > *clamp + 1) bad = *clamp + 1;
  while (bad - good > 1) {
    Natural mid = (good + bad) / 2;
    if (feasible(coeffs, mid)) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  range.hi = good;
  return range;
}

std::vector<std::optional<Natural>> bounds_by_position(int n, int k) {
  std::vector<std::optional<Natural>> out(static_cast<std::size_t>(n) + 1);
  for (int pos = 1; pos <= n; ++pos) out[static_cast<std::size_t>(pos)] = known_bound(n, k, pos);
  return out;
}

void keep_min(std::optional<Natural>& best, const Natural& candidate) {
  if (!best || candidate < *best) best = candidate;
}

SolutionTuple join(const PrefixState& s, const Natural& y, const Natural& z) {
  std::vector<Natural> values = s.values();
  values.push_back(y);
  values.push_back(z);
  return SolutionTuple(std::move(values));
}

class Search {
 public:
  Search(int n, int k, const SearchOptions& options)
      : n_(n), k_(k), options_(options), start_(std::chrono::steady_clock::now()) {
    if (options.use_known_bounds) bounds_ = bounds_by_position(n, k);
  }

  // Prefixes at which work is split between threads, in DFS order.
  std::vector<PrefixState> frontier(std::size_t depth) {
    std::vector<PrefixState> out;
    collect(PrefixState(n_, k_), depth, out);
    return out;
  }

  void run(const PrefixState& s, std::vector<SolutionTuple>& out) {
    tick();
    if (s.remaining() == 2) {
      for (auto& [y, z] : complete_last_two(s)) out.push_back(join(s, y, z));
      return;
    }
    auto range = expand(s);
    if (!range) return;
    for (Natural w = range->lo; w <= range->hi; ++w) {
      if (stop_.load(std::memory_order_relaxed)) return;
      run(s.extended(w), out);
    }
  }

  std::uint64_t nodes() const { return nodes_.load(); }
  bool stopped() const { return stop_.load(); }
  const std::string& reason() const { return reason_; }

 private:
  std::optional<ValueRange> expand(const PrefixState& s) const {
    std::optional<Natural> clamp;
    if (options_.use_known_bounds) clamp = bounds_[s.length() + 1];
    return expand_with_clamp(s, clamp);
  }

  void collect(const PrefixState& s, std::size_t depth, std::vector<PrefixState>& out) {
    if (s.length() == depth || s.remaining() == 2) {
      out.push_back(s);
      return;
    }
    tick();
    auto range = expand(s);
    if (!range) return;
    for (Natural w = range->lo; w <= range->hi; ++w) collect(s.extended(w), depth, out);
  }

  void tick() {
    const std::uint64_t count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (options_.max_nodes && count > options_.max_nodes) halt("node budget of " + std::to_string(options_.max_nodes) + " exceeded");
    if (options_.max_seconds > 0 && (count & 1023) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > options_.max_seconds) halt("time budget of " + std::to_string(options_.max_seconds) + " s exceeded");
    }
  }

  void halt(const std::string& why) {
    std::lock_guard lock(reason_mutex_);
    if (!stop_.exchange(true)) reason_ = why;
  }

  int n_;
  int k_;
  SearchOptions options_;
  std::vector<std::optional<Natural>> bounds_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  std::mutex reason_mutex_;
  std::string reason_;
};

}  // namespace

// ---- PrefixState ------------------------------------------------------------

PrefixState::PrefixState(int n, int k) : n_(n), k_(k), sigma_{Natural(1)} { require_params(n, k); }

PrefixState::PrefixState(int n, int k, std::vector<Natural> values) : PrefixState(n, k) {
  if (values.size() > static_cast<std::size_t>(n)) throw std::invalid_argument("PrefixState: prefix longer than n");
  PrefixState s(n, k);
  for (const auto& v : values) {
    if (v < s.floor()) throw std::invalid_argument("PrefixState: prefix must be nondecreasing and >= 1");
    s = s.extended(v);
  }
  *this = std::move(s);
}

PrefixState PrefixState::extended(const Natural& next) const {
  PrefixState out = *this;
  out.values_.push_back(next);
  out.product_ *= next;
  const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(k_), out.values_.size());
  if (out.sigma_.size() < top + 1) out.sigma_.push_back(0);
  for (std::size_t j = top; j >= 1; --j) out.sigma_[j] += out.sigma_[j - 1] * next;
  return out;
}

const Natural& PrefixState::sigma(long j) const {
  if (j < 0 || static_cast<std::size_t>(j) >= sigma_.size()) return zero();
  return sigma_[static_cast<std::size_t>(j)];
}

Ratio PrefixState::fixed_sum() const {
  return make_ratio(sigma(static_cast<long>(k_) - static_cast<long>(remaining())), product_);
}

// ---- range and completion ---------------------------------------------------

std::optional<Natural> known_bound(int n, int k, int position) {
  require_params(n, k);
  if (position < 1 || position > n) throw std::invalid_argument("known_bound: position out of range");
  std::optional<Natural> best;
  const auto pos = static_cast<std::size_t>(position);
  const Natural slots = n - position + 1;
  if (k == n - 2) {
    const SequenceTable v = v_sequence(std::max(n, 2));
    keep_min(best, position == n ? Natural(v.at(pos) - 1) : Natural(2 * slots * v.at(pos)));
  }
  if (k == n - 1) {
    const SequenceTable u = sylvester_u(static_cast<std::size_t>(n));
    keep_min(best, position == n ? Natural(u.at(pos) - 1) : Natural(slots * u.at(pos)));
  }
  if (k == 1) keep_min(best, Natural(n));
  if (k == 2 && n >= 3) keep_min(best, Natural(n * (3 * n - 5) / 2));
  return best;
}

std::optional<ValueRange> expand_range(const PrefixState& state, bool use_known_bounds) {
  std::optional<Natural> clamp;
  if (use_known_bounds && state.remaining() >= 1) {
    clamp = known_bound(state.n(), state.k(), static_cast<int>(state.length()) + 1);
  }
  return expand_with_clamp(state, clamp);
}

std::optional<Natural> complete_last_one(const PrefixState& state) {
  if (state.remaining() != 1) throw std::invalid_argument("complete_last_one: prefix must have length n-1");
  const long k = state.k();
  const Integer denom = state.product() - state.sigma(k - 1);
  if (sgn(denom) <= 0) return std::nullopt;
  const Natural& numer = state.sigma(k);
  if (!mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t())) return std::nullopt;
  Natural z = numer / denom;
  if (z < state.floor()) return std::nullopt;
  std::vector<Natural> values = state.values();
  values.push_back(z);
  if (!is_solution(SolutionTuple(std::move(values)), state.k())) return std::nullopt;
  return z;
}

CompletionIdentity completion_identity(const PrefixState& state) {
  if (state.remaining() != 2) throw std::invalid_argument("completion_identity: prefix must have length n-2");
  const long k = state.k();
  CompletionIdentity id;
  id.D = state.product() - state.sigma(k - 2);
  id.C = state.sigma(k - 1);
  id.F = state.sigma(k);
  id.m = id.C * id.C + id.D * id.F;
  return id;
}

std::vector<std::pair<Natural, Natural>> complete_last_two(const PrefixState& state) {
  const CompletionIdentity id = completion_identity(state);
  std::vector<std::pair<Natural, Natural>> out;
  if (sgn(id.D) <= 0) return out;
  const Natural lo = state.floor();

  auto try_pair = [&](const Integer& u, const Integer& v) {
    // y = (u + C) / D, z = (v + C) / D
    Integer y_num = u + id.C, z_num = v + id.C;
    if (sgn(y_num) <= 0 || sgn(z_num) <= 0) return;
    if (!mpz_divisible_p(y_num.get_mpz_t(), id.D.get_mpz_t()) ||
        !mpz_divisible_p(z_num.get_mpz_t(), id.D.get_mpz_t())) {
      return;
    }
    Natural y = y_num / id.D, z = z_num / id.D;
    if (y < lo || z < y) return;
    if (!is_solution(join(state, y, z), state.k())) return;
    out.emplace_back(std::move(y), std::move(z));
  };

  const Integer least_u = id.D * lo - id.C;
  for (const auto& u : divisors(id.m)) {
    if (u * u > id.m) break;
    const Integer v = id.m / u;
    if (u >= least_u) try_pair(u, v);
    // Both factors negative: D*y - C = -v, D*z - C = -u.
    try_pair(Integer(-v), Integer(-u));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- enumeration -------------------------------------------------------------

SolutionSet enumerate(int n, int k, const SearchOptions& options) {
  require_params(n, k);
  Search search(n, k, options);

  const std::size_t split_depth = std::min<std::size_t>(2, static_cast<std::size_t>(n) - 2);
  const std::vector<PrefixState> tasks = search.frontier(split_depth);
  std::vector<std::vector<SolutionTuple>> found(tasks.size());

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(tasks.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < tasks.size() && !search.stopped(); i = next++) {
        search.run(tasks[i], found[i]);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  if (search.stopped()) {
    throw SearchIncomplete("enumerate(" + std::to_string(n) + ", " + std::to_string(k) +
                               ") incomplete: " + search.reason(),
                           search.nodes());
  }

  SolutionSet set;
  set.n = n;
  set.k = k;
  for (auto& part : found) {
    for (auto& t : part) set.solutions.push_back(std::move(t));
  }
  std::sort(set.solutions.begin(), set.solutions.end());
  set.solutions.erase(std::unique(set.solutions.begin(), set.solutions.end()), set.solutions.end());
  set.complete = true;
  set.nodes = search.nodes();
  if (!set.solutions.empty()) set.stats = extremal_stats(set);
  return set;
}

Natural count_solutions(int n, int k, const SearchOptions& options) {
  const SolutionSet set = enumerate(n, k, options);
  if (set.solutions.empty()) throw std::logic_error("count_solutions: every (n, k) has at least one solution");
  return Natural(static_cast<unsigned long>(set.solutions.size()));
}

ExtremalStats extremal_stats(const SolutionSet& set) {
  if (!set.complete) throw std::invalid_argument("extremal_stats: solution set is incomplete");
  if (set.solutions.empty()) throw std::invalid_argument("extremal_stats: solution set is empty");
  ExtremalStats stats;
  bool first = true;
  for (const auto& t : set.solutions) {
    const Natural product = t.product();
    Natural head = 1;
    for (std::size_t i = 0; i + 2 < t.size(); ++i) head *= t[i];
    if (first) {
      stats = {t.back(), product, head, product};
      first = false;
      continue;
    }
    stats.M = std::max<Natural>(stats.M, t.back());
    stats.N0 = std::max<Natural>(stats.N0, product);
    stats.N2 = std::max<Natural>(stats.N2, head);
    stats.min_product = std::min<Natural>(stats.min_product, product);
  }
  return stats;
}

}  // namespace symeq
