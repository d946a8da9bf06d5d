#pragma once

// Serialization of results and the on-disk enumeration cache.
//
// Solution sets are written as
//   {"n": 5, "k": 3, "count": 27, "complete": true, "solver_version": "...",
//    "stats": {"M": "218", "N0": "...", "N2": "...", "min_product": "..."},
//    "solutions": [["1","2","4","15","218"], ...]}
// with every big integer as a decimal string.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "symeq/sequences.hpp"
#include "symeq/solver.hpp"
#include "symeq/verify.hpp"

namespace symeq {

std::string to_json(const SolutionSet& set, int indent = -1);
/// Throws std::invalid_argument on malformed input or a tuple that does not
/// solve the stated (n, k).
SolutionSet solution_set_from_json(std::string_view text);

/// Header row x1..xn, then one tuple per row.
std::string to_csv(const SolutionSet& set);
std::string to_text(const SolutionSet& set);

std::string to_json(const SequenceTable& table, int indent = -1);
std::string to_json(const BoundReport& report, int indent = -1);
std::string to_json(const LimitEstimate& estimate, int indent = -1);

/// "p/q", or "p" when q = 1.
std::string to_string(const Ratio& r);

/// Enumeration results keyed by (n, k, kSolverVersion), one file per key:
/// solutions_n{n}_k{k}.json. Writes go through a temporary file and a rename.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  std::filesystem::path file_for(int n, int k) const;
  /// nullopt on a miss, a version mismatch or an unreadable entry.
  std::optional<SolutionSet> load(int n, int k) const;
  /// Only complete sets are stored; throws std::invalid_argument otherwise.
  void store(const SolutionSet& set) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

/// $SYMEQ_CACHE_DIR, else $XDG_CACHE_HOME/symeq, else $HOME/.cache/symeq,
/// else ./.symeq-cache.
std::filesystem::path default_cache_dir();

}  // namespace symeq
