#include "symeq/io.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace symeq {

namespace {

using nlohmann::json;

std::string dump(const json& j, int indent) { return j.dump(indent); }

json tuple_json(const SolutionTuple& t) {
  json row = json::array();
  for (const auto& x : t) row.push_back(x.get_str());
  return row;
}

Natural natural_from(const json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_unsigned()) return Natural(j.get<unsigned long>());
  throw std::invalid_argument("expected an integer encoded as a decimal string");
}

}  // namespace

std::string to_string(const Ratio& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_json(const SolutionSet& set, int indent) {
  json j;
  j["n"] = set.n;
  j["k"] = set.k;
  j["count"] = set.solutions.size();
  j["complete"] = set.complete;
  j["solver_version"] = kSolverVersion;
  if (!set.solutions.empty()) {
    j["stats"] = {{"M", set.stats.M.get_str()},
                  {"N0", set.stats.N0.get_str()},
                  {"N2", set.stats.N2.get_str()},
                  {"min_product", set.stats.min_product.get_str()}};
  } else {
    j["stats"] = nullptr;
  }
  json rows = json::array();
  for (const auto& t : set.solutions) rows.push_back(tuple_json(t));
  j["solutions"] = std::move(rows);
  return dump(j, indent);
}

SolutionSet solution_set_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("solution file is not valid JSON: ") + e.what());
  }
  try {
    SolutionSet set;
    set.n = j.at("n").get<int>();
    set.k = j.at("k").get<int>();
    set.complete = j.at("complete").get<bool>();
    for (const auto& row : j.at("solutions")) {
      std::vector<Natural> entries;
      for (const auto& x : row) entries.push_back(natural_from(x));
      SolutionTuple t(std::move(entries));
      if (t.size() != static_cast<std::size_t>(set.n) || !is_solution(t, set.k)) {
        throw std::invalid_argument("tuple " + t.to_string() + " does not solve (n, k) = (" +
                                    std::to_string(set.n) + ", " + std::to_string(set.k) + ")");
      }
      set.solutions.push_back(std::move(t));
    }
    if (j.at("count").get<std::size_t>() != set.solutions.size()) {
      throw std::invalid_argument("count does not match the number of solutions");
    }
    std::sort(set.solutions.begin(), set.solutions.end());
    if (set.complete && !set.solutions.empty()) set.stats = extremal_stats(set);
    return set;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed solution file: ") + e.what());
  }
}

std::string to_csv(const SolutionSet& set) {
  std::ostringstream out;
  for (int i = 1; i <= set.n; ++i) out << (i > 1 ? "," : "") << 'x' << i;
  out << '\n';
  for (const auto& t : set.solutions) {
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i].get_str();
    out << '\n';
  }
  return out.str();
}

std::string to_text(const SolutionSet& set) {
  std::ostringstream out;
  out << "n = " << set.n << ", k = " << set.k << ": " << set.solutions.size() << " solution"
      << (set.solutions.size() == 1 ? "" : "s") << (set.complete ? "" : " (incomplete)") << '\n';
  for (const auto& t : set.solutions) out << "  " << t.to_string() << '\n';
  if (!set.solutions.empty()) {
    out << "M = " << set.stats.M.get_str() << ", N0 = " << set.stats.N0.get_str()
        << ", N2 = " << set.stats.N2.get_str() << '\n';
  }
  return out.str();
}

std::string to_json(const SequenceTable& table, int indent) {
  json j;
  j["kind"] = to_string(table.kind);
  json values = json::array(), s = json::array(), q = json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    values.push_back(table.values[i].get_str());
    s.push_back(to_string(table.partial_sum_S[i]));
    q.push_back(to_string(table.partial_sum_Q[i]));
  }
  j["values"] = std::move(values);
  j["S"] = std::move(s);
  j["Q"] = std::move(q);
  return dump(j, indent);
}

std::string to_json(const BoundReport& report, int indent) {
  json j;
  j["tuple"] = tuple_json(report.subject);
  j["k"] = report.k;
  j["all_hold"] = report.all_hold();
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"lhs", to_string(c.lhs)},
                      {"rhs", to_string(c.rhs)},
                      {"holds", c.holds},
                      {"slack", to_string(c.slack)}});
  }
  j["checks"] = std::move(checks);
  return dump(j, indent);
}

std::string to_json(const LimitEstimate& e, int indent) {
  json j;
  j["kind"] = to_string(e.kind);
  j["terms"] = e.terms;
  j["value"] = e.value;
  j["lower"] = e.lower;
  j["upper"] = e.upper;
  j["error_bound"] = e.error_bound;
  return dump(j, indent);
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::file_for(int n, int k) const {
  return dir_ / ("solutions_n" + std::to_string(n) + "_k" + std::to_string(k) + ".json");
}

std::optional<SolutionSet> ResultCache::load(int n, int k) const {
  std::ifstream in(file_for(n, k), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    const json j = json::parse(buf.str());
    if (j.value("solver_version", std::string()) != kSolverVersion) return std::nullopt;
    SolutionSet set = solution_set_from_json(buf.str());
    if (set.n != n || set.k != k || !set.complete) return std::nullopt;
    return set;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ResultCache::store(const SolutionSet& set) const {
  if (!set.complete) throw std::invalid_argument("ResultCache: refusing to store an incomplete set");
  std::filesystem::create_directories(dir_);
  const auto target = file_for(set.n, set.k);
  std::random_device rd;
  auto tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("ResultCache: cannot write " + tmp.string());
    out << to_json(set) << '\n';
    if (!out) throw std::runtime_error("ResultCache: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("SYMEQ_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "symeq";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "symeq";
  return ".symeq-cache";
}

}  // namespace symeq
