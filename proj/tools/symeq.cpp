// symeq command-line front end.
//
// Exit status: 0 success, 2 invalid input, 3 verification failure,
// 4 search budget exhausted (nothing is cached in that case).

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symeq/symeq.hpp"

using namespace symeq;
using nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kInvalid = 2, kVerifyFailed = 3, kBudget = 4 };

enum class Format { Json, Csv, Text };

struct Config {
  Format format = Format::Text;
  std::string output;
  std::string cache_dir;
  bool no_cache = false;
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;
  unsigned threads = 1;

  SearchOptions search() const {
    SearchOptions o;
    o.threads = threads;
    o.max_nodes = max_nodes;
    o.max_seconds = max_seconds;
    return o;
  }
};

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Config& cfg, const std::string& text) {
  const std::string body = text.empty() || text.back() == '\n' ? text : text + '\n';
  if (cfg.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw InvalidInput("cannot open output file " + cfg.output);
  out << body;
}

json tuple_json(const SolutionTuple& t) {
  json row = json::array();
  for (const auto& x : t) row.push_back(x.get_str());
  return row;
}

std::string tuple_csv(const SolutionTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i].get_str();
  return s;
}

std::string csv_header(std::size_t n) {
  std::string s;
  for (std::size_t i = 1; i <= n; ++i) s += (i > 1 ? ",x" : "x") + std::to_string(i);
  return s;
}

std::string render_tuples(const Config& cfg, const std::string& label, const std::vector<SolutionTuple>& tuples) {
  switch (cfg.format) {
    case Format::Json: {
      json rows = json::array();
      for (const auto& t : tuples) rows.push_back(tuple_json(t));
      return json{{"family", label}, {"count", tuples.size()}, {"tuples", rows}}.dump(2);
    }
    case Format::Csv: {
      std::string s = tuples.empty() ? "" : csv_header(tuples.front().size()) + '\n';
      for (const auto& t : tuples) s += tuple_csv(t) + '\n';
      return s;
    }
    case Format::Text:
      break;
  }
  std::string s;
  for (const auto& t : tuples) s += t.to_string() + '\n';
  return s;
}

// ---- subcommands ------------------------------------------------------------

SolutionSet solve(const Config& cfg, int n, int k) {
  if (n < 2 || k < 0 || k >= n) throw InvalidInput("need n >= 2 and 0 <= k < n");
  std::optional<ResultCache> cache;
  if (!cfg.no_cache) cache.emplace(cfg.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cfg.cache_dir));
  if (cache) {
    if (auto hit = cache->load(n, k)) return *hit;
  }
  SolutionSet set = enumerate(n, k, cfg.search());
  if (cache) {
    try {
      cache->store(set);
    } catch (const std::exception& e) {
      std::cerr << "warning: cache write failed: " << e.what() << '\n';
    }
  }
  return set;
}

int cmd_enumerate(const Config& cfg, int n, int k) {
  const SolutionSet set = solve(cfg, n, k);
  switch (cfg.format) {
    case Format::Json: emit(cfg, to_json(set, 2)); break;
    case Format::Csv: emit(cfg, to_csv(set)); break;
    case Format::Text: emit(cfg, to_text(set)); break;
  }
  return kOk;
}

int cmd_count(const Config& cfg, int n, int k) {
  const SolutionSet set = solve(cfg, n, k);
  const std::string count = std::to_string(set.solutions.size());
  switch (cfg.format) {
    case Format::Json: emit(cfg, json{{"n", n}, {"k", k}, {"count", set.solutions.size()}}.dump(2)); break;
    case Format::Csv: emit(cfg, "n,k,count\n" + std::to_string(n) + "," + std::to_string(k) + "," + count); break;
    case Format::Text: emit(cfg, count); break;
  }
  return kOk;
}

int cmd_seq(const Config& cfg, const std::string& kind, std::size_t count, const std::string& method) {
  if (count == 0) throw InvalidInput("--count must be positive");
  SequenceTable table;
  if (kind == "u") {
    if (!method.empty()) throw InvalidInput("--method applies to the v sequence only");
    table = sylvester_u(count);
  } else {
    VMethod m = VMethod::Rec2;
    if (method == "definition") m = VMethod::Definition;
    else if (method == "rec1") m = VMethod::Rec1;
    else if (method == "rec3") m = VMethod::Rec3;
    table = v_sequence(count, m);
  }
  switch (cfg.format) {
    case Format::Json: emit(cfg, to_json(table, 2)); break;
    case Format::Csv: {
      std::string s = "n,value\n";
      for (std::size_t i = 1; i <= table.size(); ++i) s += std::to_string(i) + "," + table.at(i).get_str() + '\n';
      emit(cfg, s);
      break;
    }
    case Format::Text: {
      std::string s;
      for (std::size_t i = 1; i <= table.size(); ++i) s += (i > 1 ? "," : "") + table.at(i).get_str();
      emit(cfg, s);
      break;
    }
  }
  return kOk;
}

int cmd_construct(const Config& cfg, const std::string& family, int n, int k) {
  if (family == "lcm-family") {
    const auto chains = witness_chains(n);
    if (cfg.format == Format::Json) {
      json rows = json::array();
      for (const auto& w : chains) {
        rows.push_back({{"tuple", tuple_json(w.tuple)}, {"lcm", w.lcm.get_str()}, {"step", to_string(w.tag)}});
      }
      emit(cfg, json{{"family", family}, {"count", chains.size()}, {"witnesses", rows}}.dump(2));
    } else if (cfg.format == Format::Csv) {
      std::string s = csv_header(static_cast<std::size_t>(n)) + ",lcm,step\n";
      for (const auto& w : chains) s += tuple_csv(w.tuple) + "," + w.lcm.get_str() + "," + to_string(w.tag) + '\n';
      emit(cfg, s);
    } else {
      std::string s;
      for (const auto& w : chains) s += w.tuple.to_string() + " lcm=" + w.lcm.get_str() + " " + to_string(w.tag) + '\n';
      emit(cfg, s);
    }
    return kOk;
  }
  std::vector<SolutionTuple> tuples;
  if (family == "pk") {
    if (k < 1) throw InvalidInput("construct pk needs --k");
    tuples.push_back(pk_solution(n, k));
  } else if (family == "k1") {
    tuples.push_back(canonical_k1(n));
  } else if (family == "k2") {
    tuples.push_back(canonical_k2(n));
  } else if (family == "sylvester") {
    tuples.push_back(sylvester_solution(n));
  } else if (family == "v") {
    tuples.push_back(v_solution(n));
  } else {
    tuples = lower_bound_family(n);
  }
  emit(cfg, render_tuples(cfg, family, tuples));
  return kOk;
}

std::vector<Natural> parse_tuple(const std::string& text) {
  std::vector<Natural> out;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    const auto first = field.find_first_not_of(" ()");
    const auto last = field.find_last_not_of(" ()");
    if (first == std::string::npos) throw InvalidInput("empty entry in --tuple");
    out.push_back(parse_integer(field.substr(first, last - first + 1)));
  }
  return out;
}

int cmd_verify(const Config& cfg, int n, int k, const std::string& tuple_text) {
  std::vector<BoundReport> reports;
  std::vector<std::string> rejected;
  if (!tuple_text.empty()) {
    if (k < 0) throw InvalidInput("verify --tuple needs --k");
    const SolutionTuple t(parse_tuple(tuple_text));
    if (k >= static_cast<int>(t.size())) throw InvalidInput("need k < tuple length");
    if (is_solution(t, k)) reports.push_back(check_bounds(t, k));
    else rejected.push_back(t.to_string());
  } else {
    if (n < 0 || k < 0) throw InvalidInput("verify needs --n and --k, or --tuple and --k");
    for (const auto& t : solve(cfg, n, k).solutions) reports.push_back(check_bounds(t, k));
  }
  bool ok = rejected.empty();
  for (const auto& r : reports) ok = ok && r.all_hold();

  if (cfg.format == Format::Json) {
    json rows = json::array();
    for (const auto& r : reports) rows.push_back(json::parse(to_json(r)));
    emit(cfg, json{{"ok", ok}, {"reports", rows}, {"not_solutions", rejected}}.dump(2));
  } else if (cfg.format == Format::Csv) {
    std::string s = "tuple,check,lhs,rhs,holds\n";
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        s += "\"" + tuple_csv(r.subject) + "\"," + c.name + "," + to_string(c.lhs) + "," + to_string(c.rhs) + "," +
             (c.holds ? "true" : "false") + '\n';
      }
    }
    emit(cfg, s);
  } else {
    std::string s;
    for (const auto& t : rejected) s += t + ": not a solution for k = " + std::to_string(k) + '\n';
    for (const auto& r : reports) {
      s += r.subject.to_string() + (r.all_hold() ? ": all " + std::to_string(r.checks.size()) + " checks hold\n" : ":\n");
      if (r.all_hold()) continue;
      for (const auto& c : r.checks) s += "  " + c.name + (c.holds ? " ok" : " FAILED") + '\n';
    }
    s += ok ? "verification passed" : "verification FAILED";
    emit(cfg, s);
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_limits(const Config& cfg, const std::string& kind, std::size_t terms, unsigned digits) {
  const auto bits = static_cast<unsigned long>(std::ceil(digits * 3.3219280948873623)) + 64;
  const LimitEstimate e = limit_constant(kind == "u" ? SequenceKind::U : SequenceKind::V, terms, bits, digits);
  switch (cfg.format) {
    case Format::Json: emit(cfg, to_json(e, 2)); break;
    case Format::Csv: emit(cfg, "kind,terms,value,lower,upper\n" + kind + "," + std::to_string(terms) + "," + e.value + "," + e.lower + "," + e.upper); break;
    case Format::Text: {
      std::ostringstream s;
      s << e.value << "\nbracket [" << e.lower << ", " << e.upper << "], width <= " << e.error_bound;
      emit(cfg, s.str());
      break;
    }
  }
  return kOk;
}

int cmd_factor_count(const Config& cfg, const std::string& m_text) {
  const Integer m = parse_integer(m_text);
  if (m < 1) throw InvalidInput("m must be >= 1");
  const std::string f = multiplicative_partitions(m).get_str();
  switch (cfg.format) {
    case Format::Json: emit(cfg, json{{"m", m.get_str()}, {"f", f}}.dump(2)); break;
    case Format::Csv: emit(cfg, "m,f\n" + m.get_str() + "," + f); break;
    case Format::Text: emit(cfg, f); break;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solutions of sigma_k(x_1..x_n) = sigma_n(x_1..x_n) and related sequences"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}, CLI::ignore_case));
  app.add_option("--output,-o", cfg.output, "Write output to this file instead of stdout");
  app.add_option("--cache-dir", cfg.cache_dir, "Enumeration cache directory")->envname("SYMEQ_CACHE_DIR");
  app.add_flag("--no-cache", cfg.no_cache, "Neither read nor write the cache");
  app.add_option("--max-nodes", cfg.max_nodes, "Search node budget (0: unlimited)");
  app.add_option("--max-seconds", cfg.max_seconds, "Search time budget (0: unlimited)")->check(CLI::NonNegativeNumber);
  app.add_option("--threads", cfg.threads, "Search threads")->check(CLI::Range(1u, 1024u));

  int n = -1, k = -1;
  std::string kind, method, family, tuple_text, m_text;
  std::size_t count = 0, terms = 12;
  unsigned digits = 20;

  auto* seq = app.add_subcommand("seq", "Print u_n (Sylvester) or v_n");
  seq->add_option("kind", kind, "u or v")->required()->check(CLI::IsMember({"u", "v"}));
  seq->add_option("--count", count, "Number of terms")->required();
  seq->add_option("--method", method, "v recurrence")->check(CLI::IsMember({"definition", "rec1", "rec2", "rec3"}));

  auto* en = app.add_subcommand("enumerate", "List every solution for (n, k)");
  en->add_option("--n", n)->required();
  en->add_option("--k", k)->required();

  auto* cnt = app.add_subcommand("count", "Number of solutions for (n, k)");
  cnt->add_option("--n", n)->required();
  cnt->add_option("--k", k)->required();

  auto* con = app.add_subcommand("construct", "Explicit solution families");
  con->add_option("family", family)->required()->check(
      CLI::IsMember({"pk", "k1", "k2", "sylvester", "v", "lcm-family", "lower-bound"}));
  con->add_option("--n", n)->required();
  con->add_option("--k", k, "Only for pk");

  auto* ver = app.add_subcommand("verify", "Check the known bounds on solutions");
  ver->add_option("--n", n);
  ver->add_option("--k", k)->required();
  ver->add_option("--tuple", tuple_text, "Comma-separated tuple, e.g. 1,2,4,14")->excludes("--n");

  auto* lim = app.add_subcommand("limits", "Growth constants lim a_n^(1/2^n)");
  lim->add_option("kind", kind, "u or v")->required()->check(CLI::IsMember({"u", "v"}));
  lim->add_option("--terms", terms, "Sequence index used")->check(CLI::Range(8, 40));
  lim->add_option("--digits", digits, "Decimal digits")->check(CLI::Range(1, 2000));

  auto* fc = app.add_subcommand("factor-count", "Unordered factorizations of m into factors >= 2");
  fc->add_option("m", m_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }
  cfg.format = formats.at(CLI::detail::to_lower(format_name));

  try {
    if (*seq) return cmd_seq(cfg, kind, count, method);
    if (*en) return cmd_enumerate(cfg, n, k);
    if (*cnt) return cmd_count(cfg, n, k);
    if (*con) return cmd_construct(cfg, family, n, k);
    if (*ver) return cmd_verify(cfg, n, k, tuple_text);
    if (*lim) return cmd_limits(cfg, kind, terms, digits);
    if (*fc) return cmd_factor_count(cfg, m_text);
  } catch (const SearchIncomplete& e) {
    std::cerr << e.what() << "; nothing cached\n";
    return kBudget;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
