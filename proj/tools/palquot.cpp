// palquot: quotients of palindromic and antipalindromic numbers.
//
//   palquot decide 35
//   palquot smallest --shape apal 18
//   palquot count --shape apal 17
//   palquot sweep --shape pal --range 1..39 --list --format bfile
//   palquot heuristic 103
//   palquot approx 1/3 --n 20
//
// Exit status: 0 definitive, 2 usage error, 3 budget exhausted.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "palquot/analysis.hpp"
#include "palquot/heuristic.hpp"
#include "palquot/numerals.hpp"
#include "palquot/quotient_automaton.hpp"
#include "palquot/search.hpp"

using namespace palquot;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// Without --allow-long every command runs under this wall-clock cap.
constexpr std::chrono::seconds kDefaultTimeCap{60};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint32_t base = 2;
  std::string shape = "pal";
  std::optional<std::uint64_t> max_states;
  std::optional<std::uint64_t> max_seconds;
  std::string format = "json";
  bool allow_long = false;
  unsigned workers = 1;

  Shape parsed_shape() const { return parse_shape(shape); }
  Base parsed_base() const { return Base{base}; }

  SearchBudget budget() const {
    SearchBudget b;
    if (max_states) {
      b.max_states = *max_states;
    } else if (const char* env = std::getenv("PALQUOT_MAX_STATES")) {
      try {
        b.max_states = std::stoull(env);
      } catch (const std::exception&) {
        throw UsageError("PALQUOT_MAX_STATES is not a number");
      }
      if (b.max_states == 0) throw UsageError("PALQUOT_MAX_STATES must be positive");
    }
    if (max_seconds) {
      b.max_time = std::chrono::seconds(*max_seconds);
    } else if (!allow_long) {
      b.max_time = kDefaultTimeCap;
    }
    return b;
  }

  json params() const {
    const auto b = budget();
    return json{{"base", base},
                {"shape", to_string(parsed_shape())},
                {"maxStates", std::to_string(b.max_states)},
                {"maxSeconds", std::to_string(b.max_time.count() / 1000)},
                {"allowLong", allow_long}};
  }
};

Target parse_target(const std::string& text, const RunConfig& config) {
  try {
    return Target::parse(text, config.parsed_base(), config.parsed_shape());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

json diagnostics(const SearchStats& stats) {
  return json{{"statesVisited", stats.states_visited}, {"elapsedMs", stats.elapsed.count()}};
}

json report(const std::string& command, const std::string& target, json params, json result,
            const SearchStats& stats) {
  return json{{"command", command},
              {"target", target},
              {"params", std::move(params)},
              {"result", std::move(result)},
              {"diagnostics", diagnostics(stats)}};
}

// TSV: one header line of keys, one line of values, from the flat result.
void print_tsv(const json& doc) {
  std::ostringstream head, row;
  head << "command\ttarget";
  row << doc["command"].get<std::string>() << '\t' << doc["target"].get<std::string>();
  for (const auto& [key, value] : doc["result"].items()) {
    head << '\t' << key;
    row << '\t' << (value.is_string() ? value.get<std::string>() : value.dump());
  }
  head << "\tstatesVisited\telapsedMs";
  row << '\t' << doc["diagnostics"]["statesVisited"].dump() << '\t'
      << doc["diagnostics"]["elapsedMs"].dump();
  std::cout << head.str() << '\n' << row.str() << '\n';
}

void emit(const json& doc, const RunConfig& config) {
  if (config.format == "json") {
    std::cout << doc.dump(2) << '\n';
  } else if (config.format == "tsv") {
    print_tsv(doc);
  } else {
    throw UsageError("format '" + config.format + "' only applies to sweep");
  }
}

json representation_json(const Representation& rep) {
  const Base base = rep.target.base;
  return json{{"A", rep.a.str()},
              {"B", rep.b.str()},
              {"A_digits", to_digits(rep.a, base).str()},
              {"B_digits", to_digits(rep.b, base).str()}};
}

int verdict_exit(Verdict v) { return v == Verdict::kUndecided ? kExitBudget : kExitOk; }

int cmd_decide(const std::string& text, const RunConfig& config) {
  const Target target = parse_target(text, config);
  const auto r = decide(target, config.budget());
  json result{{"representable", to_string(r.verdict)}};
  emit(report("decide", target.str(), config.params(), std::move(result), r.stats), config);
  return verdict_exit(r.verdict);
}

int cmd_smallest(const std::string& text, const RunConfig& config) {
  const Target target = parse_target(text, config);
  const auto r = smallest_representation(target, config.budget());
  json result{{"representable", to_string(r.verdict)}};
  if (r.representation) result.update(representation_json(*r.representation));
  emit(report("smallest", target.str(), config.params(), std::move(result), r.stats), config);
  return verdict_exit(r.verdict);
}

int cmd_count(const std::string& text, std::size_t limit, const RunConfig& config) {
  const Target target = parse_target(text, config);
  const auto c = classify_solutions(target, limit, config.budget());
  json result{{"kind", to_string(c.kind)}};
  if (c.kind == SolutionClass::Kind::kFinite) result["count"] = c.count.str();
  if (c.kind == SolutionClass::Kind::kInfinite) result["cycleStates"] = c.cycle_states;
  json witnesses = json::array();
  for (const auto& w : c.witnesses) witnesses.push_back(representation_json(w));
  if (config.format == "json") result["witnesses"] = std::move(witnesses);
  emit(report("count", target.str(), config.params(), std::move(result), c.stats), config);
  return c.kind == SolutionClass::Kind::kUndecided ? kExitBudget : kExitOk;
}

struct SweepOptions {
  std::optional<std::size_t> max_bits;
  std::string range;
  bool list = false;
  bool unrepresentable = false;
  bool odd_only = false;
};

std::pair<Natural, Natural> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like a..b");
  try {
    const Natural lo(text.substr(0, dots));
    const Natural hi(text.substr(dots + 2));
    if (lo < 1 || hi < lo) throw UsageError("range needs 1 <= a <= b");
    return {lo, hi};
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const UsageError*>(&e)) throw;
    throw UsageError("malformed range '" + text + "'");
  }
}

int cmd_sweep(const SweepOptions& opts, const RunConfig& config) {
  const Shape shape = config.parsed_shape();
  const auto budget = config.budget();
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t states = 0;
  bool undecided = false;

  if (opts.max_bits.has_value() == !opts.range.empty()) {
    throw UsageError("sweep needs exactly one of --max-bits or --range");
  }

  if (opts.max_bits) {
    if (config.base != 2) throw UsageError("--max-bits census is defined in base 2");
    const auto rows = census(shape, *opts.max_bits, budget, config.workers);
    const SearchStats stats{
        0, std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)};
    json table = json::array();
    for (const auto& row : rows) {
      json undecided_list = json::array();
      for (const auto& n : row.undecided) undecided_list.push_back(n.str());
      undecided = undecided || !row.undecided.empty();
      table.push_back({{"bits", row.bits}, {"count", row.count.str()}, {"undecided", undecided_list}});
    }
    if (config.format == "bfile") {
      for (const auto& row : rows) std::cout << row.bits << ' ' << row.count << '\n';
    } else if (config.format == "tsv") {
      std::cout << "bits\tcount\tundecided\n";
      for (const auto& row : rows) {
        std::cout << row.bits << '\t' << row.count << '\t' << row.undecided.size() << '\n';
      }
    } else {
      json result{{"census", std::move(table)}};
      std::cout << report("sweep", "census:" + std::to_string(*opts.max_bits), config.params(),
                          std::move(result), stats)
                       .dump(2)
                << '\n';
    }
    return undecided ? kExitBudget : kExitOk;
  }

  const auto [lo, hi] = parse_range(opts.range);
  const auto entries = sweep(lo, hi, config.parsed_base(), shape, budget, config.workers);
  std::vector<const SweepEntry*> kept;
  for (const auto& e : entries) {
    states += e.states_visited;
    if (e.verdict == Verdict::kUndecided) undecided = true;
    if (opts.odd_only && e.n % 2 == 0) continue;
    const Verdict wanted = opts.unrepresentable ? Verdict::kNotRepresentable : Verdict::kRepresentable;
    if (opts.list && e.verdict != wanted) continue;
    kept.push_back(&e);
  }
  const SearchStats stats{
      states, std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                    start)};
  if (config.format == "bfile") {
    if (!opts.list) throw UsageError("b-file output needs --list");
    std::size_t index = 1;
    for (const auto* e : kept) std::cout << index++ << ' ' << e->n << '\n';
  } else if (config.format == "tsv") {
    std::cout << "n\trepresentable\n";
    for (const auto* e : kept) std::cout << e->n << '\t' << to_string(e->verdict) << '\n';
  } else {
    json rows = json::array();
    for (const auto* e : kept) {
      if (opts.list) {
        rows.push_back(e->n.str());
      } else {
        rows.push_back({{"n", e->n.str()}, {"representable", to_string(e->verdict)}});
      }
    }
    json result{{opts.list ? "list" : "verdicts", std::move(rows)}};
    std::cout << report("sweep", opts.range, config.params(), std::move(result), stats).dump(2)
              << '\n';
  }
  return undecided ? kExitBudget : kExitOk;
}

int cmd_heuristic(const std::string& text, std::size_t max_depth, const RunConfig& config) {
  if (config.base != 2 || config.parsed_shape() != Shape::kPalindrome) {
    throw UsageError("the heuristic works on base-2 palindromes only");
  }
  const Target target = parse_target(text, config);
  if (!target.is_integer() || target.p < 3 || target.p % 2 == 0) {
    throw UsageError("the heuristic expects an odd integer N >= 3");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto h = heuristic_decide(target.p, max_depth);
  const SearchStats stats{
      h.widest_level, std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)};
  json result{{"outcome", to_string(h.kind)}, {"depth", h.depth}};
  if (h.representation) result.update(representation_json(*h.representation));
  json params = config.params();
  params["maxDepth"] = max_depth;
  emit(report("heuristic", target.str(), std::move(params), std::move(result), stats), config);
  // Inconclusive is a definitive report of the procedure, not a budget stop.
  return kExitOk;
}

// Accepts "p/q", integers and finite decimals such as 0.7071, exactly.
Rational parse_alpha(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      const Rational r(Natural(text.substr(0, slash)), Natural(text.substr(slash + 1)));
      return r;
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(Natural(text));
    const std::string frac = text.substr(dot + 1);
    Natural scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::string whole = dot == 0 ? "0" : text.substr(0, dot);
    return Rational(Natural(whole) * scale + (frac.empty() ? Natural(0) : Natural(frac)), scale);
  } catch (const std::exception&) {
    throw UsageError("malformed alpha '" + text + "'");
  }
}

std::string rational_str(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

int cmd_approx(const std::string& text, std::size_t n, const RunConfig& config) {
  if (config.base != 2) throw UsageError("the approximation constructions are base 2");
  const Rational alpha = parse_alpha(text);
  if (alpha <= 0) throw UsageError("alpha must be positive");
  const auto start = std::chrono::steady_clock::now();
  Approximant ap;
  try {
    ap = config.parsed_shape() == Shape::kPalindrome ? approx_palindrome_quotient(alpha, n)
                                                     : approx_antipalindrome_quotient(alpha, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SearchStats stats{0, std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)};
  json result{{"A", ap.a.str()},
              {"B", ap.b.str()},
              {"k", ap.k},
              {"reciprocal", ap.reciprocal},
              {"error", rational_str(ap.error)},
              {"errorDecimal", static_cast<double>(ap.error)}};
  if (ap.error_bound > 0) result["errorBound"] = rational_str(ap.error_bound);
  json params = config.params();
  params["n"] = n;
  emit(report("approx", rational_str(alpha), std::move(params), std::move(result), stats), config);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quotients of palindromic and antipalindromic numbers"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  app.add_option("--base", config.base, "Radix k")->check(CLI::Range(2u, 65535u));
  app.add_option("--shape", config.shape, "pal or apal")
      ->check(CLI::IsMember({"pal", "palindrome", "apal", "antipalindrome"}));
  app.add_option("--max-states", config.max_states, "State cap (overrides PALQUOT_MAX_STATES)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-seconds", config.max_seconds, "Wall-clock cap")->check(CLI::PositiveNumber);
  app.add_option("--format", config.format, "json, tsv or bfile")
      ->check(CLI::IsMember({"json", "tsv", "bfile"}));
  app.add_flag("--allow-long", config.allow_long, "Lift the default wall-clock cap");
  app.add_option("--workers", config.workers, "Threads for sweeps")->check(CLI::Range(1u, 256u));

  std::string target;
  auto* decide_cmd = app.add_subcommand("decide", "Is N (or p/q) a quotient?");
  decide_cmd->add_option("target", target, "N or p/q")->required();

  auto* smallest_cmd = app.add_subcommand("smallest", "Smallest representation by (|B|, B)");
  smallest_cmd->add_option("target", target, "N or p/q")->required();

  std::size_t limit = 16;
  auto* count_cmd = app.add_subcommand("count", "None, finite count, or infinite");
  count_cmd->add_option("target", target, "N or p/q")->required();
  count_cmd->add_option("--limit", limit, "Witnesses to list");

  SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "Census by bit length, or a range of N");
  sweep_cmd->add_option("--max-bits", sweep_opts.max_bits, "Census rows 1..i");
  sweep_cmd->add_option("--range", sweep_opts.range, "a..b");
  sweep_cmd->add_flag("--list", sweep_opts.list, "Only list matching N");
  sweep_cmd->add_flag("--unrepresentable", sweep_opts.unrepresentable,
                      "List unrepresentable N instead");
  sweep_cmd->add_flag("--odd", sweep_opts.odd_only, "Odd N only");

  std::size_t max_depth = 64;
  auto* heuristic_cmd = app.add_subcommand("heuristic", "Prefix refutation (base-2 palindromes)");
  heuristic_cmd->add_option("target", target, "Odd N")->required();
  heuristic_cmd->add_option("--max-depth", max_depth, "Prefix length cap");

  std::size_t approx_n = 10;
  auto* approx_cmd = app.add_subcommand("approx", "Approximate alpha by a quotient");
  approx_cmd->add_option("alpha", target, "p/q, integer or decimal")->required();
  approx_cmd->add_option("--n", approx_n, "Precision parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*decide_cmd) return cmd_decide(target, config);
    if (*smallest_cmd) return cmd_smallest(target, config);
    if (*count_cmd) return cmd_count(target, limit, config);
    if (*sweep_cmd) return cmd_sweep(sweep_opts, config);
    if (*heuristic_cmd) return cmd_heuristic(target, max_depth, config);
    if (*approx_cmd) return cmd_approx(target, approx_n, config);
  } catch (const UsageError& e) {
    std::cerr << "palquot: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "palquot: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
