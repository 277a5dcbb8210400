#include "palquot/search.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

namespace palquot {

bool Representation::valid() const {
  if (a < 1 || b < 1) return false;
  if (a * target.q != b * target.p) return false;
  return has_shape(a, target.base, target.shape) && has_shape(b, target.base, target.shape);
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kRepresentable: return "true";
    case Verdict::kNotRepresentable: return "false";
    case Verdict::kUndecided: return "undecided";
  }
  return "?";
}

std::string to_string(SolutionClass::Kind kind) {
  switch (kind) {
    case SolutionClass::Kind::kNone: return "none";
    case SolutionClass::Kind::kFinite: return "finite";
    case SolutionClass::Kind::kInfinite: return "infinite";
    case SolutionClass::Kind::kUndecided: return "undecided";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget) : budget_(budget), start_(Clock::now()) {}

  // True once either cap is exceeded; sticky.
  bool exhausted(std::uint64_t states) {
    if (tripped_) return true;
    if (states > budget_.max_states) tripped_ = true;
    if (budget_.max_time.count() > 0 && (++ticks_ & 1023) == 0 &&
        Clock::now() - start_ > budget_.max_time) {
      tripped_ = true;
    }
    return tripped_;
  }

  SearchStats stats(std::uint64_t states) const {
    return {states, std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_)};
  }

 private:
  SearchBudget budget_;
  Clock::time_point start_;
  std::uint64_t ticks_ = 0;
  bool tripped_ = false;
};

// The automaton wants p >= q; p/q < 1 is solved as q/p with A and B swapped.
struct Oriented {
  Target inner;
  bool swapped = false;
};

Oriented orient(const Target& target) {
  if (target.p >= target.q) return {target, false};
  return {Target{target.q, target.p, target.base, target.shape}, true};
}

Representation restore(const Oriented& o, const Target& original, Natural a, Natural b) {
  if (o.swapped) std::swap(a, b);
  return Representation{original, std::move(a), std::move(b)};
}

// Digits of the low half of (X)_k for a high half w.
DigitString mirrored(const DigitString& w, Shape shape) {
  return shape == Shape::kPalindrome ? w.reversed() : reverse_complement(w);
}

Natural assemble(const DigitString& half, std::optional<Digit> middle, Shape shape) {
  DigitString full = half;
  if (middle) full.push_back(*middle);
  full.append(mirrored(half, shape));
  return from_digits(full);
}

// Integer palindromic targets with N < k or k | N never need the automaton.
std::optional<Verdict> trivial_palindrome_verdict(const Target& t) {
  if (t.shape != Shape::kPalindrome || !t.is_integer()) return std::nullopt;
  if (t.p < t.base.value()) return Verdict::kRepresentable;
  if (t.p % t.base.value() == 0) return Verdict::kNotRepresentable;
  return std::nullopt;
}

// Breadth-first search over reading states, one layer per digit of b.
// Unloading states are explored on demand from a layer and memoized.
class LayeredSearch {
 public:
  enum class Status { kFound, kExhausted, kBudget };

  LayeredSearch(const QuotientAutomaton& automaton, BudgetMeter& meter)
      : automaton_(automaton), meter_(meter) {}

  Status run() {
    std::vector<SearchState> layer;
    for (const auto& s : automaton_.start_states()) {
      if (layer_of_.emplace(s, 0).second) layer.push_back(s);
    }
    layers_.push_back(std::move(layer));
    for (std::uint32_t t = 0;; ++t) {
      bool found = false;
      for (const auto& s : layers_[t]) {
        if (closable_any(s)) found = true;
        if (meter_.exhausted(visited())) return Status::kBudget;
      }
      if (found) {
        good_layer_ = t;
        return Status::kFound;
      }
      std::vector<SearchState> next;
      for (const auto& s : layers_[t]) {
        for (Digit a = 0; a < automaton_.k(); ++a) {
          for (Digit b = 0; b < automaton_.k(); ++b) {
            for (const auto& succ : automaton_.successors(s, {a, b})) {
              if (layer_of_.emplace(succ.state, t + 1).second) next.push_back(succ.state);
            }
          }
        }
        if (meter_.exhausted(visited())) return Status::kBudget;
      }
      if (next.empty()) return Status::kExhausted;
      layers_.push_back(std::move(next));
    }
  }

  std::uint64_t visited() const { return layer_of_.size() + unload_memo_.size(); }

  // Lexicographically least b of minimal length, then the least sigma_b.
  std::pair<DigitString, std::optional<Digit>> least_b() {
    const Base base{automaton_.k()};
    const std::uint32_t depth = good_layer_;
    bool even = false;
    for (const auto& s : layers_[depth]) even = even || closable(s, std::nullopt);

    std::vector<absl::flat_hash_set<SearchState>> coreach(depth + 1);
    for (const auto& s : layers_[depth]) {
      if (even ? closable(s, std::nullopt) : closable_odd(s)) coreach[depth].insert(s);
    }
    for (std::uint32_t t = depth; t-- > 0;) {
      for (const auto& s : layers_[t]) {
        if (reaches(s, coreach[t + 1], std::nullopt)) coreach[t].insert(s);
      }
    }

    std::vector<SearchState> frontier(coreach[0].begin(), coreach[0].end());
    DigitString half(base);
    for (std::uint32_t t = 0; t < depth; ++t) {
      for (Digit d = 0; d < automaton_.k(); ++d) {
        absl::flat_hash_set<SearchState> next;
        for (const auto& s : frontier) {
          for (Digit a = 0; a < automaton_.k(); ++a) {
            for (const auto& succ : automaton_.successors(s, {a, d})) {
              if (coreach[t + 1].contains(succ.state)) next.insert(succ.state);
            }
          }
        }
        if (!next.empty()) {
          half.push_back(d);
          frontier.assign(next.begin(), next.end());
          break;
        }
      }
    }
    if (half.size() != depth) throw std::logic_error("least_b lost the co-reachable frontier");
    if (even) return {half, std::nullopt};
    for (Digit sigma : automaton_.middle_digits()) {
      for (const auto& s : frontier) {
        if (closable(s, sigma)) return {half, sigma};
      }
    }
    throw std::logic_error("least_b found no middle digit");
  }

 private:
  bool reaches(const SearchState& s, const absl::flat_hash_set<SearchState>& targets,
               std::optional<Digit> b_digit) {
    for (Digit a = 0; a < automaton_.k(); ++a) {
      for (Digit b = 0; b < automaton_.k(); ++b) {
        if (b_digit && b != *b_digit) continue;
        for (const auto& succ : automaton_.successors(s, {a, b})) {
          if (targets.contains(succ.state)) return true;
        }
      }
    }
    return false;
  }

  bool closable_any(const SearchState& s) {
    return closable(s, std::nullopt) || closable_odd(s);
  }

  bool closable_odd(const SearchState& s) {
    for (Digit sigma : automaton_.middle_digits()) {
      if (closable(s, sigma)) return true;
    }
    return false;
  }

  // The input can end with b here (with the given middle digit of B) and
  // still be accepted.
  bool closable(const SearchState& s, std::optional<Digit> sigma_b) {
    for (const auto& choice : automaton_.accepting_choices(s)) {
      if (choice.sigma_b == sigma_b) return true;
    }
    for (Digit a = 0; a < automaton_.k(); ++a) {
      for (const auto& succ : automaton_.successors(s, {a, std::nullopt})) {
        if (succ.sigma_b == sigma_b && can_finish(succ.state)) return true;
      }
    }
    return false;
  }

  bool can_finish(const SearchState& u) {
    if (auto it = unload_memo_.find(u); it != unload_memo_.end()) return it->second;
    bool ok = automaton_.is_accepting(u);
    for (Digit a = 0; !ok && a < automaton_.k(); ++a) {
      for (const auto& succ : automaton_.successors(u, {a, std::nullopt})) {
        if (can_finish(succ.state)) {
          ok = true;
          break;
        }
      }
    }
    unload_memo_.emplace(u, ok);
    return ok;
  }

  const QuotientAutomaton& automaton_;
  BudgetMeter& meter_;
  std::vector<std::vector<SearchState>> layers_;
  absl::flat_hash_map<SearchState, std::uint32_t> layer_of_;
  absl::flat_hash_map<SearchState, bool> unload_memo_;
  std::uint32_t good_layer_ = 0;
};

Verdict to_verdict(LayeredSearch::Status status) {
  switch (status) {
    case LayeredSearch::Status::kFound: return Verdict::kRepresentable;
    case LayeredSearch::Status::kExhausted: return Verdict::kNotRepresentable;
    case LayeredSearch::Status::kBudget: return Verdict::kUndecided;
  }
  return Verdict::kUndecided;
}

// Explicit reachable graph, used for counting and enumeration.
struct Edge {
  std::uint32_t to;
  TransitionLabel label;
  std::optional<Digit> sigma_b;
};

struct StateGraph {
  std::vector<SearchState> states;
  std::vector<std::vector<Edge>> edges;
  std::vector<std::vector<AcceptChoice>> accepts;
  std::vector<std::uint32_t> starts;
};

// Returns false when the budget runs out.
bool build_graph(const QuotientAutomaton& automaton, BudgetMeter& meter, StateGraph& g) {
  absl::flat_hash_map<SearchState, std::uint32_t> ids;
  auto intern = [&](const SearchState& s) {
    auto [it, inserted] = ids.emplace(s, static_cast<std::uint32_t>(g.states.size()));
    if (inserted) g.states.push_back(s);
    return it->second;
  };
  for (const auto& s : automaton.start_states()) g.starts.push_back(intern(s));
  std::vector<std::pair<TransitionLabel, Successor>> succ;
  for (std::uint32_t v = 0; v < g.states.size(); ++v) {
    if (meter.exhausted(g.states.size())) return false;
    succ.clear();
    const SearchState s = g.states[v];
    automaton.all_successors(s, succ);
    std::vector<Edge> out;
    out.reserve(succ.size());
    for (const auto& [label, next] : succ) out.push_back({intern(next.state), label, next.sigma_b});
    g.edges.push_back(std::move(out));
    g.accepts.push_back(automaton.accepting_choices(s));
  }
  return true;
}

std::vector<bool> coaccessible(const StateGraph& g) {
  const std::size_t n = g.states.size();
  std::vector<std::vector<std::uint32_t>> reverse(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (const auto& e : g.edges[v]) reverse[e.to].push_back(v);
  }
  std::vector<bool> mark(n, false);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!g.accepts[v].empty()) {
      mark[v] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto u : reverse[v]) {
      if (!mark[u]) {
        mark[u] = true;
        stack.push_back(u);
      }
    }
  }
  return mark;
}

// Iterative Tarjan over the trimmed graph. Fills order with vertices in
// reverse topological order of their components and returns the size of a
// nontrivial component (0 if the trimmed graph is acyclic).
std::size_t strongly_connected(const StateGraph& g, const std::vector<bool>& keep,
                               std::vector<std::uint32_t>& order) {
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = g.states.size();
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> call;
  std::uint32_t next_index = 0;
  std::size_t cyclic = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (!keep[root] || index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      const auto& out = g.edges[v];
      if (pos < out.size()) {
        const auto w = out[pos++].to;
        if (!keep[w]) continue;
        if (w == v && cyclic == 0) cyclic = 1;
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const auto done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::size_t size = 0;
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          order.push_back(w);
          ++size;
        } while (w != done);
        if (size > 1 && cyclic < size) cyclic = std::max(cyclic, size);
      }
    }
  }
  return cyclic;
}

// Fewest further b digits before some accepting choice, over the trimmed graph.
std::vector<std::uint32_t> reads_to_accept(const StateGraph& g, const std::vector<bool>& keep) {
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = g.states.size();
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> reverse(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    for (const auto& e : g.edges[v]) {
      if (keep[e.to]) reverse[e.to].emplace_back(v, e.label.is_pad() ? 0u : 1u);
    }
  }
  std::vector<std::uint32_t> dist(n, kInf);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (keep[v] && !g.accepts[v].empty()) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto [u, w] : reverse[v]) {
      if (dist[v] + w < dist[u]) {
        dist[u] = dist[v] + w;
        if (w == 0) queue.push_front(u);
        else queue.push_back(u);
      }
    }
  }
  return dist;
}

class PathEnumerator {
 public:
  PathEnumerator(const StateGraph& g, const std::vector<bool>& keep, const QuotientAutomaton& automaton,
                 const Oriented& oriented, const Target& original)
      : g_(g),
        keep_(keep),
        dist_(reads_to_accept(g, keep)),
        automaton_(automaton),
        oriented_(oriented),
        original_(original),
        a_half_(Base{automaton.k()}),
        b_half_(Base{automaton.k()}) {}

  // Solutions whose b has exactly reads digits.
  void collect(std::uint32_t reads, std::vector<Representation>& out) {
    for (auto s : g_.starts) {
      if (keep_[s]) walk(s, reads, std::nullopt, out);
    }
  }

 private:
  void walk(std::uint32_t v, std::uint32_t reads_left, std::optional<Digit> sigma_b,
            std::vector<Representation>& out) {
    if (dist_[v] > reads_left) return;
    const Shape shape = automaton_.shape();
    if (reads_left == 0) {
      for (const auto& choice : g_.accepts[v]) {
        const auto middle_b = g_.states[v].reading() ? choice.sigma_b : sigma_b;
        Natural a = assemble(a_half_, choice.sigma_a, shape);
        Natural b = assemble(b_half_, middle_b, shape);
        out.push_back(restore(oriented_, original_, std::move(a), std::move(b)));
      }
    }
    for (const auto& e : g_.edges[v]) {
      if (!keep_[e.to]) continue;
      if (e.label.is_pad()) {
        a_half_.push_back(e.label.a);
        walk(e.to, reads_left, g_.states[v].reading() ? e.sigma_b : sigma_b, out);
        a_half_ = drop_last(a_half_);
      } else if (reads_left > 0) {
        a_half_.push_back(e.label.a);
        b_half_.push_back(*e.label.b);
        walk(e.to, reads_left - 1, sigma_b, out);
        a_half_ = drop_last(a_half_);
        b_half_ = drop_last(b_half_);
      }
    }
  }

  static DigitString drop_last(const DigitString& w) {
    std::vector<Digit> d(w.digits().begin(), w.digits().end() - 1);
    return DigitString(std::move(d), w.base());
  }

  const StateGraph& g_;
  const std::vector<bool>& keep_;
  std::vector<std::uint32_t> dist_;
  const QuotientAutomaton& automaton_;
  const Oriented& oriented_;
  const Target& original_;
  DigitString a_half_;
  DigitString b_half_;
};

}  // namespace

DecideResult decide(const Target& target, const SearchBudget& budget) {
  BudgetMeter meter(budget);
  if (auto v = trivial_palindrome_verdict(target)) return {*v, meter.stats(0)};
  const Oriented o = orient(target);
  QuotientAutomaton automaton(o.inner);
  LayeredSearch search(automaton, meter);
  const auto status = search.run();
  return {to_verdict(status), meter.stats(search.visited())};
}

SmallestResult smallest_representation(const Target& target, const SearchBudget& budget) {
  BudgetMeter meter(budget);
  if (auto v = trivial_palindrome_verdict(target)) {
    SmallestResult r{*v, std::nullopt, meter.stats(0)};
    if (*v == Verdict::kRepresentable) r.representation = Representation{target, target.p, 1};
    return r;
  }
  const Oriented o = orient(target);
  QuotientAutomaton automaton(o.inner);
  LayeredSearch search(automaton, meter);
  const auto status = search.run();
  SmallestResult result{to_verdict(status), std::nullopt, {}};
  if (status == LayeredSearch::Status::kFound) {
    const auto [half, middle] = search.least_b();
    const Natural b = assemble(half, middle, o.inner.shape);
    const Natural pb = o.inner.p * b;
    if (pb % o.inner.q != 0) throw std::logic_error("smallest representation: q does not divide p*B");
    Representation rep = restore(o, target, pb / o.inner.q, b);
    if (!rep.valid()) throw std::logic_error("smallest representation failed verification");
    result.representation = std::move(rep);
  }
  result.stats = meter.stats(search.visited());
  return result;
}

SolutionClass classify_solutions(const Target& target, std::size_t enumeration_limit,
                                 const SearchBudget& budget) {
  BudgetMeter meter(budget);
  SolutionClass result;
  if (trivial_palindrome_verdict(target) == Verdict::kNotRepresentable) {
    result.kind = SolutionClass::Kind::kNone;
    result.stats = meter.stats(0);
    return result;
  }
  const Oriented o = orient(target);
  QuotientAutomaton automaton(o.inner);
  StateGraph g;
  if (!build_graph(automaton, meter, g)) {
    result.stats = meter.stats(g.states.size());
    return result;
  }
  const auto keep = coaccessible(g);
  const bool any = std::any_of(g.starts.begin(), g.starts.end(), [&](auto s) { return keep[s]; });
  if (!any) {
    result.kind = SolutionClass::Kind::kNone;
    result.stats = meter.stats(g.states.size());
    return result;
  }

  std::vector<std::uint32_t> order;
  result.cycle_states = strongly_connected(g, keep, order);
  if (result.cycle_states > 0) {
    result.kind = SolutionClass::Kind::kInfinite;
  } else {
    result.kind = SolutionClass::Kind::kFinite;
    std::vector<Natural> paths(g.states.size(), 0);
    for (auto s : g.starts) paths[s] += 1;
    // order is reverse topological; walk it backwards.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto v = *it;
      if (paths[v] == 0) continue;
      result.count += paths[v] * g.accepts[v].size();
      for (const auto& e : g.edges[v]) {
        if (keep[e.to]) paths[e.to] += paths[v];
      }
    }
  }

  // Collect witnesses layer by layer in b length; within a layer sort by B.
  const std::size_t wanted =
      result.kind == SolutionClass::Kind::kFinite
          ? std::min<std::size_t>(enumeration_limit, static_cast<std::size_t>(result.count))
          : enumeration_limit;
  PathEnumerator paths(g, keep, automaton, o, target);
  std::vector<Representation> found;
  std::uint32_t max_reads = std::numeric_limits<std::uint32_t>::max();
  if (result.kind == SolutionClass::Kind::kFinite) {
    // An acyclic trimmed graph bounds every path by its vertex count.
    max_reads = static_cast<std::uint32_t>(g.states.size());
  }
  for (std::uint32_t reads = 0; found.size() < wanted && reads <= max_reads; ++reads) {
    std::vector<Representation> layer;
    paths.collect(reads, layer);
    std::sort(layer.begin(), layer.end(), [](const auto& x, const auto& y) { return x.b < y.b; });
    layer.erase(std::unique(layer.begin(), layer.end(),
                            [](const auto& x, const auto& y) { return x.b == y.b; }),
                layer.end());
    for (auto& rep : layer) {
      if (!rep.valid()) throw std::logic_error("enumerated representation failed verification");
      if (found.size() < wanted) found.push_back(std::move(rep));
    }
    if (meter.exhausted(g.states.size())) break;
  }
  result.witnesses = std::move(found);
  result.stats = meter.stats(g.states.size());
  return result;
}

std::optional<std::vector<Representation>> enumerate_solutions(const Target& target,
                                                               std::size_t limit,
                                                               const SearchBudget& budget) {
  auto c = classify_solutions(target, limit, budget);
  if (c.kind == SolutionClass::Kind::kUndecided) return std::nullopt;
  return std::move(c.witnesses);
}

Representation pump_solution(const Representation& rep, std::size_t i) {
  if (rep.target.shape != Shape::kPalindrome || rep.target.base.value() != 2) {
    throw std::invalid_argument("pumping is defined for base-2 palindromes");
  }
  const Base two{2};
  const DigitString a = to_digits(rep.a, two);
  const DigitString b = to_digits(rep.b, two);
  if (a.size() < b.size()) throw std::invalid_argument("pumping expects |(A)_2| >= |(B)_2|");
  const std::size_t d = a.size() - b.size();
  const DigitString zero = bits("0");
  const Natural a_i = from_digits(a + zero.repeat(i) + a);
  const Natural b_i = from_digits(b + zero.repeat(i + d) + b);
  return Representation{rep.target, a_i, b_i};
}

Representation apal_infinite_family(std::size_t n, std::size_t i) {
  if (n < 1) throw std::invalid_argument("family needs n >= 1");
  const Natural big_n = (Natural(1) << (2 * n + 1)) - (Natural(1) << n);
  const DigitString one = bits("1"), zero = bits("0");
  const DigitString b_block = zero.repeat(n + 2) + one.repeat(n + 2);
  const DigitString b = one + b_block.repeat(i) + zero;
  const DigitString a_block = zero + one.repeat(n) + zero + one + zero.repeat(n) + one;
  const DigitString a = one.repeat(n + 1) + a_block.repeat(i) + zero.repeat(n + 1);
  Representation rep{Target::integer(big_n, Base{2}, Shape::kAntipalindrome), from_digits(a),
                     from_digits(b)};
  if (!rep.valid()) throw std::logic_error("antipalindromic family identity failed");
  return rep;
}

Natural size_bound_smallest_A(const Target& target) {
  if (!target.is_integer()) throw std::invalid_argument("size bound is stated for integer targets");
  const Natural& n = target.p;
  const std::uint32_t k = target.base.value();
  const auto e = ceil_log(n, 1, target.base);
  // ceil(log_k(N) / 2) is the least h with k^(2h) >= N.
  std::uint32_t h = 0;
  for (Natural power = 1; power < n; power *= Natural(k) * k) ++h;
  Natural k_e = 1;
  for (std::uint32_t i = 0; i < e; ++i) k_e *= k;
  return 2 * (e + k_e * n * n + h) + 1;
}

}  // namespace palquot
