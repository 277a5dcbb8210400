#pragma once

// Decision, smallest-representation search, solution counting and the
// explicit infinite families, all over the implicit quotient automaton.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "palquot/numerals.hpp"
#include "palquot/quotient_automaton.hpp"

namespace palquot {

// A * q = B * p with (A)_k and (B)_k of the target shape.
struct Representation {
  Target target;
  Natural a;
  Natural b;

  // Exact check of every invariant: multiplication and both shapes.
  bool valid() const;
};

struct SearchBudget {
  std::uint64_t max_states = 100'000'000;
  // Zero disables the wall-clock cap.
  std::chrono::milliseconds max_time{0};
};

struct SearchStats {
  std::uint64_t states_visited = 0;
  std::chrono::milliseconds elapsed{0};
};

enum class Verdict { kRepresentable, kNotRepresentable, kUndecided };

std::string to_string(Verdict verdict);

struct DecideResult {
  Verdict verdict = Verdict::kUndecided;
  SearchStats stats;
};

struct SmallestResult {
  Verdict verdict = Verdict::kUndecided;
  std::optional<Representation> representation;
  SearchStats stats;
};

struct SolutionClass {
  enum class Kind { kNone, kFinite, kInfinite, kUndecided };

  Kind kind = Kind::kUndecided;
  // Number of (A, B) pairs when finite.
  Natural count = 0;
  std::vector<Representation> witnesses;
  // Size of one nontrivial strongly connected component of the trimmed
  // graph, when infinite.
  std::size_t cycle_states = 0;
  SearchStats stats;
};

std::string to_string(SolutionClass::Kind kind);

DecideResult decide(const Target& target, const SearchBudget& budget = {});

// Minimizes (|(B)_k|, B); A = p*B/q follows. The result is re-verified by
// exact multiplication.
SmallestResult smallest_representation(const Target& target, const SearchBudget& budget = {});

// Trims the reachable graph to co-accessible states; a cycle there means
// infinitely many solutions, otherwise accepting paths are counted.
// Witnesses are the first enumeration_limit solutions in B order.
SolutionClass classify_solutions(const Target& target, std::size_t enumeration_limit = 16,
                                 const SearchBudget& budget = {});

// Distinct solutions in increasing B, at most limit of them. Returns
// nullopt when the budget runs out.
std::optional<std::vector<Representation>> enumerate_solutions(const Target& target,
                                                               std::size_t limit,
                                                               const SearchBudget& budget = {});

// Base-2 palindromes: (A)_2 0^i (A)_2 over (B)_2 0^(i+d) (B)_2.
Representation pump_solution(const Representation& rep, std::size_t i);

// N = 2^(2n+1) - 2^n with B_i = [1 (0^(n+2) 1^(n+2))^i 0]_2, base-2 antipalindromes.
Representation apal_infinite_family(std::size_t n, std::size_t i);

// Digit-length bound on the smallest palindromic numerator of an integer target.
Natural size_bound_smallest_A(const Target& target);

}  // namespace palquot
