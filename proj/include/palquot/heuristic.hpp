#pragma once

// Prefix refutation for N = A/B in base-2 palindromes. Fast and sound, but
// it does not terminate for every N; see failure_families().

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "palquot/numerals.hpp"
#include "palquot/search.hpp"

namespace palquot {

struct HeuristicOutcome {
  enum class Kind { kFound, kRefutedAtDepth, kInconclusive };

  Kind kind = Kind::kInconclusive;
  // Set when found.
  std::optional<Representation> representation;
  // Depth at which the last prefix died, or the depth cap when inconclusive.
  std::size_t depth = 0;
  // Largest number of live prefixes on one level.
  std::size_t widest_level = 0;
};

std::string to_string(HeuristicOutcome::Kind kind);

// Breadth-first over prefixes T of (B)_2, one bit per level from the
// leading 1. A prefix survives when the first |T| bits of A forced by
// palindromy (reversed low bits of rev(T) * N) are among the possible
// leading bits of N * B. Requires N odd and N >= 3.
HeuristicOutcome heuristic_decide(const Natural& n, std::size_t max_depth = 64);

// N * [r s^n (s^R)^n r^R]_2 = [t u^(n-i) v w v^R (u^R)^(n-i) t^R]_2, pald(w) = d.
struct FamilyRow {
  Natural n;
  DigitString r, s, t, u, v, w;
  std::size_t i = 1;
  std::size_t d = 0;

  // The two sides for a given n.
  DigitString palindrome(std::size_t n_rep) const;
  DigitString product(std::size_t n_rep) const;
};

// The six known N below 20000 where the heuristic never terminates.
const std::vector<FamilyRow>& failure_families();

bool verify_failure_family(const FamilyRow& row, std::size_t n_rep);

}  // namespace palquot
