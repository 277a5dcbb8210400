#pragma once

// Lazily evaluated nondeterministic automaton whose accepting runs encode
// pairs (A, B) of palindromes (or antipalindromes) with q * A = p * B.
//
// An input symbol (a, b) supplies one digit of the first half of (A)_k and
// one of (B)_k. Each step verifies one digit equation from the least
// significant end (right carries) and asserts one from the most significant
// end (left carry). Because |(A)_k| - |(B)_k| = m, the left side needs the
// digits of b m steps late; they wait in a queue. After b runs out the input
// carries the pad marker X and the queue is drained from both ends.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "palquot/numerals.hpp"

namespace palquot {

enum class Shape { kPalindrome, kAntipalindrome };

std::string to_string(Shape shape);
// Accepts "pal", "palindrome", "apal", "antipalindrome".
Shape parse_shape(std::string_view text);

bool has_shape(const Natural& n, Base base, Shape shape);

// p / q in lowest terms; integer targets use q = 1.
struct Target {
  Natural p;
  Natural q;
  Base base{2};
  Shape shape = Shape::kPalindrome;

  static Target integer(const Natural& n, Base base = Base{2}, Shape shape = Shape::kPalindrome);
  static Target rational(const Natural& p, const Natural& q, Base base = Base{2},
                         Shape shape = Shape::kPalindrome);

  bool is_integer() const { return q == 1; }
  // "N" or "p/q".
  std::string str() const;
  // Parses "N" or "p/q"; throws std::invalid_argument on malformed text.
  static Target parse(std::string_view text, Base base, Shape shape);
};

enum class Phase : std::uint8_t {
  kStart,      // nothing read; the next digits must be leading (nonzero)
  kLoading,    // fewer than m digits of b saved
  kShifting,   // exactly m digits saved, cycling
  kUnloading,  // b exhausted; queue drained from both ends
};

std::string to_string(Phase phase);

// One node of the implicit state graph. The queue holds base-k digits packed
// most-significant (oldest) first into an integer below k^queue_len.
struct SearchState {
  Phase phase = Phase::kStart;
  std::uint8_t gap = 0;
  std::uint8_t queue_len = 0;
  std::uint64_t queue = 0;
  std::int64_t carry_a = 0;
  std::int64_t carry_b = 0;
  std::int64_t left_carry = 0;

  bool reading() const { return phase != Phase::kUnloading; }
  // Difference of the right carries, the quantity the left carry must meet.
  std::int64_t right_difference() const { return carry_b - carry_a; }

  friend bool operator==(const SearchState&, const SearchState&) = default;

  template <typename H>
  friend H AbslHashValue(H h, const SearchState& s) {
    return H::combine(std::move(h), static_cast<std::uint8_t>(s.phase), s.gap, s.queue_len,
                      s.queue, s.carry_a, s.carry_b, s.left_carry);
  }
};

// b == nullopt is the pad marker X.
struct TransitionLabel {
  Digit a = 0;
  std::optional<Digit> b;

  bool is_pad() const { return !b.has_value(); }
  friend bool operator==(const TransitionLabel&, const TransitionLabel&) = default;
};

struct Successor {
  SearchState state;
  // Middle digit of (B)_k chosen on the first padded step; nullopt for
  // even-length B or for steps that do not close b.
  std::optional<Digit> sigma_b;
  bool closes_b = false;
};

// One way to finish an input at a state. sigma_b is only meaningful when
// the state is still reading b (the input ended together with b).
struct AcceptChoice {
  std::optional<Digit> sigma_b;
  std::optional<Digit> sigma_a;

  friend bool operator==(const AcceptChoice&, const AcceptChoice&) = default;
};

class QuotientAutomaton {
 public:
  // Requires p > 0, q > 0 and p >= q after normalization; callers with
  // p < q swap the roles of A and B. Throws std::invalid_argument when the
  // target is out of range for machine-word carries.
  explicit QuotientAutomaton(const Target& target);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::uint32_t k() const { return k_; }
  Shape shape() const { return shape_; }

  std::vector<SearchState> start_states() const;

  // Right-side digit equation q*A + cA = p*B + cB (mod k); returns the next
  // carry pair or nullopt when the congruence fails.
  std::optional<std::pair<std::int64_t, std::int64_t>> step_right(std::int64_t carry_a,
                                                                  std::int64_t carry_b,
                                                                  Digit a_digit,
                                                                  Digit b_digit) const;
  // Required carry one position lower: k*c - p*B + q*A.
  std::int64_t step_left(std::int64_t left_carry, Digit a_digit, Digit b_digit) const;

  std::vector<Successor> successors(const SearchState& state, const TransitionLabel& label) const;
  // Appends successors over every label to out.
  void all_successors(const SearchState& state,
                      std::vector<std::pair<TransitionLabel, Successor>>& out) const;

  // Ways the input may end at this state; empty means reject.
  std::vector<AcceptChoice> accepting_choices(const SearchState& state) const;
  bool is_accepting(const SearchState& state) const { return !accepting_choices(state).empty(); }

  // Digits allowed in the middle of an odd-length representation.
  const std::vector<Digit>& middle_digits() const { return middle_digits_; }

 private:
  bool left_in_range(std::int64_t c) const { return c > -q_ && c < p_; }
  // Digit as it appears on the low side of (X)_k given the high-side digit.
  Digit mirror(Digit d) const { return shape_ == Shape::kPalindrome ? d : k_ - 1 - d; }
  void add_middle_choices(const SearchState& state, Digit b_middle, bool leading,
                          std::optional<Digit> sigma_b, std::vector<AcceptChoice>& out) const;
  std::optional<SearchState> drain_pair(SearchState s, Digit a) const;

  std::int64_t p_;
  std::int64_t q_;
  std::uint32_t k_;
  Shape shape_;
  std::vector<Digit> middle_digits_;
  std::vector<std::uint64_t> pow_k_;
};

// 6 * (p+q-1) * p * q * k^ceil(log_k(p/q)); for integers 6 * k^ceil(log_k N) * N^2.
Natural state_count_bound(const Target& target);

// ceil(log_k(x)) and floor(log_k(x)) for rationals x = p/q >= 1, exact.
std::uint32_t ceil_log(const Natural& p, const Natural& q, Base base);
std::uint32_t floor_log(const Natural& p, const Natural& q, Base base);

}  // namespace palquot
