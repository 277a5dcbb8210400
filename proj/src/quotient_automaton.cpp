#include "palquot/quotient_automaton.hpp"

#include <limits>
#include <stdexcept>

namespace palquot {

std::string to_string(Shape shape) {
  return shape == Shape::kPalindrome ? "palindrome" : "antipalindrome";
}

Shape parse_shape(std::string_view text) {
  if (text == "pal" || text == "palindrome") return Shape::kPalindrome;
  if (text == "apal" || text == "antipalindrome") return Shape::kAntipalindrome;
  throw std::invalid_argument("unknown shape '" + std::string(text) + "'");
}

bool has_shape(const Natural& n, Base base, Shape shape) {
  return shape == Shape::kPalindrome ? is_palindromic_number(n, base)
                                     : is_antipalindromic_number(n, base);
}

Target Target::integer(const Natural& n, Base base, Shape shape) {
  return rational(n, 1, base, shape);
}

Target Target::rational(const Natural& p, const Natural& q, Base base, Shape shape) {
  if (p < 1 || q < 1) throw std::invalid_argument("target numerator and denominator must be >= 1");
  const Natural g = boost::multiprecision::gcd(p, q);
  return Target{p / g, q / g, base, shape};
}

std::string Target::str() const {
  if (is_integer()) return p.str();
  return p.str() + "/" + q.str();
}

namespace {

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  return Natural(std::string(text));
}

}  // namespace

Target Target::parse(std::string_view text, Base base, Shape shape) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return integer(parse_natural(text), base, shape);
  return rational(parse_natural(text.substr(0, slash)), parse_natural(text.substr(slash + 1)), base,
                  shape);
}

std::string to_string(Phase phase) {
  switch (phase) {
    case Phase::kStart: return "start";
    case Phase::kLoading: return "loading";
    case Phase::kShifting: return "shifting";
    case Phase::kUnloading: return "unloading";
  }
  return "?";
}

std::uint32_t ceil_log(const Natural& p, const Natural& q, Base base) {
  // Smallest e with k^e * q >= p.
  std::uint32_t e = 0;
  Natural scaled = q;
  while (scaled < p) {
    scaled *= base.value();
    ++e;
  }
  return e;
}

std::uint32_t floor_log(const Natural& p, const Natural& q, Base base) {
  // Largest e with k^e * q <= p.
  std::uint32_t e = 0;
  Natural scaled = q * base.value();
  while (scaled <= p) {
    scaled *= base.value();
    ++e;
  }
  return e;
}

QuotientAutomaton::QuotientAutomaton(const Target& target)
    : k_(target.base.value()), shape_(target.shape) {
  if (target.p < target.q) throw std::invalid_argument("automaton expects p >= q");
  constexpr std::int64_t kLimit = std::int64_t{1} << 40;
  if (target.p >= kLimit || k_ >= (1u << 16)) {
    throw std::invalid_argument("target too large for machine-word carries");
  }
  p_ = static_cast<std::int64_t>(target.p);
  q_ = static_cast<std::int64_t>(target.q);

  if (shape_ == Shape::kPalindrome) {
    for (Digit d = 0; d < k_; ++d) middle_digits_.push_back(d);
  } else if (k_ % 2 == 1) {
    middle_digits_.push_back((k_ - 1) / 2);
  }

  // The queue can hold gap + 1 digits for a moment (sigma_b appended).
  const std::uint32_t max_len = ceil_log(target.p, target.q, target.base) + 1;
  pow_k_.push_back(1);
  for (std::uint32_t i = 1; i <= max_len; ++i) {
    if (pow_k_.back() > std::numeric_limits<std::uint64_t>::max() / k_) {
      throw std::invalid_argument("queue of saved digits does not fit in 64 bits");
    }
    pow_k_.push_back(pow_k_.back() * k_);
  }
}

std::vector<SearchState> QuotientAutomaton::start_states() const {
  const Natural p = p_, q = q_;
  const Base base{k_};
  const auto lo = floor_log(p, q, base);
  const auto hi = ceil_log(p, q, base);
  std::vector<SearchState> starts;
  SearchState s;
  s.gap = static_cast<std::uint8_t>(lo);
  starts.push_back(s);
  if (hi != lo) {
    s.gap = static_cast<std::uint8_t>(hi);
    starts.push_back(s);
  }
  return starts;
}

std::optional<std::pair<std::int64_t, std::int64_t>> QuotientAutomaton::step_right(
    std::int64_t carry_a, std::int64_t carry_b, Digit a_digit, Digit b_digit) const {
  const std::int64_t k = k_;
  const std::int64_t rhs = p_ * b_digit + carry_b;
  const std::int64_t lhs = q_ * a_digit + carry_a;
  const std::int64_t residue = rhs % k;
  if ((lhs - residue) % k != 0) return std::nullopt;
  return std::pair{(lhs - residue) / k, (rhs - residue) / k};
}

std::int64_t QuotientAutomaton::step_left(std::int64_t left_carry, Digit a_digit,
                                          Digit b_digit) const {
  return static_cast<std::int64_t>(k_) * left_carry - p_ * b_digit + q_ * a_digit;
}

std::optional<SearchState> QuotientAutomaton::drain_pair(SearchState s, Digit a) const {
  if (s.queue_len < 2) return std::nullopt;
  const std::uint64_t high = pow_k_[s.queue_len - 1];
  const Digit front = static_cast<Digit>(s.queue / high);
  const Digit back = static_cast<Digit>(s.queue % k_);
  const std::int64_t left = step_left(s.left_carry, a, front);
  if (!left_in_range(left)) return std::nullopt;
  const auto right = step_right(s.carry_a, s.carry_b, mirror(a), back);
  if (!right) return std::nullopt;
  s.queue = (s.queue % high) / k_;
  s.queue_len = static_cast<std::uint8_t>(s.queue_len - 2);
  s.left_carry = left;
  s.carry_a = right->first;
  s.carry_b = right->second;
  s.phase = Phase::kUnloading;
  return s;
}

std::vector<Successor> QuotientAutomaton::successors(const SearchState& state,
                                                     const TransitionLabel& label) const {
  std::vector<Successor> out;
  if (label.a >= k_ || (label.b && *label.b >= k_)) return out;
  const bool leading = state.phase == Phase::kStart;
  if (leading && label.a == 0) return out;

  if (!label.is_pad()) {
    if (state.phase == Phase::kUnloading) return out;
    const Digit b = *label.b;
    if (leading && b == 0) return out;
    const auto right = step_right(state.carry_a, state.carry_b, mirror(label.a), mirror(b));
    if (!right) return out;
    SearchState s = state;
    s.queue = s.queue * k_ + b;
    ++s.queue_len;
    Digit left_b = 0;
    if (s.queue_len > s.gap) {
      left_b = static_cast<Digit>(s.queue / pow_k_[s.gap]);
      s.queue %= pow_k_[s.gap];
      s.queue_len = s.gap;
    }
    s.left_carry = step_left(state.left_carry, label.a, left_b);
    if (!left_in_range(s.left_carry)) return out;
    s.carry_a = right->first;
    s.carry_b = right->second;
    s.phase = s.queue_len == s.gap ? Phase::kShifting : Phase::kLoading;
    out.push_back({s, std::nullopt, false});
    return out;
  }

  if (state.phase == Phase::kUnloading) {
    if (auto next = drain_pair(state, label.a)) out.push_back({*next, std::nullopt, false});
    return out;
  }

  // First pad symbol: b is complete. Missing saved digits are leading zeros
  // of the aligned B, so only the length changes.
  SearchState padded = state;
  padded.queue_len = state.gap;
  if (!leading) {
    if (auto next = drain_pair(padded, label.a)) out.push_back({*next, std::nullopt, true});
  }
  for (Digit sigma : middle_digits_) {
    if (leading && sigma == 0) continue;
    SearchState s = padded;
    s.queue = s.queue * k_ + sigma;
    ++s.queue_len;
    if (auto next = drain_pair(s, label.a)) out.push_back({*next, sigma, true});
  }
  return out;
}

void QuotientAutomaton::all_successors(
    const SearchState& state, std::vector<std::pair<TransitionLabel, Successor>>& out) const {
  for (Digit a = 0; a < k_; ++a) {
    if (state.reading()) {
      for (Digit b = 0; b < k_; ++b) {
        const TransitionLabel label{a, b};
        for (auto& s : successors(state, label)) out.emplace_back(label, s);
      }
    }
    const TransitionLabel pad{a, std::nullopt};
    for (auto& s : successors(state, pad)) out.emplace_back(pad, s);
  }
}

void QuotientAutomaton::add_middle_choices(const SearchState& state, Digit b_middle, bool leading,
                                           std::optional<Digit> sigma_b,
                                           std::vector<AcceptChoice>& out) const {
  for (Digit sigma_a : middle_digits_) {
    if (leading && sigma_a == 0) continue;
    if (step_left(state.left_carry, sigma_a, b_middle) == state.right_difference()) {
      out.push_back({sigma_b, sigma_a});
    }
  }
}

std::vector<AcceptChoice> QuotientAutomaton::accepting_choices(const SearchState& state) const {
  std::vector<AcceptChoice> out;
  if (state.phase == Phase::kUnloading) {
    if (state.queue_len == 0) {
      if (state.left_carry == state.right_difference()) out.push_back({});
    } else if (state.queue_len == 1) {
      add_middle_choices(state, static_cast<Digit>(state.queue), false, std::nullopt, out);
    }
    return out;
  }

  // Input ends together with b. What remains of the middle of B is the
  // zero-padded queue followed by sigma_b; it must cover at most one digit.
  const bool leading = state.phase == Phase::kStart;
  if (!leading) {
    if (state.gap == 0) {
      if (state.left_carry == state.right_difference()) out.push_back({});
    } else if (state.gap == 1) {
      const Digit front = state.queue_len == 1 ? static_cast<Digit>(state.queue) : 0;
      add_middle_choices(state, front, false, std::nullopt, out);
    }
  }
  if (state.gap == 0) {
    for (Digit sigma_b : middle_digits_) {
      if (leading && sigma_b == 0) continue;
      add_middle_choices(state, sigma_b, leading, sigma_b, out);
    }
  }
  return out;
}

Natural state_count_bound(const Target& target) {
  Natural p = target.p, q = target.q;
  if (p < q) std::swap(p, q);
  const auto e = ceil_log(p, q, target.base);
  Natural power = 1;
  for (std::uint32_t i = 0; i < e; ++i) power *= target.base.value();
  return 6 * (p + q - 1) * p * q * power;
}

}  // namespace palquot
