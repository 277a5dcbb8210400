#include <gtest/gtest.h>

#include <deque>

#include <absl/container/flat_hash_set.h>

#include "palquot/quotient_automaton.hpp"

namespace palquot {
namespace {

const Base kTwo{2};

Target pal(unsigned n) { return Target::integer(n, kTwo, Shape::kPalindrome); }
Target apal(unsigned n) { return Target::integer(n, kTwo, Shape::kAntipalindrome); }

std::vector<unsigned> gaps(const QuotientAutomaton& m) {
  std::vector<unsigned> out;
  for (const auto& s : m.start_states()) out.push_back(s.gap);
  return out;
}

TEST(Target, ParseAndNormalize) {
  const auto t = Target::parse("12/8", kTwo, Shape::kPalindrome);
  EXPECT_EQ(t.p, 3);
  EXPECT_EQ(t.q, 2);
  EXPECT_EQ(t.str(), "3/2");
  EXPECT_TRUE(Target::parse("35", kTwo, Shape::kPalindrome).is_integer());
  EXPECT_THROW(Target::parse("3/0", kTwo, Shape::kPalindrome), std::invalid_argument);
  EXPECT_THROW(Target::parse("x", kTwo, Shape::kPalindrome), std::invalid_argument);
  EXPECT_THROW(Target::parse("", kTwo, Shape::kPalindrome), std::invalid_argument);
  EXPECT_THROW(Target::parse("-3", kTwo, Shape::kPalindrome), std::invalid_argument);
}

TEST(Shape, Parse) {
  EXPECT_EQ(parse_shape("pal"), Shape::kPalindrome);
  EXPECT_EQ(parse_shape("antipalindrome"), Shape::kAntipalindrome);
  EXPECT_THROW(parse_shape("palindromic"), std::invalid_argument);
}

TEST(StartStates, GapGuesses) {
  EXPECT_EQ(gaps(QuotientAutomaton(pal(35))), (std::vector<unsigned>{5, 6}));
  EXPECT_EQ(gaps(QuotientAutomaton(pal(4))), (std::vector<unsigned>{2}));
  EXPECT_EQ(gaps(QuotientAutomaton(Target::rational(979, 765))), (std::vector<unsigned>{0, 1}));
  for (const auto& s : QuotientAutomaton(pal(35)).start_states()) {
    EXPECT_EQ(s.phase, Phase::kStart);
    EXPECT_EQ(s.queue_len, 0);
    EXPECT_EQ(s.carry_a, 0);
    EXPECT_EQ(s.carry_b, 0);
    EXPECT_EQ(s.left_carry, 0);
  }
}

TEST(StartStates, RejectsInvertedTargets) {
  EXPECT_THROW(QuotientAutomaton(Target::rational(2, 3)), std::invalid_argument);
}

TEST(StepRight, IntegerTarget) {
  const QuotientAutomaton m(pal(35));
  // A_1 must be 35 * 1 mod 2 = 1, carry 17.
  EXPECT_FALSE(m.step_right(0, 0, 0, 1).has_value());
  const auto c = m.step_right(0, 0, 1, 1);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->first, 0);
  EXPECT_EQ(c->second, 17);
  const auto z = m.step_right(0, 0, 0, 0);
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(*z, std::make_pair(std::int64_t{0}, std::int64_t{0}));
}

TEST(StepRight, RationalTarget) {
  const QuotientAutomaton m(Target::rational(979, 765));
  const auto c = m.step_right(0, 0, 1, 1);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->first, 382);
  EXPECT_EQ(c->second, 489);
  EXPECT_FALSE(m.step_right(0, 0, 0, 1).has_value());
}

TEST(StepLeft, Examples) {
  const QuotientAutomaton m(pal(35));
  EXPECT_EQ(m.step_left(0, 1, 0), 1);
  EXPECT_EQ(m.step_left(0, 0, 0), 0);
  EXPECT_EQ(m.step_left(1, 1, 0), 3);
}

TEST(Successors, LeadingZeroRejected) {
  const QuotientAutomaton m(pal(35));
  for (const auto& s : m.start_states()) {
    EXPECT_TRUE(m.successors(s, {0, 0}).empty());
    EXPECT_TRUE(m.successors(s, {1, 0}).empty());
    EXPECT_TRUE(m.successors(s, {0, 1}).empty());
  }
}

TEST(Successors, FirstStepOf35) {
  const QuotientAutomaton m(pal(35));
  const SearchState start = m.start_states().front();
  ASSERT_EQ(start.gap, 5);
  const auto next = m.successors(start, {1, 1});
  ASSERT_EQ(next.size(), 1u);
  const SearchState& s = next.front().state;
  EXPECT_EQ(s.phase, Phase::kLoading);
  EXPECT_EQ(s.queue_len, 1);
  EXPECT_EQ(s.queue, 1u);
  EXPECT_EQ(s.carry_b, 17);
  EXPECT_EQ(s.left_carry, 1);
}

TEST(Successors, NoMiddleDigitForBaseTwoAntipalindromes) {
  const QuotientAutomaton m(apal(6));
  EXPECT_TRUE(m.middle_digits().empty());
  // Walk every reachable state; no closing step may pick a middle digit.
  std::deque<SearchState> queue;
  absl::flat_hash_set<SearchState> seen;
  for (const auto& s : m.start_states()) {
    seen.insert(s);
    queue.push_back(s);
  }
  std::vector<std::pair<TransitionLabel, Successor>> out;
  while (!queue.empty()) {
    const SearchState s = queue.front();
    queue.pop_front();
    out.clear();
    m.all_successors(s, out);
    for (const auto& [label, next] : out) {
      EXPECT_FALSE(next.sigma_b.has_value());
      if (seen.insert(next.state).second) queue.push_back(next.state);
    }
  }
  EXPECT_GT(seen.size(), 10u);
}

TEST(Successors, PadLabelsNeverFollowedByDigits) {
  const QuotientAutomaton m(pal(19));
  std::deque<SearchState> queue;
  absl::flat_hash_set<SearchState> seen;
  for (const auto& s : m.start_states()) {
    seen.insert(s);
    queue.push_back(s);
  }
  std::vector<std::pair<TransitionLabel, Successor>> out;
  while (!queue.empty()) {
    const SearchState s = queue.front();
    queue.pop_front();
    out.clear();
    m.all_successors(s, out);
    for (const auto& [label, next] : out) {
      if (!s.reading()) {
        EXPECT_TRUE(label.is_pad());
      }
      if (label.is_pad()) {
        EXPECT_FALSE(next.state.reading());
      }
      if (seen.insert(next.state).second) queue.push_back(next.state);
    }
  }
}

TEST(Accepting, UnloadingCarryComparison) {
  const QuotientAutomaton m(pal(35));
  SearchState s;
  s.phase = Phase::kUnloading;
  EXPECT_TRUE(m.is_accepting(s));
  s.left_carry = 3;
  s.carry_b = 5;
  EXPECT_FALSE(m.is_accepting(s));
  s.left_carry = 5;
  EXPECT_TRUE(m.is_accepting(s));
}

TEST(Accepting, TenOverTwoRunForFive) {
  // 10 / 2 = 5: a = "10", b = "1", gap 2; the pad step drains the queue.
  const QuotientAutomaton m(apal(5));
  bool accepted = false;
  for (const auto& start : m.start_states()) {
    for (const auto& s1 : m.successors(start, {1, 1})) {
      for (const auto& s2 : m.successors(s1.state, {0, std::nullopt})) {
        accepted = accepted || m.is_accepting(s2.state);
      }
    }
  }
  EXPECT_TRUE(accepted);
}

TEST(StateCountBound, Examples) {
  EXPECT_EQ(state_count_bound(pal(35)), 470400);
  EXPECT_EQ(state_count_bound(Target::rational(979, 765)), Natural(6) * 1743 * 979 * 765 * 2);
}

TEST(Logs, ExactFloorAndCeiling) {
  EXPECT_EQ(floor_log(35, 1, kTwo), 5u);
  EXPECT_EQ(ceil_log(35, 1, kTwo), 6u);
  EXPECT_EQ(floor_log(32, 1, kTwo), 5u);
  EXPECT_EQ(ceil_log(32, 1, kTwo), 5u);
  EXPECT_EQ(floor_log(979, 765, kTwo), 0u);
  EXPECT_EQ(ceil_log(979, 765, kTwo), 1u);
  EXPECT_EQ(ceil_log(1, 1, kTwo), 0u);
}

}  // namespace
}  // namespace palquot
