#pragma once

// Brute-force oracle, denseness constructions, censuses and the counts of
// integers in the proven-unrepresentable windows.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "palquot/numerals.hpp"
#include "palquot/quotient_automaton.hpp"
#include "palquot/search.hpp"

namespace palquot {

using Rational = boost::multiprecision::cpp_rational;

// Every shape-valid B with at most max_digits_b digits for which p*B/q is
// an integer of the same shape, sorted by B. Independent of the automaton.
std::vector<Representation> brute_force_solutions(const Target& target, std::size_t max_digits_b);

struct Approximant {
  Rational alpha;
  std::size_t n = 0;
  // 1/2 < 2^k * x <= 1 where x is alpha, or 1/alpha when alpha > 1.
  std::size_t k = 0;
  bool reciprocal = false;
  Natural a;
  Natural b;
  // |A/B - alpha|, exact.
  Rational error;
  // |A/B - x| for the quantity actually approximated (x above).
  Rational oriented_error;
  // 2^(-n-k) + 2^(-2n-2k) for palindromes; zero when no closed bound is known.
  Rational error_bound;
};

// A = [(g)_2 (g)_2^R]_2 over B = 2^(2n+k) + 1 with g = floor(2^n * beta).
Approximant approx_palindrome_quotient(const Rational& alpha, std::size_t n);

// Odd k: A = [(g)_2 comp((g)_2^R)]_2 over B = [1 0^c 1^c 0]_2, c = n + (k-1)/2.
// Even k: the roles swap with g = floor(2^n / beta) and c = n - k/2, so
// n >= k/2 is required.
Approximant approx_antipalindrome_quotient(const Rational& alpha, std::size_t n);

struct SweepEntry {
  Natural n;
  Verdict verdict = Verdict::kUndecided;
  std::uint64_t states_visited = 0;
};

// decide() for every integer in [lo, hi]; workers > 1 splits the range
// across threads, output order is always increasing N.
std::vector<SweepEntry> sweep(const Natural& lo, const Natural& hi, Base base, Shape shape,
                              const SearchBudget& budget = {}, unsigned workers = 1);

struct CensusRow {
  std::size_t bits = 0;
  Natural count = 0;
  // Never counted.
  std::vector<Natural> undecided;
};

// Representable integers in [2^(i-1), 2^i) for i = 1..max_bits, base 2.
std::vector<CensusRow> census(Shape shape, std::size_t max_bits, const SearchBudget& budget = {},
                              unsigned workers = 1);

// A = [x x^R comp(x) comp(x^R)]_2 over B = [(10)^j]_2. Throws
// std::invalid_argument unless x starts with 1, j >= 2 and the quotient has
// exactly 2j bits.
Representation apal_divisibility_witness(const DigitString& x);

struct DensityRow {
  Natural x;
  Natural count;
  // The closed form at this x.
  Natural closed_form;
  Rational ratio;
};

// Integers <= x inside the proven-unrepresentable windows: N = 1 (mod 8)
// with 5*2^j < N < 6*2^j for palindromes, N = 1 (mod 4) with
// 40*4^j < N < 48*4^j for antipalindromes.
Natural unrepresentable_window_count(Shape shape, const Natural& x);

// Rows at the local minima x = 5*2^n (palindromes, n >= 3) or x = 40*4^n
// (antipalindromes) up to x_max. The ratios tend to 1/40 and 1/60.
std::vector<DensityRow> lower_density_tabulation(Shape shape, const Natural& x_max);

}  // namespace palquot
