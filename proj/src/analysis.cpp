#include "palquot/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace palquot {

namespace {

Natural power(std::uint32_t k, std::size_t e) {
  Natural r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= k;
  return r;
}

Rational pow2(long e) {
  if (e >= 0) return Rational(Natural(1) << e);
  return Rational(Natural(1), Natural(1) << -e);
}

DigitString complement(const DigitString& w) {
  std::vector<Digit> d(w.digits().begin(), w.digits().end());
  for (auto& x : d) x = w.base().complement(x);
  return DigitString(std::move(d), w.base());
}

Natural floor_of(const Rational& r) {
  return boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
}

// Orients alpha to x <= 1 and finds k with 1/2 < 2^k x <= 1.
struct Bracket {
  Rational x;
  Rational beta;
  std::size_t k = 0;
  bool reciprocal = false;
};

Bracket bracket(const Rational& alpha) {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  Bracket b;
  b.reciprocal = alpha > 1;
  b.x = b.reciprocal ? Rational(1) / alpha : alpha;
  b.beta = b.x;
  while (b.beta * 2 <= 1) {
    b.beta *= 2;
    ++b.k;
  }
  return b;
}

Approximant finish(const Rational& alpha, std::size_t n, const Bracket& br, Natural top,
                   Natural bottom) {
  Approximant out;
  out.alpha = alpha;
  out.n = n;
  out.k = br.k;
  out.reciprocal = br.reciprocal;
  const Rational oriented(top, bottom);
  out.oriented_error = abs(oriented - br.x);
  if (br.reciprocal) std::swap(top, bottom);
  out.a = std::move(top);
  out.b = std::move(bottom);
  out.error = abs(Rational(out.a, out.b) - alpha);
  return out;
}

}  // namespace

std::vector<Representation> brute_force_solutions(const Target& target, std::size_t max_digits_b) {
  const Base base = target.base;
  const std::uint32_t k = base.value();
  std::vector<Digit> middles;
  if (target.shape == Shape::kPalindrome) {
    for (Digit d = 0; d < k; ++d) middles.push_back(d);
  } else if (k % 2 == 1) {
    middles.push_back((k - 1) / 2);
  }

  std::vector<Representation> out;
  auto consider = [&](const Natural& b) {
    const Natural pb = target.p * b;
    if (pb % target.q != 0) return;
    const Natural a = pb / target.q;
    if (has_shape(a, base, target.shape)) out.push_back({target, a, b});
  };

  for (std::size_t len = 1; len <= max_digits_b; ++len) {
    const std::size_t half = len / 2;
    const bool odd = len % 2 == 1;
    if (half == 0) {
      for (Digit m : middles) {
        if (m != 0) consider(m);
      }
      continue;
    }
    const Natural shift = power(k, half);
    for (Natural h = power(k, half - 1); h < shift; ++h) {
      const DigitString high = to_digits(h, base);
      const DigitString low =
          target.shape == Shape::kPalindrome ? high.reversed() : reverse_complement(high);
      const Natural low_value = low.empty() ? Natural(0) : from_digits(low);
      if (!odd) {
        consider(h * shift + low_value);
        continue;
      }
      for (Digit m : middles) consider((h * k + m) * shift + low_value);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.b < y.b; });
  return out;
}

Approximant approx_palindrome_quotient(const Rational& alpha, std::size_t n) {
  const Bracket br = bracket(alpha);
  const Natural two_n = Natural(1) << n;
  // beta = 1 would give n + 1 bits; the largest n-bit value keeps the bound.
  const Natural gamma = std::min<Natural>(floor_of(two_n * br.beta), two_n - 1);
  const DigitString g = to_digits(gamma, Base{2});
  Natural a = from_digits(g + g.reversed());
  Natural b = (Natural(1) << (2 * n + br.k)) + 1;
  Approximant out = finish(alpha, n, br, std::move(a), std::move(b));
  const long nk = static_cast<long>(n + br.k);
  out.error_bound = pow2(-nk) + pow2(-2 * nk);
  return out;
}

Approximant approx_antipalindrome_quotient(const Rational& alpha, std::size_t n) {
  const Bracket br = bracket(alpha);
  const Natural two_n = Natural(1) << n;
  const DigitString one = bits("1"), zero = bits("0");
  Natural top, bottom;
  if (br.k % 2 == 1) {
    const Natural gamma = std::min<Natural>(floor_of(two_n * br.beta), two_n - 1);
    const DigitString g = to_digits(gamma, Base{2});
    top = from_digits(g + reverse_complement(g));
    const std::size_t c = n + (br.k - 1) / 2;
    bottom = from_digits(one + zero.repeat(c) + one.repeat(c) + zero);
  } else {
    if (2 * n < br.k) throw std::invalid_argument("even-k construction needs n >= k/2");
    const Natural gamma = floor_of(Rational(two_n) / br.beta);
    const DigitString g = to_digits(gamma, Base{2});
    bottom = from_digits(g + reverse_complement(g));
    const std::size_t c = n - br.k / 2;
    top = from_digits(one + zero.repeat(c) + one.repeat(c) + zero);
  }
  return finish(alpha, n, br, std::move(top), std::move(bottom));
}

std::vector<SweepEntry> sweep(const Natural& lo, const Natural& hi, Base base, Shape shape,
                              const SearchBudget& budget, unsigned workers) {
  std::vector<SweepEntry> out;
  for (Natural n = lo; n <= hi; ++n) out.push_back({n, Verdict::kUndecided, 0});
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < out.size(); i = next++) {
      const auto r = decide(Target::integer(out[i].n, base, shape), budget);
      out[i].verdict = r.verdict;
      out[i].states_visited = r.stats.states_visited;
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return out;
}

std::vector<CensusRow> census(Shape shape, std::size_t max_bits, const SearchBudget& budget,
                              unsigned workers) {
  std::vector<CensusRow> rows;
  if (max_bits == 0) return rows;
  const Natural hi = (Natural(1) << max_bits) - 1;
  const auto entries = sweep(1, hi, Base{2}, shape, budget, workers);
  for (std::size_t i = 1; i <= max_bits; ++i) rows.push_back({i, 0, {}});
  for (const auto& e : entries) {
    auto& row = rows[static_cast<std::size_t>(boost::multiprecision::msb(e.n))];
    if (e.verdict == Verdict::kRepresentable) row.count += 1;
    if (e.verdict == Verdict::kUndecided) row.undecided.push_back(e.n);
  }
  return rows;
}

Representation apal_divisibility_witness(const DigitString& x) {
  const std::size_t j = x.size();
  if (!(x.base() == Base{2})) throw std::invalid_argument("witness is built in base 2");
  if (j < 2 || x[0] != 1) throw std::invalid_argument("x must have j >= 2 bits and start with 1");
  const DigitString y = x.reversed();
  const Natural a = from_digits(x + y + complement(x) + complement(y));
  const Natural b = from_digits(bits("10").repeat(j));
  if (a % b != 0) throw std::logic_error("divisibility identity failed");
  const Natural quotient = a / b;
  if (boost::multiprecision::msb(quotient) + 1 != 2 * j) {
    throw std::invalid_argument("quotient does not have exactly 2j bits");
  }
  return Representation{Target::integer(quotient, Base{2}, Shape::kAntipalindrome), a, b};
}

namespace {

// Integers = r (mod m) in [lo, hi].
Natural count_residue(const Natural& lo, const Natural& hi, unsigned r, unsigned m) {
  if (hi < lo) return 0;
  auto upto = [&](const Natural& x) -> Natural {  // in [0, x], x >= -1
    if (x < r) return 0;
    return (x - r) / m + 1;
  };
  return upto(hi) - (lo == 0 ? Natural(0) : upto(lo - 1));
}

}  // namespace

Natural unrepresentable_window_count(Shape shape, const Natural& x) {
  Natural total = 0;
  if (shape == Shape::kPalindrome) {
    for (Natural w = 1; 5 * w < x; w *= 2) {
      total += count_residue(5 * w + 1, std::min<Natural>(6 * w - 1, x), 1, 8);
    }
  } else {
    for (Natural w = 1; 40 * w < x; w *= 4) {
      total += count_residue(40 * w + 1, std::min<Natural>(48 * w - 1, x), 1, 4);
    }
  }
  return total;
}

std::vector<DensityRow> lower_density_tabulation(Shape shape, const Natural& x_max) {
  std::vector<DensityRow> rows;
  if (shape == Shape::kPalindrome) {
    for (std::size_t n = 3;; ++n) {
      const Natural x = Natural(5) << n;
      if (x > x_max) break;
      const Natural count = unrepresentable_window_count(shape, x);
      rows.push_back({x, count, (Natural(1) << (n - 3)) - 1, Rational(count, x)});
    }
  } else {
    for (std::size_t n = 0;; ++n) {
      const Natural four_n = Natural(1) << (2 * n);
      const Natural x = 40 * four_n;
      if (x > x_max) break;
      const Natural count = unrepresentable_window_count(shape, x);
      rows.push_back({x, count, (2 * four_n - 2) / 3, Rational(count, x)});
    }
  }
  return rows;
}

}  // namespace palquot
