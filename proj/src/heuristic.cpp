#include "palquot/heuristic.hpp"

#include <stdexcept>

namespace palquot {

std::string to_string(HeuristicOutcome::Kind kind) {
  switch (kind) {
    case HeuristicOutcome::Kind::kFound: return "found";
    case HeuristicOutcome::Kind::kRefutedAtDepth: return "refuted";
    case HeuristicOutcome::Kind::kInconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

struct Prefix {
  Natural value;     // [T]_2
  Natural reversed;  // [T^R]_2, low bits of B
};

std::size_t bit_length(const Natural& x) {
  return x == 0 ? 0 : static_cast<std::size_t>(boost::multiprecision::msb(x)) + 1;
}

Natural reverse_bits(const Natural& x, std::size_t width) {
  Natural r = 0;
  for (std::size_t i = 0; i < width; ++i) {
    r <<= 1;
    if (boost::multiprecision::bit_test(x, static_cast<unsigned>(i))) r |= 1;
  }
  return r;
}

// Whether some real x in [lo, hi) has leading width bits equal to f.
bool leading_bits_possible(const Natural& f, std::size_t width, const Natural& lo,
                           const Natural& hi) {
  const std::size_t first = bit_length(lo) - 1;
  const std::size_t last = bit_length(hi - 1) - 1;
  for (std::size_t j = first; j <= last; ++j) {
    const Natural binade = Natural(1) << j;
    const Natural x_min = lo > binade ? lo : binade;
    const Natural x_end = hi < (binade << 1) ? hi : (binade << 1);
    Natural p_min, p_max;
    if (j + 1 >= width) {
      const auto s = static_cast<unsigned>(j + 1 - width);
      p_min = x_min >> s;
      p_max = ((x_end + (Natural(1) << s) - 1) >> s) - 1;
    } else {
      const auto s = static_cast<unsigned>(width - j - 1);
      p_min = x_min << s;
      p_max = (x_end << s) - 1;
    }
    if (p_min <= f && f <= p_max) return true;
  }
  return false;
}

bool survives(const Prefix& t, std::size_t width, const Natural& n) {
  const Natural mask = (Natural(1) << width) - 1;
  const Natural low_a = (t.reversed * n) & mask;
  const Natural high_a = reverse_bits(low_a, width);
  if (!boost::multiprecision::bit_test(high_a, static_cast<unsigned>(width - 1))) return false;
  return leading_bits_possible(high_a, width, t.value * n, (t.value + 1) * n);
}

}  // namespace

HeuristicOutcome heuristic_decide(const Natural& n, std::size_t max_depth) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("heuristic expects odd N >= 3");
  const Base two{2};
  HeuristicOutcome out;
  std::vector<Prefix> level{{1, 1}};
  for (std::size_t depth = 1;; ++depth) {
    std::vector<Prefix> alive;
    for (auto& t : level) {
      if (!survives(t, depth, n)) continue;
      if (t.value == t.reversed) {
        const Natural a = t.value * n;
        if (is_palindromic_number(a, two)) {
          out.kind = HeuristicOutcome::Kind::kFound;
          out.representation = Representation{Target::integer(n), a, t.value};
          out.depth = depth;
          return out;
        }
      }
      alive.push_back(std::move(t));
    }
    out.widest_level = std::max(out.widest_level, alive.size());
    if (alive.empty()) {
      out.kind = HeuristicOutcome::Kind::kRefutedAtDepth;
      out.depth = depth;
      return out;
    }
    if (depth == max_depth) {
      out.kind = HeuristicOutcome::Kind::kInconclusive;
      out.depth = depth;
      return out;
    }
    level.clear();
    const Natural top = Natural(1) << depth;
    for (const auto& t : alive) {
      for (unsigned bit = 0; bit < 2; ++bit) {
        level.push_back({t.value * 2 + bit, bit ? t.reversed + top : t.reversed});
      }
    }
  }
}

DigitString FamilyRow::palindrome(std::size_t n_rep) const {
  return r + s.repeat(n_rep) + s.reversed().repeat(n_rep) + r.reversed();
}

DigitString FamilyRow::product(std::size_t n_rep) const {
  if (n_rep < i) throw std::invalid_argument("family needs n >= i");
  return t + u.repeat(n_rep - i) + v + w + v.reversed() + u.reversed().repeat(n_rep - i) +
         t.reversed();
}

const std::vector<FamilyRow>& failure_families() {
  static const std::vector<FamilyRow> rows = [] {
    auto row = [](unsigned n, const char* r, const char* s, const char* t, const char* u,
                  const char* v, const char* w, std::size_t i, std::size_t d) {
      return FamilyRow{n, bits(r), bits(s), bits(t), bits(u), bits(v), bits(w), i, d};
    };
    return std::vector<FamilyRow>{
        row(2551, "", "10100010000", "1100100", "11110001011", "111", "0010110001011", 1, 12),
        row(14765, "", "111011110110", "1101011111000", "110000010111", "1100000101101",
            "1011010110", 2, 8),
        row(15247, "", "11001101110011001000", "10111111100", "00100011001101110011", "0010001",
            "011100000011000101", 1, 10),
        row(17093, "", "110111001000", "11100110000", "110010001101", "", "0110000000010101", 1,
            6),
        row(19277, "11", "0000100011100111110111000110", "1110010010000101",
            "1001101101001101100100101100", "10011011010011", "11001111100100", 1, 8),
        row(19831, "", "11101010111100", "1000111000110", "00100000011111", "0010000001111",
            "0111010111111010101", 2, 12),
    };
  }();
  return rows;
}

bool verify_failure_family(const FamilyRow& row, std::size_t n_rep) {
  if (n_rep < 2 || n_rep < row.i) return false;
  if (pal_distance(row.w) != row.d) return false;
  return row.n * from_digits(row.palindrome(n_rep)) == from_digits(row.product(n_rep));
}

}  // namespace palquot
