#pragma once

// Base-k digit strings and the palindrome / antipalindrome predicates.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace palquot {

using Natural = boost::multiprecision::cpp_int;
using Digit = std::uint32_t;

// Radix k >= 2.
class Base {
 public:
  explicit Base(std::uint32_t k);

  std::uint32_t value() const { return k_; }
  // Largest digit, k - 1.
  Digit max_digit() const { return k_ - 1; }
  Digit complement(Digit d) const { return k_ - 1 - d; }

  friend bool operator==(Base, Base) = default;

 private:
  std::uint32_t k_;
};

// Digits stored most-significant first. Leading zeros are allowed (pumped
// blocks), so canonical form is a property, not an invariant.
class DigitString {
 public:
  explicit DigitString(Base base) : base_(base) {}
  DigitString(std::vector<Digit> digits, Base base);

  // Parses "101011" style text; digits 0-9 then a-z.
  static DigitString parse(std::string_view text, Base base);

  Base base() const { return base_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  std::span<const Digit> digits() const { return digits_; }
  bool is_canonical() const { return !digits_.empty() && digits_.front() != 0; }

  DigitString reversed() const;
  DigitString& append(const DigitString& other);
  DigitString& push_back(Digit d);
  // this repeated n times.
  DigitString repeat(std::size_t n) const;

  std::string str() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;
  friend DigitString operator+(DigitString lhs, const DigitString& rhs) {
    lhs.append(rhs);
    return lhs;
  }

 private:
  std::vector<Digit> digits_;
  Base base_;
};

// (n)_k. Throws std::domain_error for n == 0.
DigitString to_digits(const Natural& n, Base base);
// [w]_k. Throws std::invalid_argument for the empty string.
Natural from_digits(const DigitString& w);

bool is_palindrome(const DigitString& w);
DigitString reverse_complement(const DigitString& w);
// w equals its reverse complement. For odd k an odd-length w qualifies when
// its middle digit is (k-1)/2; in even bases only even lengths can.
bool is_antipalindrome(const DigitString& w);
// Hamming distance between w and its reversal.
std::size_t pal_distance(const DigitString& w);

// Numeric forms over canonical representations.
bool is_palindromic_number(const Natural& n, Base base);
bool is_antipalindromic_number(const Natural& n, Base base);

// Base-2 shorthand for DigitString::parse.
DigitString bits(std::string_view text);

}  // namespace palquot
