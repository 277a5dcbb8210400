#include "palquot/numerals.hpp"

#include <algorithm>
#include <stdexcept>

namespace palquot {

Base::Base(std::uint32_t k) : k_(k) {
  if (k < 2) throw std::invalid_argument("base must be at least 2");
}

DigitString::DigitString(std::vector<Digit> digits, Base base)
    : digits_(std::move(digits)), base_(base) {
  for (Digit d : digits_) {
    if (d >= base_.value()) throw std::invalid_argument("digit out of range for base");
  }
}

DigitString DigitString::parse(std::string_view text, Base base) {
  std::vector<Digit> out;
  out.reserve(text.size());
  for (char c : text) {
    Digit d;
    if (c >= '0' && c <= '9') {
      d = static_cast<Digit>(c - '0');
    } else if (c >= 'a' && c <= 'z') {
      d = static_cast<Digit>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'Z') {
      d = static_cast<Digit>(c - 'A' + 10);
    } else {
      throw std::invalid_argument("unexpected character in digit string");
    }
    out.push_back(d);
  }
  return DigitString(std::move(out), base);
}

DigitString DigitString::reversed() const {
  DigitString r(*this);
  std::reverse(r.digits_.begin(), r.digits_.end());
  return r;
}

DigitString& DigitString::append(const DigitString& other) {
  if (!(other.base_ == base_)) throw std::invalid_argument("base mismatch in concatenation");
  digits_.insert(digits_.end(), other.digits_.begin(), other.digits_.end());
  return *this;
}

DigitString& DigitString::push_back(Digit d) {
  if (d >= base_.value()) throw std::invalid_argument("digit out of range for base");
  digits_.push_back(d);
  return *this;
}

DigitString DigitString::repeat(std::size_t n) const {
  DigitString r(base_);
  r.digits_.reserve(digits_.size() * n);
  for (std::size_t i = 0; i < n; ++i) r.append(*this);
  return r;
}

std::string DigitString::str() const {
  static constexpr char kAlphabet[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string s;
  s.reserve(digits_.size());
  if (base_.value() <= 36) {
    for (Digit d : digits_) s.push_back(kAlphabet[d]);
    return s;
  }
  // Wide bases print as dotted decimal digits.
  for (Digit d : digits_) {
    if (!s.empty()) s.push_back('.');
    s += std::to_string(d);
  }
  return s;
}

DigitString to_digits(const Natural& n, Base base) {
  if (n <= 0) throw std::domain_error("(n)_k is defined for n >= 1 only");
  std::vector<Digit> out;
  Natural rest = n;
  const Natural k = base.value();
  while (rest > 0) {
    out.push_back(static_cast<Digit>(rest % k));
    rest /= k;
  }
  std::reverse(out.begin(), out.end());
  return DigitString(std::move(out), base);
}

Natural from_digits(const DigitString& w) {
  if (w.empty()) throw std::invalid_argument("[w]_k of the empty string");
  Natural value = 0;
  const std::uint32_t k = w.base().value();
  for (Digit d : w.digits()) value = value * k + d;
  return value;
}

bool is_palindrome(const DigitString& w) {
  if (w.empty()) return false;
  auto d = w.digits();
  return std::equal(d.begin(), d.begin() + d.size() / 2, d.rbegin());
}

DigitString reverse_complement(const DigitString& w) {
  std::vector<Digit> out(w.digits().rbegin(), w.digits().rend());
  for (Digit& d : out) d = w.base().complement(d);
  return DigitString(std::move(out), w.base());
}

bool is_antipalindrome(const DigitString& w) {
  if (w.empty()) return false;
  const Base base = w.base();
  auto d = w.digits();
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    if (d[i] != base.complement(d[n - 1 - i])) return false;
  }
  return true;
}

std::size_t pal_distance(const DigitString& w) {
  if (w.empty()) throw std::invalid_argument("pal_distance of the empty string");
  auto d = w.digits();
  std::size_t count = 0;
  for (std::size_t i = 0; i < d.size(); ++i) count += d[i] != d[d.size() - 1 - i];
  return count;
}

bool is_palindromic_number(const Natural& n, Base base) {
  return n >= 1 && is_palindrome(to_digits(n, base));
}

bool is_antipalindromic_number(const Natural& n, Base base) {
  return n >= 1 && is_antipalindrome(to_digits(n, base));
}

DigitString bits(std::string_view text) { return DigitString::parse(text, Base{2}); }

}  // namespace palquot
