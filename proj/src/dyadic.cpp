#include "htype/dyadic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace htype {

namespace {

std::int64_t checked_shift(std::int64_t value, int bits) {
  if (bits >= 63 && value != 0)
    throw std::overflow_error("Dyadic: shift overflow");
  std::int64_t out = 0;
  if (__builtin_mul_overflow(value, std::int64_t{1} << bits, &out))
    throw std::overflow_error("Dyadic: shift overflow");
  return out;
}

} // namespace

Dyadic Dyadic::from_parts(std::int64_t num, int exp) {
  Dyadic d;
  if (num == 0)
    return d;
  while (exp > 0 && (num & 1) == 0) {
    num /= 2;
    --exp;
  }
  if (exp < 0) {
    num = checked_shift(num, -exp);
    exp = 0;
  }
  d.num_ = num;
  d.exp_ = exp;
  return d;
}

Dyadic Dyadic::parse(std::string_view text) {
  const auto fail = [&] {
    return std::invalid_argument("not a dyadic rational: '" + std::string(text) + "'");
  };
  if (text.empty())
    throw fail();
  std::string s(text);
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      std::size_t used = 0;
      const long long num = std::stoll(s.substr(0, slash), &used);
      if (used != slash)
        throw fail();
      const auto den_text = s.substr(slash + 1);
      const long long den = std::stoll(den_text, &used);
      if (used != den_text.size() || den <= 0 || (den & (den - 1)) != 0)
        throw fail();
      return from_parts(num, std::countr_zero(static_cast<unsigned long long>(den)));
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      // a.b = (a * 10^len + b) / 10^len; terminating decimals are dyadic
      // only when the 5^len part of the denominator cancels.
      const bool negative = s[0] == '-';
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      const int len = static_cast<int>(s.size() - dot - 1);
      std::size_t used = 0;
      long long scaled = std::stoll(digits, &used);
      if (used != digits.size())
        throw fail();
      if (negative && scaled > 0)
        scaled = -scaled;
      for (int i = 0; i < len; ++i) {
        if (scaled % 5 != 0)
          throw fail();
        scaled /= 5;
      }
      return from_parts(scaled, len);
    }
    std::size_t used = 0;
    const long long value = std::stoll(s, &used);
    if (used != s.size())
      throw fail();
    return Dyadic(value);
  } catch (const std::invalid_argument&) {
    throw fail();
  } catch (const std::out_of_range&) {
    throw fail();
  }
}

std::int64_t Dyadic::floor() const {
  if (exp_ == 0)
    return num_;
  // Arithmetic shift rounds toward negative infinity.
  return exp_ >= 63 ? (num_ < 0 ? -1 : 0) : (num_ >> exp_);
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num_), -exp_); }

std::string Dyadic::to_string() const {
  if (exp_ == 0)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

Dyadic Dyadic::operator-() const {
  if (num_ == INT64_MIN)
    throw std::overflow_error("Dyadic: negation overflow");
  Dyadic d = *this;
  d.num_ = -num_;
  return d;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const int exp = std::max(a.exp_, b.exp_);
  const auto an = checked_shift(a.num_, exp - a.exp_);
  const auto bn = checked_shift(b.num_, exp - b.exp_);
  std::int64_t sum = 0;
  if (__builtin_add_overflow(an, bn, &sum))
    throw std::overflow_error("Dyadic: addition overflow");
  return Dyadic::from_parts(sum, exp);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  std::int64_t prod = 0;
  if (__builtin_mul_overflow(a.num_, b.num_, &prod))
    throw std::overflow_error("Dyadic: multiplication overflow");
  return Dyadic::from_parts(prod, a.exp_ + b.exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const auto diff = a - b;
  return diff.num_ <=> 0;
}

} // namespace htype
