#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace htype {

/// Exact rational num / 2^exp. Normalized so that exp >= 0 and num is odd
/// whenever exp > 0. Arithmetic throws std::overflow_error instead of
/// wrapping.
class Dyadic {
public:
  constexpr Dyadic() = default;
  Dyadic(std::int64_t integer) : num_(integer) {} // NOLINT(implicit)
  static Dyadic from_parts(std::int64_t num, int exp);
  /// Parses "7", "-3/8" or a terminating decimal like "0.625".
  static Dyadic parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }

  std::int64_t floor() const;
  Dyadic half() const { return from_parts(num_, exp_ + 1); }
  double to_double() const;
  std::string to_string() const;

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& b) { return *this = *this + b; }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

private:
  std::int64_t num_ = 0;
  int exp_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.to_string(); }

} // namespace htype
