#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>

namespace htype {

/// Upper bound on generators representable by a Blade mask.
inline constexpr int kMaxGenerators = 64;

/// A signed product of distinct Clifford generators e_{i1} e_{i2} ... with
/// i1 < i2 < ...; bit (i-1) of `mask` marks generator e_i.
///
/// Only monomials are modelled. Multiplication follows e_i^2 = -1 and
/// e_i e_j = -e_j e_i for i != j.
class Blade {
public:
  Blade() = default;
  Blade(int k, std::uint64_t mask, int sign = 1);

  static Blade identity(int k) { return Blade(k, 0, 1); }
  /// The generator e_i, 1-based.
  static Blade generator(int k, int i);

  int k() const { return k_; }
  std::uint64_t mask() const { return mask_; }
  int sign() const { return sign_; }
  int grade() const { return std::popcount(mask_); }

  Blade operator-() const { return Blade(k_, mask_, -sign_); }

  friend bool operator==(const Blade&, const Blade&) = default;

  std::string to_string() const;

private:
  int k_ = 1;
  std::uint64_t mask_ = 0;
  int sign_ = 1;
};

/// Clifford product. Throws std::invalid_argument when a.k() != b.k().
Blade blade_mul(const Blade& a, const Blade& b);

/// 0 for even blades (C_k^0), 1 for odd ones.
int blade_parity(const Blade& a);

/// omega = e_1 e_2 ... e_k with sign +1.
Blade volume_element(int k);

/// True when omega^2 = +1 and omega is central, i.e. k = 3 mod 4.
inline bool omega_splits(int k) { return k % 4 == 3; }

} // namespace htype
