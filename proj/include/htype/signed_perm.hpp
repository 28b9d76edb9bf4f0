#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace htype {

/// A linear map on R^n sending each basis vector to plus or minus another
/// basis vector, bijectively. Indices are 0-based; entry p = (target q,
/// sign s) means the map sends v_p to s * v_q. As a matrix M, M[q][p] = s.
class SignedPerm {
public:
  SignedPerm() = default;
  /// Throws std::invalid_argument unless `targets` is a permutation of
  /// 0..n-1 and every sign is +1 or -1.
  SignedPerm(std::vector<std::uint32_t> targets, std::vector<std::int8_t> signs);

  static SignedPerm identity(std::size_t n);

  std::size_t size() const { return targets_.size(); }
  std::uint32_t target(std::size_t p) const { return targets_[p]; }
  int sign(std::size_t p) const { return signs_[p]; }

  std::span<const std::uint32_t> targets() const { return targets_; }
  std::span<const std::int8_t> signs() const { return signs_; }

  SignedPerm operator-() const;

  /// Returns a copy with the sign at basis index p flipped.
  SignedPerm with_flipped_sign(std::size_t p) const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

private:
  std::vector<std::uint32_t> targets_;
  std::vector<std::int8_t> signs_;
};

/// Matrix product a*b: applies b first, then a.
SignedPerm sp_compose(const SignedPerm& a, const SignedPerm& b);

/// Matrix transpose, which for a signed permutation is also the inverse.
SignedPerm sp_transpose(const SignedPerm& a);

/// Outcome of an exact verification. On failure `check` names the violated
/// identity and (a, b, index) locate the first violation found.
struct CheckReport {
  bool ok = true;
  std::string check;
  int a = -1;
  int b = -1;
  long index = -1;
  std::string detail;

  explicit operator bool() const { return ok; }

  static CheckReport pass() { return {}; }
  static CheckReport fail(std::string check, int a, int b, long index, std::string detail);

  std::string to_string() const;
};

/// g_a g_b + g_b g_a = -2 delta_ab I and g_a^T = -g_a for all generators.
/// Requires gens.size() == k with equal sizes; shape problems are reported
/// as failures.
CheckReport verify_clifford(std::span<const SignedPerm> gens, int k);

/// g^T == -g.
CheckReport verify_skew(const SignedPerm& g, int label = -1);

/// Integral C_k^0-module condition for the family T_i = action of e_i e_k,
/// i < k: T_i^T T_j + T_j^T T_i = 2 delta_ij I, and each T_i skew (the
/// cross term of the norm condition with the e_k e_k component).
CheckReport verify_even_integral(std::span<const SignedPerm> doubles);

} // namespace htype
