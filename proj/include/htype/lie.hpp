#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "htype/signed_perm.hpp"
#include "htype/ungraded.hpp"

namespace htype {

/// One nonzero structure constant A^a_{pq} = sign, 0-based indices.
struct Triple {
  std::uint32_t a;
  std::uint32_t p;
  std::uint32_t q;
  int sign;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Structure constants [v_p, v_q] = sum_a A^a_{pq} z_a of an H-type algebra
/// in an integral basis. Stored densely as one signed target per (a, p):
/// for each a and p exactly one q carries a nonzero entry.
class StructTensor {
public:
  StructTensor() = default;

  /// Throws std::invalid_argument on out-of-range indices, signs other than
  /// +-1, or any (a, p) with zero or several nonzero entries. Antisymmetry is
  /// not enforced here; see check_tensor().
  static StructTensor from_triples(std::size_t m, std::size_t n, std::span<const Triple> triples);
  static StructTensor from_generators(std::span<const SignedPerm> gens);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }

  int entry(std::size_t a, std::size_t p, std::size_t q) const {
    const auto i = a * n_ + p;
    return targets_[i] == q ? signs_[i] : 0;
  }
  std::uint32_t partner(std::size_t a, std::size_t p) const { return targets_[a * n_ + p]; }
  int partner_sign(std::size_t a, std::size_t p) const { return signs_[a * n_ + p]; }

  /// All nonzero entries ordered by (a, p).
  std::vector<Triple> triples() const;
  /// The action J_{z_a} as a signed permutation. Throws if it is not one.
  SignedPerm generator(std::size_t a) const;
  /// Returns a copy with A^a_{pq} negated at the single slot (a, p).
  StructTensor with_flipped_sign(std::size_t a, std::size_t p) const;

  friend bool operator==(const StructTensor&, const StructTensor&) = default;

private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> targets_;
  std::vector<std::int8_t> signs_;
};

/// A^a_{pq} = (J_{z_a} v_p, v_q). Throws std::invalid_argument if the
/// module fails verify_clifford.
StructTensor structure_constants(const UngradedRep& rep);

/// Component a of [v, w] is sum_{p,q} A^a_{pq} v_p w_q. Works for any ring
/// type with +, * and a zero from T{}.
template <class T>
std::vector<T> bracket(std::span<const T> v, std::span<const T> w, const StructTensor& A) {
  if (v.size() != A.n() || w.size() != A.n())
    throw std::invalid_argument("bracket: vector length does not match dim V");
  std::vector<T> out(A.m(), T{});
  for (std::size_t a = 0; a < A.m(); ++a) {
    T acc{};
    for (std::size_t p = 0; p < A.n(); ++p) {
      const T term = v[p] * w[A.partner(a, p)];
      acc = A.partner_sign(a, p) > 0 ? acc + term : acc - term;
    }
    out[a] = acc;
  }
  return out;
}

/// Antisymmetry, no diagonal entries and one nonzero per (a, p).
CheckReport check_tensor(const StructTensor& A);

/// Tensor invariants plus the Clifford relations of the maps J_{z_a};
/// by polarization this certifies |J_z v| = |z||v|, J_z^2 = -|z|^2 and
/// skew-adjointness for all z, v.
CheckReport verify_htype(const StructTensor& A);
CheckReport verify_htype(const UngradedRep& rep);

/// For k = 3 mod 4: the structure tensor of V_- taken against the negated
/// basis -e_1..-e_k equals that of V_+. Throws std::invalid_argument for
/// other residues.
bool check_plus_minus_iso(int k, int cap = kDefaultCap);

} // namespace htype
