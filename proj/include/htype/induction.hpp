#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "htype/signed_perm.hpp"

namespace htype {

/// Largest k accepted by build_graded and the CLI unless overridden.
inline constexpr int kDefaultCap = 24;

/// A Z_2-graded integral Clifford module over C_k. Basis vectors are
/// orthonormal; `parity[p]` is 0 for W^0 and 1 for W^1; gens[a] is the
/// action of e_{a+1}.
struct GradedRep {
  int k = 0;
  std::vector<std::uint8_t> parity;
  std::vector<SignedPerm> gens;
  std::string provenance;

  std::size_t dim() const { return parity.size(); }
  /// Indices of W^0 basis vectors in increasing order.
  std::vector<std::uint32_t> even_basis() const;
};

/// Clifford relations, parity flipping of every generator and the even
/// half-split.
CheckReport verify_graded(const GradedRep& rep);

/// W = C_k (x)_{C_k^0} V for an integral C_k^0-module V given by the actions
/// T_i of e_i e_k (i < k) on m basis vectors. The result has basis
/// x_1..x_m (1 (x) v_p, even) followed by y_1..y_m (e_k (x) v_p, odd).
/// Throws std::invalid_argument if the family fails verify_even_integral or
/// if doubles.size() != k - 1. For k == 1 pass `m` explicitly.
GradedRep induce_graded(std::span<const SignedPerm> doubles, int k, std::size_t m = 0);

/// Graded tensor product over C_{k+l}. Basis is row-major (A outer);
/// e_a (x) 1 acts on the A factor and 1 (x) f_b acts as
/// x (x) y -> (-1)^{parity(x)} x (x) f_b y.
GradedRep graded_tensor(const GradedRep& a, const GradedRep& b);

/// Irreducible graded integral module over C_k: the seed for k <= 8, and
/// build_graded(k - 8) tensored with the k = 8 seed otherwise.
/// Throws std::invalid_argument for k < 1 and std::length_error above cap.
GradedRep build_graded(int k, int cap = kDefaultCap);

/// Dimension of the irreducible graded module, from the construction's
/// recursion (b_{k+8} = 16 b_k).
std::size_t graded_dim(int k);

} // namespace htype
