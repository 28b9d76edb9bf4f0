#pragma once

#include <cstdint>
#include <vector>

#include "htype/induction.hpp"
#include "htype/signed_perm.hpp"

namespace htype {

/// Multiplication table of a real algebra on an orthonormal basis whose
/// basis products are signed basis elements. Index 0 is the unit.
struct AlgebraTable {
  struct Entry {
    std::uint32_t index;
    std::int8_t sign;
  };

  std::size_t n = 0;
  std::vector<Entry> mul; // row-major, mul[a * n + b] = e_a * e_b

  Entry operator()(std::size_t a, std::size_t b) const { return mul[a * n + b]; }
  /// Left multiplication by basis element a, as a signed permutation.
  SignedPerm left(std::size_t a) const;
};

/// Hamilton quaternions on (1, i, j, k).
AlgebraTable quaternion_table();

/// Octonions on (1, i_1, ..., i_7) by Cayley-Dickson doubling of the
/// quaternions, (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)), labelled
/// i_1..i_4 = l, il, jl, kl and i_5..i_7 = i, j, k. Self-checks that every
/// unit squares to -1, that the seven left multiplications satisfy the
/// Clifford relations, and that products of two of i_1..i_4 lie in
/// span{1, i_5, i_6, i_7}; throws std::logic_error otherwise.
AlgebraTable octonion_table();

/// Ungraded integral module over C_k given by left multiplications by the
/// first k imaginary units of the table.
std::vector<SignedPerm> left_multiplications(const AlgebraTable& table, int k);

/// Actions of e_i e_k (i < k) obtained by restricting an ungraded C_k
/// module to C_k^0: T_i = g_i g_k.
std::vector<SignedPerm> restrict_to_even(std::span<const SignedPerm> gens);

/// Actions of e_j e_k (j < k) on a C_{k-1}-module through the isomorphism
/// C_{k-1} -> C_k^0, x_0 + x_1 -> x_0 + e_k x_1. Since e_k e_j acts as the
/// C_{k-1} generator e_j, e_j e_k acts as its negation.
/// Throws std::invalid_argument if `gens` fails verify_clifford.
std::vector<SignedPerm> phi_even_twist(std::span<const SignedPerm> gens);

/// Irreducible graded integral module for 1 <= k <= 8.
/// Throws std::invalid_argument outside that range.
GradedRep seed_graded(int k);

} // namespace htype
