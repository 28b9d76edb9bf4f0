#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "htype/dyadic.hpp"
#include "htype/lie.hpp"

namespace htype {

/// A point of N = U + V (identified with the group through exp), with exact
/// dyadic coordinates in the bases z_1..z_m and v_1..v_n.
struct GroupElement {
  std::vector<Dyadic> u;
  std::vector<Dyadic> v;

  static GroupElement identity(std::size_t m, std::size_t n) {
    return {std::vector<Dyadic>(m), std::vector<Dyadic>(n)};
  }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// A point of the lattice L = 1/2 U_Z + V_Z, stored as u2 = 2u and v.
struct LatticeElement {
  std::vector<std::int64_t> u2;
  std::vector<std::int64_t> v;

  static LatticeElement identity(std::size_t m, std::size_t n) {
    return {std::vector<std::int64_t>(m), std::vector<std::int64_t>(n)};
  }
  GroupElement to_group() const;
  /// Throws std::invalid_argument unless x has u in 1/2 Z^m and v in Z^n.
  static LatticeElement from_group(const GroupElement& x);
  static bool contains(const GroupElement& x);

  friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
};

/// X * Y = X + Y + 1/2 [X, Y].
GroupElement group_mul(const GroupElement& x, const GroupElement& y, const StructTensor& A);
/// -X.
GroupElement group_inverse(const GroupElement& x);
/// X Y X^-1 Y^-1, which equals ([X.v, Y.v], 0).
GroupElement group_commutator(const GroupElement& x, const GroupElement& y, const StructTensor& A);

/// Integer fast path of group_mul on L: u2 = x.u2 + y.u2 + [x.v, y.v].
LatticeElement lattice_mul(const LatticeElement& x, const LatticeElement& y, const StructTensor& A);
LatticeElement lattice_inverse(const LatticeElement& x);

/// [v_p, v_q] = sign * z_a with no other component.
struct CommutatorWitness {
  std::uint32_t p;
  std::uint32_t q;
  int sign;
};

/// For each a, a pair of basis vectors whose bracket is +-z_a; nullopt for
/// any a with no witness.
std::vector<std::optional<CommutatorWitness>> commutator_basis(const StructTensor& A);

struct Reduction {
  LatticeElement lattice;
  GroupElement reduced;
};

/// Returns l in L and r = X * l with every v-coordinate of r in [0, 1) and
/// every u-coordinate in [0, 1/2).
Reduction reduce_to_fundamental(const GroupElement& x, const StructTensor& A);

/// Bass growth degree dim V + 2 dim U of the lattice.
inline int growth_degree(int m, int n) { return n + 2 * m; }

enum class GeneratingSet {
  Exact, ///< {+-v_p} and {+-z_a / 2}; generates L.
  Integer, ///< {+-v_p} and {+-z_a}; may generate a finite-index subgroup.
};

std::vector<LatticeElement> generating_set(const StructTensor& A, GeneratingSet mode);

struct GrowthResult {
  /// g[r] = number of distinct elements at word distance <= r.
  std::vector<std::uint64_t> g;
  /// Set when the element cap stopped the search; g then covers only the
  /// radii completed in full.
  bool truncated = false;
};

inline constexpr std::uint64_t kDefaultElementCap = 20'000'000;

/// Breadth-first search of the Cayley graph of <S> from the identity.
/// Deterministic and exact.
GrowthResult ball_count(const StructTensor& A, std::span<const LatticeElement> gens, int radius,
                        std::uint64_t element_cap = kDefaultElementCap);

/// Least-squares slope of log g(R) against log R for R in [r_min, r_max].
/// Throws std::invalid_argument for r_min < 1, fewer than two points or
/// radii beyond g.
double loglog_slope(std::span<const std::uint64_t> g, int r_min, int r_max);

/// Index of <S> in L, computed exactly in the finite quotient
/// L / (U_Z + 2 V_Z) (which <S> contains whenever S includes +-v_p and
/// +-z_a or +-z_a/2). Throws std::length_error when m + n > 24.
std::uint64_t subgroup_index(const StructTensor& A, std::span<const LatticeElement> gens);

} // namespace htype
