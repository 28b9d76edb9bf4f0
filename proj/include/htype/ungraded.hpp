#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "htype/induction.hpp"
#include "htype/signed_perm.hpp"

namespace htype {

/// Which irreducible module class. Plus/Minus only exist for k = 3 mod 4,
/// where omega acts as +1 / -1.
enum class Variant { Default, Plus, Minus };

std::string_view to_string(Variant v);
/// Accepts "default", "plus", "minus". Throws std::invalid_argument.
Variant parse_variant(std::string_view s);

/// An ungraded integral Clifford module over C_k.
struct UngradedRep {
  int k = 0;
  Variant variant = Variant::Default;
  std::vector<SignedPerm> gens;
  std::string provenance;

  std::size_t dim() const { return gens.empty() ? 0 : gens[0].size(); }
};

/// Action of omega = e_1 ... e_k, i.e. g_1 g_2 ... g_k.
/// Throws std::invalid_argument unless k = 3 mod 4.
SignedPerm omega_action(std::span<const SignedPerm> gens);
inline SignedPerm omega_action(const GradedRep& w) { return omega_action(w.gens); }
inline SignedPerm omega_action(const UngradedRep& v) { return omega_action(v.gens); }

/// Splits a graded module over C_k, k = 3 mod 4, into the omega = +1 and
/// omega = -1 submodules. Both are indexed by the W^0 basis: on V_+ the
/// generator e_i sends p to (q, s) where (omega e_i) w_p = s w_q; V_- uses
/// the negated actions.
std::pair<UngradedRep, UngradedRep> split_by_omega(const GradedRep& w);

/// Irreducible ungraded integral module over C_k, by k mod 8:
///   1, 2, 4, 0 -> build_graded(k) with grading forgotten;
///   3, 7       -> one half of split_by_omega (Default means Plus);
///   5, 6       -> Plus module over C_{k'}, k' = k + 7 - r, restricted to the
///                 first k generators.
/// Throws std::invalid_argument for a Plus/Minus request when k != 3 mod 4,
/// std::length_error above cap.
UngradedRep extract_irreducible(int k, Variant variant = Variant::Default,
                                int cap = kDefaultCap);

/// Variants admissible for k: {Plus, Minus} when k = 3 mod 4, else {Default}.
std::vector<Variant> admissible_variants(int k);

} // namespace htype

namespace htype {

/// Dimension of the irreducible ungraded module from the classification
/// recursion: (2, 4, 4, 8, 8, 8, 8, 16) for k = 1..8, a_{k+8} = 16 a_k.
std::size_t ungraded_dim(int k);

} // namespace htype
