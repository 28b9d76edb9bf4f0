#include "htype/ungraded.hpp"

#include <stdexcept>

#include "htype/clifford.hpp"

namespace htype {

std::string_view to_string(Variant v) {
  switch (v) {
  case Variant::Plus:
    return "plus";
  case Variant::Minus:
    return "minus";
  default:
    return "default";
  }
}

Variant parse_variant(std::string_view s) {
  if (s == "default")
    return Variant::Default;
  if (s == "plus")
    return Variant::Plus;
  if (s == "minus")
    return Variant::Minus;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

SignedPerm omega_action(std::span<const SignedPerm> gens) {
  const int k = static_cast<int>(gens.size());
  if (!omega_splits(k))
    throw std::invalid_argument("omega_action: k=" + std::to_string(k) + " is not 3 mod 4");
  SignedPerm omega = gens.back();
  for (int a = k - 2; a >= 0; --a)
    omega = sp_compose(gens[a], omega);
  return omega;
}

std::pair<UngradedRep, UngradedRep> split_by_omega(const GradedRep& w) {
  if (!omega_splits(w.k))
    throw std::invalid_argument("split_by_omega: k=" + std::to_string(w.k) + " is not 3 mod 4");
  if (auto r = verify_clifford(w.gens, w.k); !r)
    throw std::invalid_argument("split_by_omega: input fails " + r.to_string());

  const auto even = w.even_basis();
  std::vector<std::int64_t> position(w.dim(), -1);
  for (std::size_t p = 0; p < even.size(); ++p)
    position[even[p]] = static_cast<std::int64_t>(p);

  const auto omega = omega_action(w);
  UngradedRep plus{w.k, Variant::Plus, {}, "omega(+1)[" + w.provenance + "]"};
  UngradedRep minus{w.k, Variant::Minus, {}, "omega(-1)[" + w.provenance + "]"};
  for (const auto& g : w.gens) {
    const auto even_op = sp_compose(omega, g);
    std::vector<std::uint32_t> t(even.size());
    std::vector<std::int8_t> s(even.size());
    for (std::size_t p = 0; p < even.size(); ++p) {
      const auto q = position[even_op.target(even[p])];
      if (q < 0)
        throw std::logic_error("split_by_omega: omega e_i does not preserve W^0");
      t[p] = static_cast<std::uint32_t>(q);
      s[p] = static_cast<std::int8_t>(even_op.sign(even[p]));
    }
    SignedPerm action(std::move(t), std::move(s));
    minus.gens.push_back(-action);
    plus.gens.push_back(std::move(action));
  }
  return {std::move(plus), std::move(minus)};
}

std::vector<Variant> admissible_variants(int k) {
  if (omega_splits(k))
    return {Variant::Plus, Variant::Minus};
  return {Variant::Default};
}

UngradedRep extract_irreducible(int k, Variant variant, int cap) {
  if (k < 1)
    throw std::invalid_argument("extract_irreducible: k must be positive, got " +
                                std::to_string(k));
  if (variant != Variant::Default && !omega_splits(k))
    throw std::invalid_argument("extract_irreducible: variant " + std::string(to_string(variant)) +
                                " requires k = 3 mod 4");
  if (k > cap)
    throw std::length_error("extract_irreducible: k=" + std::to_string(k) + " exceeds cap " +
                            std::to_string(cap));
  const int r = k % 8;
  switch (r) {
  case 1:
  case 2:
  case 4:
  case 0: {
    auto w = build_graded(k, k);
    return UngradedRep{k, Variant::Default, std::move(w.gens), "ungraded[" + w.provenance + "]"};
  }
  case 3:
  case 7: {
    auto [plus, minus] = split_by_omega(build_graded(k, k));
    return variant == Variant::Minus ? std::move(minus) : std::move(plus);
  }
  default: {
    const int big = k + 7 - r;
    auto host = extract_irreducible(big, Variant::Plus, big);
    host.gens.resize(k);
    host.k = k;
    host.variant = Variant::Default;
    host.provenance = "restrict(first " + std::to_string(k) + ")[" + host.provenance + "]";
    return host;
  }
  }
}

} // namespace htype

namespace htype {

std::size_t ungraded_dim(int k) {
  if (k < 1)
    throw std::invalid_argument("ungraded_dim: k must be positive");
  static constexpr std::size_t kBase[8] = {2, 4, 4, 8, 8, 8, 8, 16};
  std::size_t dim = kBase[(k - 1) % 8];
  for (int periods = (k - 1) / 8; periods > 0; --periods)
    dim *= 16;
  return dim;
}

} // namespace htype
