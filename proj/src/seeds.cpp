#include "htype/seeds.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace htype {

namespace {

using Entry = AlgebraTable::Entry;

// Hamilton product of quaternion basis units 0..3 = 1, i, j, k.
Entry quat_mul(std::uint32_t a, std::uint32_t b) {
  if (a == 0)
    return {b, 1};
  if (b == 0)
    return {a, 1};
  if (a == b)
    return {0, -1};
  const std::uint32_t c = 6 - a - b;
  const bool cyclic = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
  return {c, static_cast<std::int8_t>(cyclic ? 1 : -1)};
}

int quat_conj_sign(std::uint32_t q) { return q == 0 ? 1 : -1; }

// Cayley-Dickson coordinates of an octonion basis unit: (half, quaternion
// unit), half 0 for H and 1 for H*l.
struct Doubled {
  std::uint32_t half;
  std::uint32_t quat;
};

// Octonion index -> Cayley-Dickson coordinates: i_1..i_4 = l, il, jl, kl;
// i_5..i_7 = i, j, k.
constexpr std::array<Doubled, 8> kOctonionLabels{{
    {0, 0}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {0, 1}, {0, 2}, {0, 3},
}};

std::uint32_t octonion_index(Doubled d) {
  for (std::uint32_t o = 0; o < kOctonionLabels.size(); ++o)
    if (kOctonionLabels[o].half == d.half && kOctonionLabels[o].quat == d.quat)
      return o;
  throw std::logic_error("octonion label table is incomplete");
}

// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)) restricted to basis units,
// where exactly one component of each factor is nonzero.
std::pair<Doubled, int> doubled_mul(Doubled x, Doubled y) {
  const auto p = x.quat, r = y.quat;
  if (x.half == 0 && y.half == 0) {
    const auto e = quat_mul(p, r); // ac
    return {{0, e.index}, e.sign};
  }
  if (x.half == 0 && y.half == 1) {
    const auto e = quat_mul(r, p); // d a
    return {{1, e.index}, e.sign};
  }
  if (x.half == 1 && y.half == 0) {
    const auto e = quat_mul(p, r); // b conj(c)
    return {{1, e.index}, e.sign * quat_conj_sign(r)};
  }
  const auto e = quat_mul(r, p); // -conj(d) b
  return {{0, e.index}, -e.sign * quat_conj_sign(r)};
}

SignedPerm complex_unit() {
  // i * 1 = i, i * i = -1 on the basis (1, i).
  return SignedPerm({1, 0}, {1, -1});
}

GradedRep induce_from(std::span<const SignedPerm> ungraded, int k, std::string what) {
  auto rep = induce_graded(restrict_to_even(ungraded), k);
  rep.provenance = "seed(" + std::to_string(k) + "): induced from " + std::move(what);
  return rep;
}

} // namespace

SignedPerm AlgebraTable::left(std::size_t a) const {
  std::vector<std::uint32_t> t(n);
  std::vector<std::int8_t> s(n);
  for (std::size_t b = 0; b < n; ++b) {
    const auto e = (*this)(a, b);
    t[b] = e.index;
    s[b] = e.sign;
  }
  return SignedPerm(std::move(t), std::move(s));
}

AlgebraTable quaternion_table() {
  AlgebraTable t;
  t.n = 4;
  t.mul.reserve(16);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b)
      t.mul.push_back(quat_mul(a, b));
  return t;
}

AlgebraTable octonion_table() {
  AlgebraTable t;
  t.n = 8;
  t.mul.reserve(64);
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) {
      const auto [d, sign] = doubled_mul(kOctonionLabels[a], kOctonionLabels[b]);
      t.mul.push_back({octonion_index(d), static_cast<std::int8_t>(sign)});
    }

  for (std::uint32_t a = 1; a < 8; ++a)
    if (t(a, a).index != 0 || t(a, a).sign != -1)
      throw std::logic_error("octonion table: i_" + std::to_string(a) + " does not square to -1");
  if (auto r = verify_clifford(left_multiplications(t, 7), 7); !r)
    throw std::logic_error("octonion table: left multiplications fail " + r.to_string());
  for (std::uint32_t a = 1; a <= 4; ++a)
    for (std::uint32_t b = 1; b <= 4; ++b) {
      const auto idx = t(a, b).index;
      if (idx != 0 && idx < 5)
        throw std::logic_error("octonion table: i_a i_b for a, b <= 4 leaves span{1, i_5, i_6, i_7}");
    }
  return t;
}

std::vector<SignedPerm> left_multiplications(const AlgebraTable& table, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= table.n)
    throw std::invalid_argument("left_multiplications: k exceeds the number of imaginary units");
  std::vector<SignedPerm> gens;
  gens.reserve(k);
  for (int a = 1; a <= k; ++a)
    gens.push_back(table.left(a));
  return gens;
}

std::vector<SignedPerm> restrict_to_even(std::span<const SignedPerm> gens) {
  std::vector<SignedPerm> doubles;
  if (gens.empty())
    return doubles;
  const auto& last = gens.back();
  for (std::size_t i = 0; i + 1 < gens.size(); ++i)
    doubles.push_back(sp_compose(gens[i], last));
  return doubles;
}

std::vector<SignedPerm> phi_even_twist(std::span<const SignedPerm> gens) {
  if (auto r = verify_clifford(gens, static_cast<int>(gens.size())); !r)
    throw std::invalid_argument("phi_even_twist: input module fails " + r.to_string());
  std::vector<SignedPerm> doubles;
  doubles.reserve(gens.size());
  for (const auto& g : gens)
    doubles.push_back(-g);
  return doubles;
}

GradedRep seed_graded(int k) {
  switch (k) {
  case 1: {
    GradedRep rep{1, {0, 1}, {complex_unit()}, "seed(1): C with real part even"};
    return rep;
  }
  case 2: {
    const auto h = quaternion_table();
    // H = span{1, k} + span{i, j}
    return GradedRep{2, {0, 1, 1, 0}, left_multiplications(h, 2),
                     "seed(2): H with span{1,k} even"};
  }
  case 3:
    return induce_from(left_multiplications(quaternion_table(), 3), 3, "H over C_3");
  case 4: {
    const auto o = octonion_table();
    return GradedRep{4, {0, 1, 1, 1, 1, 0, 0, 0}, left_multiplications(o, 4),
                     "seed(4): O with span{1,i5,i6,i7} even"};
  }
  case 5:
  case 6:
  case 7:
    return induce_from(left_multiplications(octonion_table(), k), k,
                       "O over C_" + std::to_string(k));
  case 8: {
    auto rep = induce_graded(phi_even_twist(left_multiplications(octonion_table(), 7)), 8);
    rep.provenance = "seed(8): induced from O over C_8^0 via C_7";
    return rep;
  }
  default:
    throw std::invalid_argument("seed_graded: k must lie in 1..8, got " + std::to_string(k));
  }
}

} // namespace htype
