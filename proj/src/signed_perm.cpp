#include "htype/signed_perm.hpp"

#include <sstream>
#include <stdexcept>

namespace htype {

SignedPerm::SignedPerm(std::vector<std::uint32_t> targets, std::vector<std::int8_t> signs)
    : targets_(std::move(targets)), signs_(std::move(signs)) {
  if (targets_.size() != signs_.size())
    throw std::invalid_argument("SignedPerm: targets and signs differ in length");
  std::vector<bool> hit(targets_.size(), false);
  for (std::size_t p = 0; p < targets_.size(); ++p) {
    const auto q = targets_[p];
    if (q >= targets_.size() || hit[q])
      throw std::invalid_argument("SignedPerm: targets are not a permutation (index " +
                                  std::to_string(p) + ")");
    hit[q] = true;
    if (signs_[p] != 1 && signs_[p] != -1)
      throw std::invalid_argument("SignedPerm: sign must be +1 or -1");
  }
}

SignedPerm SignedPerm::identity(std::size_t n) {
  std::vector<std::uint32_t> t(n);
  for (std::size_t p = 0; p < n; ++p)
    t[p] = static_cast<std::uint32_t>(p);
  return SignedPerm(std::move(t), std::vector<std::int8_t>(n, 1));
}

SignedPerm SignedPerm::operator-() const {
  SignedPerm out = *this;
  for (auto& s : out.signs_)
    s = static_cast<std::int8_t>(-s);
  return out;
}

SignedPerm SignedPerm::with_flipped_sign(std::size_t p) const {
  SignedPerm out = *this;
  out.signs_.at(p) = static_cast<std::int8_t>(-out.signs_[p]);
  return out;
}

SignedPerm sp_compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("sp_compose: dimension mismatch");
  const std::size_t n = a.size();
  std::vector<std::uint32_t> t(n);
  std::vector<std::int8_t> s(n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto mid = b.target(p);
    t[p] = a.target(mid);
    s[p] = static_cast<std::int8_t>(b.sign(p) * a.sign(mid));
  }
  return SignedPerm(std::move(t), std::move(s));
}

SignedPerm sp_transpose(const SignedPerm& a) {
  const std::size_t n = a.size();
  std::vector<std::uint32_t> t(n);
  std::vector<std::int8_t> s(n);
  for (std::size_t p = 0; p < n; ++p) {
    t[a.target(p)] = static_cast<std::uint32_t>(p);
    s[a.target(p)] = static_cast<std::int8_t>(a.sign(p));
  }
  return SignedPerm(std::move(t), std::move(s));
}

CheckReport CheckReport::fail(std::string check, int a, int b, long index, std::string detail) {
  return CheckReport{false, std::move(check), a, b, index, std::move(detail)};
}

std::string CheckReport::to_string() const {
  if (ok)
    return "ok";
  std::ostringstream os;
  os << check << " violated";
  if (a >= 0)
    os << " at a=" << a + 1;
  if (b >= 0)
    os << " b=" << b + 1;
  if (index >= 0)
    os << " basis index " << index + 1;
  if (!detail.empty())
    os << ": " << detail;
  return os.str();
}

namespace {

// Column p of the integer matrix X + Y where X, Y are signed permutations.
// Returns true when that column equals `expect_sign` times column p of the
// identity (expect_sign == 0 meaning a zero column).
bool column_sum_is(const SignedPerm& x, const SignedPerm& y, std::size_t p, int expect_sign) {
  const auto qx = x.target(p), qy = y.target(p);
  const int sx = x.sign(p), sy = y.sign(p);
  if (qx == qy) {
    const int total = sx + sy;
    if (total == 0)
      return expect_sign == 0;
    return qx == p && total == 2 * expect_sign;
  }
  // Two distinct unit entries never cancel.
  return false;
}

} // namespace

CheckReport verify_skew(const SignedPerm& g, int label) {
  for (std::size_t p = 0; p < g.size(); ++p) {
    const auto q = g.target(p);
    if (g.target(q) != p || g.sign(q) != -g.sign(p))
      return CheckReport::fail("skew", label, -1, static_cast<long>(p),
                               "transpose differs from negation");
  }
  return CheckReport::pass();
}

CheckReport verify_clifford(std::span<const SignedPerm> gens, int k) {
  if (k < 0 || gens.size() != static_cast<std::size_t>(k))
    return CheckReport::fail("shape", -1, -1, -1,
                             "expected " + std::to_string(k) + " generators, got " +
                                 std::to_string(gens.size()));
  if (gens.empty())
    return CheckReport::pass();
  const std::size_t n = gens[0].size();
  for (int a = 0; a < k; ++a)
    if (gens[a].size() != n)
      return CheckReport::fail("shape", a, -1, -1, "generator size mismatch");
  for (int a = 0; a < k; ++a) {
    if (auto r = verify_skew(gens[a], a); !r)
      return r;
    for (int b = a; b < k; ++b) {
      const auto ab = sp_compose(gens[a], gens[b]);
      const auto ba = sp_compose(gens[b], gens[a]);
      // a == b: 2 g_a^2 = -2 I ; a != b: anticommutator vanishes.
      const int expect = a == b ? -1 : 0;
      for (std::size_t p = 0; p < n; ++p)
        if (!column_sum_is(ab, ba, p, expect))
          return CheckReport::fail("clifford", a, b, static_cast<long>(p),
                                   a == b ? "g_a^2 != -I" : "g_a g_b + g_b g_a != 0");
    }
  }
  return CheckReport::pass();
}

CheckReport verify_even_integral(std::span<const SignedPerm> doubles) {
  if (doubles.empty())
    return CheckReport::pass();
  const std::size_t n = doubles[0].size();
  for (std::size_t i = 0; i < doubles.size(); ++i)
    if (doubles[i].size() != n)
      return CheckReport::fail("shape", static_cast<int>(i), -1, -1, "family size mismatch");
  std::vector<SignedPerm> transposed;
  transposed.reserve(doubles.size());
  for (const auto& t : doubles)
    transposed.push_back(sp_transpose(t));
  for (std::size_t i = 0; i < doubles.size(); ++i) {
    if (!(transposed[i] == -doubles[i]))
      return CheckReport::fail("even-skew", static_cast<int>(i), -1, -1,
                               "double product action is not skew");
    for (std::size_t j = i; j < doubles.size(); ++j) {
      const auto ij = sp_compose(transposed[i], doubles[j]);
      const auto ji = sp_compose(transposed[j], doubles[i]);
      const int expect = i == j ? 1 : 0;
      for (std::size_t p = 0; p < n; ++p)
        if (!column_sum_is(ij, ji, p, expect))
          return CheckReport::fail("even-norm", static_cast<int>(i), static_cast<int>(j),
                                   static_cast<long>(p), "T_i^T T_j + T_j^T T_i != 2 delta I");
    }
  }
  return CheckReport::pass();
}

} // namespace htype
