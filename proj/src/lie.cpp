#include "htype/lie.hpp"

#include <string>

#include "htype/clifford.hpp"

namespace htype {

StructTensor StructTensor::from_triples(std::size_t m, std::size_t n,
                                        std::span<const Triple> triples) {
  StructTensor A;
  A.m_ = m;
  A.n_ = n;
  A.targets_.assign(m * n, 0);
  A.signs_.assign(m * n, 0);
  for (const auto& t : triples) {
    if (t.a >= m || t.p >= n || t.q >= n)
      throw std::invalid_argument("structure constant index out of range");
    if (t.sign != 1 && t.sign != -1)
      throw std::invalid_argument("structure constant must be +1 or -1");
    const auto i = t.a * n + t.p;
    if (A.signs_[i] != 0)
      throw std::invalid_argument("several nonzero entries for (a=" + std::to_string(t.a + 1) +
                                  ", p=" + std::to_string(t.p + 1) + ")");
    A.targets_[i] = t.q;
    A.signs_[i] = static_cast<std::int8_t>(t.sign);
  }
  for (std::size_t i = 0; i < A.signs_.size(); ++i)
    if (A.signs_[i] == 0)
      throw std::invalid_argument("no nonzero entry for (a=" + std::to_string(i / n + 1) +
                                  ", p=" + std::to_string(i % n + 1) + ")");
  return A;
}

StructTensor StructTensor::from_generators(std::span<const SignedPerm> gens) {
  StructTensor A;
  A.m_ = gens.size();
  A.n_ = gens.empty() ? 0 : gens[0].size();
  A.targets_.reserve(A.m_ * A.n_);
  A.signs_.reserve(A.m_ * A.n_);
  for (const auto& g : gens) {
    if (g.size() != A.n_)
      throw std::invalid_argument("StructTensor: generator size mismatch");
    A.targets_.insert(A.targets_.end(), g.targets().begin(), g.targets().end());
    A.signs_.insert(A.signs_.end(), g.signs().begin(), g.signs().end());
  }
  return A;
}

std::vector<Triple> StructTensor::triples() const {
  std::vector<Triple> out;
  out.reserve(m_ * n_);
  for (std::size_t a = 0; a < m_; ++a)
    for (std::size_t p = 0; p < n_; ++p)
      out.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(p),
                     partner(a, p), partner_sign(a, p)});
  return out;
}

SignedPerm StructTensor::generator(std::size_t a) const {
  const auto first = static_cast<std::ptrdiff_t>(a * n_);
  const auto last = first + static_cast<std::ptrdiff_t>(n_);
  return SignedPerm({targets_.begin() + first, targets_.begin() + last},
                    {signs_.begin() + first, signs_.begin() + last});
}

StructTensor StructTensor::with_flipped_sign(std::size_t a, std::size_t p) const {
  StructTensor out = *this;
  auto& s = out.signs_.at(a * n_ + p);
  s = static_cast<std::int8_t>(-s);
  return out;
}

StructTensor structure_constants(const UngradedRep& rep) {
  if (auto r = verify_clifford(rep.gens, rep.k); !r)
    throw std::invalid_argument("structure_constants: module fails " + r.to_string());
  return StructTensor::from_generators(rep.gens);
}

CheckReport check_tensor(const StructTensor& A) {
  for (std::size_t a = 0; a < A.m(); ++a)
    for (std::size_t p = 0; p < A.n(); ++p) {
      const auto q = A.partner(a, p);
      const int s = A.partner_sign(a, p);
      if (s != 1 && s != -1)
        return CheckReport::fail("integrality", static_cast<int>(a), -1, static_cast<long>(p),
                                 "value outside {+1,-1}");
      if (q == p)
        return CheckReport::fail("antisymmetry", static_cast<int>(a), -1, static_cast<long>(p),
                                 "diagonal entry A^a_pp != 0");
      if (A.entry(a, q, p) != -s)
        return CheckReport::fail("antisymmetry", static_cast<int>(a), -1, static_cast<long>(p),
                                 "A^a_pq != -A^a_qp with q=" + std::to_string(q + 1));
    }
  return CheckReport::pass();
}

CheckReport verify_htype(const StructTensor& A) {
  if (auto r = check_tensor(A); !r)
    return r;
  std::vector<SignedPerm> gens;
  gens.reserve(A.m());
  for (std::size_t a = 0; a < A.m(); ++a) {
    try {
      gens.push_back(A.generator(a));
    } catch (const std::invalid_argument& e) {
      return CheckReport::fail("signed-permutation", static_cast<int>(a), -1, -1, e.what());
    }
  }
  return verify_clifford(gens, static_cast<int>(A.m()));
}

CheckReport verify_htype(const UngradedRep& rep) {
  if (auto r = verify_clifford(rep.gens, rep.k); !r)
    return r;
  return verify_htype(StructTensor::from_generators(rep.gens));
}

bool check_plus_minus_iso(int k, int cap) {
  if (!omega_splits(k))
    throw std::invalid_argument("check_plus_minus_iso: k=" + std::to_string(k) +
                                " is not 3 mod 4");
  const auto plus = structure_constants(extract_irreducible(k, Variant::Plus, cap));
  const auto minus = extract_irreducible(k, Variant::Minus, cap);
  // J_{-e_a} = -J_{e_a}
  std::vector<SignedPerm> against_negated;
  against_negated.reserve(minus.gens.size());
  for (const auto& g : minus.gens)
    against_negated.push_back(-g);
  return StructTensor::from_generators(against_negated) == plus;
}

} // namespace htype
