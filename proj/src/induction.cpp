#include "htype/induction.hpp"

#include <stdexcept>

#include "htype/seeds.hpp"

namespace htype {

std::vector<std::uint32_t> GradedRep::even_basis() const {
  std::vector<std::uint32_t> out;
  for (std::size_t p = 0; p < parity.size(); ++p)
    if (parity[p] == 0)
      out.push_back(static_cast<std::uint32_t>(p));
  return out;
}

CheckReport verify_graded(const GradedRep& rep) {
  if (auto r = verify_clifford(rep.gens, rep.k); !r)
    return r;
  const std::size_t n = rep.dim();
  std::size_t even = 0;
  for (auto bit : rep.parity)
    even += bit == 0;
  if (2 * even != n)
    return CheckReport::fail("parity-balance", -1, -1, -1,
                             std::to_string(even) + " of " + std::to_string(n) + " vectors even");
  for (int a = 0; a < rep.k; ++a) {
    if (rep.gens[a].size() != n)
      return CheckReport::fail("shape", a, -1, -1, "generator size differs from parity size");
    for (std::size_t p = 0; p < n; ++p)
      if (rep.parity[rep.gens[a].target(p)] == rep.parity[p])
        return CheckReport::fail("parity-flip", a, -1, static_cast<long>(p),
                                 "generator preserves parity");
  }
  return CheckReport::pass();
}

GradedRep induce_graded(std::span<const SignedPerm> doubles, int k, std::size_t m) {
  if (k < 1 || doubles.size() != static_cast<std::size_t>(k - 1))
    throw std::invalid_argument("induce_graded: expected k-1 double products");
  if (!doubles.empty())
    m = doubles[0].size();
  if (m == 0)
    throw std::invalid_argument("induce_graded: empty module");
  if (auto r = verify_even_integral(doubles); !r)
    throw std::invalid_argument("induce_graded: not an integral C_k^0-module: " + r.to_string());

  const auto mm = static_cast<std::uint32_t>(m);
  GradedRep rep;
  rep.k = k;
  rep.parity.assign(2 * m, 0);
  std::fill(rep.parity.begin() + static_cast<std::ptrdiff_t>(m), rep.parity.end(), 1);

  // e_i = e_k (e_i e_k): e_i x_p = T_i-image in y, e_i y_p = T_i-image in x.
  for (const auto& t : doubles) {
    std::vector<std::uint32_t> tg(2 * m);
    std::vector<std::int8_t> sg(2 * m);
    for (std::uint32_t p = 0; p < mm; ++p) {
      tg[p] = mm + t.target(p);
      sg[p] = static_cast<std::int8_t>(t.sign(p));
      tg[mm + p] = t.target(p);
      sg[mm + p] = static_cast<std::int8_t>(t.sign(p));
    }
    rep.gens.emplace_back(std::move(tg), std::move(sg));
  }
  // e_k: x_p -> y_p, y_p -> -x_p.
  std::vector<std::uint32_t> tk(2 * m);
  std::vector<std::int8_t> sk(2 * m);
  for (std::uint32_t p = 0; p < mm; ++p) {
    tk[p] = mm + p;
    sk[p] = 1;
    tk[mm + p] = p;
    sk[mm + p] = -1;
  }
  rep.gens.emplace_back(std::move(tk), std::move(sk));
  rep.provenance = "induced(k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")";
  return rep;
}

GradedRep graded_tensor(const GradedRep& a, const GradedRep& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  const std::size_t n = na * nb;
  GradedRep rep;
  rep.k = a.k + b.k;
  rep.parity.resize(n);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      rep.parity[x * nb + y] = static_cast<std::uint8_t>(a.parity[x] ^ b.parity[y]);

  rep.gens.reserve(rep.k);
  for (const auto& g : a.gens) {
    std::vector<std::uint32_t> t(n);
    std::vector<std::int8_t> s(n);
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t y = 0; y < nb; ++y) {
        t[x * nb + y] = static_cast<std::uint32_t>(g.target(x) * nb + y);
        s[x * nb + y] = static_cast<std::int8_t>(g.sign(x));
      }
    rep.gens.emplace_back(std::move(t), std::move(s));
  }
  for (const auto& f : b.gens) {
    std::vector<std::uint32_t> t(n);
    std::vector<std::int8_t> s(n);
    for (std::size_t x = 0; x < na; ++x) {
      const int koszul = a.parity[x] ? -1 : 1;
      for (std::size_t y = 0; y < nb; ++y) {
        t[x * nb + y] = static_cast<std::uint32_t>(x * nb + f.target(y));
        s[x * nb + y] = static_cast<std::int8_t>(koszul * f.sign(y));
      }
    }
    rep.gens.emplace_back(std::move(t), std::move(s));
  }
  rep.provenance = "tensor[" + a.provenance + "] (x) [" + b.provenance + "]";
  return rep;
}

GradedRep build_graded(int k, int cap) {
  if (k < 1)
    throw std::invalid_argument("build_graded: k must be positive, got " + std::to_string(k));
  if (k > cap)
    throw std::length_error("build_graded: k=" + std::to_string(k) + " exceeds cap " +
                            std::to_string(cap));
  if (k <= 8)
    return seed_graded(k);
  return graded_tensor(build_graded(k - 8, cap), seed_graded(8));
}

std::size_t graded_dim(int k) {
  if (k < 1)
    throw std::invalid_argument("graded_dim: k must be positive");
  static constexpr std::size_t kBase[8] = {2, 4, 8, 8, 16, 16, 16, 16};
  std::size_t dim = kBase[(k - 1) % 8];
  for (int periods = (k - 1) / 8; periods > 0; --periods)
    dim *= 16;
  return dim;
}

} // namespace htype
