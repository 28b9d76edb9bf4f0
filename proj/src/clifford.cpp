#include "htype/clifford.hpp"

#include <stdexcept>

namespace htype {

namespace {

std::uint64_t full_mask(int k) {
  return k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

} // namespace

Blade::Blade(int k, std::uint64_t mask, int sign) : k_(k), mask_(mask), sign_(sign) {
  if (k < 1 || k > kMaxGenerators)
    throw std::invalid_argument("Blade: generator count out of range: " + std::to_string(k));
  if ((mask & ~full_mask(k)) != 0)
    throw std::invalid_argument("Blade: mask uses generators beyond k");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("Blade: sign must be +1 or -1");
}

Blade Blade::generator(int k, int i) {
  if (i < 1 || i > k)
    throw std::invalid_argument("Blade::generator: index out of range");
  return Blade(k, std::uint64_t{1} << (i - 1), 1);
}

std::string Blade::to_string() const {
  std::string out = sign_ < 0 ? "-" : "+";
  if (mask_ == 0)
    return out + "1";
  for (int i = 0; i < k_; ++i)
    if (mask_ >> i & 1)
      out += "e" + std::to_string(i + 1);
  return out;
}

Blade blade_mul(const Blade& a, const Blade& b) {
  if (a.k() != b.k())
    throw std::invalid_argument("blade_mul: mismatched generator counts");
  // Moving each generator of b leftwards past the generators of a with a
  // larger index costs one sign flip per transposition.
  int swaps = 0;
  std::uint64_t rest = b.mask();
  while (rest != 0) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    const std::uint64_t above = j == 63 ? 0 : a.mask() >> (j + 1);
    swaps += std::popcount(above);
  }
  // e_i e_i = -1 for each shared generator.
  swaps += std::popcount(a.mask() & b.mask());
  const int sign = a.sign() * b.sign() * ((swaps & 1) ? -1 : 1);
  return Blade(a.k(), a.mask() ^ b.mask(), sign);
}

int blade_parity(const Blade& a) { return a.grade() & 1; }

Blade volume_element(int k) { return Blade(k, full_mask(k), 1); }

} // namespace htype
