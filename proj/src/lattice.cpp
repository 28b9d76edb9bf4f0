#include "htype/lattice.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace htype {

GroupElement LatticeElement::to_group() const {
  GroupElement x;
  x.u.reserve(u2.size());
  for (auto c : u2)
    x.u.push_back(Dyadic::from_parts(c, 1));
  x.v.assign(v.begin(), v.end());
  return x;
}

bool LatticeElement::contains(const GroupElement& x) {
  for (const auto& c : x.u)
    if (c.exponent() > 1)
      return false;
  for (const auto& c : x.v)
    if (!c.is_integer())
      return false;
  return true;
}

LatticeElement LatticeElement::from_group(const GroupElement& x) {
  if (!contains(x))
    throw std::invalid_argument("element does not lie in 1/2 U_Z + V_Z");
  LatticeElement l;
  for (const auto& c : x.u)
    l.u2.push_back((c + c).floor());
  for (const auto& c : x.v)
    l.v.push_back(c.floor());
  return l;
}

namespace {

void check_shape(const GroupElement& x, const StructTensor& A) {
  if (x.u.size() != A.m() || x.v.size() != A.n())
    throw std::invalid_argument("group element does not match the algebra dimensions");
}

void check_shape(const LatticeElement& x, const StructTensor& A) {
  if (x.u2.size() != A.m() || x.v.size() != A.n())
    throw std::invalid_argument("lattice element does not match the algebra dimensions");
}

} // namespace

GroupElement group_mul(const GroupElement& x, const GroupElement& y, const StructTensor& A) {
  check_shape(x, A);
  check_shape(y, A);
  const auto br = bracket<Dyadic>(x.v, y.v, A);
  GroupElement out;
  out.u.reserve(A.m());
  out.v.reserve(A.n());
  for (std::size_t a = 0; a < A.m(); ++a)
    out.u.push_back(x.u[a] + y.u[a] + br[a].half());
  for (std::size_t p = 0; p < A.n(); ++p)
    out.v.push_back(x.v[p] + y.v[p]);
  return out;
}

GroupElement group_inverse(const GroupElement& x) {
  GroupElement out = x;
  for (auto& c : out.u)
    c = -c;
  for (auto& c : out.v)
    c = -c;
  return out;
}

GroupElement group_commutator(const GroupElement& x, const GroupElement& y, const StructTensor& A) {
  const auto xy = group_mul(x, y, A);
  const auto xyx = group_mul(xy, group_inverse(x), A);
  return group_mul(xyx, group_inverse(y), A);
}

LatticeElement lattice_mul(const LatticeElement& x, const LatticeElement& y, const StructTensor& A) {
  check_shape(x, A);
  check_shape(y, A);
  const auto br = bracket<std::int64_t>(x.v, y.v, A);
  LatticeElement out;
  out.u2.resize(A.m());
  out.v.resize(A.n());
  for (std::size_t a = 0; a < A.m(); ++a)
    out.u2[a] = x.u2[a] + y.u2[a] + br[a];
  for (std::size_t p = 0; p < A.n(); ++p)
    out.v[p] = x.v[p] + y.v[p];
  return out;
}

LatticeElement lattice_inverse(const LatticeElement& x) {
  LatticeElement out = x;
  for (auto& c : out.u2)
    c = -c;
  for (auto& c : out.v)
    c = -c;
  return out;
}

std::vector<std::optional<CommutatorWitness>> commutator_basis(const StructTensor& A) {
  std::vector<std::optional<CommutatorWitness>> out(A.m());
  std::vector<std::int64_t> vp(A.n()), vq(A.n());
  for (std::size_t a = 0; a < A.m(); ++a) {
    for (std::size_t p = 0; p < A.n() && !out[a]; ++p) {
      const auto q = A.partner(a, p);
      std::fill(vp.begin(), vp.end(), 0);
      std::fill(vq.begin(), vq.end(), 0);
      vp[p] = 1;
      vq[q] = 1;
      const auto br = bracket<std::int64_t>(vp, vq, A);
      bool single = true;
      for (std::size_t b = 0; b < A.m(); ++b)
        if (b != a && br[b] != 0)
          single = false;
      if (single && (br[a] == 1 || br[a] == -1))
        out[a] = CommutatorWitness{static_cast<std::uint32_t>(p), q, static_cast<int>(br[a])};
    }
  }
  return out;
}

Reduction reduce_to_fundamental(const GroupElement& x, const StructTensor& A) {
  check_shape(x, A);
  LatticeElement shift = LatticeElement::identity(A.m(), A.n());
  std::vector<Dyadic> w(A.n());
  for (std::size_t p = 0; p < A.n(); ++p) {
    shift.v[p] = -x.v[p].floor();
    w[p] = shift.v[p];
  }
  // U-part of X * w before the central correction.
  const auto br = bracket<Dyadic>(x.v, w, A);
  for (std::size_t a = 0; a < A.m(); ++a) {
    const Dyadic u = x.u[a] + br[a].half();
    shift.u2[a] = -(u + u).floor();
  }
  Reduction out{shift, group_mul(x, shift.to_group(), A)};
  return out;
}

std::vector<LatticeElement> generating_set(const StructTensor& A, GeneratingSet mode) {
  std::vector<LatticeElement> gens;
  for (std::size_t p = 0; p < A.n(); ++p)
    for (int s : {1, -1}) {
      auto g = LatticeElement::identity(A.m(), A.n());
      g.v[p] = s;
      gens.push_back(std::move(g));
    }
  const int step = mode == GeneratingSet::Exact ? 1 : 2;
  for (std::size_t a = 0; a < A.m(); ++a)
    for (int s : {1, -1}) {
      auto g = LatticeElement::identity(A.m(), A.n());
      g.u2[a] = s * step;
      gens.push_back(std::move(g));
    }
  return gens;
}

namespace {

// Right multiplication by a fixed generator s on flattened (u2 | v)
// coordinates: u2[a] += s.u2[a] + sum coeff * x.v[p], v += s.v.
struct Step {
  std::vector<std::int64_t> shift;
  struct Term {
    std::uint32_t a;
    std::uint32_t p;
    std::int64_t coeff;
  };
  std::vector<Term> terms;
};

Step make_step(const LatticeElement& s, const StructTensor& A) {
  Step st;
  st.shift.insert(st.shift.end(), s.u2.begin(), s.u2.end());
  st.shift.insert(st.shift.end(), s.v.begin(), s.v.end());
  for (std::size_t a = 0; a < A.m(); ++a)
    for (std::size_t p = 0; p < A.n(); ++p) {
      const auto q = A.partner(a, p);
      if (s.v[q] != 0)
        st.terms.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(p),
                            A.partner_sign(a, p) * s.v[q]});
    }
  return st;
}

struct U128Hash {
  std::size_t operator()(unsigned __int128 x) const {
    auto mix = [](std::uint64_t z) {
      z += 0x9e3779b97f4a7c15ULL;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    };
    return mix(static_cast<std::uint64_t>(x) ^ mix(static_cast<std::uint64_t>(x >> 64)));
  }
};

// Fixed-width offset encoding of coordinates into 128 bits.
struct Packer {
  std::vector<int> bits;
  std::vector<std::int64_t> offset;

  unsigned __int128 operator()(const std::int64_t* x) const {
    unsigned __int128 key = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
      key = (key << bits[i]) | static_cast<unsigned __int128>(x[i] + offset[i]);
    return key;
  }
};

struct BytesKey {
  std::size_t dim;
  std::string operator()(const std::int64_t* x) const {
    return std::string(reinterpret_cast<const char*>(x), dim * sizeof(std::int64_t));
  }
};

template <class Key, class Hash, class Encode>
GrowthResult bfs(const StructTensor& A, const std::vector<Step>& steps, int radius,
                 std::uint64_t cap, Encode encode) {
  const std::size_t m = A.m();
  const std::size_t dim = A.m() + A.n();
  GrowthResult out;
  std::unordered_set<Key, Hash> seen;
  std::vector<std::int64_t> frontier(dim, 0), next, y(dim);
  seen.insert(encode(frontier.data()));
  out.g.push_back(1);
  for (int r = 1; r <= radius; ++r) {
    next.clear();
    for (std::size_t i = 0; i < frontier.size(); i += dim) {
      const std::int64_t* x = frontier.data() + i;
      for (const auto& st : steps) {
        for (std::size_t c = 0; c < dim; ++c)
          y[c] = x[c] + st.shift[c];
        for (const auto& t : st.terms)
          y[t.a] += t.coeff * x[m + t.p];
        if (seen.insert(encode(y.data())).second)
          next.insert(next.end(), y.begin(), y.end());
      }
      if (seen.size() > cap) {
        out.truncated = true;
        return out;
      }
    }
    out.g.push_back(seen.size());
    frontier.swap(next);
  }
  return out;
}

int bits_for(std::int64_t bound) {
  return std::bit_width(static_cast<std::uint64_t>(2 * bound + 1));
}

} // namespace

GrowthResult ball_count(const StructTensor& A, std::span<const LatticeElement> gens, int radius,
                        std::uint64_t element_cap) {
  if (radius < 0)
    throw std::invalid_argument("ball_count: radius must be non-negative");
  std::vector<Step> steps;
  std::int64_t u_max = 0, v_inf = 0, v_one = 0;
  for (const auto& s : gens) {
    check_shape(s, A);
    steps.push_back(make_step(s, A));
    std::int64_t l1 = 0;
    for (auto c : s.v) {
      v_inf = std::max(v_inf, std::abs(c));
      l1 += std::abs(c);
    }
    v_one = std::max(v_one, l1);
    for (auto c : s.u2)
      u_max = std::max(u_max, std::abs(c));
  }
  const std::int64_t R = radius;
  const std::int64_t v_bound = R * v_inf;
  const std::int64_t u_bound = R * u_max + R * R * v_one * v_inf;

  Packer packer;
  int total = 0;
  for (std::size_t a = 0; a < A.m(); ++a) {
    packer.bits.push_back(bits_for(u_bound));
    packer.offset.push_back(u_bound);
  }
  for (std::size_t p = 0; p < A.n(); ++p) {
    packer.bits.push_back(bits_for(v_bound));
    packer.offset.push_back(v_bound);
  }
  for (int b : packer.bits)
    total += b;
  if (total <= 128)
    return bfs<unsigned __int128, U128Hash>(A, steps, radius, element_cap, packer);
  return bfs<std::string, std::hash<std::string>>(A, steps, radius, element_cap,
                                                  BytesKey{A.m() + A.n()});
}

double loglog_slope(std::span<const std::uint64_t> g, int r_min, int r_max) {
  if (r_min < 1 || r_max <= r_min || static_cast<std::size_t>(r_max) >= g.size())
    throw std::invalid_argument("loglog_slope: need 1 <= r_min < r_max < g.size()");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double count = r_max - r_min + 1;
  for (int r = r_min; r <= r_max; ++r) {
    const double x = std::log(static_cast<double>(r));
    const double y = std::log(static_cast<double>(g[r]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

std::uint64_t subgroup_index(const StructTensor& A, std::span<const LatticeElement> gens) {
  const std::size_t m = A.m(), n = A.n();
  if (m + n > 24)
    throw std::length_error("subgroup_index: quotient too large (m + n > 24)");
  for (std::size_t p = 0; p < n; ++p) {
    bool found = false;
    for (const auto& s : gens) {
      check_shape(s, A);
      bool unit = s.v[p] == 1;
      for (std::size_t i = 0; i < n; ++i)
        unit = unit && (i == p || s.v[i] == 0);
      for (auto c : s.u2)
        unit = unit && c % 2 == 0;
      found = found || unit;
    }
    if (!found)
      throw std::invalid_argument("subgroup_index: generating set must contain every v_p");
  }
  // Elements of L / (U_Z + 2 V_Z) as bit masks: bit a = u2_a mod 2,
  // bit m + p = v_p mod 2. The product adds brackets mod 2.
  const auto encode = [&](const LatticeElement& x) {
    std::uint32_t code = 0;
    for (std::size_t a = 0; a < m; ++a)
      code |= static_cast<std::uint32_t>(x.u2[a] & 1) << a;
    for (std::size_t p = 0; p < n; ++p)
      code |= static_cast<std::uint32_t>(x.v[p] & 1) << (m + p);
    return code;
  };
  const auto decode = [&](std::uint32_t code) {
    auto x = LatticeElement::identity(m, n);
    for (std::size_t a = 0; a < m; ++a)
      x.u2[a] = code >> a & 1;
    for (std::size_t p = 0; p < n; ++p)
      x.v[p] = code >> (m + p) & 1;
    return x;
  };
  std::vector<LatticeElement> reps;
  for (const auto& s : gens)
    reps.push_back(decode(encode(s)));

  std::vector<bool> seen(std::size_t{1} << (m + n), false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::uint64_t size = 1;
  while (!stack.empty()) {
    const auto x = decode(stack.back());
    stack.pop_back();
    for (const auto& s : reps) {
      const auto code = encode(lattice_mul(x, s, A));
      if (!seen[code]) {
        seen[code] = true;
        ++size;
        stack.push_back(code);
      }
    }
  }
  return (std::uint64_t{1} << (m + n)) / size;
}

} // namespace htype
