// Acceptance suite: one PASS/FAIL line per criterion. Budgets are wall-clock
// seconds on a single core, Release build.

#include <stdexcept>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "htype/clifford.hpp"
#include "htype/export.hpp"
#include "htype/lattice.hpp"
#include "htype/lie.hpp"
#include "htype/seeds.hpp"
#include "htype/suite.hpp"
#include "htype/ungraded.hpp"
#include "oracles.hpp"

namespace {

using htype::Dyadic;
using htype::GroupElement;
using htype::LatticeElement;
using htype::Variant;

constexpr int kMaxK = 16;

struct Budget {
  int criterion;
  const char* title;
  double seconds;
};

constexpr Budget kBudgets[] = {
    {1, "structure constants in {0,+1,-1}, antisymmetric, k<=16", 10.0},
    {2, "Clifford relations and skewness, k<=16", 10.0},
    {3, "dimension table and period-8 growth, k<=16", 30.0},
    {4, "volume element for k=3,7,11", 5.0},
    {5, "plus/minus algebra isomorphism for k=3,7,11", 5.0},
    {6, "lattice closure, commutators, fundamental domain", 60.0},
    {7, "ball growth exponents for k=1,2", 120.0},
    {8, "dense oracle agrees with signed permutations, k<=4", 5.0},
};

// Criteria 7 windows.
constexpr int kR1 = 15, kFit1Lo = 8, kFit1Hi = 15;
constexpr double kSlope1Lo = 3.5, kSlope1Hi = 4.5;
constexpr int kR2 = 6, kFit2Lo = 4, kFit2Hi = 6;
constexpr double kSlope2Min = 6.0;

// Criterion 6 sample counts.
constexpr int kLatticePairs = 100000;
constexpr int kReduceInputs = 10000;
constexpr int kLatticeMaxK = 4;
constexpr int kCommutatorMaxK = 12;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(std::string why) {
    if (ok)
      detail = std::move(why);
    ok = false;
  }
};

std::vector<htype::UngradedRep> all_reps(int max_k) {
  std::vector<htype::UngradedRep> out;
  for (int k = 1; k <= max_k; ++k)
    for (auto v : htype::admissible_variants(k))
      out.push_back(htype::extract_irreducible(k, v));
  return out;
}

std::string label(const htype::UngradedRep& r) {
  return "k=" + std::to_string(r.k) + " " + std::string(htype::to_string(r.variant));
}

Outcome criterion1() {
  Outcome o;
  for (const auto& rep : all_reps(kMaxK)) {
    const auto rec = htype::make_record(rep);
    // Sparse table read from the emitted triples only.
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, int> A;
    std::vector<std::vector<int>> per_row(rec.m, std::vector<int>(rec.n, 0));
    for (const auto& t : rec.triples) {
      if (t.sign != 1 && t.sign != -1)
        o.fail(label(rep) + ": value outside {+1,-1}");
      if (!A.emplace(std::tuple{t.a, t.p, t.q}, t.sign).second)
        o.fail(label(rep) + ": duplicate slot");
      ++per_row[t.a][t.p];
    }
    for (const auto& row : per_row)
      for (int c : row)
        if (c != 1)
          o.fail(label(rep) + ": (a,p) without exactly one nonzero q");
    for (const auto& [key, s] : A) {
      const auto [a, p, q] = key;
      const auto it = A.find({a, q, p});
      if (p == q || it == A.end() || it->second != -s)
        o.fail(label(rep) + ": antisymmetry");
    }
    if (!htype::check_tensor(htype::structure_constants(rep)))
      o.fail(label(rep) + ": library tensor check");
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const auto& rep : all_reps(kMaxK)) {
    if (auto r = htype::verify_clifford(rep.gens, rep.k); !r)
      o.fail(label(rep) + ": " + r.to_string());
    for (std::size_t i = 0; i < rep.gens.size(); ++i)
      if (auto r = htype::verify_skew(rep.gens[i], static_cast<int>(i)); !r)
        o.fail(label(rep) + ": " + r.to_string());
    if (auto r = htype::verify_htype(rep); !r)
      o.fail(label(rep) + ": " + r.to_string());
    if (rep.k >= 2)
      if (auto r = htype::verify_even_integral(htype::restrict_to_even(rep.gens)); !r)
        o.fail(label(rep) + " restricted to C_k^0: " + r.to_string());
  }
  for (int k = 1; k <= kMaxK; ++k) {
    const auto w = htype::build_graded(k);
    if (auto r = htype::verify_graded(w); !r)
      o.fail("graded k=" + std::to_string(k) + ": " + r.to_string());
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  const std::size_t a[8] = {2, 4, 4, 8, 8, 8, 8, 16};
  const std::size_t b[8] = {2, 4, 8, 8, 16, 16, 16, 16};
  const auto rows = htype::dimension_table(kMaxK);
  for (int k = 1; k <= kMaxK; ++k) {
    const auto& row = rows[k - 1];
    const std::size_t scale = k > 8 ? 16 : 1;
    const auto ea = a[(k - 1) % 8] * scale, eb = b[(k - 1) % 8] * scale;
    for (auto v : htype::admissible_variants(k))
      if (htype::extract_irreducible(k, v).dim() != ea)
        o.fail("a_" + std::to_string(k) + " constructed");
    if (htype::build_graded(k).dim() != eb)
      o.fail("b_" + std::to_string(k) + " constructed");
    if (row.ungraded != ea || row.graded != eb)
      o.fail("table row " + std::to_string(k));
    if (k > 8 && (row.ungraded != 16 * rows[k - 9].ungraded || row.graded != 16 * rows[k - 9].graded))
      o.fail("periodicity at k=" + std::to_string(k));
    const bool discrepant = k == 2 || k == 4 || k == 6;
    if (discrepant == row.note.empty())
      o.fail("annotation at k=" + std::to_string(k));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int k : {3, 7, 11}) {
    const auto w = htype::build_graded(k);
    const auto om = htype::omega_action(w);
    const auto id = htype::SignedPerm::identity(w.dim());
    const std::string K = "k=" + std::to_string(k);
    if (htype::sp_compose(om, om) != id)
      o.fail(K + ": omega^2");
    if (htype::sp_transpose(om) != om)
      o.fail(K + ": omega symmetric");
    for (const auto& g : w.gens)
      if (htype::sp_compose(om, g) != htype::sp_compose(g, om))
        o.fail(K + ": omega central");
    const auto plus = htype::extract_irreducible(k, Variant::Plus);
    const auto minus = htype::extract_irreducible(k, Variant::Minus);
    const auto idv = htype::SignedPerm::identity(plus.dim());
    if (htype::omega_action(plus) != idv)
      o.fail(K + ": omega on V+");
    if (htype::omega_action(minus) != -idv)
      o.fail(K + ": omega on V-");
    for (std::size_t i = 0; i < plus.gens.size(); ++i)
      if (minus.gens[i] != -plus.gens[i])
        o.fail(K + ": V- not the negation of V+");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int k : {3, 7, 11})
    if (!htype::check_plus_minus_iso(k))
      o.fail("k=" + std::to_string(k));
  return o;
}

GroupElement random_dyadic(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<int> exp(0, 6);
  GroupElement x;
  for (std::size_t a = 0; a < m; ++a)
    x.u.push_back(Dyadic::from_parts(num(rng), exp(rng)));
  for (std::size_t p = 0; p < n; ++p)
    x.v.push_back(Dyadic::from_parts(num(rng), exp(rng)));
  return x;
}

LatticeElement random_lattice(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> c(-50, 50);
  auto x = LatticeElement::identity(m, n);
  for (auto& u : x.u2)
    u = c(rng);
  for (auto& v : x.v)
    v = c(rng);
  return x;
}

// <J_a v, w> from dense generator matrices.
std::vector<long> dense_bracket(const std::vector<oracle::Matrix>& J, const std::vector<long>& v,
                                const std::vector<long>& w) {
  std::vector<long> out;
  for (const auto& M : J) {
    long acc = 0;
    for (std::size_t q = 0; q < M.size(); ++q)
      for (std::size_t p = 0; p < M.size(); ++p)
        acc += w[q] * M[q][p] * v[p];
    out.push_back(acc);
  }
  return out;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(0xacce);
  const Dyadic zero(0), one(1), half = Dyadic::from_parts(1, 1);
  for (int k = 1; k <= kLatticeMaxK; ++k)
    for (auto variant : htype::admissible_variants(k)) {
      const auto rep = htype::extract_irreducible(k, variant);
      const auto A = htype::structure_constants(rep);
      const auto m = A.m(), n = A.n();
      std::vector<oracle::Matrix> J;
      for (const auto& g : rep.gens)
        J.push_back(oracle::dense(g));
      const std::string K = label(rep);
      for (int t = 0; t < kLatticePairs; ++t) {
        const auto x = random_lattice(rng, m, n), y = random_lattice(rng, m, n);
        const auto prod = htype::group_mul(x.to_group(), y.to_group(), A);
        if (!LatticeElement::contains(prod) || htype::lattice_mul(x, y, A).to_group() != prod) {
          o.fail(K + ": product closure");
          break;
        }
        const auto inv = htype::group_inverse(x.to_group());
        if (!LatticeElement::contains(inv) ||
            htype::group_mul(x.to_group(), inv, A) != GroupElement::identity(m, n)) {
          o.fail(K + ": inverse closure");
          break;
        }
        // [exp v, exp w] = exp [v, w] for two-step groups.
        GroupElement gx = GroupElement::identity(m, n), gy = gx;
        std::vector<long> vx(n), vy(n);
        for (std::size_t p = 0; p < n; ++p) {
          vx[p] = x.v[p];
          vy[p] = y.v[p];
          gx.v[p] = Dyadic(x.v[p]);
          gy.v[p] = Dyadic(y.v[p]);
        }
        const auto br = dense_bracket(J, vx, vy);
        auto expect = GroupElement::identity(m, n);
        for (std::size_t a = 0; a < m; ++a)
          expect.u[a] = Dyadic(br[a]);
        if (htype::group_commutator(gx, gy, A) != expect) {
          o.fail(K + ": commutator differs from bracket");
          break;
        }
      }
      for (int t = 0; t < kReduceInputs; ++t) {
        const auto x = random_dyadic(rng, m, n);
        const auto red = htype::reduce_to_fundamental(x, A);
        bool in = true;
        for (const auto& c : red.reduced.v)
          in = in && c >= zero && c <= one;
        for (const auto& c : red.reduced.u)
          in = in && c >= zero && c <= half;
        if (!in || red.reduced != htype::group_mul(x, red.lattice.to_group(), A)) {
          o.fail(K + ": fundamental domain");
          break;
        }
      }
    }
  for (int k = 1; k <= kCommutatorMaxK; ++k)
    for (auto variant : htype::admissible_variants(k)) {
      const auto rep = htype::extract_irreducible(k, variant);
      const auto A = htype::structure_constants(rep);
      const auto basis = htype::commutator_basis(A);
      for (std::size_t a = 0; a < A.m(); ++a) {
        if (!basis[a]) {
          o.fail(label(rep) + ": no witness for e" + std::to_string(a + 1));
          continue;
        }
        const auto [p, q, s] = *basis[a];
        auto gp = GroupElement::identity(A.m(), A.n()), gq = gp;
        gp.v[p] = one;
        gq.v[q] = one;
        auto expect = GroupElement::identity(A.m(), A.n());
        expect.u[a] = Dyadic(s);
        if (htype::group_commutator(gp, gq, A) != expect)
          o.fail(label(rep) + ": witness for e" + std::to_string(a + 1));
      }
    }
  return o;
}

Outcome criterion7() {
  Outcome o;
  char buf[160];
  {
    const auto A = htype::structure_constants(htype::extract_irreducible(1));
    const auto gens = htype::generating_set(A, htype::GeneratingSet::Exact);
    const auto res = htype::ball_count(A, gens, kR1);
    if (res.truncated)
      o.fail("k=1 truncated");
    const double s = htype::loglog_slope(res.g, kFit1Lo, kFit1Hi);
    std::snprintf(buf, sizeof buf, "k=1 d=%d g(%d)=%llu slope[%d,%d]=%.4f", htype::growth_degree(1, 2), kR1,
                  static_cast<unsigned long long>(res.g.back()), kFit1Lo, kFit1Hi, s);
    o.detail = buf;
    if (!(s >= kSlope1Lo && s <= kSlope1Hi))
      o.fail(buf);
  }
  {
    const auto A = htype::structure_constants(htype::extract_irreducible(2));
    const auto gens = htype::generating_set(A, htype::GeneratingSet::Exact);
    const auto res = htype::ball_count(A, gens, kR2);
    if (res.truncated)
      o.fail("k=2 truncated");
    for (std::size_t r = 1; r < res.g.size(); ++r)
      if (res.g[r] < res.g[r - 1])
        o.fail("k=2 g decreasing");
    const double s = htype::loglog_slope(res.g, kFit2Lo, kFit2Hi);
    std::snprintf(buf, sizeof buf, "; k=2 d=%d g(%d)=%llu slope[%d,%d]=%.4f", htype::growth_degree(2, 4), kR2,
                  static_cast<unsigned long long>(res.g.back()), kFit2Lo, kFit2Hi, s);
    if (o.ok)
      o.detail += buf;
    if (!(s > kSlope2Min))
      o.fail(std::string(buf + 2));
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const auto& rep : all_reps(4)) {
    const auto rec = htype::record_from_json(htype::to_json(htype::make_record(rep)));
    // Rebuild J_a from the triples: column p of J_a is sign * e_q.
    std::vector<oracle::Matrix> J(rec.m, oracle::zeros(rec.n));
    for (const auto& t : rec.triples)
      J[t.a][t.q][t.p] += t.sign;
    if (!oracle::dense_clifford(J))
      o.fail(label(rep) + ": anticommutators");
    for (std::size_t a = 0; a < rec.m; ++a) {
      if (oracle::transpose(J[a]) != oracle::scale(J[a], -1))
        o.fail(label(rep) + ": skewness");
      if (J[a] != oracle::dense(rep.gens[a]))
        o.fail(label(rep) + ": J_" + std::to_string(a + 1) + " differs from pipeline");
    }
  }
  return o;
}

} // namespace

int main() {
  const std::function<Outcome()> runs[] = {criterion1, criterion2, criterion3, criterion4,
                                            criterion5, criterion6, criterion7, criterion8};
  int failed = 0;
  for (std::size_t i = 0; i < std::size(runs); ++i) {
    const auto& b = kBudgets[i];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = runs[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > b.seconds)
      o.fail("over time budget");
    std::printf("%s %d %s (%.2fs / %.0fs)%s%s\n", o.ok ? "PASS" : "FAIL", b.criterion, b.title, secs,
                b.seconds, o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
