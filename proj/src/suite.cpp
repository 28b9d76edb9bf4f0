#include "htype/suite.hpp"

#include <map>
#include <random>
#include <stdexcept>

#include "htype/clifford.hpp"
#include "htype/lattice.hpp"
#include "htype/lie.hpp"

namespace htype {

namespace {

class Collector {
public:
  explicit Collector(int k) : k_(k) {}

  void add(Variant v, std::string module, std::string check, bool ok, std::string detail = {}) {
    out_.push_back({k_, v, std::move(module), std::move(check), ok, std::move(detail)});
  }
  void add(Variant v, std::string module, std::string check, const CheckReport& r) {
    add(v, std::move(module), std::move(check), r.ok, r.ok ? "" : r.to_string());
  }
  std::vector<SuiteCheck> take() { return std::move(out_); }

private:
  int k_;
  std::vector<SuiteCheck> out_;
};

LatticeElement random_lattice(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> coord(-20, 20);
  auto x = LatticeElement::identity(m, n);
  for (auto& c : x.u2)
    c = coord(rng);
  for (auto& c : x.v)
    c = coord(rng);
  return x;
}

GroupElement random_dyadic(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> num(-200, 200);
  std::uniform_int_distribution<int> exp(0, 4);
  GroupElement x;
  for (std::size_t a = 0; a < m; ++a)
    x.u.push_back(Dyadic::from_parts(num(rng), exp(rng)));
  for (std::size_t p = 0; p < n; ++p)
    x.v.push_back(Dyadic::from_parts(num(rng), exp(rng)));
  return x;
}

void lattice_checks(Collector& col, Variant variant, const StructTensor& A,
                    const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  const std::size_t m = A.m(), n = A.n();
  bool closure = true, assoc = true, commut = true;
  std::string why;
  for (int i = 0; i < opts.lattice_samples && closure && assoc && commut; ++i) {
    const auto x = random_lattice(rng, m, n), y = random_lattice(rng, m, n),
               z = random_lattice(rng, m, n);
    const auto xy = group_mul(x.to_group(), y.to_group(), A);
    const auto inv = group_inverse(x.to_group());
    if (!LatticeElement::contains(xy) || !LatticeElement::contains(inv) ||
        LatticeElement::from_group(xy) != lattice_mul(x, y, A) ||
        group_mul(x.to_group(), inv, A) != GroupElement::identity(m, n)) {
      closure = false;
      why = "sample " + std::to_string(i);
    }
    if (lattice_mul(lattice_mul(x, y, A), z, A) != lattice_mul(x, lattice_mul(y, z, A), A)) {
      assoc = false;
      why = "sample " + std::to_string(i);
    }
    const auto comm = group_commutator(x.to_group(), y.to_group(), A);
    GroupElement expect{{}, std::vector<Dyadic>(n)};
    for (auto c : bracket<std::int64_t>(x.v, y.v, A))
      expect.u.emplace_back(c);
    if (comm != expect) {
      commut = false;
      why = "sample " + std::to_string(i);
    }
  }
  col.add(variant, "lattice_growth", "closure", closure, closure ? "" : why);
  col.add(variant, "lattice_growth", "associativity", assoc, assoc ? "" : why);
  col.add(variant, "lattice_growth", "commutator=bracket", commut, commut ? "" : why);

  const auto basis = commutator_basis(A);
  std::string missing;
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (!basis[a])
      missing += (missing.empty() ? "no witness for z_" : ",") + std::to_string(a + 1);
  col.add(variant, "lattice_growth", "commutator-basis", missing.empty(), missing);

  bool bounds = true;
  const Dyadic half = Dyadic::from_parts(1, 1);
  for (int i = 0; i < opts.reduce_samples && bounds; ++i) {
    const auto x = random_dyadic(rng, m, n);
    const auto red = reduce_to_fundamental(x, A);
    for (const auto& c : red.reduced.v)
      bounds = bounds && c >= Dyadic(0) && c <= Dyadic(1);
    for (const auto& c : red.reduced.u)
      bounds = bounds && c >= Dyadic(0) && c <= half;
    bounds = bounds && red.reduced == group_mul(x, red.lattice.to_group(), A);
    if (!bounds)
      why = "sample " + std::to_string(i);
  }
  col.add(variant, "lattice_growth", "fundamental-domain", bounds, bounds ? "" : why);
}

void omega_checks(Collector& col, const GradedRep& w) {
  const auto omega = omega_action(w);
  const auto id = SignedPerm::identity(w.dim());
  col.add(Variant::Default, "ungraded_extract", "omega^2=I", sp_compose(omega, omega) == id);
  col.add(Variant::Default, "ungraded_extract", "omega symmetric", sp_transpose(omega) == omega);
  bool central = true;
  for (const auto& g : w.gens)
    central = central && sp_compose(omega, g) == sp_compose(g, omega);
  col.add(Variant::Default, "ungraded_extract", "omega central", central);

  const auto [plus, minus] = split_by_omega(w);
  const auto half_id = SignedPerm::identity(plus.dim());
  col.add(Variant::Plus, "ungraded_extract", "omega=+I", omega_action(plus) == half_id);
  col.add(Variant::Minus, "ungraded_extract", "omega=-I", omega_action(minus) == -half_id);
  bool negated = true;
  for (std::size_t a = 0; a < plus.gens.size(); ++a)
    negated = negated && minus.gens[a] == -plus.gens[a];
  col.add(Variant::Minus, "ungraded_extract", "V- = -V+", negated);
  col.add(Variant::Default, "htype_lie", "plus/minus isomorphism", check_plus_minus_iso(w.k, w.k));
}

} // namespace

std::vector<SuiteCheck> run_suite(int k, const SuiteOptions& opts) {
  Collector col(k);
  const auto w = build_graded(k, opts.cap);
  col.add(Variant::Default, "module_induction", "graded module", verify_graded(w));
  col.add(Variant::Default, "module_induction", "graded dimension", w.dim() == graded_dim(k),
          "dim " + std::to_string(w.dim()));

  for (auto variant : admissible_variants(k)) {
    const auto rep = extract_irreducible(k, variant, opts.cap);
    col.add(variant, "ungraded_extract", "dimension", rep.dim() == ungraded_dim(k),
            "dim " + std::to_string(rep.dim()));
    col.add(variant, "htype_lie", "h-type identities", verify_htype(rep));
    const auto A = structure_constants(rep);
    col.add(variant, "htype_lie", "structure constants", check_tensor(A));
    lattice_checks(col, variant, A, opts);
  }
  if (omega_splits(k))
    omega_checks(col, w);
  return col.take();
}

std::vector<DimRow> dimension_table(int max_k, int cap) {
  if (max_k < 1 || max_k > cap)
    throw std::length_error("dimension_table: max k must lie in 1.." + std::to_string(cap));
  // Low-dimensional reference values (k -> a_k, b_k); rows 4 and 6 are
  // absent from the reference, which lists row 5 twice.
  static const std::map<int, std::pair<std::size_t, std::size_t>> kReference = {
      {1, {2, 2}}, {2, {2, 4}}, {3, {4, 8}}, {5, {8, 16}}, {7, {8, 16}}, {8, {16, 16}}};

  std::vector<DimRow> rows;
  for (int k = 1; k <= max_k; ++k) {
    DimRow row{k, 0, 0, {}};
    row.graded = build_graded(k, cap).dim();
    row.ungraded = extract_irreducible(k, Variant::Default, cap).dim();
    if (k <= 8) {
      const auto it = kReference.find(k);
      if (it == kReference.end()) {
        row.note = "reference table has no row " + std::to_string(k) +
                   " (row 5 listed twice); values derived";
      } else {
        const auto [a_ref, b_ref] = it->second;
        if (a_ref != row.ungraded)
          row.note = "reference table lists a=" + std::to_string(a_ref) +
                     "; the constructed irreducible module has dimension " +
                     std::to_string(row.ungraded);
        if (b_ref != row.graded)
          row.note += (row.note.empty() ? "" : "; ") + std::string("reference table lists b=") +
                      std::to_string(b_ref);
      }
    } else {
      const auto& prev = rows[k - 9];
      if (row.ungraded != 16 * prev.ungraded || row.graded != 16 * prev.graded)
        row.note = "periodicity a_{k+8}=16a_k or b_{k+8}=16b_k violated";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace htype
