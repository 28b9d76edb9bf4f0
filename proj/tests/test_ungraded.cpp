#include <stdexcept>
#include <doctest.h>

#include "htype/seeds.hpp"
#include "htype/ungraded.hpp"
#include "oracles.hpp"

using htype::SignedPerm;
using htype::Variant;

TEST_CASE("omega on the ungraded quaternion module is -I") {
  const auto gens = htype::left_multiplications(htype::quaternion_table(), 3);
  const auto omega = htype::omega_action(gens);
  // Oracle: i (j (k x)) for each basis quaternion x.
  auto m = oracle::zeros(4);
  for (int p = 0; p < 4; ++p) {
    const auto img = oracle::qmul(oracle::qunit(1),
                                  oracle::qmul(oracle::qunit(2), oracle::qmul(oracle::qunit(3), oracle::qunit(p))));
    for (int r = 0; r < 4; ++r)
      m[r][p] = img[r];
  }
  CHECK(m == oracle::scale(oracle::identity(4), -1));
  CHECK(oracle::dense(omega) == m);
  CHECK(htype::sp_compose(omega, omega) == SignedPerm::identity(4));
}

TEST_CASE("omega on graded modules") {
  for (int k : {3, 7, 11}) {
    CAPTURE(k);
    const auto w = htype::build_graded(k);
    const auto omega = htype::omega_action(w);
    CHECK(htype::sp_compose(omega, omega) == SignedPerm::identity(w.dim()));
    CHECK(htype::sp_transpose(omega) == omega);
    for (const auto& g : w.gens)
      CHECK(htype::sp_compose(omega, g) == htype::sp_compose(g, omega));
  }
  CHECK_THROWS_AS(htype::omega_action(htype::build_graded(4)), std::invalid_argument);
  CHECK_THROWS_AS(htype::omega_action(htype::build_graded(5)), std::invalid_argument);
}

TEST_CASE("split_by_omega") {
  for (int k : {3, 7, 11}) {
    CAPTURE(k);
    const auto w = htype::build_graded(k);
    const auto [plus, minus] = htype::split_by_omega(w);
    CHECK(plus.dim() == w.dim() / 2);
    CHECK(minus.dim() == w.dim() / 2);
    CHECK(htype::verify_clifford(plus.gens, k));
    CHECK(htype::verify_clifford(minus.gens, k));
    const auto id = SignedPerm::identity(plus.dim());
    CHECK(htype::omega_action(plus) == id);
    CHECK(htype::omega_action(minus) == -id);
    for (std::size_t a = 0; a < plus.gens.size(); ++a)
      CHECK(minus.gens[a] == -plus.gens[a]);
  }
  const auto [p3, m3] = htype::split_by_omega(htype::build_graded(3));
  CHECK(p3.dim() == 4);
  CHECK(m3.dim() == 4);
  CHECK_THROWS_AS(htype::split_by_omega(htype::build_graded(5)), std::invalid_argument);
}

TEST_CASE("extract_irreducible dimensions for k = 1..16") {
  const std::size_t base[8] = {2, 4, 4, 8, 8, 8, 8, 16};
  for (int k = 1; k <= 16; ++k) {
    CAPTURE(k);
    const std::size_t expected = base[(k - 1) % 8] * (k > 8 ? 16 : 1);
    for (auto v : htype::admissible_variants(k)) {
      const auto rep = htype::extract_irreducible(k, v);
      CHECK(rep.dim() == expected);
      CHECK(rep.k == k);
      CHECK(rep.gens.size() == static_cast<std::size_t>(k));
      CHECK(htype::verify_clifford(rep.gens, k));
    }
    CHECK(htype::ungraded_dim(k) == expected);
  }
  CHECK(htype::extract_irreducible(5).dim() == 8);
  CHECK(htype::extract_irreducible(4).dim() == 8);
  CHECK(htype::extract_irreducible(11, Variant::Plus).dim() == 64);
}

TEST_CASE("extract_irreducible variants") {
  CHECK(htype::extract_irreducible(3).variant == Variant::Plus);
  CHECK(htype::extract_irreducible(3, Variant::Minus).variant == Variant::Minus);
  // The two classes are told apart by the omega eigenvalue.
  const auto p = htype::extract_irreducible(7, Variant::Plus);
  const auto m = htype::extract_irreducible(7, Variant::Minus);
  CHECK(htype::omega_action(p) == SignedPerm::identity(p.dim()));
  CHECK(htype::omega_action(m) == -SignedPerm::identity(m.dim()));

  CHECK_THROWS_AS(htype::extract_irreducible(4, Variant::Plus), std::invalid_argument);
  CHECK_THROWS_AS(htype::extract_irreducible(5, Variant::Minus), std::invalid_argument);
  CHECK_THROWS_AS(htype::extract_irreducible(0), std::invalid_argument);
  CHECK_THROWS_AS(htype::extract_irreducible(30), std::length_error);
}

TEST_CASE("restriction for k = 5, 6 mod 8 keeps the first generators") {
  for (int k : {5, 6, 13, 14}) {
    CAPTURE(k);
    const auto rep = htype::extract_irreducible(k);
    const int host_k = k + 7 - k % 8;
    const auto host = htype::extract_irreducible(host_k, Variant::Plus);
    REQUIRE(rep.gens.size() == static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a)
      CHECK(rep.gens[a] == host.gens[a]);
    CHECK(htype::verify_clifford(rep.gens, k));
  }
}

TEST_CASE("variant names") {
  CHECK(htype::parse_variant("plus") == Variant::Plus);
  CHECK(htype::to_string(Variant::Minus) == "minus");
  CHECK_THROWS_AS(htype::parse_variant("both"), std::invalid_argument);
}
