#include <stdexcept>
#include <doctest.h>

#include <sstream>

#include "htype/export.hpp"
#include "htype/suite.hpp"

TEST_CASE("k = 1 record") {
  const auto rec = htype::make_record(htype::extract_irreducible(1));
  CHECK(rec.m == 1);
  CHECK(rec.n == 2);
  std::ostringstream csv;
  htype::write_triples_csv(csv, rec);
  CHECK(csv.str() == "a,p,q,sign\n1,1,2,1\n1,2,1,-1\n");
  const auto json = htype::to_json(rec);
  CHECK(json.find("\"format\":1") != std::string::npos);
  CHECK(json.find("\"triples\":[[1,1,2,1],[1,2,1,-1]]") != std::string::npos);
}

TEST_CASE("JSON round trip for every construction up to k = 16") {
  for (int k = 1; k <= 16; ++k)
    for (auto v : htype::admissible_variants(k)) {
      CAPTURE(k);
      const auto rec = htype::make_record(htype::extract_irreducible(k, v));
      const auto back = htype::record_from_json(htype::to_json(rec));
      CHECK(back == rec);
      CHECK(htype::verify_record(back));
    }
}

TEST_CASE("corrupted records") {
  const auto rec = htype::make_record(htype::extract_irreducible(3, htype::Variant::Minus));
  CHECK(rec.n == 4);
  CHECK(rec.variant == htype::Variant::Minus);

  SUBCASE("flipped triple sign") {
    auto bad = rec;
    bad.triples[5].sign = -bad.triples[5].sign;
    const auto r = htype::verify_record(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.check == "record-consistency");
  }
  SUBCASE("flipped sign in both triple and generator") {
    auto bad = rec;
    const auto t = bad.triples[5];
    bad.triples[5].sign = -t.sign;
    bad.generators[t.a] = bad.generators[t.a].with_flipped_sign(t.p);
    const auto r = htype::verify_record(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.check == "antisymmetry");
    CHECK(r.a == static_cast<int>(t.a));
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(htype::record_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(htype::record_from_json("{\"format\":2}"), std::invalid_argument);
    auto text = htype::to_json(rec);
    text.replace(text.find("\"n\":4"), 5, "\"n\":5");
    CHECK_THROWS_AS(htype::record_from_json(text), std::invalid_argument);
  }
}

TEST_CASE("suite passes for k = 1..12") {
  htype::SuiteOptions opts;
  opts.lattice_samples = 50;
  opts.reduce_samples = 50;
  for (int k = 1; k <= 12; ++k)
    for (const auto& c : htype::run_suite(k, opts)) {
      CAPTURE(k);
      CAPTURE(c.check);
      CAPTURE(c.detail);
      CHECK(c.ok);
    }
}

TEST_CASE("dimension table annotations") {
  const auto rows = htype::dimension_table(16);
  REQUIRE(rows.size() == 16);
  CHECK(rows[7].ungraded == 16);
  CHECK(rows[7].graded == 16);
  CHECK(rows[8].graded == 32);
  CHECK(rows[1].ungraded == 4);
  CHECK(rows[1].note.find("a=2") != std::string::npos);
  CHECK_FALSE(rows[3].note.empty());
  CHECK_FALSE(rows[5].note.empty());
  for (int k : {1, 3, 5, 7, 8})
    CHECK(rows[k - 1].note.empty());
  for (int k = 9; k <= 16; ++k)
    CHECK(rows[k - 1].note.empty());
  CHECK_THROWS_AS(htype::dimension_table(30), std::length_error);
}
