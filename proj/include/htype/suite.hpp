#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "htype/induction.hpp"
#include "htype/ungraded.hpp"

namespace htype {

struct SuiteOptions {
  int cap = kDefaultCap;
  /// Random lattice pairs per module for closure/associativity/commutator.
  int lattice_samples = 1000;
  /// Random dyadic points per module for the fundamental-domain check.
  int reduce_samples = 1000;
  std::uint64_t seed = 0x5eed;
};

struct SuiteCheck {
  int k = 0;
  Variant variant = Variant::Default;
  std::string module;
  std::string check;
  bool ok = true;
  std::string detail;
};

/// Full invariant suite for one k: graded construction, each admissible
/// ungraded variant, omega and plus/minus checks where k = 3 mod 4, lattice
/// closure, commutator basis and fundamental-domain reduction.
std::vector<SuiteCheck> run_suite(int k, const SuiteOptions& opts = {});

/// One row of the dimension table.
struct DimRow {
  int k;
  std::size_t ungraded;
  std::size_t graded;
  std::string note;
};

/// Constructs the modules for k = 1..max_k and reports their dimensions,
/// annotated where the low-dimensional reference table is missing a row or
/// disagrees with the construction.
std::vector<DimRow> dimension_table(int max_k, int cap = kDefaultCap);

} // namespace htype
