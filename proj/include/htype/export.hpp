#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "htype/lie.hpp"
#include "htype/signed_perm.hpp"
#include "htype/ungraded.hpp"

namespace htype {

inline constexpr int kFormatVersion = 1;

/// Serialized form of a constructed integral module and its structure
/// constants. On disk all indices are 1-based and signs are +-1 integers;
/// in memory they are 0-based.
struct ExportRecord {
  int k = 0;
  Variant variant = Variant::Default;
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<SignedPerm> generators;
  std::vector<Triple> triples;
  std::string provenance;
  int format = kFormatVersion;

  friend bool operator==(const ExportRecord&, const ExportRecord&) = default;
};

ExportRecord make_record(const UngradedRep& rep);

std::string to_json(const ExportRecord& rec, int indent = -1);
/// Throws std::invalid_argument on malformed JSON, an unknown format version
/// or shape errors. Mathematical invariants are left to verify_record().
ExportRecord record_from_json(const std::string& text);

/// Triples as CSV with header "a,p,q,sign", 1-based.
void write_triples_csv(std::ostream& os, const ExportRecord& rec);

/// Generators agree with the triples, tensor invariants hold, and the
/// Clifford relations hold.
CheckReport verify_record(const ExportRecord& rec);

} // namespace htype
