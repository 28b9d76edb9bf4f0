#include "htype/export.hpp"

#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace htype {

using nlohmann::json;

ExportRecord make_record(const UngradedRep& rep) {
  ExportRecord rec;
  rec.k = rep.k;
  rec.variant = rep.variant;
  rec.m = rep.gens.size();
  rec.n = rep.dim();
  rec.generators = rep.gens;
  rec.triples = structure_constants(rep).triples();
  rec.provenance = rep.provenance;
  return rec;
}

std::string to_json(const ExportRecord& rec, int indent) {
  json j;
  j["format"] = rec.format;
  j["k"] = rec.k;
  j["variant"] = std::string(to_string(rec.variant));
  j["m"] = rec.m;
  j["n"] = rec.n;
  json gens = json::array();
  for (const auto& g : rec.generators) {
    json targets = json::array(), signs = json::array();
    for (std::size_t p = 0; p < g.size(); ++p) {
      targets.push_back(g.target(p) + 1);
      signs.push_back(g.sign(p));
    }
    gens.push_back({{"targets", std::move(targets)}, {"signs", std::move(signs)}});
  }
  j["generators"] = std::move(gens);
  json triples = json::array();
  for (const auto& t : rec.triples)
    triples.push_back({t.a + 1, t.p + 1, t.q + 1, t.sign});
  j["triples"] = std::move(triples);
  j["provenance"] = rec.provenance;
  return j.dump(indent);
}

ExportRecord record_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  try {
    ExportRecord rec;
    rec.format = j.at("format").get<int>();
    if (rec.format != kFormatVersion)
      throw std::invalid_argument("unsupported format version " + std::to_string(rec.format));
    rec.k = j.at("k").get<int>();
    rec.variant = parse_variant(j.at("variant").get<std::string>());
    rec.m = j.at("m").get<std::size_t>();
    rec.n = j.at("n").get<std::size_t>();
    rec.provenance = j.value("provenance", "");
    if (rec.m != static_cast<std::size_t>(rec.k))
      throw std::invalid_argument("m must equal k");
    const auto& gens = j.at("generators");
    if (gens.size() != rec.m)
      throw std::invalid_argument("expected m generators");
    for (const auto& g : gens) {
      const auto targets = g.at("targets").get<std::vector<long long>>();
      const auto signs = g.at("signs").get<std::vector<int>>();
      if (targets.size() != rec.n || signs.size() != rec.n)
        throw std::invalid_argument("generator length differs from n");
      std::vector<std::uint32_t> t;
      std::vector<std::int8_t> s;
      for (std::size_t p = 0; p < rec.n; ++p) {
        if (targets[p] < 1 || static_cast<std::size_t>(targets[p]) > rec.n)
          throw std::invalid_argument("generator target out of range");
        t.push_back(static_cast<std::uint32_t>(targets[p] - 1));
        s.push_back(static_cast<std::int8_t>(signs[p]));
      }
      rec.generators.emplace_back(std::move(t), std::move(s));
    }
    for (const auto& row : j.at("triples")) {
      const auto v = row.get<std::vector<long long>>();
      if (v.size() != 4)
        throw std::invalid_argument("triple must have four entries");
      if (v[0] < 1 || v[1] < 1 || v[2] < 1 || static_cast<std::size_t>(v[0]) > rec.m ||
          static_cast<std::size_t>(v[1]) > rec.n || static_cast<std::size_t>(v[2]) > rec.n)
        throw std::invalid_argument("triple index out of range");
      rec.triples.push_back({static_cast<std::uint32_t>(v[0] - 1),
                             static_cast<std::uint32_t>(v[1] - 1),
                             static_cast<std::uint32_t>(v[2] - 1), static_cast<int>(v[3])});
    }
    return rec;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad record: ") + e.what());
  }
}

void write_triples_csv(std::ostream& os, const ExportRecord& rec) {
  os << "a,p,q,sign\n";
  for (const auto& t : rec.triples)
    os << t.a + 1 << ',' << t.p + 1 << ',' << t.q + 1 << ',' << t.sign << '\n';
}

CheckReport verify_record(const ExportRecord& rec) {
  StructTensor A;
  try {
    A = StructTensor::from_triples(rec.m, rec.n, rec.triples);
  } catch (const std::invalid_argument& e) {
    return CheckReport::fail("triples", -1, -1, -1, e.what());
  }
  for (std::size_t a = 0; a < rec.generators.size(); ++a) {
    const auto& g = rec.generators[a];
    for (std::size_t p = 0; p < rec.n; ++p)
      if (A.partner(a, p) != g.target(p) || A.partner_sign(a, p) != g.sign(p))
        return CheckReport::fail("record-consistency", static_cast<int>(a), -1,
                                 static_cast<long>(p), "generator disagrees with triples");
  }
  if (auto r = verify_htype(A); !r)
    return r;
  return verify_clifford(rec.generators, rec.k);
}

} // namespace htype
