// Command-line front end: construct, verify, dims, growth, reduce.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "htype/clifford.hpp"
#include "htype/export.hpp"
#include "htype/lattice.hpp"
#include "htype/lie.hpp"
#include "htype/suite.hpp"
#include "htype/ungraded.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_k_range(const std::string& text) {
  try {
    std::size_t used = 0;
    if (auto dots = text.find(".."); dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots), &used);
      if (used != dots)
        throw UsageError("bad range");
      const auto hi_text = text.substr(dots + 2);
      const int hi = std::stoi(hi_text, &used);
      if (used != hi_text.size())
        throw UsageError("bad range");
      return {lo, hi};
    }
    const int k = std::stoi(text, &used);
    if (used != text.size())
      throw UsageError("bad k");
    return {k, k};
  } catch (const std::logic_error&) {
    throw UsageError("--k expects an integer or a range like 1..16, got '" + text + "'");
  }
}

void check_k(int k, int cap) {
  if (k < 1)
    throw UsageError("k must be a positive integer, got " + std::to_string(k));
  if (k > cap)
    throw std::length_error("k=" + std::to_string(k) + " exceeds cap " + std::to_string(cap));
}

htype::Variant variant_for(int k, const std::string& text) {
  if (text.empty())
    return htype::Variant::Default;
  const auto v = htype::parse_variant(text);
  if (v != htype::Variant::Default && !htype::omega_splits(k))
    throw UsageError("--variant " + text + " is only valid for k = 3 mod 4");
  return v;
}

std::vector<htype::Dyadic> parse_coords(const std::string& text, std::size_t expect,
                                        const char* what) {
  std::vector<htype::Dyadic> out;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
      out.push_back(htype::Dyadic::parse(item));
  }
  if (out.empty())
    out.assign(expect, htype::Dyadic(0));
  if (out.size() != expect)
    throw UsageError(std::string(what) + " needs " + std::to_string(expect) + " coordinates");
  return out;
}

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file)
        throw UsageError("cannot open " + path);
      os = &file;
    }
  }
};

int cmd_construct(const std::string& k_text, const std::string& variant, const std::string& format,
                  const std::string& out_path, int cap) {
  const auto [k, k_hi] = parse_k_range(k_text);
  if (k != k_hi)
    throw UsageError("construct takes a single k");
  check_k(k, cap);
  const auto rec = htype::make_record(htype::extract_irreducible(k, variant_for(k, variant), cap));
  Output out(out_path);
  if (format == "csv")
    htype::write_triples_csv(*out.os, rec);
  else
    *out.os << htype::to_json(rec, 1) << '\n';
  return kExitOk;
}

int verify_file(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  htype::CheckReport report;
  try {
    report = htype::verify_record(htype::record_from_json(buf.str()));
  } catch (const std::invalid_argument& e) {
    report = htype::CheckReport::fail("record", -1, -1, -1, e.what());
  }
  if (format == "json") {
    nlohmann::json j{{"input", path}, {"ok", report.ok}, {"check", report.check}};
    if (!report.ok) {
      j["a"] = report.a + 1;
      j["b"] = report.b + 1;
      j["index"] = report.index + 1;
      j["detail"] = report.to_string();
    }
    std::cout << j.dump(1) << '\n';
  } else {
    std::cout << (report.ok ? "PASS " : "FAIL ") << path << ": " << report.to_string() << '\n';
  }
  return report.ok ? kExitOk : kExitFailed;
}

int cmd_verify(const std::string& k_text, const std::string& input, const std::string& format,
               int cap, int samples) {
  if (!input.empty())
    return verify_file(input, format);
  if (k_text.empty())
    throw UsageError("verify needs --k or --input");
  const auto [lo, hi] = parse_k_range(k_text);
  if (lo > hi)
    throw UsageError("empty k range");
  check_k(lo, cap);
  check_k(hi, cap);
  htype::SuiteOptions opts;
  opts.cap = cap;
  opts.lattice_samples = samples;
  opts.reduce_samples = samples;
  bool all_ok = true;
  nlohmann::json report = nlohmann::json::array();
  for (int k = lo; k <= hi; ++k) {
    for (const auto& c : htype::run_suite(k, opts)) {
      all_ok = all_ok && c.ok;
      if (format == "json") {
        report.push_back({{"k", c.k},
                          {"variant", std::string(htype::to_string(c.variant))},
                          {"module", c.module},
                          {"check", c.check},
                          {"ok", c.ok},
                          {"detail", c.detail}});
      } else {
        std::cout << (c.ok ? "PASS" : "FAIL") << " k=" << c.k << ' '
                  << htype::to_string(c.variant) << ' ' << c.module << ": " << c.check;
        if (!c.detail.empty())
          std::cout << " (" << c.detail << ')';
        std::cout << '\n';
      }
    }
  }
  if (format == "json")
    std::cout << nlohmann::json{{"ok", all_ok}, {"checks", report}}.dump(1) << '\n';
  else
    std::cout << (all_ok ? "all checks passed" : "verification FAILED") << '\n';
  return all_ok ? kExitOk : kExitFailed;
}

int cmd_dims(int max_k, int cap) {
  check_k(max_k, cap);
  std::cout << "k,a_k,b_k,note\n";
  for (const auto& row : htype::dimension_table(max_k, cap))
    std::cout << row.k << ',' << row.ungraded << ',' << row.graded << ",\"" << row.note << "\"\n";
  return kExitOk;
}

int cmd_growth(int k, const std::string& variant, int radius, const std::string& gen_set,
               std::uint64_t element_cap, int fit_from, int cap) {
  check_k(k, cap);
  if (radius < 0)
    throw UsageError("--radius must be non-negative");
  const auto A = htype::structure_constants(htype::extract_irreducible(k, variant_for(k, variant), cap));
  const auto mode = gen_set == "integer" ? htype::GeneratingSet::Integer : htype::GeneratingSet::Exact;
  const auto gens = htype::generating_set(A, mode);
  const auto result = htype::ball_count(A, gens, radius, element_cap);

  std::cout << "R,g\n";
  for (std::size_t r = 0; r < result.g.size(); ++r)
    std::cout << r << ',' << result.g[r] << '\n';
  const int d = htype::growth_degree(static_cast<int>(A.m()), static_cast<int>(A.n()));
  std::cout << "# d=" << d << '\n';
  const int r_max = static_cast<int>(result.g.size()) - 1;
  const int r_min = fit_from > 0 ? fit_from : (radius + 2) / 2;
  if (r_min >= 1 && r_min < r_max)
    std::cout << "# slope=" << std::fixed << std::setprecision(4)
              << htype::loglog_slope(result.g, r_min, r_max) << " over R in [" << r_min << ','
              << r_max << "]\n";
  if (A.m() + A.n() <= 24)
    std::cout << "# index of <S> in L=" << htype::subgroup_index(A, gens) << '\n';
  if (result.truncated) {
    std::cout << "# truncated: element cap " << element_cap << " reached\n";
    return kExitCap;
  }
  return kExitOk;
}

int cmd_reduce(int k, const std::string& variant, const std::string& u_text,
               const std::string& v_text, int cap) {
  check_k(k, cap);
  const auto A = htype::structure_constants(htype::extract_irreducible(k, variant_for(k, variant), cap));
  htype::GroupElement x{parse_coords(u_text, A.m(), "--u"), parse_coords(v_text, A.n(), "--v")};
  const auto red = htype::reduce_to_fundamental(x, A);
  auto strings = [](const std::vector<htype::Dyadic>& c) {
    std::vector<std::string> out;
    for (const auto& d : c)
      out.push_back(d.to_string());
    return out;
  };
  const auto l = red.lattice.to_group();
  nlohmann::json j{{"input", {{"u", strings(x.u)}, {"v", strings(x.v)}}},
                   {"lattice", {{"u", strings(l.u)}, {"v", strings(l.v)}}},
                   {"reduced", {{"u", strings(red.reduced.u)}, {"v", strings(red.reduced.v)}}}};
  std::cout << j.dump(1) << '\n';
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral bases of Clifford modules, H-type structure constants and lattices"};
  app.require_subcommand(1);
  int cap = htype::kDefaultCap;
  app.add_option("--cap", cap, "Largest k accepted")->capture_default_str();

  std::string k_text, variant, format = "json", report_format = "text", out_path, input;
  int samples = 200, max_k = 16, radius = 10, fit_from = 0;
  std::string gen_set = "exact";
  std::uint64_t element_cap = htype::kDefaultElementCap;
  std::string u_text, v_text;

  auto* construct = app.add_subcommand("construct", "Build an irreducible integral module");
  construct->add_option("--k", k_text, "Number of Clifford generators")->required();
  construct->add_option("--variant", variant)->check(CLI::IsMember({"plus", "minus"}));
  construct->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  construct->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--k", k_text, "k or range lo..hi");
  verify->add_option("--input", input, "Verify an exported JSON record instead");
  verify->add_option("--format", report_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--samples", samples, "Random samples per lattice check")
      ->capture_default_str();

  auto* dims = app.add_subcommand("dims", "Dimension table of irreducible modules");
  dims->add_option("--max-k,--k", max_k)->capture_default_str();

  auto* growth = app.add_subcommand("growth", "Cayley-graph ball counts of the lattice");
  growth->add_option("--k", k_text)->required();
  growth->add_option("--variant", variant)->check(CLI::IsMember({"plus", "minus"}));
  growth->add_option("--radius", radius)->capture_default_str();
  growth->add_option("--gen-set", gen_set)->check(CLI::IsMember({"exact", "integer"}));
  growth->add_option("--element-cap", element_cap)->capture_default_str();
  growth->add_option("--fit-from", fit_from, "Smallest radius in the slope fit");

  auto* reduce = app.add_subcommand("reduce", "Reduce a point into the fundamental domain");
  reduce->add_option("--k", k_text)->required();
  reduce->add_option("--variant", variant)->check(CLI::IsMember({"plus", "minus"}));
  reduce->add_option("--u", u_text, "Comma-separated dyadic U coordinates");
  reduce->add_option("--v", v_text, "Comma-separated dyadic V coordinates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed())
      return cmd_construct(k_text, variant, format, out_path, cap);
    if (verify->parsed())
      return cmd_verify(k_text, input, report_format, cap, samples);
    if (dims->parsed())
      return cmd_dims(max_k, cap);
    const auto single_k = [&] {
      const auto [lo, hi] = parse_k_range(k_text);
      if (lo != hi)
        throw UsageError("expected a single k");
      return lo;
    };
    if (growth->parsed())
      return cmd_growth(single_k(), variant, radius, gen_set, element_cap, fit_from, cap);
    if (reduce->parsed())
      return cmd_reduce(single_k(), variant, u_text, v_text, cap);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
