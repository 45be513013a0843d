// Command-line front end: every library computation as a subcommand with CSV
// or JSON output.  Exit codes: 0 success, 1 verification failure, 2 usage.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgl/code.hpp"
#include "kgl/field.hpp"
#include "kgl/glgroup.hpp"
#include "kgl/kloosterman.hpp"
#include "kgl/moments.hpp"
#include "kgl/parallel.hpp"
#include "kgl/verify.hpp"

namespace {

using kgl::Int;
using ordered_json = nlohmann::ordered_json;

struct Common {
  unsigned r = 2;
  std::string modulus_hex;
  std::string format = "csv";
  std::string output;
  unsigned threads = 0;
  bool no_timing = false;
};

void add_common(CLI::App* cmd, Common& c, unsigned r_min, unsigned r_max) {
  cmd->add_option("--r", c.r, "field degree")->required()->check(CLI::Range(r_min, r_max));
  cmd->add_option("--modulus", c.modulus_hex, "irreducible modulus override, hex bitmask");
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", c.output, "write to this file instead of stdout");
  cmd->add_option("--threads", c.threads, "worker thread cap, 0 = machine parallelism");
  cmd->add_flag("--no-timing", c.no_timing, "suppress timing fields");
}

std::uint32_t parse_hex(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos, 16);
  } catch (...) {
    pos = std::string::npos;
  }
  if (pos != s.size() || v > 0xffffffffUL)
    throw std::invalid_argument(std::string(what) + ": bad hex value '" + s + "'");
  return std::uint32_t(v);
}

kgl::Field make_field(const Common& c) {
  kgl::set_max_threads(c.threads);
  if (c.modulus_hex.empty()) return kgl::Field(c.r);
  return kgl::Field(c.r, parse_hex(c.modulus_hex, "--modulus"));
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file " + c.output);
  out << text;
}

ordered_json preamble(const char* command, const kgl::Field& f) {
  ordered_json j;
  j["command"] = command;
  j["q"] = f.order();
  j["r"] = f.degree();
  j["modulus"] = kgl::to_hex(f.modulus());
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---- field-table ----------------------------------------------------------

int run_field_table(const Common& c) {
  kgl::Field f = make_field(c);
  if (c.format == "json") {
    ordered_json j = preamble("field-table", f);
    auto& rows = j["rows"] = ordered_json::array();
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      ordered_json row;
      row["value"] = kgl::to_hex(x);
      if (x)
        row["inverse"] = kgl::to_hex(f.inv(x));
      else
        row["inverse"] = nullptr;
      row["trace"] = f.trace(x);
      row["lambda"] = f.chi(x);
      rows.push_back(std::move(row));
    }
    emit(c, dump(j));
    return 0;
  }
  std::ostringstream out;
  out << "value,inverse,trace,lambda\n";
  for (std::uint32_t x = 0; x < f.order(); ++x)
    out << kgl::to_hex(x) << ',' << (x ? kgl::to_hex(f.inv(x)) : std::string("NA")) << ','
        << f.trace(x) << ',' << f.chi(x) << '\n';
  emit(c, out.str());
  return 0;
}

// ---- kloosterman ----------------------------------------------------------

int run_kloosterman(const Common& c, unsigned m, const std::string& a_hex) {
  kgl::Field f = make_field(c);
  std::vector<std::pair<std::uint32_t, std::int64_t>> rows;
  if (!a_hex.empty()) {
    std::uint32_t a = parse_hex(a_hex, "--a");
    rows.emplace_back(a, kgl::kloosterman_sum(f, m, a));
  } else {
    kgl::KloostermanTable t = kgl::kloosterman_table(f, m);
    for (std::uint32_t a = 1; a < f.order(); ++a) rows.emplace_back(a, t.value(a));
  }
  if (c.format == "json") {
    ordered_json j = preamble("kloosterman", f);
    j["m"] = m;
    auto& vals = j["values"] = ordered_json::array();
    for (auto& [a, v] : rows) vals.push_back({{"a", kgl::to_hex(a)}, {"value", v}});
    emit(c, dump(j));
    return 0;
  }
  std::ostringstream out;
  out << "a,value\n";
  for (auto& [a, v] : rows) out << kgl::to_hex(a) << ',' << v << '\n';
  emit(c, out.str());
  return 0;
}

// ---- census ---------------------------------------------------------------

int run_census(const Common& c, bool check_class_number) {
  kgl::Field f = make_field(c);
  kgl::ValueCensus census = kgl::value_census(f);
  bool asserted_reading_holds = true;

  struct Row {
    std::int64_t t;
    std::uint32_t count;
    std::uint64_t h4q = 0;
    bool match4q = false;
    bool q_valid = false;
    std::uint64_t hq = 0;
    bool matchq = false;
  };
  std::vector<Row> rows;
  for (const auto& [t, count] : census.multiplicity) {
    Row row{t, count};
    if (check_class_number) {
      row.h4q = kgl::kronecker_class_number(t * t - 4 * std::int64_t(f.order()));
      row.match4q = row.h4q == count;
      if (!row.match4q) asserted_reading_holds = false;
      std::int64_t dq = t * t - std::int64_t(f.order());
      row.q_valid = dq < 0;  // q is 0 mod 4 and t is odd, so dq is 1 mod 4
      if (row.q_valid) {
        row.hq = kgl::kronecker_class_number(dq);
        row.matchq = row.hq == count;
      }
    }
    rows.push_back(row);
  }

  if (c.format == "json") {
    ordered_json j = preamble("census", f);
    auto& arr = j["census"] = ordered_json::array();
    for (const Row& row : rows) {
      ordered_json e;
      e["t"] = row.t;
      e["count"] = row.count;
      if (check_class_number) {
        e["class_number_4q"] = row.h4q;
        e["match_4q"] = row.match4q;
        if (row.q_valid) {
          e["class_number_q"] = row.hq;
          e["match_q"] = row.matchq;
        } else {
          e["class_number_q"] = nullptr;
          e["match_q"] = nullptr;
        }
      }
      arr.push_back(std::move(e));
    }
    emit(c, dump(j));
  } else {
    std::ostringstream out;
    out << (check_class_number
                ? "t,count,class_number_4q,match_4q,class_number_q,match_q\n"
                : "t,count\n");
    for (const Row& row : rows) {
      out << row.t << ',' << row.count;
      if (check_class_number) {
        out << ',' << row.h4q << ',' << (row.match4q ? "true" : "false") << ',';
        if (row.q_valid)
          out << row.hq << ',' << (row.matchq ? "true" : "false");
        else
          out << "NA,NA";
      }
      out << '\n';
    }
    emit(c, out.str());
  }
  return asserted_reading_holds ? 0 : 1;
}

// ---- glsum ----------------------------------------------------------------

int run_glsum(const Common& c, unsigned t, const std::string& a_hex,
              const std::string& method) {
  kgl::Field f = make_field(c);
  std::uint32_t a = parse_hex(a_hex, "--a");
  bool want_direct = method == "direct" || method == "both";
  bool want_recursive = method == "recursive" || method == "both";

  std::vector<std::pair<std::string, Int>> results;
  if (want_direct) {
    if (t == 1)
      results.emplace_back("direct", Int(kgl::kloosterman_sum(f, 1, a)));
    else if (t == 2)
      results.emplace_back("direct", Int(kgl::gl2_kloosterman_direct(f, a)));
    else
      throw std::invalid_argument("glsum: direct enumeration supports t = 1 or 2 only");
  }
  if (want_recursive)
    results.emplace_back("recursive", kgl::gl_kloosterman_recursive(f, t, a));

  bool match = true;
  if (results.size() == 2 && results[0].second != results[1].second) match = false;

  if (c.format == "json") {
    ordered_json j = preamble("glsum", f);
    j["t"] = t;
    j["a"] = kgl::to_hex(a);
    auto& arr = j["results"] = ordered_json::array();
    for (auto& [name, value] : results)
      arr.push_back({{"method", name}, {"value", value.get_str()}});
    if (results.size() == 2) j["match"] = match;
    emit(c, dump(j));
  } else {
    std::ostringstream out;
    out << "t,a,method,value\n";
    for (auto& [name, value] : results)
      out << t << ',' << kgl::to_hex(a) << ',' << name << ',' << value.get_str() << '\n';
    emit(c, out.str());
  }
  if (!match) {
    std::fprintf(stderr, "glsum: direct and recursive values disagree\n");
    return 1;
  }
  return 0;
}

// ---- nbeta ----------------------------------------------------------------

int run_nbeta(const Common& c, const std::string& method) {
  kgl::Field f = make_field(c);
  std::unique_ptr<kgl::FiberCensus> direct, formula;
  if (method == "direct" || method == "both")
    direct = std::make_unique<kgl::FiberCensus>(kgl::fiber_census_direct(f));
  if (method == "formula" || method == "both")
    formula = std::make_unique<kgl::FiberCensus>(
        kgl::fiber_census_formula(f, kgl::kloosterman_table(f, 1)));

  bool match = true;
  if (direct && formula)
    for (std::uint32_t beta = 0; beta < f.order(); ++beta)
      if (direct->counts[beta] != formula->counts[beta]) match = false;

  const kgl::FiberCensus& census = formula ? *formula : *direct;
  if (c.format == "json") {
    ordered_json j = preamble("nbeta", f);
    j["method"] = method;
    auto& arr = j["counts"] = ordered_json::array();
    for (std::uint32_t beta = 0; beta < f.order(); ++beta)
      arr.push_back({{"beta", kgl::to_hex(beta)}, {"n", census.counts[beta]}});
    if (direct && formula) j["match"] = match;
    emit(c, dump(j));
  } else {
    std::ostringstream out;
    out << "beta,n\n";
    for (std::uint32_t beta = 0; beta < f.order(); ++beta)
      out << kgl::to_hex(beta) << ',' << census.counts[beta] << '\n';
    emit(c, out.str());
  }
  if (!match) {
    std::fprintf(stderr, "nbeta: enumerated and closed-form censuses disagree\n");
    return 1;
  }
  return 0;
}

// ---- dual-weights ---------------------------------------------------------

int run_dual_weights(const Common& c, const std::string& a_hex) {
  kgl::Field f = make_field(c);
  kgl::KloostermanTable table = kgl::kloosterman_table(f, 1);
  kgl::CodeContext ctx(f, table);
  std::vector<std::uint32_t> elements;
  if (!a_hex.empty())
    elements.push_back(parse_hex(a_hex, "--a"));
  else
    for (std::uint32_t a = 0; a < f.order(); ++a) elements.push_back(a);

  if (c.format == "json") {
    ordered_json j = preamble("dual-weights", f);
    j["length"] = ctx.length;
    auto& rows = j["rows"] = ordered_json::array();
    for (std::uint32_t a : elements) {
      ordered_json row;
      row["a"] = kgl::to_hex(a);
      if (a)
        row["k"] = table.value(a);
      else
        row["k"] = nullptr;
      row["weight"] = kgl::dual_weight(ctx, table, a);
      rows.push_back(std::move(row));
    }
    emit(c, dump(j));
  } else {
    std::ostringstream out;
    out << "a,k,weight\n";
    for (std::uint32_t a : elements) {
      out << kgl::to_hex(a) << ',';
      if (a)
        out << table.value(a);
      else
        out << "NA";
      out << ',' << kgl::dual_weight(ctx, table, a) << '\n';
    }
    emit(c, out.str());
  }
  return 0;
}

// ---- weight-dist ----------------------------------------------------------

std::string cache_path(const std::string& dir, const kgl::Field& f, const std::string& method) {
  return dir + "/wd-r" + std::to_string(f.degree()) + "-m" + kgl::to_hex(f.modulus()) +
         "-" + method + ".json";
}

bool load_cached(const std::string& path, const kgl::Field& f,
                 const std::string& method, kgl::WeightDistribution& wd) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("r") != f.degree() || j.at("modulus") != kgl::to_hex(f.modulus()) ||
        j.at("method") != method)
      return false;
    wd.length = j.at("length").get<std::uint64_t>();
    const auto& freqs = j.at("freqs");
    wd.freqs.clear();
    wd.freqs.reserve(freqs.size());
    for (const auto& s : freqs) wd.freqs.emplace_back(s.get<std::string>());
    return wd.complete();
  } catch (...) {
    return false;
  }
}

void store_cached(const std::string& path, const kgl::Field& f,
                  const std::string& method, const kgl::WeightDistribution& wd) {
  nlohmann::ordered_json j;
  j["r"] = f.degree();
  j["q"] = f.order();
  j["modulus"] = kgl::to_hex(f.modulus());
  j["method"] = method;
  j["length"] = wd.length;
  auto& freqs = j["freqs"] = nlohmann::ordered_json::array();
  for (const Int& v : wd.freqs) freqs.push_back(v.get_str());
  std::ofstream out(path, std::ios::binary);
  if (out) out << j.dump() << '\n';
}

int run_weight_dist(const Common& c, const std::string& method, const std::string& cache_dir) {
  kgl::Field f = make_field(c);
  kgl::KloostermanTable table = kgl::kloosterman_table(f, 1);
  kgl::CodeContext ctx(f, table);
  kgl::DualWeightTable weights = kgl::dual_weight_table(ctx, table);

  if (!cache_dir.empty()) std::filesystem::create_directories(cache_dir);

  auto compute = [&](const std::string& one) {
    kgl::WeightDistribution wd;
    std::string path = cache_dir.empty() ? "" : cache_path(cache_dir, f, one);
    if (!path.empty() && load_cached(path, f, one, wd)) return wd;
    wd = one == "dp" ? kgl::weight_distribution_dp(ctx)
                     : kgl::weight_distribution_transform(ctx, weights);
    if (!path.empty()) store_cached(path, f, one, wd);
    return wd;
  };

  bool match = true;
  kgl::WeightDistribution wd;
  if (method == "both") {
    kgl::WeightDistribution dp = compute("dp");
    wd = compute("transform");
    if (dp.freqs.size() != wd.freqs.size()) {
      match = false;
    } else {
      for (std::size_t j = 0; j < wd.freqs.size(); ++j)
        if (dp.freqs[j] != wd.freqs[j]) match = false;
    }
  } else {
    wd = compute(method);
  }

  if (c.format == "json") {
    ordered_json j = preamble("weight-dist", f);
    j["method"] = method;
    j["length"] = wd.length;
    auto& freqs = j["freqs"] = ordered_json::array();
    for (const Int& v : wd.freqs) freqs.push_back(v.get_str());
    if (method == "both") j["match"] = match;
    emit(c, dump(j));
  } else {
    std::ostringstream out;
    out << "j,c\n";
    for (std::size_t j = 0; j < wd.freqs.size(); ++j)
      out << j << ',' << wd.freqs[j].get_str() << '\n';
    emit(c, out.str());
  }
  if (!match) {
    std::fprintf(stderr, "weight-dist: the two methods disagree\n");
    return 1;
  }
  return 0;
}

// ---- moments --------------------------------------------------------------

int run_moments(const Common& c, unsigned h_max, const std::string& mode) {
  kgl::Field f = make_field(c);
  kgl::KloostermanTable k1 = kgl::kloosterman_table(f, 1);
  kgl::CodeContext ctx(f, k1);

  bool want_direct = mode == "direct" || mode == "both";
  bool want_recursive = mode == "recursive" || mode == "both";

  std::vector<Int> dir2, dir_even, rec2, rec_even;
  if (want_direct) {
    kgl::KloostermanTable k2 = kgl::kloosterman_table(f, 2);
    for (unsigned h = 0; h <= h_max; ++h) {
      dir2.push_back(kgl::power_moment(k2, h));
      dir_even.push_back(kgl::power_moment(k1, 2 * h));
    }
  }
  if (want_recursive) {
    kgl::DualWeightTable weights = kgl::dual_weight_table(ctx, k1);
    kgl::WeightDistribution wd = kgl::weight_distribution_prefix(ctx, weights, h_max);
    rec2.push_back(kgl::moment_seed(f.order()));
    rec_even.push_back(kgl::moment_seed(f.order()));
    for (unsigned h = 1; h <= h_max; ++h) {
      rec2.push_back(kgl::mk2_recursion(ctx, wd, h, rec2));
      rec_even.push_back(kgl::mk_even_recursion(ctx, wd, h, rec_even));
    }
  }

  bool match = true;
  if (mode == "both")
    for (unsigned h = 0; h <= h_max; ++h)
      if (dir2[h] != rec2[h] || dir_even[h] != rec_even[h]) match = false;

  const std::vector<Int>& mk2 = want_recursive ? rec2 : dir2;
  const std::vector<Int>& mk_even = want_recursive ? rec_even : dir_even;

  if (c.format == "json") {
    ordered_json j = preamble("moments", f);
    j["h_max"] = h_max;
    j["mode"] = mode;
    auto& rows = j["rows"] = ordered_json::array();
    for (unsigned h = 0; h <= h_max; ++h)
      rows.push_back({{"h", h},
                      {"mk2", mk2[h].get_str()},
                      {"mk_even", mk_even[h].get_str()}});
    if (mode == "both") j["match"] = match;
    emit(c, dump(j));
  } else {
    std::ostringstream out;
    out << "h,mk2,mk_even\n";
    for (unsigned h = 0; h <= h_max; ++h)
      out << h << ',' << mk2[h].get_str() << ',' << mk_even[h].get_str() << '\n';
    emit(c, out.str());
  }
  if (!match) {
    std::fprintf(stderr, "moments: direct and recursive values disagree\n");
    return 1;
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const Common& c, unsigned h_max) {
  kgl::set_max_threads(c.threads);
  std::uint32_t modulus =
      c.modulus_hex.empty() ? kgl::Field::builtin_modulus(c.r)
                            : parse_hex(c.modulus_hex, "--modulus");
  kgl::VerifyReport rep = kgl::verify_all(c.r, h_max, modulus);

  if (c.format == "json") {
    ordered_json j;
    j["command"] = "verify";
    j["q"] = rep.q;
    j["r"] = rep.r;
    j["modulus"] = kgl::to_hex(rep.modulus);
    j["h_max"] = rep.h_max;
    j["all_pass"] = rep.all_pass();
    auto& checks = j["checks"] = ordered_json::array();
    for (const auto& chk : rep.checks)
      checks.push_back({{"name", chk.name}, {"status", chk.status}, {"detail", chk.detail}});
    auto add_moments = [&](const char* key, const std::vector<kgl::MomentRecord>& recs) {
      auto& arr = j[key] = ordered_json::array();
      for (const auto& m : recs)
        arr.push_back({{"h", m.h},
                       {"direct", m.direct_value.get_str()},
                       {"recursive", m.recursive_value.get_str()},
                       {"pass", m.pass}});
    };
    add_moments("mk2", rep.mk2);
    add_moments("mk_even", rep.mk_even);
    if (!c.no_timing) j["seconds"] = rep.seconds;
    emit(c, dump(j));
  } else {
    std::ostringstream out;
    out << "verify r=" << rep.r << " q=" << rep.q << " modulus=" << kgl::to_hex(rep.modulus)
        << " h_max=" << rep.h_max << '\n';
    for (const auto& chk : rep.checks)
      out << "check " << chk.status << " " << chk.name << ": " << chk.detail << '\n';
    auto print_moments = [&](const char* key, const std::vector<kgl::MomentRecord>& recs) {
      for (const auto& m : recs)
        out << "moment " << key << " h=" << m.h << " direct=" << m.direct_value.get_str()
            << " recursive=" << m.recursive_value.get_str() << ' '
            << (m.pass ? "pass" : "FAIL") << '\n';
    };
    print_moments("mk2", rep.mk2);
    print_moments("mk_even", rep.mk_even);
    unsigned failures = 0;
    for (const auto& chk : rep.checks)
      if (chk.status == "fail") ++failures;
    for (const auto& m : rep.mk2)
      if (!m.pass) ++failures;
    for (const auto& m : rep.mk_even)
      if (!m.pass) ++failures;
    out << "result " << (rep.all_pass() ? "PASS" : "FAIL") << " checks="
        << rep.checks.size() << " moments=" << rep.mk2.size() + rep.mk_even.size()
        << " failures=" << failures << '\n';
    if (!c.no_timing) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "time %.3fs\n", rep.seconds);
      out << buf;
    }
    emit(c, out.str());
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Kloosterman sums, GL(2,q) censuses, code weight distributions"};
  app.require_subcommand(1);

  Common common;

  auto* cmd_field = app.add_subcommand("field-table", "element, inverse, trace, character");
  add_common(cmd_field, common, 2, 12);

  auto* cmd_kloo = app.add_subcommand("kloosterman", "sums K_m(a), one value or the table");
  add_common(cmd_kloo, common, 2, 12);
  unsigned kloo_m = 1;
  std::string kloo_a;
  cmd_kloo->add_option("--m", kloo_m, "sum dimension")->check(CLI::Range(1u, 3u));
  cmd_kloo->add_option("--a", kloo_a, "single element, hex bitmask");

  auto* cmd_census = app.add_subcommand("census", "distinct sum values and multiplicities");
  add_common(cmd_census, common, 2, 12);
  bool census_check = false;
  cmd_census->add_flag("--check-class-number", census_check,
                       "compare multiplicities against reduced-form class numbers");

  auto* cmd_glsum = app.add_subcommand("glsum", "matrix Kloosterman sum over GL(t,q)");
  add_common(cmd_glsum, common, 2, 12);
  unsigned glsum_t = 2;
  std::string glsum_a, glsum_method = "recursive";
  cmd_glsum->add_option("--t", glsum_t, "matrix size")->required()->check(CLI::Range(0u, 6u));
  cmd_glsum->add_option("--a", glsum_a, "twist element, hex bitmask")->required();
  cmd_glsum->add_option("--method", glsum_method)
      ->check(CLI::IsMember({"direct", "recursive", "both"}));

  auto* cmd_nbeta = app.add_subcommand("nbeta", "trace-pair fiber sizes n(beta)");
  add_common(cmd_nbeta, common, 2, 12);
  std::string nbeta_method = "formula";
  cmd_nbeta->add_option("--method", nbeta_method)
      ->check(CLI::IsMember({"direct", "formula", "both"}));

  auto* cmd_dw = app.add_subcommand("dual-weights", "weights of the dual codewords c(a)");
  add_common(cmd_dw, common, 2, 12);
  std::string dw_a;
  cmd_dw->add_option("--a", dw_a, "single element, hex bitmask");

  auto* cmd_wd = app.add_subcommand("weight-dist", "kernel-code weight distribution");
  add_common(cmd_wd, common, 2, 4);
  std::string wd_method = "transform", wd_cache;
  cmd_wd->add_option("--method", wd_method)
      ->check(CLI::IsMember({"dp", "transform", "both"}));
  cmd_wd->add_option("--cache-dir", wd_cache, "memoize distributions as JSON files here");

  auto* cmd_mom = app.add_subcommand("moments", "power moments, direct and by recursion");
  add_common(cmd_mom, common, 2, 6);
  unsigned mom_h = 10;
  std::string mom_mode = "both";
  cmd_mom->add_option("--h-max", mom_h, "highest moment")->required()->check(CLI::Range(0u, 64u));
  cmd_mom->add_option("--mode", mom_mode)
      ->check(CLI::IsMember({"direct", "recursive", "both"}));

  auto* cmd_verify = app.add_subcommand("verify", "run the whole identity suite");
  add_common(cmd_verify, common, 2, 6);
  unsigned verify_h = 10;
  cmd_verify->add_option("--h-max", verify_h, "highest moment level")->check(CLI::Range(0u, 64u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_field->parsed()) return run_field_table(common);
    if (cmd_kloo->parsed()) return run_kloosterman(common, kloo_m, kloo_a);
    if (cmd_census->parsed()) return run_census(common, census_check);
    if (cmd_glsum->parsed()) return run_glsum(common, glsum_t, glsum_a, glsum_method);
    if (cmd_nbeta->parsed()) return run_nbeta(common, nbeta_method);
    if (cmd_dw->parsed()) return run_dual_weights(common, dw_a);
    if (cmd_wd->parsed()) return run_weight_dist(common, wd_method, wd_cache);
    if (cmd_mom->parsed()) return run_moments(common, mom_h, mom_mode);
    if (cmd_verify->parsed()) return run_verify(common, verify_h);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
