#include "kgl/verify.hpp"

#include <chrono>
#include <stdexcept>

#include "kgl/code.hpp"
#include "kgl/field.hpp"
#include "kgl/glgroup.hpp"
#include "kgl/kloosterman.hpp"
#include "kgl/moments.hpp"

namespace kgl {

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  for (const auto& m : mk2)
    if (!m.pass) return false;
  for (const auto& m : mk_even)
    if (!m.pass) return false;
  return true;
}

namespace {

struct Recorder {
  VerifyReport& rep;

  void add(const std::string& name, bool ok, const std::string& detail) {
    rep.checks.push_back({name, ok ? "pass" : "fail", detail});
  }
  void skip(const std::string& name, const std::string& why) {
    rep.checks.push_back({name, "skip", why});
  }
};

std::string plural(std::uint64_t n, const char* noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

void check_field_sanity(const Field& f, Recorder& rec) {
  std::uint32_t q = f.order();
  std::uint64_t bad = 0;
  for (std::uint32_t c = 0; c < q; ++c) {
    std::int64_t s = 0;
    for (std::uint32_t x = 0; x < q; ++x) s += f.chi(f.mul(c, x));
    if (s != (c == 0 ? std::int64_t(q) : 0)) ++bad;
  }
  unsigned ones = 0;
  for (std::uint32_t x = 0; x < q; ++x) {
    if (f.trace(f.sqr(x)) != f.trace(x)) ++bad;
    if (x && f.pow(x, q - 1) != 1) ++bad;
    ones += f.trace(x);
  }
  if (ones != q / 2) ++bad;
  rec.add("field sanity",
          bad == 0,
          bad == 0 ? "character orthogonality, trace Frobenius invariance, unit group order"
                   : plural(bad, "violation"));
}

void check_square_identity(const Field& f, const KloostermanTable& k1, Recorder& rec) {
  std::uint64_t bad = 0;
  for (std::uint32_t a = 1; a < f.order(); ++a) {
    std::int64_t k = k1.value(a);
    if (kloosterman_sum(f, 2, a) != k * k - std::int64_t(f.order())) ++bad;
  }
  rec.add("two-dimensional sum vs square",
          bad == 0,
          bad == 0 ? "K_2(a) = K(a)^2 - q for " + plural(f.order() - 1, "unit")
                   : plural(bad, "mismatch"));
}

void check_matrix_sum(const Field& f, const KloostermanTable& k1, Recorder& rec) {
  std::int64_t q = f.order();
  std::vector<std::uint32_t> points;
  if (q <= 16)
    for (std::uint32_t a = 1; a < f.order(); ++a) points.push_back(a);
  else
    points = {1, 2, 3};  // spot values; the full sweep is a small-field check
  std::uint64_t bad = 0;
  for (std::uint32_t a : points) {
    std::int64_t direct = gl2_kloosterman_direct(f, a);
    std::int64_t k = k1.value(a);
    std::int64_t via_square = q * k * k + q * q * (q - 1);
    std::int64_t via_two_dim = q * (k * k - q) + q * q * q;
    Int recursive = gl_kloosterman_recursive(f, 2, a);
    if (direct != via_square || direct != via_two_dim || recursive != direct) ++bad;
  }
  rec.add("matrix sum closed forms",
          bad == 0,
          bad == 0 ? "direct GL(2) enumeration = both closed forms = recursion at " +
                         plural(points.size(), "point")
                   : plural(bad, "mismatch"));
}

void check_twisted_sums(const Field& f, Recorder& rec) {
  std::uint64_t bad = 0, cases = 0;
  for (unsigned m = 1; m <= 3; ++m) {
    KloostermanTable km = kloosterman_table(f, m);
    std::int64_t unit_term = (m % 2 == 0) ? -1 : 1;  // (-1)^(m+1)
    for (std::uint32_t beta = 0; beta < f.order(); ++beta) {
      std::int64_t lhs = twisted_character_sum(f, km, beta);
      std::int64_t rhs;
      if (beta == 0)
        rhs = unit_term;
      else
        rhs = std::int64_t(f.order()) * kloosterman_sum(f, m - 1, f.inv(beta)) + unit_term;
      ++cases;
      if (lhs != rhs) ++bad;
    }
  }
  rec.add("twisted character sums",
          bad == 0,
          bad == 0 ? "descent identity over " + plural(cases, "case") + " (m = 1..3)"
                   : plural(bad, "mismatch"));
}

void check_fiber_census(const Field& f, const FiberCensus& direct,
                        const FiberCensus& formula, Recorder& rec) {
  std::uint64_t bad = 0;
  for (std::uint32_t beta = 0; beta < f.order(); ++beta)
    if (direct.counts[beta] != formula.counts[beta]) ++bad;
  if (direct.total() != gl_order(f.order(), 2)) ++bad;
  rec.add("trace-pair fiber census",
          bad == 0,
          bad == 0 ? "enumerated fiber sizes match the closed form for " +
                         plural(f.order(), "fiber")
                   : plural(bad, "mismatch"));
}

void check_dual_weights(const Field& f, const CodeContext& ctx, const KloostermanTable& k1,
                        const FiberCensus& direct, Recorder& rec) {
  std::int64_t q = f.order();
  std::uint64_t bad = 0;
  for (std::uint32_t a = 0; a < f.order(); ++a) {
    std::int64_t closed = dual_weight(ctx, k1, a);
    std::int64_t counted = dual_weight_direct(f, direct, a);
    if (closed != counted) ++bad;
    if (a) {
      // closed form routed through an independently computed K_2
      std::int64_t k2 = kloosterman_sum(f, 2, a);
      std::int64_t via_two_dim = q * (q * q * q - 2 * q * q - q + 1 - k2);
      if (via_two_dim % 2 != 0 || closed != via_two_dim / 2) ++bad;
    }
  }
  rec.add("dual codeword weights",
          bad == 0,
          bad == 0 ? "closed form = fiber count = two-dimensional form for " +
                         plural(f.order(), "codeword")
                   : plural(bad, "mismatch"));
}

void check_distribution_invariants(const CodeContext& ctx, const WeightDistribution& wd,
                                   Recorder& rec) {
  std::uint64_t n = ctx.length;
  std::uint64_t bad = 0;
  std::string scope;
  if (wd.complete()) {
    Int sum = 0;
    for (const Int& c : wd.freqs) sum += c;
    if (sum != pow2(n - ctx.field.degree())) ++bad;
    for (std::uint64_t j = 0; j <= n / 2; ++j)
      if (wd.freqs[j] != wd.freqs[n - j]) ++bad;
    if (wd.freqs[0] != 1 || wd.freqs[n] != 1) ++bad;
    if (wd.freqs[1] != ctx.fiber.counts[0]) ++bad;
    scope = "total 2^(N-r), palindrome symmetry, edge and first coefficients";
  } else {
    if (wd.freqs.empty() || wd.freqs[0] != 1) ++bad;
    if (wd.freqs.size() >= 2 && wd.freqs[1] != ctx.fiber.counts[0]) ++bad;
    scope = "prefix-only: leading coefficients against the zero fiber";
  }
  rec.add("distribution invariants", bad == 0, bad == 0 ? scope : plural(bad, "violation"));
}

void check_pless(const CodeContext& ctx, const DualWeightTable& weights,
                 const WeightDistribution& wd, unsigned h_max, Recorder& rec) {
  std::uint64_t bad = 0;
  for (unsigned h = 0; h <= h_max; ++h) {
    auto [lhs, rhs] = pless_both_sides(ctx, weights, wd, h);
    if (lhs != rhs) ++bad;
  }
  rec.add("power moment identity",
          bad == 0,
          bad == 0 ? "weight power sums match the dual-distribution side for h = 0.." +
                         std::to_string(h_max)
                   : plural(bad, "mismatch"));
}

void run_moment_recursions(const Field& f, const CodeContext& ctx,
                           const WeightDistribution& wd, unsigned h_max,
                           VerifyReport& rep, Recorder& rec) {
  KloostermanTable k1 = kloosterman_table(f, 1);
  KloostermanTable k2 = kloosterman_table(f, 2);
  std::vector<Int> hist2{moment_seed(f.order())}, hist_even{moment_seed(f.order())};
  std::uint64_t bad = 0;
  for (unsigned h = 1; h <= h_max; ++h) {
    Int rec2 = mk2_recursion(ctx, wd, h, hist2);
    Int dir2 = power_moment(k2, h);
    rep.mk2.push_back({h, dir2, rec2, rec2 == dir2});
    hist2.push_back(rec2);

    Int rec_even = mk_even_recursion(ctx, wd, h, hist_even);
    Int dir_even = power_moment(k1, 2 * h);
    rep.mk_even.push_back({h, dir_even, rec_even, rec_even == dir_even});
    hist_even.push_back(rec_even);

    if (rec2 != dir2 || rec_even != dir_even) ++bad;
  }
  rec.add("moment recursions",
          bad == 0,
          bad == 0 ? "both recursion families reproduce direct moments for h = 1.." +
                         std::to_string(h_max)
                   : plural(bad, "failing level"));
}

}  // namespace

VerifyReport verify_all(unsigned r, unsigned h_max) {
  return verify_all(r, h_max, Field::builtin_modulus(r));
}

VerifyReport verify_all(unsigned r, unsigned h_max, std::uint32_t modulus) {
  if (r < 2 || r > 6)
    throw std::invalid_argument("verify: field degree must be in [2, 6], got " +
                                std::to_string(r));
  auto t0 = std::chrono::steady_clock::now();

  Field f(r, modulus);
  VerifyReport rep;
  rep.r = r;
  rep.q = f.order();
  rep.modulus = modulus;
  rep.h_max = h_max;
  Recorder rec{rep};

  check_field_sanity(f, rec);

  KloostermanTable k1 = kloosterman_table(f, 1);
  check_square_identity(f, k1, rec);
  check_matrix_sum(f, k1, rec);
  check_twisted_sums(f, rec);

  FiberCensus direct = fiber_census_direct(f);
  CodeContext ctx(f, k1);
  check_fiber_census(f, direct, ctx.fiber, rec);
  check_dual_weights(f, ctx, k1, direct, rec);

  DualWeightTable weights = dual_weight_table(ctx, k1);
  WeightDistribution wd;
  if (r <= 3) {
    WeightDistribution dp = weight_distribution_dp(ctx);
    wd = weight_distribution_transform(ctx, weights);
    std::uint64_t bad = 0;
    if (dp.freqs.size() != wd.freqs.size())
      ++bad;
    else
      for (std::size_t j = 0; j < wd.freqs.size(); ++j)
        if (dp.freqs[j] != wd.freqs[j]) ++bad;
    rec.add("distribution cross-check",
            bad == 0,
            bad == 0 ? "slice DP and character transform agree on " +
                           plural(wd.freqs.size(), "coefficient")
                     : plural(bad, "differing coefficient"));
  } else if (r == 4) {
    wd = weight_distribution_transform(ctx, weights);
    rec.skip("distribution cross-check",
             "transform only at q = 16; the DP route is cross-checked at q <= 8");
  } else {
    wd = weight_distribution_prefix(ctx, weights, h_max);
    rec.skip("distribution cross-check",
             "truncated prefix only at q > 16; full routes are cross-checked at q <= 8");
  }

  check_distribution_invariants(ctx, wd, rec);
  check_pless(ctx, weights, wd, h_max, rec);
  run_moment_recursions(f, ctx, wd, h_max, rep, rec);

  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace kgl
