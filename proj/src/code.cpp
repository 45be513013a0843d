#include "kgl/code.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "kgl/parallel.hpp"

namespace kgl {

namespace {

void require_degree(const Field& f) {
  if (f.degree() < 2)
    throw std::invalid_argument("field degree must be at least 2, got " +
                                std::to_string(f.degree()));
}

void check_distribution_cap(const Field& f, const char* who) {
  if (f.order() > 16)
    throw std::invalid_argument(std::string(who) +
                                ": full distributions are capped at q <= 16, got q = " +
                                std::to_string(f.order()));
}

// Row of binomial coefficients C(n, 0..n) by the running-product recurrence.
std::vector<Int> binomial_row(std::uint64_t n) {
  std::vector<Int> row(n + 1);
  row[0] = 1;
  for (std::uint64_t v = 1; v <= n; ++v)
    row[v] = exact_div(row[v - 1] * Int(n - v + 1), Int(v), "binomial row");
  return row;
}

// acc += sum over v of bin[v] * src[j - v], v restricted to one parity class.
void add_parity_terms(Int& acc, const std::vector<Int>& bin,
                      const std::vector<Int>& src, std::uint64_t j, unsigned parity) {
  if (src.empty()) return;
  std::uint64_t vhi = std::min<std::uint64_t>(bin.size() - 1, j);
  std::uint64_t vlo = (j >= src.size()) ? j - src.size() + 1 : 0;
  if ((vlo & 1) != parity) ++vlo;
  for (std::uint64_t v = vlo; v <= vhi; v += 2)
    mpz_addmul(acc.get_mpz_t(), bin[v].get_mpz_t(), src[j - v].get_mpz_t());
}

}  // namespace

CodeContext::CodeContext(const Field& f, const KloostermanTable& table)
    : field(f), length(0), fiber(fiber_census_formula(f, table)) {
  require_degree(f);
  Int n = gl_order(f.order(), 2);
  if (!n.fits_ulong_p())
    throw std::logic_error("CodeContext: group order does not fit the length type");
  length = n.get_ui();
}

std::int64_t dual_weight(const CodeContext& ctx, const KloostermanTable& table,
                         std::uint32_t a) {
  if (table.m != 1 || table.q != ctx.field.order())
    throw std::invalid_argument("dual_weight: need the m = 1 table of this field");
  if (a >= ctx.field.order())
    throw std::invalid_argument("dual_weight: element out of range");
  if (a == 0) return 0;
  std::int64_t q = ctx.field.order();
  std::int64_t k = table.value(a);
  std::int64_t via_square = q * (q * q * q - 2 * q * q + 1 - k * k);
  std::int64_t k2 = k * k - q;
  std::int64_t via_two_dim = q * (q * q * q - 2 * q * q - q + 1 - k2);
  if (via_square != via_two_dim || via_square % 2 != 0)
    throw std::logic_error("dual_weight: the two closed forms disagree");
  std::int64_t w = via_square / 2;
  if (w < 0 || std::uint64_t(w) > ctx.length)
    throw std::logic_error("dual_weight: weight outside [0, N]");
  return w;
}

std::int64_t dual_weight_direct(const Field& f, const FiberCensus& census,
                                std::uint32_t a) {
  if (census.q != f.order())
    throw std::invalid_argument("dual_weight_direct: census/field mismatch");
  if (a >= f.order())
    throw std::invalid_argument("dual_weight_direct: element out of range");
  std::int64_t w = 0;
  for (std::uint32_t beta = 0; beta < f.order(); ++beta)
    if (f.trace(f.mul(a, beta)) == 1) w += census.counts[beta];
  return w;
}

DualWeightTable dual_weight_table(const CodeContext& ctx, const KloostermanTable& table) {
  DualWeightTable t;
  t.q = ctx.field.order();
  t.w.resize(t.q);
  for (std::uint32_t a = 0; a < t.q; ++a) t.w[a] = dual_weight(ctx, table, a);
  return t;
}

std::vector<Int> expand_binomial_diff(std::uint64_t P, std::uint64_t M) {
  std::uint64_t n = P + M;
  std::vector<Int> c(n + 1);
  c[0] = 1;
  Int diff = Int(P) - Int(M);
  for (std::uint64_t k = 0; k < n; ++k) {
    Int t = diff * c[k];
    if (k >= 1) t -= Int(n - k + 1) * c[k - 1];
    c[k + 1] = exact_div(t, Int(k + 1), "binomial-difference expansion");
  }
  if (c[n] != ((M & 1) ? -1 : 1))
    throw std::logic_error("binomial-difference expansion: bad leading coefficient");
  return c;
}

WeightDistribution weight_distribution_dp(const CodeContext& ctx) {
  check_distribution_cap(ctx.field, "weight_distribution_dp");
  const std::uint32_t q = ctx.field.order();

  // state[s] = generating polynomial, by weight, of the vectors whose
  // support sums to s across the fibers processed so far; an empty vector is
  // the zero polynomial.
  std::vector<std::vector<Int>> state(q);
  state[0] = {Int(1)};

  for (std::uint32_t beta = 0; beta < q; ++beta) {
    std::vector<Int> bin = binomial_row(std::uint64_t(ctx.fiber.counts[beta]));
    if (beta == 0) {
      // positions in the zero fiber never move the slice
      for (std::uint32_t s = 0; s < q; ++s) {
        if (state[s].empty()) continue;
        std::uint64_t out_len = state[s].size() + bin.size() - 1;
        std::vector<Int> next(out_len);
        const std::vector<Int>& src = state[s];
        parallel_range(out_len, [&](std::uint64_t lo, std::uint64_t hi) {
          for (std::uint64_t j = lo; j < hi; ++j) {
            add_parity_terms(next[j], bin, src, j, 0);
            add_parity_terms(next[j], bin, src, j, 1);
          }
        });
        state[s] = std::move(next);
      }
      continue;
    }
    // an odd pick count flips the slice by beta, an even one keeps it:
    // process each {s, s + beta} pair once
    for (std::uint32_t s = 0; s < q; ++s) {
      std::uint32_t t = s ^ beta;
      if (t < s) continue;
      const std::vector<Int>& src_s = state[s];
      const std::vector<Int>& src_t = state[t];
      if (src_s.empty() && src_t.empty()) continue;
      std::uint64_t out_len = std::max(src_s.size(), src_t.size()) + bin.size() - 1;
      std::vector<Int> next_s(out_len), next_t(out_len);
      parallel_range(out_len, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t j = lo; j < hi; ++j) {
          add_parity_terms(next_s[j], bin, src_s, j, 0);
          add_parity_terms(next_s[j], bin, src_t, j, 1);
          add_parity_terms(next_t[j], bin, src_s, j, 1);
          add_parity_terms(next_t[j], bin, src_t, j, 0);
        }
      });
      state[s] = std::move(next_s);
      state[t] = std::move(next_t);
    }
  }

  WeightDistribution wd;
  wd.length = ctx.length;
  wd.freqs = std::move(state[0]);
  if (!wd.complete())
    throw std::logic_error("weight_distribution_dp: distribution length mismatch");
  if (wd.freqs[0] != 1)
    throw std::logic_error("weight_distribution_dp: the zero word went missing");
  return wd;
}

WeightDistribution weight_distribution_transform(const CodeContext& ctx,
                                                 const DualWeightTable& weights) {
  check_distribution_cap(ctx.field, "weight_distribution_transform");
  const std::uint32_t q = ctx.field.order();
  if (weights.q != q)
    throw std::invalid_argument("weight_distribution_transform: table/field mismatch");
  const std::uint64_t n = ctx.length;

  // group equal weights so each expansion is done once
  std::map<std::int64_t, std::uint32_t> mult;
  for (std::uint32_t a = 0; a < q; ++a) ++mult[weights.w[a]];

  std::vector<Int> acc(n + 1);
  for (const auto& [w, count] : mult) {
    std::vector<Int> c = expand_binomial_diff(n - std::uint64_t(w), std::uint64_t(w));
    std::uint32_t cnt = count;
    parallel_range(n + 1, [&](std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t j = lo; j < hi; ++j)
        mpz_addmul_ui(acc[j].get_mpz_t(), c[j].get_mpz_t(), cnt);
    });
  }

  WeightDistribution wd;
  wd.length = n;
  wd.freqs.resize(n + 1);
  parallel_range(n + 1, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t j = lo; j < hi; ++j)
      wd.freqs[j] = exact_div(acc[j], Int(q), "transform averaging");
  });
  return wd;
}

WeightDistribution weight_distribution_prefix(const CodeContext& ctx,
                                              const DualWeightTable& weights,
                                              unsigned j_max) {
  const std::uint32_t q = ctx.field.order();
  if (weights.q != q)
    throw std::invalid_argument("weight_distribution_prefix: table/field mismatch");
  if (j_max > ctx.length)
    throw std::invalid_argument("weight_distribution_prefix: prefix exceeds the length");
  const std::uint64_t n = ctx.length;

  std::vector<Int> acc(j_max + 1);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint64_t m = std::uint64_t(weights.w[a]);
    // binomial prefixes of the two factors
    std::vector<Int> cm(j_max + 1), cp(j_max + 1);
    for (unsigned i = 0; i <= j_max; ++i) {
      cm[i] = binomial(m, i);
      cp[i] = binomial(n - m, i);
    }
    for (unsigned j = 0; j <= j_max; ++j)
      for (unsigned i = 0; i <= j; ++i) {
        if (Int term = cm[i] * cp[j - i]; (i & 1))
          acc[j] -= term;
        else
          acc[j] += term;
      }
  }

  WeightDistribution wd;
  wd.length = n;
  wd.freqs.resize(j_max + 1);
  for (unsigned j = 0; j <= j_max; ++j)
    wd.freqs[j] = exact_div(acc[j], Int(q), "prefix averaging");
  return wd;
}

}  // namespace kgl
