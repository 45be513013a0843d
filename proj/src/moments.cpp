#include "kgl/moments.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kgl {

std::vector<std::vector<Int>> stirling_table(unsigned h_max) {
  std::vector<std::vector<Int>> s(h_max + 1);
  s[0] = {Int(1)};
  for (unsigned h = 1; h <= h_max; ++h) {
    s[h].assign(h + 1, Int(0));
    for (unsigned t = 1; t <= h; ++t)
      s[h][t] = Int(t) * (t < h ? s[h - 1][t] : Int(0)) + s[h - 1][t - 1];
  }
  return s;
}

Int stirling2(unsigned h, unsigned t) {
  if (t > h) return 0;
  return stirling_table(h)[h][t];
}

Int pless_second_sum(std::uint64_t n, const WeightDistribution& wd, unsigned h) {
  std::uint64_t j_hi = std::min<std::uint64_t>(n, h);
  if (wd.freqs.size() <= j_hi)
    throw std::invalid_argument("pless_second_sum: distribution prefix too short (need " +
                                std::to_string(j_hi + 1) + " entries)");
  std::vector<std::vector<Int>> s = stirling_table(h);
  std::vector<Int> fact(h + 1);
  fact[0] = 1;
  for (unsigned t = 1; t <= h; ++t) fact[t] = fact[t - 1] * t;

  Int total = 0;
  for (std::uint64_t j = 0; j <= j_hi; ++j) {
    Int inner = 0;
    for (unsigned t = unsigned(j); t <= h; ++t)
      inner += fact[t] * s[h][t] * pow2(h - t) *
               binomial(n - j, std::int64_t(n) - std::int64_t(t));
    Int term = wd.freqs[j] * inner;
    if ((h + j) & 1)
      total -= term;
    else
      total += term;
  }
  return total;
}

std::pair<Int, Int> pless_both_sides(const CodeContext& ctx, const DualWeightTable& weights,
                                     const WeightDistribution& wd, unsigned h) {
  Int lhs = 0;
  for (std::int64_t w : weights.w)
    lhs += h == 0 ? Int(1) : pow_int(w, h);

  Int signed_sum = pless_second_sum(ctx.length, wd, h);
  if (h & 1) signed_sum = -signed_sum;
  Int rhs = exact_div(signed_sum * pow2(ctx.field.degree()), pow2(h), "pless rhs scaling");
  return {lhs, rhs};
}

Int moment_seed(std::uint32_t q) { return Int(q) - 1; }

namespace {

Int recursion(const CodeContext& ctx, const WeightDistribution& wd, unsigned h,
              const std::vector<Int>& history, std::int64_t base_tail) {
  std::int64_t q = ctx.field.order();
  if (h == 0) return moment_seed(ctx.field.order());
  if (history.size() < h)
    throw std::invalid_argument("moment recursion: history must hold moments 0.." +
                                std::to_string(h - 1));
  Int base = q * q * q - 2 * q * q + base_tail;
  Int total = 0;
  for (unsigned l = 0; l < h; ++l) {
    Int term = binomial(h, l) * pow_int(base, h - l) * history[l];
    if ((h + l + 1) & 1)
      total -= term;
    else
      total += term;
  }
  Int tail = exact_div(pless_second_sum(ctx.length, wd, h), pow_int(Int(q), h - 1),
                       "moment recursion tail");
  return total + tail;
}

}  // namespace

Int mk2_recursion(const CodeContext& ctx, const WeightDistribution& wd, unsigned h,
                  const std::vector<Int>& history) {
  return recursion(ctx, wd, h, history, 1 - std::int64_t(ctx.field.order()));
}

Int mk_even_recursion(const CodeContext& ctx, const WeightDistribution& wd, unsigned h,
                      const std::vector<Int>& history) {
  return recursion(ctx, wd, h, history, 1);
}

}  // namespace kgl
