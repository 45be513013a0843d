#pragma once

// Power moments of Kloosterman sums through the weight machinery: the Pless
// identity ties power sums of the dual-code weights to the kernel-code
// distribution {C_j}, and rearranging it turns the h-th moment of the
// two-dimensional sums (and of even powers of the ordinary sums) into a
// recursion over lower moments plus a distribution-weighted combinatorial
// sum.  Everything is exact; the q^(h-1) and 2^(h-r) divisions the closed
// forms promise are asserted, not assumed.

#include <cstdint>
#include <utility>
#include <vector>

#include "kgl/bigint.hpp"
#include "kgl/code.hpp"

namespace kgl {

// Stirling numbers of the second kind S(h, t) for 0 <= t <= h <= h_max,
// by the triangle recurrence S(h, t) = t S(h-1, t) + S(h-1, t-1).
std::vector<std::vector<Int>> stirling_table(unsigned h_max);

Int stirling2(unsigned h, unsigned t);

// S2(h) = sum_{j=0}^{min(N,h)} (-1)^(h+j) C_j
//         * sum_{t=j}^{h} t! S(h,t) 2^(h-t) binom(N-j, N-t),
// the distribution-weighted side shared by the Pless identity and both
// moment recursions.  Needs freqs[0..min(N,h)].
Int pless_second_sum(std::uint64_t n, const WeightDistribution& wd, unsigned h);

// lhs = sum over a in F_q of w(c(a))^h with 0^0 = 1;
// rhs = (-1)^h S2(h) * 2^(r-h), the division by 2^h checked exact.
// The pair is returned so callers can assert equality themselves.
std::pair<Int, Int> pless_both_sides(const CodeContext& ctx, const DualWeightTable& weights,
                                     const WeightDistribution& wd, unsigned h);

// h = 0 moment of either family: the number of units.
Int moment_seed(std::uint32_t q);

// h-th moment of the two-dimensional sums K_2 from the moments 0..h-1
// (history[l] = moment l) and the distribution prefix:
//   sum_{l<h} (-1)^(h+l+1) binom(h,l) (q^3-2q^2-q+1)^(h-l) history[l]
//   + S2(h) / q^(h-1).
Int mk2_recursion(const CodeContext& ctx, const WeightDistribution& wd, unsigned h,
                  const std::vector<Int>& history);

// Same shape for the 2h-th moments of the ordinary sums, with base
// q^3 - 2q^2 + 1; history[l] = moment 2l.
Int mk_even_recursion(const CodeContext& ctx, const WeightDistribution& wd, unsigned h,
                      const std::vector<Int>& history);

}  // namespace kgl
