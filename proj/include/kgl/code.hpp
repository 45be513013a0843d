#pragma once

// The binary linear code attached to GL(2,q): positions are group elements g,
// a vector v is a codeword when sum over its support of tr(g) + tr(g^-1)
// vanishes in F_q.  That kernel code has parameters [N, N - r] with
// N = |GL(2,q)|; its dual is the r-dimensional code of trace words
// c(a)_g = tr(a * (tr(g) + tr(g^-1))), whose q weights are what the closed
// forms below produce.  The full weight distribution {C_j} of the kernel code
// is computed by two independent exact routes:
//
//   dp:        slice dynamic programming over the additive group of F_q,
//              fiber by fiber, tracking one generating polynomial per
//              partial-sum value;
//   transform: C_j = (1/q) sum over a of [x^j] (1+x)^(N-w(a)) (1-x)^w(a),
//              each factor expanded by an exact first-order recurrence.
//
// A truncated variant of the transform produces only the prefix C_0..C_jmax
// by convolving binomial prefixes, cheap at any field size.

#include <cstdint>
#include <vector>

#include "kgl/bigint.hpp"
#include "kgl/field.hpp"
#include "kgl/glgroup.hpp"
#include "kgl/kloosterman.hpp"

namespace kgl {

struct CodeContext {
  const Field& field;
  std::uint64_t length;  // N = |GL(2,q)|
  FiberCensus fiber;     // closed-form census; totals checked at build

  CodeContext(const Field& f, const KloostermanTable& table);
};

// Weight of the dual codeword c(a) from the closed form
// w = q(q^3 - 2q^2 + 1 - K(a)^2) / 2; the equivalent form through the
// two-dimensional sum K_2 = K^2 - q is recomputed and compared internally.
std::int64_t dual_weight(const CodeContext& ctx, const KloostermanTable& table,
                         std::uint32_t a);

// Same weight counted directly: positions g contribute when
// tr(a * (tr g + tr g^-1)) = 1, so the weight is the census mass of the
// fibers beta with tr(a * beta) = 1.  Independent of the closed form when
// fed the enumerated census.
std::int64_t dual_weight_direct(const Field& f, const FiberCensus& census,
                                std::uint32_t a);

struct DualWeightTable {
  std::uint32_t q = 0;
  std::vector<std::int64_t> w;  // indexed by a, w[0] = 0
};

DualWeightTable dual_weight_table(const CodeContext& ctx, const KloostermanTable& table);

struct WeightDistribution {
  std::uint64_t length = 0;  // N
  std::vector<Int> freqs;    // C_0 .. C_{freqs.size()-1}

  // Whole distribution, as opposed to a truncated prefix.
  bool complete() const { return freqs.size() == length + 1; }
};

// Coefficients of (1+x)^P (1-x)^M, all P+M+1 of them, via the exact
// recurrence (k+1) c_{k+1} = (P-M) c_k - (P+M-k+1) c_{k-1}; the leading
// coefficient is checked against (-1)^M.
std::vector<Int> expand_binomial_diff(std::uint64_t P, std::uint64_t M);

// Full distribution by slice DP over fibers.  q <= 16.
WeightDistribution weight_distribution_dp(const CodeContext& ctx);

// Full distribution by the character transform of the dual weights.  q <= 16.
WeightDistribution weight_distribution_transform(const CodeContext& ctx,
                                                 const DualWeightTable& weights);

// C_0 .. C_jmax only, by truncated binomial convolution.  Any field size.
WeightDistribution weight_distribution_prefix(const CodeContext& ctx,
                                              const DualWeightTable& weights,
                                              unsigned j_max);

}  // namespace kgl
