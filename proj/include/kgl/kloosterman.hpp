#pragma once

// Exponential sums over F_2^r with the canonical additive character
// chi(x) = (-1)^tr(x):
//
//   K_m(a) = sum over alpha_1..alpha_m in F_q^*
//            of chi(alpha_1 + ... + alpha_m + a / (alpha_1 * ... * alpha_m))
//
// computed by exhaustive iteration over the m free coordinates, plus the
// derived objects built from the m = 1 table: the value census with its
// class-number cross-check, character-twisted sums, and power moments.

#include <cstdint>
#include <map>
#include <vector>

#include "kgl/bigint.hpp"
#include "kgl/field.hpp"

namespace kgl {

// Exhaustive iteration cap: (q-1)^m terms must stay enumerable.
unsigned kloosterman_max_m(const Field& f);

// K_m(a) for a != 0.  m = 0 is the degenerate seed chi(a).
std::int64_t kloosterman_sum(const Field& f, unsigned m, std::uint32_t a);

struct KloostermanTable {
  unsigned m = 1;
  std::uint32_t q = 0;
  std::vector<std::int64_t> values;  // index a - 1, a in [1, q)

  std::int64_t value(std::uint32_t a) const;
};

// All values for a in F_q^*, parallel over a.  For m = 1 every entry is
// checked against the square-root bound t^2 <= 4q at build time.
KloostermanTable kloosterman_table(const Field& f, unsigned m = 1);

// Multiplicity of each distinct m = 1 value.
struct ValueCensus {
  std::uint32_t q = 0;
  std::map<std::int64_t, std::uint32_t> multiplicity;
};

// Census over a in F_q^*; every value is required to satisfy |t| < 2*sqrt(q)
// and t = -1 mod 4, which is a theorem, so a violation throws.
ValueCensus value_census(const Field& f);
ValueCensus value_census(const KloostermanTable& table);

// Kronecker class number H(d) for d < 0, d = 0 or 1 mod 4: the number of
// classes of positive definite binary quadratic forms of discriminant d with
// imprimitive forms included, i.e. sum over f^2 | d (with d/f^2 a valid
// discriminant) of the primitive class number h(d/f^2).
std::uint64_t kronecker_class_number(std::int64_t d);

// Primitive-form class count for one discriminant, by reduced-form search.
std::uint64_t primitive_class_number(std::int64_t d);

// sum over a in F_q^* of chi(a * beta) * K_m(a).  table.m == m.
std::int64_t twisted_character_sum(const Field& f, const KloostermanTable& table,
                                   std::uint32_t beta);

// sum over a in F_q^* of value(a)^h, exact.
Int power_moment(const KloostermanTable& table, unsigned h);

}  // namespace kgl
