#pragma once

// The group GL(2,q) over a binary field: exhaustive enumeration in a fixed
// lexicographic order, matrix Kloosterman sums
//
//   K_GL(t)(a) = sum over g in GL(t,q) of chi(Tr g + a * Tr g^-1)
//
// evaluated both by direct enumeration (t = 2) and by the two-step recursion
// in t seeded with the ordinary sum, and the census of trace-pair fibers
// tr(g) + tr(g^-1) = beta that the code construction is built on.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgl/bigint.hpp"
#include "kgl/field.hpp"
#include "kgl/kloosterman.hpp"

namespace kgl {

// Row-major 2x2 matrix (a b; c d) over the field.
struct GL2 {
  std::uint32_t a = 0, b = 0, c = 0, d = 0;
  bool operator==(const GL2&) const = default;
};

// |GL(n,q)| = q^(n(n-1)/2) * prod_{j=1..n} (q^j - 1).
Int gl_order(std::uint32_t q, unsigned n);

std::uint32_t gl2_det(const Field& f, const GL2& g);
std::uint32_t gl2_trace(const Field& f, const GL2& g);

// Inverse via the adjugate divided by the determinant; rejects singular g.
GL2 gl2_inverse(const Field& f, const GL2& g);

// Direct enumeration is exhaustive over q^4 candidate matrices; cap the
// field size so every such loop stays inside an honest time budget.
inline void check_enumeration_cap(const Field& f, const char* who) {
  if (f.order() > 64)
    throw std::invalid_argument(std::string(who) +
                                ": direct enumeration is capped at q <= 64, got q = " +
                                std::to_string(f.order()));
}

// Visit every invertible matrix in lexicographic (a, b, c, d) order.  The
// traversal order is part of the interface; consumers freeze against it.
template <class Fn>
void for_each_gl2(const Field& f, Fn&& fn) {
  check_enumeration_cap(f, "for_each_gl2");
  std::uint32_t q = f.order();
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          GL2 g{a, b, c, d};
          if (gl2_det(f, g) != 0) fn(g);
        }
}

// Materialized enumeration, for small q where holding the list is sensible.
std::vector<GL2> enumerate_gl2(const Field& f);  // q <= 16

// K_GL(2)(a) by direct enumeration.  q <= 64, a a unit.
std::int64_t gl2_kloosterman_direct(const Field& f, std::uint32_t a);

// K_GL(t)(a) via the recursion in t, seeded by K_GL(0) = 1 and the ordinary
// sum K_GL(1) = K(a).  t <= 6.
Int gl_kloosterman_recursive(const Field& f, unsigned t, std::uint32_t a);

// counts[beta] = #{g in GL(2,q) : tr(g) + tr(g^-1) = beta}.
struct FiberCensus {
  std::uint32_t q = 0;
  std::vector<std::int64_t> counts;

  Int total() const;
};

FiberCensus fiber_census_direct(const Field& f);  // q <= 64
FiberCensus fiber_census_formula(const Field& f, const KloostermanTable& table);

}  // namespace kgl
