#pragma once

// Arbitrary-precision integer type and the small exact-arithmetic helpers the
// rest of the library leans on.  Every division in this codebase is supposed
// to be exact; exact_div makes that assumption loud instead of silent.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kgl {

using Int = mpz_class;

// n choose k with the usual conventions: 0 for k < 0 or k > n.
inline Int binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<std::uint64_t>(k));
  return r;
}

inline Int factorial(std::uint64_t n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int pow_int(const Int& base, std::uint64_t e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int pow_int(std::int64_t base, std::uint64_t e) {
  return pow_int(Int(base), e);
}

inline Int pow2(std::uint64_t e) {
  Int r = 1;
  r <<= e;
  return r;
}

// Quotient of an exact division; throws if the division leaves a remainder.
inline Int exact_div(const Int& num, const Int& den, const char* what) {
  if (den == 0) throw std::domain_error(std::string(what) + ": zero divisor");
  Int q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0)
    throw std::logic_error(std::string(what) + ": inexact division " +
                           num.get_str() + " / " + den.get_str());
  return q;
}

}  // namespace kgl
