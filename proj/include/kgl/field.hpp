#pragma once

// Binary field F_2^r with elements stored as r-bit polynomial bitmasks.
// Arithmetic is carry-less multiplication reduced by an irreducible degree-r
// modulus; for small fields a full multiplication table is built so the hot
// loops are pure lookups.  The trace table is filled by repeated squaring so
// its correctness is independent of any closed form.

#include <cstdint>
#include <string>
#include <vector>

namespace kgl {

// Degree of a polynomial bitmask, -1 for the zero polynomial.
int poly_degree(std::uint64_t p);

// Lowercase 0x-prefixed hex, the bitmask print format used everywhere.
std::string to_hex(std::uint32_t v);

// Irreducibility over F_2 by trial division against every polynomial of
// degree 1 .. deg(p)/2.
bool poly_irreducible(std::uint32_t p);

class Field {
 public:
  // Lowest-weight, then lexicographically least, irreducible polynomial of
  // each degree.  Frozen as data so a table regression cannot pass silently.
  static std::uint32_t builtin_modulus(unsigned r);

  // r = 1 is accepted (modulus x) solely so matrix-group enumeration over F_2
  // is expressible; all sum/census/code entry points require r >= 2.
  static constexpr unsigned kMinDegree = 1;
  static constexpr unsigned kMaxDegree = 12;

  // Largest field that gets a full q*q multiplication table.
  static constexpr std::uint32_t kMulTableLimit = 256;

  explicit Field(unsigned r);
  Field(unsigned r, std::uint32_t modulus);

  unsigned degree() const { return r_; }
  std::uint32_t order() const { return q_; }
  std::uint32_t modulus() const { return mod_; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return x ^ y; }

  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    if (!mul_table_.empty()) return mul_table_[(std::size_t)x * q_ + y];
    return clmul_mod(x, y);
  }

  std::uint32_t sqr(std::uint32_t x) const { return mul(x, x); }

  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;

  // Multiplicative inverse; rejects 0.
  std::uint32_t inv(std::uint32_t x) const;

  // Absolute trace to F_2, from the per-field table.
  unsigned trace(std::uint32_t x) const { return trace_table_[x]; }

  // Canonical additive character: (-1)^trace(x).
  int chi(std::uint32_t x) const { return trace_table_[x] ? -1 : 1; }

 private:
  unsigned r_;
  std::uint32_t q_;
  std::uint32_t mod_;
  std::vector<std::uint8_t> trace_table_;
  std::vector<std::uint32_t> inv_table_;
  std::vector<std::uint32_t> mul_table_;

  std::uint32_t clmul_mod(std::uint32_t x, std::uint32_t y) const;
  void build_tables();
};

}  // namespace kgl
