#include "kgl/field.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

namespace kgl {

int poly_degree(std::uint64_t p) {
  if (p == 0) return -1;
  int d = 0;
  while (p >>= 1) ++d;
  return d;
}

std::string to_hex(std::uint32_t v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", v);
  return buf;
}

namespace {

// Remainder of a mod b over F_2, b != 0.
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db; da = poly_degree(a))
    a ^= b << (da - db);
  return a;
}

}  // namespace

bool poly_irreducible(std::uint32_t p) {
  int d = poly_degree(p);
  if (d < 1) return false;
  if (d == 1) return true;
  for (int k = 1; 2 * k <= d; ++k)
    for (std::uint64_t div = std::uint64_t(1) << k; div < std::uint64_t(2) << k; ++div)
      if (poly_mod(p, div) == 0) return false;
  return true;
}

std::uint32_t Field::builtin_modulus(unsigned r) {
  // Verified against the selection rule by exhaustive search before freezing.
  static constexpr std::uint32_t table[kMaxDegree + 1] = {
      0,     0x2,   0x7,   0xb,   0x13,  0x25,  0x43,
      0x83,  0x11b, 0x203, 0x409, 0x805, 0x1009};
  if (r < kMinDegree || r > kMaxDegree)
    throw std::invalid_argument("field degree must be in [1, 12], got " + std::to_string(r));
  return table[r];
}

Field::Field(unsigned r) : Field(r, builtin_modulus(r)) {}

Field::Field(unsigned r, std::uint32_t modulus)
    : r_(r), q_(std::uint32_t(1) << r), mod_(modulus) {
  if (r < kMinDegree || r > kMaxDegree)
    throw std::invalid_argument("field degree must be in [1, 12], got " + std::to_string(r));
  if (poly_degree(modulus) != int(r))
    throw std::invalid_argument("modulus " + to_hex(modulus) + " is not degree " +
                                std::to_string(r));
  if (!poly_irreducible(modulus))
    throw std::invalid_argument("modulus is reducible over F_2");
  build_tables();
}

std::uint32_t Field::clmul_mod(std::uint32_t x, std::uint32_t y) const {
  std::uint64_t acc = 0, a = x;
  for (std::uint64_t b = y; b; b >>= 1, a <<= 1)
    if (b & 1) acc ^= a;
  for (int d = poly_degree(acc); d >= int(r_); d = poly_degree(acc))
    acc ^= std::uint64_t(mod_) << (d - r_);
  return std::uint32_t(acc);
}

std::uint32_t Field::pow(std::uint32_t x, std::uint64_t e) const {
  std::uint32_t acc = 1, base = x;
  for (; e; e >>= 1) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
  }
  return acc;
}

std::uint32_t Field::inv(std::uint32_t x) const {
  if (x == 0) throw std::domain_error("inverse of 0");
  if (!inv_table_.empty()) return inv_table_[x];
  return pow(x, q_ - 2);
}

void Field::build_tables() {
  if (q_ <= kMulTableLimit) {
    mul_table_.assign((std::size_t)q_ * q_, 0);
    for (std::uint32_t x = 0; x < q_; ++x)
      for (std::uint32_t y = x; y < q_; ++y) {
        std::uint32_t p = clmul_mod(x, y);
        mul_table_[(std::size_t)x * q_ + y] = p;
        mul_table_[(std::size_t)y * q_ + x] = p;
      }
  }

  // tr(x) = x + x^2 + x^4 + ... + x^(2^(r-1)), accumulated by squaring.
  trace_table_.assign(q_, 0);
  for (std::uint32_t x = 0; x < q_; ++x) {
    std::uint32_t t = x, y = x;
    for (unsigned i = 1; i < r_; ++i) {
      y = sqr(y);
      t ^= y;
    }
    if (t > 1)
      throw std::logic_error("trace fell outside F_2; modulus table is corrupt");
    trace_table_[x] = std::uint8_t(t);
  }

  inv_table_.assign(q_, 0);
  for (std::uint32_t x = 1; x < q_; ++x) {
    inv_table_[x] = pow(x, q_ - 2);
    if (mul(x, inv_table_[x]) != 1)
      throw std::logic_error("inverse table self-check failed");
  }
}

}  // namespace kgl
