#include "kgl/kloosterman.hpp"

#include <numeric>
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

void require_unit(const Field& f, std::uint32_t a, const char* who) {
  if (a == 0 || a >= f.order())
    throw std::invalid_argument(std::string(who) + ": argument " + to_hex(a) +
                                " is not a unit of the field");
}

// Nested loop over the m free coordinates, carrying the running sum and
// product.  At the innermost level the character argument collapses to
// partial_sum + alpha + c / alpha with c = a / partial_prod.
std::int64_t sum_rec(const Field& f, unsigned depth, std::uint32_t partial_prod,
                     std::uint32_t partial_sum, std::uint32_t a) {
  std::uint32_t q = f.order();
  if (depth == 1) {
    std::uint32_t c = f.mul(a, f.inv(partial_prod));
    std::int64_t s = 0;
    for (std::uint32_t alpha = 1; alpha < q; ++alpha)
      s += f.chi(partial_sum ^ alpha ^ f.mul(c, f.inv(alpha)));
    return s;
  }
  std::int64_t s = 0;
  for (std::uint32_t alpha = 1; alpha < q; ++alpha)
    s += sum_rec(f, depth - 1, f.mul(partial_prod, alpha), partial_sum ^ alpha, a);
  return s;
}

}  // namespace

unsigned kloosterman_max_m(const Field& f) { return f.order() <= 64 ? 3 : 2; }

std::int64_t kloosterman_sum(const Field& f, unsigned m, std::uint32_t a) {
  require_degree(f);
  require_unit(f, a, "kloosterman_sum");
  if (m == 0) return f.chi(a);  // degenerate seed used by the twisted-sum identity
  if (m > kloosterman_max_m(f))
    throw std::invalid_argument("kloosterman_sum: m = " + std::to_string(m) +
                                " exceeds the enumeration cap " +
                                std::to_string(kloosterman_max_m(f)) + " at q = " +
                                std::to_string(f.order()));
  return sum_rec(f, m, 1, 0, a);
}

std::int64_t KloostermanTable::value(std::uint32_t a) const {
  if (a == 0 || a >= q)
    throw std::invalid_argument("KloostermanTable::value: " + to_hex(a) +
                                " is not a unit");
  return values[a - 1];
}

KloostermanTable kloosterman_table(const Field& f, unsigned m) {
  require_degree(f);
  if (m == 0 || m > kloosterman_max_m(f))
    throw std::invalid_argument("kloosterman_table: m out of range");
  KloostermanTable t;
  t.m = m;
  t.q = f.order();
  t.values.assign(t.q - 1, 0);
  parallel_range(t.q - 1, [&](std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i)
      t.values[i] = sum_rec(f, m, 1, 0, std::uint32_t(i + 1));
  });
  if (m == 1) {
    for (std::int64_t v : t.values)
      if (v * v > 4 * std::int64_t(t.q))
        throw std::logic_error("kloosterman_table: value " + std::to_string(v) +
                               " breaks the square-root bound at q = " +
                               std::to_string(t.q));
  }
  return t;
}

ValueCensus value_census(const KloostermanTable& table) {
  if (table.m != 1)
    throw std::invalid_argument("value_census: table must be the m = 1 table");
  ValueCensus c;
  c.q = table.q;
  for (std::int64_t v : table.values) ++c.multiplicity[v];
  for (const auto& [t, n] : c.multiplicity) {
    if (t * t >= 4 * std::int64_t(c.q) || ((t % 4) + 4) % 4 != 3)
      throw std::logic_error("value_census: value " + std::to_string(t) +
                             " outside the proven support at q = " +
                             std::to_string(c.q));
    (void)n;
  }
  return c;
}

ValueCensus value_census(const Field& f) {
  return value_census(kloosterman_table(f, 1));
}

std::uint64_t primitive_class_number(std::int64_t d) {
  if (d >= 0 || (((d % 4) + 4) % 4 != 0 && ((d % 4) + 4) % 4 != 1))
    throw std::invalid_argument("class number needs d < 0 with d = 0,1 mod 4");
  // Reduced positive definite forms ax^2 + bxy + cy^2: |b| <= a <= c, with
  // b >= 0 when |b| = a or a = c; then a <= sqrt(|d|/3).
  std::uint64_t count = 0;
  std::int64_t limit = 1;
  while (3 * (limit + 1) * (limit + 1) <= -d) ++limit;
  for (std::int64_t a = 1; a <= limit; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      std::int64_t num = b * b - d;
      if (num % (4 * a) != 0) continue;
      std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

std::uint64_t kronecker_class_number(std::int64_t d) {
  if (d >= 0 || (((d % 4) + 4) % 4 != 0 && ((d % 4) + 4) % 4 != 1))
    throw std::invalid_argument("class number needs d < 0 with d = 0,1 mod 4");
  std::uint64_t total = 0;
  for (std::int64_t fsq = 1; fsq * fsq <= -d; ++fsq) {
    if (d % (fsq * fsq) != 0) continue;
    std::int64_t d0 = d / (fsq * fsq);
    std::int64_t m4 = ((d0 % 4) + 4) % 4;
    if (m4 != 0 && m4 != 1) continue;
    total += primitive_class_number(d0);
  }
  return total;
}

std::int64_t twisted_character_sum(const Field& f, const KloostermanTable& table,
                                   std::uint32_t beta) {
  require_degree(f);
  if (table.q != f.order())
    throw std::invalid_argument("twisted_character_sum: table/field mismatch");
  if (beta >= f.order())
    throw std::invalid_argument("twisted_character_sum: beta out of range");
  std::int64_t s = 0;
  for (std::uint32_t a = 1; a < f.order(); ++a)
    s += f.chi(f.mul(a, beta)) * table.values[a - 1];
  return s;
}

Int power_moment(const KloostermanTable& table, unsigned h) {
  Int s = 0;
  for (std::int64_t v : table.values) s += pow_int(v, h);
  return s;
}

}  // namespace kgl
