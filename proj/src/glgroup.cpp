#include "kgl/glgroup.hpp"

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

}  // namespace

Int gl_order(std::uint32_t q, unsigned n) {
  if (q < 2) throw std::invalid_argument("gl_order: q must be a field order");
  Int total = 1;
  if (n >= 2) total = pow_int(Int(q), std::uint64_t(n) * (n - 1) / 2);
  for (unsigned j = 1; j <= n; ++j) total *= pow_int(Int(q), j) - 1;
  return total;
}

std::uint32_t gl2_det(const Field& f, const GL2& g) {
  return f.mul(g.a, g.d) ^ f.mul(g.b, g.c);
}

std::uint32_t gl2_trace(const Field&, const GL2& g) { return g.a ^ g.d; }

GL2 gl2_inverse(const Field& f, const GL2& g) {
  std::uint32_t det = gl2_det(f, g);
  if (det == 0) throw std::domain_error("gl2_inverse: singular matrix");
  std::uint32_t s = f.inv(det);
  // adjugate of (a b; c d) is (d b; c a) in characteristic 2
  return GL2{f.mul(s, g.d), f.mul(s, g.b), f.mul(s, g.c), f.mul(s, g.a)};
}

std::vector<GL2> enumerate_gl2(const Field& f) {
  if (f.order() > 16)
    throw std::invalid_argument("enumerate_gl2: materialized list is capped at q <= 16");
  std::vector<GL2> out;
  for_each_gl2(f, [&](const GL2& g) { out.push_back(g); });
  return out;
}

std::int64_t gl2_kloosterman_direct(const Field& f, std::uint32_t a) {
  require_degree(f);
  require_unit(f, a, "gl2_kloosterman_direct");
  check_enumeration_cap(f, "gl2_kloosterman_direct");
  std::uint32_t q = f.order();
  // parallel over the top-left entry; each block walks its own sub-cube
  return parallel_blocks(
      q, std::int64_t(0),
      [&](std::uint64_t lo, std::uint64_t hi) {
        std::int64_t s = 0;
        for (std::uint32_t ga = std::uint32_t(lo); ga < hi; ++ga)
          for (std::uint32_t gb = 0; gb < q; ++gb)
            for (std::uint32_t gc = 0; gc < q; ++gc)
              for (std::uint32_t gd = 0; gd < q; ++gd) {
                GL2 g{ga, gb, gc, gd};
                if (gl2_det(f, g) == 0) continue;
                GL2 gi = gl2_inverse(f, g);
                s += f.chi(gl2_trace(f, g) ^ f.mul(a, gl2_trace(f, gi)));
              }
        return s;
      },
      [](std::int64_t& acc, std::int64_t part) { acc += part; });
}

Int gl_kloosterman_recursive(const Field& f, unsigned t, std::uint32_t a) {
  require_degree(f);
  require_unit(f, a, "gl_kloosterman_recursive");
  if (t > 6)
    throw std::invalid_argument("gl_kloosterman_recursive: t = " + std::to_string(t) +
                                " exceeds the cap 6");
  Int q = f.order();
  Int k = kloosterman_sum(f, 1, a);
  Int prev2 = 1;  // K_GL(0)
  if (t == 0) return prev2;
  Int prev1 = k;  // K_GL(1)
  for (unsigned s = 2; s <= t; ++s) {
    Int cur = pow_int(q, s - 1) * prev1 * k +
              pow_int(q, 2 * s - 2) * (pow_int(q, s - 1) - 1) * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

Int FiberCensus::total() const {
  Int t = 0;
  for (std::int64_t c : counts) t += c;
  return t;
}

FiberCensus fiber_census_direct(const Field& f) {
  require_degree(f);
  check_enumeration_cap(f, "fiber_census_direct");
  std::uint32_t q = f.order();
  FiberCensus out;
  out.q = q;
  out.counts = parallel_blocks(
      q, std::vector<std::int64_t>(q, 0),
      [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::int64_t> counts(q, 0);
        for (std::uint32_t ga = std::uint32_t(lo); ga < hi; ++ga)
          for (std::uint32_t gb = 0; gb < q; ++gb)
            for (std::uint32_t gc = 0; gc < q; ++gc)
              for (std::uint32_t gd = 0; gd < q; ++gd) {
                GL2 g{ga, gb, gc, gd};
                if (gl2_det(f, g) == 0) continue;
                GL2 gi = gl2_inverse(f, g);
                ++counts[gl2_trace(f, g) ^ gl2_trace(f, gi)];
              }
        return counts;
      },
      [](std::vector<std::int64_t>& acc, std::vector<std::int64_t> part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
      });
  return out;
}

FiberCensus fiber_census_formula(const Field& f, const KloostermanTable& table) {
  require_degree(f);
  if (table.m != 1 || table.q != f.order())
    throw std::invalid_argument("fiber_census_formula: need the m = 1 table of this field");
  std::int64_t q = f.order();
  FiberCensus out;
  out.q = f.order();
  out.counts.assign(f.order(), 0);
  out.counts[0] = q * (2 * q * q - 2 * q - 1);
  for (std::uint32_t beta = 1; beta < f.order(); ++beta)
    out.counts[beta] = q * (q * q - 2 * q - 1 + table.value(f.inv(beta)));
  // the fibers partition the group
  if (out.total() != gl_order(f.order(), 2))
    throw std::logic_error("fiber_census_formula: fiber sizes do not sum to |GL(2,q)|");
  return out;
}

}  // namespace kgl
