#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tuple>

#include "kgl/glgroup.hpp"

using kgl::Field;
using kgl::GL2;
using kgl::Int;

namespace {

std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t> key(const GL2& g) {
  return {g.a, g.b, g.c, g.d};
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(kgl::gl_order(2, 2) == 6);
  CHECK(kgl::gl_order(4, 1) == 3);
  CHECK(kgl::gl_order(4, 2) == 180);
  CHECK(kgl::gl_order(8, 2) == 3528);
  CHECK(kgl::gl_order(16, 2) == 61200);
  CHECK(kgl::gl_order(2, 3) == 168);
  CHECK(kgl::gl_order(4, 0) == 1);
  CHECK_THROWS_AS(kgl::gl_order(1, 2), std::invalid_argument);
}

TEST_CASE("enumeration over the two-element field") {
  Field f(1);
  std::vector<GL2> all = kgl::enumerate_gl2(f);
  REQUIRE(all.size() == 6);
  CHECK(all.front() == GL2{0, 1, 1, 0});
  CHECK(all.back() == GL2{1, 1, 1, 0});
  // strictly increasing in lexicographic order, identity present exactly once
  unsigned identities = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i) CHECK(key(all[i - 1]) < key(all[i]));
    if (all[i] == GL2{1, 0, 0, 1}) ++identities;
  }
  CHECK(identities == 1);
}

TEST_CASE("enumeration size matches the order formula") {
  for (unsigned r : {1u, 2u, 3u}) {
    Field f(r);
    CHECK(Int(std::int64_t(kgl::enumerate_gl2(f).size())) == kgl::gl_order(f.order(), 2));
  }
  std::uint64_t visited = 0;
  Field f(4);
  kgl::for_each_gl2(f, [&](const GL2&) { ++visited; });
  CHECK(Int(std::int64_t(visited)) == kgl::gl_order(16, 2));
  CHECK_THROWS_AS(kgl::enumerate_gl2(Field(5)), std::invalid_argument);
}

TEST_CASE("determinant, trace, inverse") {
  Field f(2);
  GL2 g{2, 1, 3, 1};
  CHECK(kgl::gl2_det(f, g) == (f.mul(2, 1) ^ f.mul(1, 3)));
  CHECK(kgl::gl2_trace(f, g) == 3);
  CHECK_THROWS_AS(kgl::gl2_inverse(f, GL2{1, 1, 1, 1}), std::domain_error);

  // g * g^-1 = identity for the whole group
  kgl::for_each_gl2(f, [&](const GL2& h) {
    GL2 hi = kgl::gl2_inverse(f, h);
    GL2 prod{f.add(f.mul(h.a, hi.a), f.mul(h.b, hi.c)),
             f.add(f.mul(h.a, hi.b), f.mul(h.b, hi.d)),
             f.add(f.mul(h.c, hi.a), f.mul(h.d, hi.c)),
             f.add(f.mul(h.c, hi.b), f.mul(h.d, hi.d))};
    CHECK(prod == GL2{1, 0, 0, 1});
  });
}

TEST_CASE("matrix sum by direct enumeration") {
  Field f(2);
  CHECK(kgl::gl2_kloosterman_direct(f, 1) == 84);
  CHECK_THROWS_AS(kgl::gl2_kloosterman_direct(f, 0), std::invalid_argument);
  CHECK_THROWS_AS(kgl::gl2_kloosterman_direct(Field(7), 1), std::invalid_argument);
}

TEST_CASE("recursion agrees with enumeration and closed forms") {
  for (unsigned r : {2u, 3u}) {
    Field f(r);
    std::int64_t q = f.order();
    for (std::uint32_t a = 1; a < f.order(); ++a) {
      std::int64_t direct = kgl::gl2_kloosterman_direct(f, a);
      std::int64_t k = kgl::kloosterman_sum(f, 1, a);
      CHECK(direct == q * k * k + q * q * (q - 1));
      CHECK(direct == q * (k * k - q) + q * q * q);
      CHECK(kgl::gl_kloosterman_recursive(f, 2, a) == direct);
      // seeds of the recursion
      CHECK(kgl::gl_kloosterman_recursive(f, 0, a) == 1);
      CHECK(kgl::gl_kloosterman_recursive(f, 1, a) == k);
    }
  }
}

TEST_CASE("recursion caps and climbing values") {
  Field f(2);
  CHECK_THROWS_AS(kgl::gl_kloosterman_recursive(f, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(kgl::gl_kloosterman_recursive(f, 2, 0), std::invalid_argument);
  // one hand-computed step of the recursion at t = 3, a = 1, q = 4:
  // q^2 * K_GL(2) * K + q^4 (q^2 - 1) * K_GL(1) = 16*84*3 + 256*15*3
  CHECK(kgl::gl_kloosterman_recursive(f, 3, 1) == Int(16 * 84 * 3 + 256 * 15 * 3));
}

TEST_CASE("fiber censuses by enumeration and closed form") {
  Field f4(2);
  kgl::FiberCensus direct = kgl::fiber_census_direct(f4);
  CHECK(direct.counts == std::vector<std::int64_t>{92, 40, 24, 24});
  kgl::FiberCensus formula =
      kgl::fiber_census_formula(f4, kgl::kloosterman_table(f4, 1));
  CHECK(formula.counts == direct.counts);
  CHECK(direct.total() == 180);

  Field f8(3);
  kgl::FiberCensus direct8 = kgl::fiber_census_direct(f8);
  CHECK(direct8.counts ==
        std::vector<std::int64_t>{888, 336, 400, 368, 400, 368, 400, 368});
  CHECK(kgl::fiber_census_formula(f8, kgl::kloosterman_table(f8, 1)).counts ==
        direct8.counts);

  Field f16(4);
  CHECK(kgl::fiber_census_direct(f16).counts ==
        kgl::fiber_census_formula(f16, kgl::kloosterman_table(f16, 1)).counts);
}

TEST_CASE("census preconditions") {
  CHECK_THROWS_AS(kgl::fiber_census_direct(Field(7)), std::invalid_argument);
  Field f(2);
  kgl::KloostermanTable wrong = kgl::kloosterman_table(Field(3), 1);
  CHECK_THROWS_AS(kgl::fiber_census_formula(f, wrong), std::invalid_argument);
}
