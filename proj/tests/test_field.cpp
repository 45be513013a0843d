#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kgl/field.hpp"

using kgl::Field;

TEST_CASE("polynomial degree and irreducibility") {
  CHECK(kgl::poly_degree(0) == -1);
  CHECK(kgl::poly_degree(1) == 0);
  CHECK(kgl::poly_degree(0x7) == 2);
  CHECK(kgl::poly_degree(0x1009) == 12);

  CHECK(kgl::poly_irreducible(0x7));    // x^2+x+1
  CHECK(kgl::poly_irreducible(0xb));    // x^3+x+1
  CHECK(kgl::poly_irreducible(0x13));   // x^4+x+1
  CHECK_FALSE(kgl::poly_irreducible(0x5));   // x^2+1 = (x+1)^2
  CHECK_FALSE(kgl::poly_irreducible(0x11));  // x^4+1
  CHECK_FALSE(kgl::poly_irreducible(0xf));   // x^3+x^2+x+1 has root 1
  CHECK_FALSE(kgl::poly_irreducible(1));
}

TEST_CASE("built-in modulus table") {
  const std::uint32_t expected[] = {0x2,  0x7,   0xb,   0x13,  0x25,  0x43,
                                    0x83, 0x11b, 0x203, 0x409, 0x805, 0x1009};
  for (unsigned r = 1; r <= 12; ++r) {
    std::uint32_t m = Field::builtin_modulus(r);
    CHECK(m == expected[r - 1]);
    CHECK(kgl::poly_degree(m) == int(r));
    CHECK(kgl::poly_irreducible(m));
  }
  CHECK_THROWS_AS(Field::builtin_modulus(0), std::invalid_argument);
  CHECK_THROWS_AS(Field::builtin_modulus(13), std::invalid_argument);
}

TEST_CASE("construction validates the modulus") {
  CHECK_THROWS_AS(Field(4, 0x11), std::invalid_argument);  // reducible
  CHECK_THROWS_AS(Field(4, 0x7), std::invalid_argument);   // wrong degree
  CHECK_THROWS_AS(Field(0), std::invalid_argument);
  CHECK_THROWS_AS(Field(13), std::invalid_argument);
  CHECK_NOTHROW(Field(4, 0x19));  // x^4+x^3+1, the other common choice
}

TEST_CASE("arithmetic in the four-element field") {
  Field f(2);
  CHECK(f.order() == 4);
  CHECK(f.modulus() == 0x7);

  // x * x = x + 1 under x^2 + x + 1
  CHECK(f.mul(0x2, 0x2) == 0x3);
  CHECK(f.mul(0x2, 0x3) == 0x1);
  CHECK(f.add(0x2, 0x3) == 0x1);

  CHECK(f.inv(1) == 1);
  CHECK(f.inv(2) == 3);
  CHECK(f.inv(3) == 2);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);

  const unsigned traces[] = {0, 0, 1, 1};
  for (std::uint32_t x = 0; x < 4; ++x) {
    CHECK(f.trace(x) == traces[x]);
    CHECK(f.chi(x) == (traces[x] ? -1 : 1));
  }
}

TEST_CASE("field axioms hold across the table range") {
  for (unsigned r : {2u, 3u, 5u, 8u}) {
    Field f(r);
    std::uint32_t q = f.order();
    for (std::uint32_t x = 0; x < q; ++x) {
      CHECK(f.mul(x, 1) == x);
      if (x) CHECK(f.mul(x, f.inv(x)) == 1);
      CHECK(f.trace(f.sqr(x)) == f.trace(x));  // Frobenius fixes the trace
      if (x) CHECK(f.pow(x, q - 1) == 1);
    }
    // distributivity spot grid
    for (std::uint32_t x = 0; x < q; x += 3)
      for (std::uint32_t y = 1; y < q; y += 5)
        for (std::uint32_t z = 1; z < q; z += 7)
          CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
    // trace is balanced between the fibers
    unsigned ones = 0;
    for (std::uint32_t x = 0; x < q; ++x) ones += f.trace(x);
    CHECK(ones == q / 2);
  }
}

TEST_CASE("character sums are orthogonal") {
  for (unsigned r : {2u, 3u, 4u, 6u}) {
    Field f(r);
    for (std::uint32_t c = 0; c < f.order(); ++c) {
      std::int64_t s = 0;
      for (std::uint32_t x = 0; x < f.order(); ++x) s += f.chi(f.mul(c, x));
      CHECK(s == (c == 0 ? std::int64_t(f.order()) : 0));
    }
  }
}

TEST_CASE("large fields drop the multiplication table but agree with it") {
  Field big(12);
  CHECK(big.order() == 4096);
  // inverse and power still work through carry-less multiplication
  for (std::uint32_t x : {1u, 2u, 0x123u, 0xfffu, 0x800u}) {
    CHECK(big.mul(x, big.inv(x)) == 1);
    CHECK(big.pow(x, 4095) == 1);
  }
  CHECK(big.trace(0) == 0);
  // associativity spot checks
  CHECK(big.mul(big.mul(0x123, 0x456), 0x789) == big.mul(0x123, big.mul(0x456, 0x789)));
}

TEST_CASE("degree one is allowed for matrix enumeration only") {
  Field f(1);
  CHECK(f.order() == 2);
  CHECK(f.trace(1) == 1);
  CHECK(f.chi(1) == -1);
  CHECK(f.mul(1, 1) == 1);
  CHECK(f.inv(1) == 1);
}

TEST_CASE("hex formatting") {
  CHECK(kgl::to_hex(0) == "0x0");
  CHECK(kgl::to_hex(0x1b) == "0x1b");
  CHECK(kgl::to_hex(4095) == "0xfff");
}
