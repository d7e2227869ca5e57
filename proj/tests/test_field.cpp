#include "doctest.h"

#include <cstdlib>

#include "ncspace/field.hpp"

using namespace ncspace;

namespace {
Scalar rand_scalar(const FieldPtr& F) {
  std::vector<Rational> c(static_cast<size_t>(F->degree()));
  for (auto& x : c) {
    long long num = std::rand() % 19 - 9;
    long long den = F->is_char0() ? (1 + std::rand() % 7) : 1;
    x = Rational(BigInt(num), BigInt(den));
  }
  return F->from_coeffs(c);
}

void check_field_axioms(const FieldPtr& F, int trials) {
  for (int t = 0; t < trials; ++t) {
    Scalar a = rand_scalar(F), b = rand_scalar(F), c = rand_scalar(F);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + (-a)).is_zero());
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      CHECK(a / a == F->one());
    }
    CHECK((a * F->one()) == a);
    CHECK((a + F->zero()) == a);
  }
}
}  // namespace

TEST_CASE("field axioms hold on randomized triples for every supported kind") {
  std::srand(777);
  check_field_axioms(Field::rationals(), 1000);
  check_field_axioms(Field::prime(7), 1000);
  check_field_axioms(Field::extension_of_q(IntPoly::from_ints({1, 1, 1})), 1000);   // Q(zeta3)
  check_field_axioms(Field::extension_of_q(IntPoly::from_ints({-2, 0, 1})), 1000);  // Q(sqrt2)
  check_field_axioms(Field::extension_of_fp(2, IntPoly::from_ints({1, 1, 1})), 1000);  // F4
  check_field_axioms(Field::extension_of_fp(3, IntPoly::from_ints({1, 0, 1})), 1000);  // F9
}

TEST_CASE("extension construction rejects reducible polynomials") {
  CHECK_THROWS(Field::extension_of_q(IntPoly::from_ints({-1, 0, 1})));     // x^2-1
  CHECK_THROWS(Field::extension_of_fp(7, IntPoly::from_ints({1, 1, 1})));  // splits mod 7
  CHECK_THROWS(Field::extension_of_q(IntPoly::from_ints({0, 0, 0, 0, 0, 0, 0, 1})));  // degree 7
  CHECK_NOTHROW(Field::extension_of_fp(5, IntPoly::from_ints({2, 0, 1})));  // x^2+2 irred mod 5
}

TEST_CASE("irreducibility over Q handles the mod-p-reducible quartic") {
  // x^4 + 1 is reducible mod every prime but irreducible over Q
  CHECK(Field::irreducible_over_q(IntPoly::from_ints({1, 0, 0, 0, 1})));
  CHECK_FALSE(Field::irreducible_over_q(IntPoly::from_ints({1, 2, 1})));  // (x+1)^2
  CHECK(Field::irreducible_over_q(IntPoly::from_ints({1, 1, 1})));
  CHECK(Field::irreducible_mod_p(IntPoly::from_ints({1, 1, 1}), 2));
  CHECK_FALSE(Field::irreducible_mod_p(IntPoly::from_ints({1, 1, 1}), 7));
}

TEST_CASE("quadratic extension arithmetic is exact") {
  auto F = Field::extension_of_q(IntPoly::from_ints({-2, 0, 1}));  // Q(sqrt2)
  Scalar t = F->generator();
  CHECK(t * t == F->from_int(2));
  Scalar x = F->from_int(1) + t;           // 1 + sqrt2
  Scalar inv = x.inverse();                // sqrt2 - 1
  CHECK(inv == t - F->one());
  CHECK((x * inv).is_one());
}

TEST_CASE("cyclotomic cube root identities") {
  auto F = Field::extension_of_q(IntPoly::from_ints({1, 1, 1}));  // Q(zeta3)
  Scalar z = F->generator();
  CHECK(z.pow(3).is_one());
  CHECK((F->one() + z + z * z).is_zero());
  CHECK(z.pow(2) == z.inverse());
}

TEST_CASE("constant resolution: zeta3 over F7 resolves to the first root") {
  auto F = Field::prime(7);
  Scalar r = F->find_root(IntPoly::from_ints({1, 1, 1}));
  // roots of x^2+x+1 mod 7 are 2 and 4; deterministic order finds 2
  CHECK(r == F->from_int(2));
  CHECK((r * r + r + F->one()).is_zero());
}

TEST_CASE("constant resolution failures raise ConstantUnresolvable") {
  CHECK_THROWS_AS(Field::prime(5)->find_root(IntPoly::from_ints({1, 1, 1})),
                  ConstantUnresolvable);  // x^2+x+1 irreducible mod 5
  CHECK_THROWS_AS(Field::rationals()->find_root(IntPoly::from_ints({-2, 0, 1})),
                  ConstantUnresolvable);
}

TEST_CASE("constant resolution in extensions") {
  auto F = Field::extension_of_q(IntPoly::from_ints({1, 1, 1}));
  CHECK(F->find_root(IntPoly::from_ints({1, 1, 1})) == F->generator());
  Scalar conj = -(F->one() + F->generator());  // the other root
  CHECK((conj * conj + conj + F->one()).is_zero());
  auto F4 = Field::extension_of_fp(2, IntPoly::from_ints({1, 1, 1}));
  Scalar z = F4->find_root(IntPoly::from_ints({1, 1, 1}));
  CHECK((z * z + z + F4->one()).is_zero());
  CHECK_FALSE(z.is_zero());
}

TEST_CASE("finite field enumeration is deterministic and complete") {
  auto F4 = Field::extension_of_fp(2, IntPoly::from_ints({1, 1, 1}));
  auto all = F4->enumerate();
  REQUIRE(all.size() == 4);
  CHECK(all[0].is_zero());
  CHECK(all[1].is_one());
  for (const auto& x : all)
    if (!x.is_zero()) CHECK(x.pow(3).is_one());  // multiplicative group order 3
}

TEST_CASE("characteristic must be 0 or prime") {
  CHECK_THROWS(Field::prime(6));
  CHECK_THROWS(Field::prime(1));
  CHECK_NOTHROW(Field::prime(2));
  CHECK_NOTHROW(Field::prime(101));
}

TEST_CASE("rational inputs reduce into F_p exactly") {
  auto F = Field::prime(7);
  // 1/2 = 4 mod 7
  CHECK(F->from_rational(Rational(BigInt(1), BigInt(2))) == F->from_int(4));
  CHECK(F->from_rational(Rational(BigInt(-3), BigInt(5))) ==
        F->from_int(-3) * F->from_int(5).inverse());
  CHECK_THROWS(F->from_rational(Rational(BigInt(1), BigInt(7))));  // 7 | denominator
}

TEST_CASE("field mismatch is detected") {
  auto a = Field::prime(5)->one();
  auto b = Field::prime(7)->one();
  CHECK_THROWS_AS((void)(a + b), FieldMismatch);
}

TEST_CASE("scalar printing") {
  auto F = Field::extension_of_q(IntPoly::from_ints({-2, 0, 0, 1}));  // Q(cbrt2)
  Scalar z = F->generator();
  CHECK(z.to_string() == "t");
  CHECK((F->from_int(2) * z * z + z + F->one()).to_string() == "2*t^2 + t + 1");
  CHECK((-z).to_string() == "-t");
  CHECK(F->zero().to_string() == "0");
  CHECK((z * z * z).to_string() == "2");  // reduced mod t^3 - 2
}
