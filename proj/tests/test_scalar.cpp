#include "doctest.h"

#include "dsdict/error.hpp"
#include "dsdict/matrix.hpp"
#include "dsdict/scalar.hpp"

using namespace dsdict;

TEST_CASE("gauss scalar parse and print round trip") {
  for (const char* s : {"0", "1/2", "-3/4 i", "1/2+i", "2-1/3 i", "i", "-i", "7"}) {
    CHECK(GaussScalar::parse(s).str() == s);
  }
  CHECK(GaussScalar::parse(" 1 / 2 ") == GaussScalar(Rational(1, 2)));
  CHECK_THROWS_AS(GaussScalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(GaussScalar::parse("abc"), ParseError);
  CHECK_THROWS_AS(GaussScalar::parse("1+2+3i"), ParseError);
}

TEST_CASE("gauss scalar field axioms on samples") {
  std::vector<GaussScalar> xs = {GaussScalar::parse("1/2+i"), GaussScalar::parse("-3"), GaussScalar::parse("2/7-5/3 i"),
                                 GaussScalar::i()};
  for (const auto& a : xs) {
    CHECK(a * a.inverse() == GaussScalar(1));
    CHECK(a.conj().conj() == a);
    for (const auto& b : xs) {
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a + b).conj() == a.conj() + b.conj());
      for (const auto& c : xs) CHECK(a * (b + c) == a * b + a * c);
    }
  }
  CHECK(GaussScalar::i() * GaussScalar::i() == GaussScalar(-1));
  CHECK_THROWS_AS(GaussScalar().inverse(), DomainError);
}

TEST_CASE("quadratic extension arithmetic") {
  QuadScalar r3 = QuadScalar::sqrt_of(Rational(3));
  CHECK(r3 * r3 == QuadScalar(3));
  QuadScalar r12 = QuadScalar::sqrt_of(Rational(12));
  CHECK(r12 == QuadScalar(2) * r3);
  CHECK(QuadScalar::sqrt_of(Rational(9, 4)) == QuadScalar(GaussScalar(Rational(3, 2))));
  QuadScalar x = QuadScalar(1) + r3;
  CHECK(x * x.inverse() == QuadScalar(1));
  CHECK(x.real_sign() == 1);
  CHECK((QuadScalar(1) - r3).real_sign() == -1);
  CHECK((QuadScalar(2) - r3).real_sign() == 1);
  CHECK_THROWS_AS(r3 + QuadScalar::sqrt_of(Rational(2)), DomainError);
  CHECK_THROWS_AS(r3.to_gauss(), DomainError);
}

TEST_CASE("exact linear algebra") {
  Matrix m = matrix_from_strings({{"1", "2", "i"}, {"0", "1", "1/2"}, {"1", "3", "1/2+i"}});
  CHECK(rank(m) == 2);
  auto ker = kernel(m);
  REQUIRE(ker.size() == 1);
  CHECK((m * Matrix::column(ker[0])).is_zero());
  Matrix a = matrix_from_strings({{"2", "1"}, {"i", "3"}});
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == Matrix::identity(2));
  auto cp = characteristic_polynomial(a);
  CHECK(cp[2] == GaussScalar(1));
  CHECK(cp[1] == GaussScalar(-5));
  CHECK(cp[0] == determinant(a));
  CHECK(determinant(a) == GaussScalar::parse("6-i"));
  auto x = solve(a, {GaussScalar(1), GaussScalar(0)});
  REQUIRE(x);
  CHECK(a * Matrix::column(*x) == Matrix::column({GaussScalar(1), GaussScalar(0)}));
  CHECK_FALSE(solve(matrix_from_strings({{"1", "1"}, {"1", "1"}}), {GaussScalar(0), GaussScalar(1)}));
}
