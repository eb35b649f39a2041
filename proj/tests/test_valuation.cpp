#include <random>

#include "doctest.h"
#include "g2twist/error.hpp"
#include "g2twist/valuation.hpp"
#include "support.hpp"

using namespace g2t;

TEST_CASE("valuation of zero is infinite") {
  LocalContext ctx(5);
  CHECK(ctx.val(0).is_infinite());
  CHECK(ctx.in_R(0));
  CHECK(ctx.in_m(0));
  CHECK_FALSE(ctx.is_unit(0));
  CHECK(Val::infinity() > Val(1000000));
  CHECK((Val::infinity() + Val(3)).is_infinite());
}

TEST_CASE("valuation examples") {
  LocalContext ctx(5);
  CHECK(ctx.val(75) == Val(2));
  CHECK(ctx.val(Rational(9, 5)) == Val(-1));
  CHECK(ctx.val(Rational(-250, 3)) == Val(3));
  CHECK(ctx.residue(Rational(1, 2)) == 3);
}

TEST_CASE("lcd examples") {
  CHECK(lcd({Rational(1, 2), Rational(1, 2)}) == 2);
  CHECK(lcd({Rational(1, 3), Rational(1, 2)}) == 6);
  CHECK(lcd({Rational(2), Rational(3)}) == 1);
  CHECK(lcd({Rational(-5, 4), Rational(7, 6)}) == 12);
}

TEST_CASE("context rejects non-odd-primes") {
  CHECK_THROWS_AS(LocalContext(2), Error);
  CHECK_THROWS_AS(LocalContext(9), Error);
  CHECK_NOTHROW(LocalContext(13));
}

TEST_CASE("valuation is a homomorphism and predicates agree") {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    LocalContext ctx(p);
    for (int i = 0; i < 300; ++i) {
      Rational a = test::random_nonzero_rational(rng) * p * p;
      Rational b = test::random_nonzero_rational(rng) / p;
      CHECK(ctx.val(a * b) == ctx.val(a) + ctx.val(b));
      CHECK(ctx.val(a / b).value() == ctx.val(a).value() - ctx.val(b).value());
      CHECK(ctx.is_unit(a) == (ctx.in_R(a) && !ctx.in_m(a)));
      CHECK(ctx.is_unit(b) == (ctx.in_R(b) && !ctx.in_m(b)));
    }
  }
}

TEST_CASE("monomial valuations with vanishing factors") {
  using F = MonoVal::Factor;
  MonoVal plus{F{Val::infinity(), 2}, F{Val(3), -1}};
  CHECK(plus.in_R());
  CHECK(plus.in_m());
  CHECK_FALSE(plus.is_unit());
  MonoVal minus{F{Val(1), 1}, F{Val::infinity(), -1}};
  CHECK_FALSE(minus.in_R());
  MonoVal undef{F{Val::infinity(), 1}, F{Val::infinity(), -1}};
  CHECK_FALSE(undef.in_R());
  CHECK_THROWS_AS(undef.over(2, "x"), Error);
  MonoVal fin{F{Val(3), 2}, F{Val(1), -5}};
  CHECK(fin.value() == 1);
  CHECK(fin.over(4, "x") == Rational(1, 4));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("17") == 17);
  CHECK(parse_rational(" -3/4 ") == Rational(-3, 4));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
}

TEST_CASE("mod_floor") {
  CHECK(mod_floor(std::int64_t{-1}, 4) == 3);
  CHECK(mod_floor(Integer(-9), 6) == 3);
  CHECK(mod_floor(std::int64_t{8}, 4) == 0);
}
