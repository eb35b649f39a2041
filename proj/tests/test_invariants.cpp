#include <random>

#include "doctest.h"
#include "g2twist/error.hpp"
#include "g2twist/invariants.hpp"
#include "support.hpp"

using namespace g2t;
using test::form;

namespace {

Rational pw(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

// Values frozen from a 60-digit root-based evaluation (mpmath) of the classical definitions
// I2 = a0^2 sum (12)^2(34)^2(56)^2, ..., I10 = a0^10 prod (ri - rj)^2.
TEST_CASE("Igusa-Clebsch invariants against root-based oracle") {
  struct Row {
    std::initializer_list<long> a;
    long I2, I4, I6, I10;
  };
  const Row rows[] = {
      {{-6, 3, -6, -3, -5, 7, -2}, -2466, 685944, -430841538, -214026511167},
      {{1, 0, 0, 0, 0, -1, 0}, 0, 0, 0, 3125},
      {{1, -15, 85, -225, 274, -120, 0}, 3110, 165952, 159056000, 1194393600},
      {{2, 1, 0, -3, 4, 0, 1}, -426, 20232, -1308258, -127628703},
      {{0, 3, 2, -1, 0, 5, 7}, 606, -6972, -3924474, 3237199677},
  };
  for (const auto& r : rows) {
    IgusaClebsch ic = igusa_clebsch(form(r.a));
    CHECK(ic.I2 == r.I2);
    CHECK(ic.I4 == r.I4);
    CHECK(ic.I6 == r.I6);
    CHECK(ic.I10 == r.I10);
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(form({1, 0, 0, 0, 0, 0, -1})) == 46656);
  CHECK(discriminant(test::from_roots(1, {1, 1, 2, 3, 4, 5})) == 0);
  // Degree 5: a1^2 times the quintic discriminant; x^5 - x has discriminant -256.
  CHECK(discriminant(form({0, 1, 0, 0, 0, -1, 0})) == -256);
  CHECK(discriminant(form({0, 3, 0, 0, 0, -3, 0})) == -256 * 59049);
  CHECK(discriminant(form({0, 3, 2, -1, 0, 5, 7})) == 3237199677L);
}

TEST_CASE("J10 is the discriminant over 4096") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    SexticForm p = test::random_form(rng);
    CHECK(compute_invariants(p).J10 * 4096 == discriminant(p));
  }
  for (int i = 0; i < 25; ++i) {
    std::uniform_int_distribution<long> d(-6, 6);
    long r = d(rng);
    SexticForm p = test::from_roots(d(rng) == 0 ? 1 : 2, {r, r, d(rng), d(rng), d(rng), d(rng)});
    CHECK(compute_invariants(p).J10 == 0);
    CHECK(discriminant(p) == 0);
  }
}

TEST_CASE("affine invariant examples") {
  InvariantSet a = compute_invariants(form({1, 0, 1, 0, 0, 0, 1}));
  CHECK(a.A2 == 12);
  InvariantSet b = compute_invariants(form({1, 1, 0, 0, 0, 0, 1}));
  CHECK(b.A3 == 5);
}

TEST_CASE("identities, homogeneity and the twist law") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    SexticForm p = test::random_form(rng);
    InvariantSet s = compute_invariants(p);
    CHECK(s.I4 == s.J2 * s.J2 - 24 * s.J4);
    CHECK(4 * s.I12 == pw(s.J2, 2) * pw(s.J4, 2) - 32 * pw(s.J4, 3) - pw(s.J2, 3) * s.J6 +
                           36 * s.J2 * s.J4 * s.J6 - 108 * pw(s.J6, 2));
    CHECK(4 * s.J8 == s.J2 * s.J6 - s.J4 * s.J4);
    CHECK(12 * s.I2 == s.J2);

    Rational d = test::random_nonzero_rational(rng);
    InvariantSet scaled = compute_invariants(p.scaled(d));
    CHECK(scaled == twist_invariants(s, d));
    CHECK(scaled.J10 == pw(d, 10) * s.J10);
    CHECK(twist_invariants(twist_invariants(s, d), 1 / d) == s);
  }
  CHECK_THROWS_AS(twist_invariants(compute_invariants(form({1, 0, 0, 0, 0, 0, 1})), 0), Error);
}

TEST_CASE("Moebius normalizations leave the Igusa invariants unchanged") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    SexticForm p = test::random_form(rng);
    InvariantSet s = compute_invariants(p);
    InvariantSet sh = compute_invariants(p.shifted(3));
    CHECK(sh.J2 == s.J2);
    CHECK(sh.J10 == s.J10);
    CHECK(sh.I12 == s.I12);
    if (p[6] != 0) {
      InvariantSet rv = compute_invariants(p.reversed());
      CHECK(rv.J4 == s.J4);
      CHECK(rv.J10 == s.J10);
    }
  }
}

TEST_CASE("invalid forms") {
  CHECK_THROWS_AS(form({0, 0, 1, 0, 0, 0, 1}), Error);
}
