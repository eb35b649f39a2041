#include <random>

#include "doctest.h"
#include "g2twist/error.hpp"
#include "g2twist/ramification.hpp"
#include "g2twist/stable.hpp"
#include "g2twist/verify.hpp"
#include "support.hpp"

using namespace g2t;
using test::form;
using test::from_roots;

namespace {

Rational pw(long p, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

InvariantSet ones() {
  InvariantSet s;
  for (Rational* x : {&s.J2, &s.J4, &s.J6, &s.J8, &s.J10, &s.I2, &s.I4, &s.I6, &s.I8, &s.I12, &s.A2, &s.A3, &s.A4,
                      &s.A5, &s.B2})
    *x = 1;
  return s;
}

FiberCase shape_of(const SexticForm& p, const LocalContext& ctx) {
  return classify_stable(compute_invariants(p), ctx).kind;
}

std::int64_t nu(const Rational& x, const LocalContext& ctx) { return ctx.val(x).value(); }

}  // namespace

TEST_CASE("epsilon") {
  CHECK(epsilon(LocalContext(7)).value == 1);
  CHECK(epsilon(LocalContext(3)).value == 3);
  CHECK(epsilon(LocalContext(5)).value == 1);
}

TEST_CASE("good reduction is smooth") {
  const LocalContext ctx(7);
  // disc(x^6 - 1) = 46656 = 2^6 3^6, a 7-adic unit.
  SexticForm p = form({1, 0, 0, 0, 0, 0, -1});
  REQUIRE(ctx.val(compute_invariants(p).J10) == Val(0));
  CHECK(shape_of(p, ctx) == FiberCase::Smooth);
}

TEST_CASE("one pair of colliding roots gives one node") {
  for (long p : {7L, 11L, 13L}) {
    const LocalContext ctx(p);
    // Roots 0..4 and p: exactly one pair congruent mod p.
    CHECK(shape_of(from_roots(1, {0, 1, 2, 3, 4, p}), ctx) == FiberCase::IrreducibleOneNode);
  }
}

TEST_CASE("root configurations for each shape") {
  const long p = 7;
  const LocalContext ctx(p);
  struct Case {
    std::vector<long> roots;
    FiberCase shape;
  };
  const Case cases[] = {
      {{0, 1, 2, 3, 4, 5}, FiberCase::Smooth},
      {{0, 1, 2, 3, 4, p}, FiberCase::IrreducibleOneNode},
      {{0, p, 1, 1 + p, 2, 3}, FiberCase::IrreducibleTwoNodes},
      {{0, p * p, 1, 1 + p * p, 2, 3}, FiberCase::IrreducibleTwoNodes},
      {{0, p, 1, 1 + p, 2, 2 + p}, FiberCase::TwoRationalThreeNodes},
      {{0, p * p * p, 1, 1 + p, 2, 2 + p}, FiberCase::TwoRationalThreeNodes},
      {{0, p, 2 * p, 1, 2, 3}, FiberCase::TwoSmoothOneNode},
      {{0, p, p * p, 1, 2, 3}, FiberCase::OneSmoothOneSingular},
      {{0, p, p * p, 1, 1 + p, 2}, FiberCase::TwoSingularOneNode},
  };
  for (const auto& c : cases) {
    InvariantSet inv = compute_invariants(from_roots(1, c.roots));
    StableFiberType st = classify_stable(inv, ctx);
    CHECK(st.kind == c.shape);
    CHECK(st.matches.size() == 1);
  }
}

TEST_CASE("case IV block re-evaluated independently") {
  const LocalContext ctx(7);
  InvariantSet inv = compute_invariants(from_roots(1, {0, 7, 1, 8, 2, 9}));
  REQUIRE(classify_stable(inv, ctx).kind == FiberCase::TwoRationalThreeNodes);
  // J_{2i}^2 I4^-i in m for 2 <= i <= 5.
  const Rational* J[] = {&inv.J4, &inv.J6, &inv.J8, &inv.J10};
  for (int i = 2; i <= 5; ++i) CHECK(2 * nu(*J[i - 2], ctx) - i * nu(inv.I4, ctx) > 0);
}

TEST_CASE("classification is exhaustive and exclusive") {
  int total = 0;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const LocalContext ctx(p);
    for (std::uint64_t i = 0; i < 240; ++i) {
      std::mt19937_64 rng = sample_rng(11, i);
      SexticForm f = biased_sextic(rng, p);
      InvariantSet inv = compute_invariants(normalize_model(f, ctx).form);
      CHECK(matching_blocks(inv, ctx).size() == 1);
      CHECK_NOTHROW(classify_stable(inv, ctx));
      ++total;
    }
  }
  CHECK(total >= 1000);
}

TEST_CASE("twist preserves the stable shape") {
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const LocalContext ctx(p);
    for (std::uint64_t i = 0; i < 100; ++i) {
      std::mt19937_64 rng = sample_rng(12, i);
      SexticForm f = biased_sextic(rng, p);
      CHECK(shape_of(f, ctx) == shape_of(f.scaled(Rational(p)), ctx));
    }
  }
}

TEST_CASE("Gamma and C0 membership") {
  InvariantSet g = ones();
  g.J4 = 3;
  // J6 J2^-3 - J10 J2^-5 = 0.
  CHECK(special_fiber_tests(g, LocalContext(3)).gamma_member == true);
  g.J6 = 2;
  CHECK(special_fiber_tests(g, LocalContext(3)).gamma_member == false);
  g.J4 = 1;
  g.J6 = 1;
  CHECK(special_fiber_tests(g, LocalContext(3)).gamma_member == false);

  InvariantSet c = ones();
  c.J2 = c.J4 = c.J6 = c.J8 = 5;
  CHECK(special_fiber_tests(c, LocalContext(5)).c0_iso == true);
  c.J8 = 1;
  CHECK(special_fiber_tests(c, LocalContext(5)).c0_iso == false);

  try {
    special_fiber_tests(c, LocalContext(7));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("tameness") {
  SpecialFiberTests none;
  CHECK(is_tame(FiberCase::Smooth, none, OmegaStatus::NonRamified, LocalContext(7)));
  CHECK(is_tame(FiberCase::TwoSmoothOneNode, none, OmegaStatus::NonRamified, LocalContext(11)));

  SpecialFiberTests g;
  g.gamma_member = true;
  CHECK_FALSE(is_tame(FiberCase::Smooth, g, OmegaStatus::NonRamified, LocalContext(3)));
  CHECK(is_tame(FiberCase::Smooth, g, OmegaStatus::RamifiedRegularPreimage, LocalContext(3)));
  g.gamma_member = false;
  CHECK(is_tame(FiberCase::Smooth, g, OmegaStatus::NonRamified, LocalContext(3)));
  CHECK_FALSE(is_tame(FiberCase::TwoRationalThreeNodes, g, OmegaStatus::NonRamified, LocalContext(3)));
  CHECK(is_tame(FiberCase::TwoRationalThreeNodes, g, OmegaStatus::RamifiedSingularPreimage, LocalContext(3)));
  CHECK(is_tame(FiberCase::IrreducibleOneNode, g, OmegaStatus::NonRamified, LocalContext(3)));

  SpecialFiberTests c;
  c.c0_iso = false;
  CHECK(is_tame(FiberCase::Smooth, c, OmegaStatus::RamifiedRegularPreimage, LocalContext(5)));
  c.c0_iso = true;
  CHECK(is_tame(FiberCase::Smooth, c, OmegaStatus::NonRamified, LocalContext(5)));
  CHECK_FALSE(is_tame(FiberCase::Smooth, c, OmegaStatus::RamifiedRegularPreimage, LocalContext(5)));
}

TEST_CASE("degree formulas on prescribed valuations") {
  const LocalContext ctx(7);
  const Epsilon eps = epsilon(ctx);

  InvariantSet two = ones();
  two.J10 = pw(7, 2);
  CHECK(singularity_degrees(FiberCase::IrreducibleOneNode, two, ExtValuation{1}, eps, ctx).e ==
        std::vector<std::int64_t>{2});
  CHECK(singularity_degrees(FiberCase::IrreducibleOneNode, two, ExtValuation{3}, eps, ctx).e ==
        std::vector<std::int64_t>{6});

  InvariantSet three = ones();
  three.I12 = 7;
  three.J10 = pw(7, 2);
  CHECK(singularity_degrees(FiberCase::IrreducibleTwoNodes, three, ExtValuation{1}, eps, ctx).e ==
        std::vector<std::int64_t>{1, 1});

  InvariantSet five = ones();
  five.J10 = pw(7, 12);
  CHECK(singularity_degrees(FiberCase::TwoSmoothOneNode, five, ExtValuation{1}, eps, ctx).e ==
        std::vector<std::int64_t>{1});

  InvariantSet bad = ones();
  bad.J10 = 7;
  try {
    singularity_degrees(FiberCase::TwoSmoothOneNode, bad, ExtValuation{1}, eps, ctx);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegralDegree);
  }
}

TEST_CASE("degree sums and positivity on random samples") {
  int seen_iii = 0, seen_iv = 0;
  for (std::uint32_t p : {7u, 11u, 13u}) {
    const LocalContext ctx(p);
    for (std::uint64_t i = 0; i < 400; ++i) {
      std::mt19937_64 rng = sample_rng(13, i);
      NormalizedModel m = normalize_model(biased_sextic(rng, p), ctx);
      InvariantSet inv = compute_invariants(m.form);
      FiberCase shape = classify_stable(inv, ctx).kind;
      if (shape == FiberCase::Smooth) continue;
      std::int64_t n = 1;
      try {
        OmegaStatus om = omega_status(inv, m.form, regime_of(shape),
                                      regime_of(shape) == Regime::IrreducibleSingular
                                          ? std::optional<J12Selector>(select_J12(inv, shape))
                                          : std::nullopt,
                                      ctx);
        if (regime_of(shape) == Regime::IrreducibleSingular)
          n = ram_data_irreducible_singular(inv, select_J12(inv, shape), m.form, om, ctx).n;
        else
          n = ram_data_not_irreducible(inv, m.form, om, shape, ctx).n;
      } catch (const Error&) {
        continue;
      }
      SingularityDegrees d;
      try {
        d = singularity_degrees(shape, inv, ExtValuation{n}, epsilon(ctx), ctx);
      } catch (const Error& e) {
        FAIL("degree failure: " << e.what());
        continue;
      }
      for (auto e : d.e) CHECK(e >= 1);
      if (shape == FiberCase::IrreducibleTwoNodes) {
        ++seen_iii;
        CHECK(d.e[0] <= d.e[1]);
        CHECK(2 * (d.e[0] + d.e[1]) == n * (2 * nu(inv.J10, ctx) - 5 * nu(inv.I4, ctx)));
      }
      if (shape == FiberCase::TwoRationalThreeNodes) {
        ++seen_iv;
        CHECK(d.e[0] <= d.e[1]);
        CHECK(d.e[1] <= d.e[2]);
        CHECK(d.e[0] + d.e[1] + d.e[2] == n * (nu(inv.J10, ctx) - 5 * nu(inv.J2, ctx)));
      }
    }
  }
  CHECK(seen_iii > 20);
  CHECK(seen_iv > 3);
}

TEST_CASE("J12 selector") {
  InvariantSet inv = ones();
  inv.I12 = 2;
  inv.I4 = 3;
  inv.J2 = 5;
  CHECK(select_J12(inv, FiberCase::IrreducibleOneNode).value == 2);
  CHECK(select_J12(inv, FiberCase::IrreducibleTwoNodes).value == 27);
  CHECK(select_J12(inv, FiberCase::TwoRationalThreeNodes).value == 15625);
  CHECK_THROWS_AS(select_J12(inv, FiberCase::TwoSmoothOneNode), Error);
}
