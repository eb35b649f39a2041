#include "doctest.h"
#include "g2twist/error.hpp"
#include "g2twist/verify.hpp"
#include "support.hpp"

using namespace g2t;
using test::form;

TEST_CASE("cross check on good reduction") {
  const LocalContext ctx(7);
  SexticForm p = form({1, 0, 0, 0, 0, 0, -1});
  CrossCheck c = cross_check(p, 7, ctx);
  CHECK(c.status == CheckStatus::Agree);
  REQUIRE(c.route_a.size() == 1);
  CHECK(c.route_a[0].symbol->format() == "Istar[0,0,0]");
  CHECK(c.route_b[0].symbol->format() == "Istar[0,0,0]");
  CHECK(c.primed_row_agrees);

  CrossCheck one = cross_check(p, 1, ctx);
  CHECK(one.status == CheckStatus::Agree);
  CHECK(one.route_a[0].symbol->format() == "I[0,0,0]");
}

TEST_CASE("status names") {
  CHECK(to_string(CheckStatus::Agree) == "agree");
  CHECK(to_string(CheckStatus::RouteMismatch) == "route-mismatch");
  CHECK(to_string(CheckStatus::Wild) == "wild");
}

TEST_CASE("generator is seeded and squarefree") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    std::mt19937_64 a = sample_rng(5, i), b = sample_rng(5, i);
    SexticForm f = biased_sextic(a, 11), g = biased_sextic(b, 11);
    CHECK(f.coefficients() == g.coefficients());
    CHECK(discriminant(f) != 0);
  }
  std::mt19937_64 a = sample_rng(5, 0), b = sample_rng(6, 0);
  CHECK(biased_sextic(a, 11).coefficients() != biased_sextic(b, 11).coefficients());
}

TEST_CASE("small sweep") {
  SweepOptions o;
  o.samples = 300;
  o.seed = 9;
  SweepSummary s = sweep(o);
  CHECK(s.total == 300);
  CHECK(s.samples.size() == 300);
  CHECK(s.count(CheckStatus::Disagree) == 0);
  CHECK(s.count(CheckStatus::RouteMismatch) == 0);
  CHECK(s.agreement_rate() == 1.0);
  CHECK(s.lemma_violation_samples == 0);
  CHECK(s.primed_row_disagreements == 0);
  CHECK(s.classifiable_fraction() > 0.95);
  CHECK(s.nonsmooth_fraction() >= 0.3);
  for (const CrossCheck& c : s.samples) {
    CHECK(c.flags.size() == c.route_a.size());
    CHECK(c.flags.size() == c.route_b.size());
  }

  o.threads = 1;
  SweepSummary t = sweep(o);
  for (std::size_t i = 0; i < s.samples.size(); ++i) {
    CHECK(s.samples[i].status == t.samples[i].status);
    CHECK(s.samples[i].curve.coefficients() == t.samples[i].curve.coefficients());
  }
}

TEST_CASE("even D sweep") {
  SweepOptions o;
  o.samples = 100;
  o.d_power = 2;
  SweepSummary s = sweep(o);
  for (const CrossCheck& c : s.samples)
    if (c.status == CheckStatus::Agree) CHECK(c.route_a[0].symbol == c.route_b[0].symbol);
  CHECK(s.count(CheckStatus::Disagree) == 0);
}

TEST_CASE("table audit") {
  AuditReport r = table_involution_audit();
  CHECK(r.clean());
  CHECK(r.violations.empty());
  CHECK(r.double_twist_violations.empty());
  CHECK(r.overlaps.empty());
  CHECK(r.wild_violations.empty());
  CHECK(r.rows_never_hit.empty());
  CHECK(r.checked > 1000);
  CHECK(r.tuples == r.matched + r.unmatched + r.constraint_failures);
}

TEST_CASE("char 5 table equals the smooth n = 5, 10 rows") {
  auto m = smooth_n5_n10_map();
  auto t = char5_twist_table();
  std::sort(m.begin(), m.end());
  std::sort(t.begin(), t.end());
  CHECK(m.size() == 8);
  CHECK(m == t);
}
