#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "g2twist/error.hpp"
#include "g2twist/verify.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace g2t;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const char* name, const Result& r) {
  std::cout << (r.pass ? "PASS " : "FAIL ") << name << ": " << r.detail << std::endl;
  if (!r.pass) ++failures;
}

Rational pw(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

std::uint64_t seed() {
  const char* env = std::getenv("GENUS2_SEED");
  return env && *env ? std::strtoull(env, nullptr, 10) : 1;
}

Result table_fidelity() {
  auto golden = golden::read_golden(G2T_TEST_DATA "/tables.golden");
  std::size_t checked = 0;
  auto problems = golden::fidelity_problems(golden, &checked);
  const std::size_t expected = table_rows().size() + char5_twist_table().size() + 2;
  std::ostringstream os;
  os << checked << " golden rows compared, " << problems.size() << " problems";
  if (!problems.empty()) os << " (first: " << problems.front() << ")";
  return {problems.empty() && checked == expected, os.str()};
}

Result involution() {
  AuditReport a = table_involution_audit();
  std::ostringstream os;
  os << a.checked << " grid points twisted and looked up again, " << a.violations.size() << " violations, "
     << a.double_twist_violations.size() << " double-twist, " << a.overlaps.size() << " overlaps, "
     << a.wild_violations.size() << " wild, " << a.rows_never_hit.size() << " rows never hit";
  return {a.clean() && a.rows_never_hit.empty() && a.checked > 0, os.str()};
}

Result concordance() {
  auto m = smooth_n5_n10_map();
  auto t = char5_twist_table();
  std::sort(m.begin(), m.end());
  std::sort(t.begin(), t.end());
  std::ostringstream os;
  os << m.size() << " smooth pairs, " << t.size() << " char-5 pairs";
  return {m.size() == 8 && m == t, os.str()};
}

Result invariant_identities() {
  std::mt19937_64 rng(seed());
  int bad = 0, n = 0;
  for (; n < 1200; ++n) {
    SexticForm p = n % 2 ? test::random_form(rng, 30) : biased_sextic(rng, 7);
    InvariantSet s = compute_invariants(p);
    bool ok = s.I4 == s.J2 * s.J2 - 24 * s.J4;
    ok = ok && 4 * s.I12 == pw(s.J2, 2) * pw(s.J4, 2) - 32 * pw(s.J4, 3) - pw(s.J2, 3) * s.J6 +
                                36 * s.J2 * s.J4 * s.J6 - 108 * pw(s.J6, 2);
    const Rational lambda = test::random_nonzero_rational(rng);
    InvariantSet t = compute_invariants(p.scaled(lambda));
    const Rational* a[] = {&s.J2, &s.J4, &s.J6, &s.J8, &s.J10};
    const Rational* b[] = {&t.J2, &t.J4, &t.J6, &t.J8, &t.J10};
    for (int i = 1; i <= 5; ++i) ok = ok && *b[i - 1] == pw(lambda, 2 * i) * *a[i - 1];
    ok = ok && twist_invariants(s, lambda) == t;
    if (!ok) ++bad;
  }
  std::ostringstream os;
  os << n << " sextics, " << bad << " failing";
  return {bad == 0, os.str()};
}

struct SweepChecks {
  Result oracle, lemmas, degrees;
};

SweepChecks sweep_checks() {
  SweepOptions o;
  o.samples = 600;
  o.seed = seed();
  SweepSummary s = sweep(o);
  SweepChecks out;

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << s.classified() << "/" << s.total << " classified (fraction " << s.classifiable_fraction()
     << "), non-smooth " << s.nonsmooth_fraction() << ", agree " << s.count(CheckStatus::Agree) << ", disagree "
     << s.count(CheckStatus::Disagree) << ", route mismatch " << s.count(CheckStatus::RouteMismatch)
     << ", unclassifiable " << s.count(CheckStatus::Unclassifiable) << ", E1 relaxed " << s.relaxed_flag_samples;
  out.oracle = {s.classified() >= 500 && s.count(CheckStatus::Disagree) == 0 && s.agreement_rate() == 1.0 &&
                    s.nonsmooth_fraction() >= 0.30,
                os.str()};

  // Lemma relations and shape preservation.
  std::size_t lemma_bad = 0, shape_bad = 0, classified = 0;
  // Degree sums and positivity on both X and its twist.
  std::size_t degree_bad = 0, degree_checked = 0;
  for (const CrossCheck& c : s.samples) {
    if (c.status != CheckStatus::Agree && c.status != CheckStatus::Disagree) continue;
    ++classified;
    if (!c.lemma_violations.empty() || !c.primed_row_agrees) ++lemma_bad;
    const LocalContext ctx(c.prime);
    for (const SexticForm& f : {c.curve, c.curve.scaled(c.D)}) {
      AnalysisOptions opts;
      if (c.flags.size() == 1) opts.e1_smooth = c.flags.front();
      CurveAnalysis a;
      try {
        a = analyze(f, ctx, opts);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::MissingFlag) ++degree_bad;
        continue;
      }
      if (!a.degrees || !a.ram) continue;
      ++degree_checked;
      const auto& e = a.degrees->e;
      const std::int64_t n = a.ram->n;
      auto nu = [&](const Rational& x) { return ctx.val(x).value(); };
      bool ok = std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x >= 1; });
      if (a.stable.kind == FiberCase::IrreducibleTwoNodes)
        ok = ok && e.size() == 2 && 2 * (e[0] + e[1]) == n * (2 * nu(a.inv.J10) - 5 * nu(a.inv.I4));
      if (a.stable.kind == FiberCase::TwoRationalThreeNodes)
        ok = ok && e.size() == 3 && e[0] + e[1] + e[2] == n * (nu(a.inv.J10) - 5 * nu(a.inv.J2));
      if (!ok) ++degree_bad;
    }
    const FiberCase x = classify_stable(compute_invariants(c.curve), ctx).kind;
    const FiberCase xchi = classify_stable(compute_invariants(c.curve.scaled(c.D)), ctx).kind;
    if (x != xchi) ++shape_bad;
  }
  std::ostringstream ls;
  ls << classified << " classified samples, " << lemma_bad << " with failed relations, " << shape_bad
     << " with a changed stable shape";
  out.lemmas = {lemma_bad == 0 && shape_bad == 0 && classified > 0, ls.str()};
  std::ostringstream ds;
  ds << degree_checked << " degree vectors checked, " << degree_bad << " failing";
  out.degrees = {degree_bad == 0 && degree_checked > 0, ds.str()};
  return out;
}

Result even_twist() {
  int equal = 0, differ = 0, skipped = 0;
  const std::uint32_t primes[] = {7, 11, 13};
  for (std::uint64_t i = 0; i < 100; ++i) {
    std::mt19937_64 rng = sample_rng(seed() + 1000, i);
    const std::uint32_t p = primes[i % 3];
    SexticForm f = biased_sextic(rng, p);
    auto same_type = [&](std::optional<bool> flag) {
      AnalysisOptions opts;
      opts.e1_smooth = flag;
      TwistReport r = run_twist(f, Rational(p * p), LocalContext(p), opts);
      return r.type_Xchi && r.type_Xchi == r.type_X;
    };
    try {
      bool same;
      try {
        same = same_type(std::nullopt);
      } catch (const Error& e) {
        // Rows split on the E1 flag are run with both values.
        if (e.kind() != ErrorKind::MissingFlag) throw;
        same = same_type(true) && same_type(false);
      }
      (same ? equal : differ) += 1;
    } catch (const Error&) {
      ++skipped;
    }
  }
  std::ostringstream os;
  os << equal << " equal, " << differ << " different, " << skipped << " unclassifiable";
  return {differ == 0 && equal >= 95, os.str()};
}

}  // namespace

int main() {
  try {
    report("table fidelity", table_fidelity());
    report("twist involution", involution());
    report("wild/tame concordance", concordance());
    report("invariant identities", invariant_identities());
    SweepChecks s = sweep_checks();
    report("oracle cross-check", s.oracle);
    report("lemma relations", s.lemmas);
    report("degree consistency", s.degrees);
    report("even valuation of D", even_twist());
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance run aborted: " << e.what() << std::endl;
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
