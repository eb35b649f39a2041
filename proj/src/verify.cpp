#include "g2twist/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace g2t {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Agree: return "agree";
    case CheckStatus::Disagree: return "disagree";
    case CheckStatus::RouteMismatch: return "route-mismatch";
    case CheckStatus::Unclassifiable: return "unclassifiable";
    case CheckStatus::Wild: return "wild";
  }
  return "?";
}

namespace {

void record(RouteResult& out, const Error& e) {
  out.error_kind = e.kind();
  out.error_stage = e.stage();
  out.error = e.what();
  out.wild = e.kind() == ErrorKind::NormalFormRequired;
}

bool needs_flag(const RouteResult& r) { return r.error_kind == ErrorKind::MissingFlag; }

RouteResult route_a(const SexticForm& p, const Rational& d, const LocalContext& ctx, const AnalysisOptions& opts,
                    CrossCheck& cc) {
  RouteResult out;
  try {
    TwistReport t = run_twist(p, d, ctx, opts);
    out.shape = t.shape_chi;
    out.ram = t.ram_chi;
    out.degrees = t.degrees_chi;
    out.wild = t.wild;
    out.symbol = t.type_Xchi;
    for (auto& v : t.lemma_violations)
      if (std::find(cc.lemma_violations.begin(), cc.lemma_violations.end(), v) == cc.lemma_violations.end())
        cc.lemma_violations.push_back(v);
    if (t.primed_row_error) {
      cc.primed_row_agrees = false;
      cc.primed_row_error = t.primed_row_error;
    } else if (t.type_Xchi_primed_row && t.type_Xchi_primed_row != t.type_Xchi) {
      cc.primed_row_agrees = false;
    }
  } catch (const Error& e) {
    record(out, e);
  }
  return out;
}

RouteResult route_b(const SexticForm& p, const Rational& d, const LocalContext& ctx, const AnalysisOptions& opts) {
  RouteResult out;
  try {
    // The direct route sees only D P; wild normal forms are not transported.
    AnalysisOptions direct;
    direct.e1_smooth = opts.e1_smooth;
    CurveAnalysis a = analyze(p.scaled(d), ctx, direct);
    out.shape = a.stable.kind;
    out.ram = a.ram;
    out.degrees = a.degrees;
    out.wild = !a.tame;
    out.symbol = a.type_X;
  } catch (const Error& e) {
    record(out, e);
  }
  return out;
}

bool same_parameters(const RouteResult& a, const RouteResult& b) {
  if (!a.ram || !b.ram) return a.ram.has_value() == b.ram.has_value();
  return a.ram->n == b.ram->n && a.ram->r == b.ram->r && a.ram->q == b.ram->q && a.ram->d == b.ram->d;
}

}  // namespace

CrossCheck cross_check(const SexticForm& p, const Rational& d, const LocalContext& ctx, const AnalysisOptions& opts) {
  CrossCheck cc;
  cc.curve = p;
  cc.D = d;
  cc.prime = ctx.p();

  cc.flags = {opts.e1_smooth};
  cc.route_a.push_back(route_a(p, d, ctx, opts, cc));
  cc.route_b.push_back(route_b(p, d, ctx, opts));
  if (!opts.e1_smooth && (needs_flag(cc.route_a[0]) || needs_flag(cc.route_b[0]))) {
    cc.flags = {true, false};
    cc.route_a.clear();
    cc.route_b.clear();
    for (bool f : {true, false}) {
      AnalysisOptions o = opts;
      o.e1_smooth = f;
      cc.route_a.push_back(route_a(p, d, ctx, o, cc));
      cc.route_b.push_back(route_b(p, d, ctx, o));
    }
  }

  for (auto& r : cc.route_a)
    if (r.shape) cc.shape = r.shape;

  bool any_wild = false, all_ok = true, all_fail = true, all_agree = true;
  for (std::size_t i = 0; i < cc.route_a.size(); ++i) {
    const RouteResult& a = cc.route_a[i];
    const RouteResult& b = cc.route_b[i];
    any_wild = any_wild || a.wild || b.wild;
    all_ok = all_ok && a.ok() && b.ok();
    all_fail = all_fail && !a.ok() && !b.ok();
    if (a.ok() && b.ok()) all_agree = all_agree && a.symbol == b.symbol && same_parameters(a, b);
  }
  if (any_wild)
    cc.status = CheckStatus::Wild;
  else if (all_ok)
    cc.status = all_agree ? CheckStatus::Agree : CheckStatus::Disagree;
  else if (all_fail)
    cc.status = CheckStatus::Unclassifiable;
  else
    cc.status = CheckStatus::RouteMismatch;
  return cc;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

namespace {

using Poly = std::vector<Integer>;  // ascending powers

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Integer power(std::uint32_t p, int k) {
  Integer out = 1;
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

}  // namespace

SexticForm biased_sextic(std::mt19937_64& rng, std::uint32_t p) {
  auto uniform = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  auto unit = [&] {
    std::int64_t u;
    do u = uniform(-3 * static_cast<std::int64_t>(p), 3 * static_cast<std::int64_t>(p));
    while (u % p == 0);
    return Integer(u);
  };

  for (;;) {
    SexticForm::Coefficients a{};
    if (uniform(0, 9) < 2) {
      // Plain coefficients, some multiplied by powers of p.
      for (auto& c : a) c = Rational(Integer(uniform(-50, 50)) * power(p, static_cast<int>(uniform(0, 3))));
    } else {
      const int degree = uniform(0, 5) == 0 ? 5 : 6;
      Poly poly{Integer(1)};
      int left = degree;
      std::vector<std::int64_t> centers;
      while (left > 0) {
        std::int64_t center;
        if (!centers.empty() && uniform(0, 2) != 0)
          center = centers[uniform(0, static_cast<std::int64_t>(centers.size()) - 1)];
        else
          centers.push_back(center = uniform(0, static_cast<std::int64_t>(p) - 1));
        const int k = static_cast<int>(uniform(0, 3));
        const Integer shift = power(p, k);
        if (left >= 2 && uniform(0, 3) == 0) {
          // (x - c)^2 - p^k u: a conjugate pair close to c.
          const Integer c = center + shift * uniform(-2, 2);
          Poly quad{c * c - shift * unit(), -2 * c, Integer(1)};
          poly = multiply(poly, quad);
          left -= 2;
        } else {
          const Integer root = center + shift * uniform(-3, 3);
          poly = multiply(poly, Poly{-root, Integer(1)});
          left -= 1;
        }
      }
      const Integer lead = unit() * power(p, static_cast<int>(uniform(0, 2)));
      // a[0] is the x^6 coefficient.
      for (int i = 0; i <= degree; ++i) a[6 - i] = Rational(lead * poly[i]);
    }
    SexticForm f(a);
    if ((f[0] != 0 || f[1] != 0) && discriminant(f) != 0) return f;
  }
}

std::size_t SweepSummary::count(CheckStatus s) const {
  auto it = by_status.find(s);
  return it == by_status.end() ? 0 : it->second;
}

double SweepSummary::classifiable_fraction() const {
  return total == 0 ? 0.0 : static_cast<double>(classified()) / static_cast<double>(total);
}

double SweepSummary::nonsmooth_fraction() const {
  const std::size_t c = classified();
  if (c == 0) return 0.0;
  auto it = shapes.find(std::string(to_string(FiberCase::Smooth)));
  const std::size_t smooth = it == shapes.end() ? 0 : it->second;
  return static_cast<double>(c - smooth) / static_cast<double>(c);
}

double SweepSummary::agreement_rate() const {
  const std::size_t c = classified();
  return c == 0 ? 1.0 : static_cast<double>(count(CheckStatus::Agree)) / static_cast<double>(c);
}

SweepSummary sweep(const SweepOptions& opts) {
  SweepSummary s;
  s.total = opts.samples;
  s.samples.resize(opts.samples);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < opts.samples;) {
      std::mt19937_64 rng = sample_rng(opts.seed, i);
      const std::uint32_t p = opts.primes[i % opts.primes.size()];
      const LocalContext ctx(p);
      const SexticForm f = biased_sextic(rng, p);
      Rational d = 1;
      for (int k = 0; k < opts.d_power; ++k) d *= p;
      s.samples[i] = cross_check(f, d, ctx);
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, opts.samples)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return summarize(std::move(s.samples));
}

SweepSummary summarize(std::vector<CrossCheck> samples) {
  SweepSummary s;
  s.total = samples.size();
  s.samples = std::move(samples);
  for (const CrossCheck& c : s.samples) {
    ++s.by_status[c.status];
    if ((c.status == CheckStatus::Agree || c.status == CheckStatus::Disagree) && c.shape)
      ++s.shapes[std::string(to_string(*c.shape))];
    for (const auto* routes : {&c.route_a, &c.route_b})
      for (const RouteResult& r : *routes)
        if (r.error_kind) ++s.errors[to_string(*r.error_kind)];
    if (!c.lemma_violations.empty()) ++s.lemma_violation_samples;
    if (!c.primed_row_agrees) ++s.primed_row_disagreements;
    if (c.flags.size() > 1) ++s.relaxed_flag_samples;
  }
  return s;
}

}  // namespace g2t
