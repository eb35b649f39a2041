#include "g2twist/ramification.hpp"

#include <algorithm>
#include <string>

#include "g2twist/error.hpp"

namespace g2t {

NormalizedModel normalize_model(const SexticForm& p, const LocalContext& ctx) {
  NormalizedModel out{p, false, 0};
  if (p[0] != 0) return out;
  SexticForm base = p;
  if (p[6] == 0) {
    // Pick the unit c in [1, p) where P(c) has the least valuation, so the new a0 = P(c) is as
    // close to a unit as possible. P has degree 5, so some such c has P(c) != 0.
    std::optional<std::pair<Val, long>> best;
    for (long c = 1; c < static_cast<long>(ctx.p()); ++c) {
      Val v = ctx.val(p.evaluate(c));
      if (!v.is_infinite() && (!best || v < best->first)) best = {v, c};
    }
    if (!best) {
      for (long c = static_cast<long>(ctx.p()) + 1; !best; ++c)
        if (c % ctx.p() != 0 && p.evaluate(c) != 0) best = {ctx.val(p.evaluate(c)), c};
    }
    out.shift = best->second;
    base = p.shifted(out.shift);
  }
  out.form = base.reversed();
  out.reversed = true;
  return out;
}

namespace {

using F = MonoVal::Factor;

void require_a0(const SexticForm& p, const char* stage) {
  if (p[0] == 0)
    throw Error(ErrorKind::InvalidInput, stage, "a0 = 0: normalize the model first (x -> 1/x)");
}

Rational source(const MonoVal& m, std::int64_t divisor, std::string_view what) { return m.over(divisor, what); }

}  // namespace

OmegaStatus omega_status(const InvariantSet& inv, const SexticForm& p, Regime regime,
                         const std::optional<J12Selector>& j12, const LocalContext& ctx) {
  require_a0(p, "omega");
  const Val a0 = ctx.val(p[0]);
  const InvariantValuations v = valuations(inv, ctx);

  switch (regime) {
    case Regime::Smooth: {
      bool ramified = inv.A5 != 0 && MonoVal{F{a0, 20}, F{v.J10, 1}, F{v.A5, -6}}.in_m();
      return ramified ? OmegaStatus::RamifiedRegularPreimage : OmegaStatus::NonRamified;
    }
    case Regime::IrreducibleSingular: {
      if (!j12) throw Error(ErrorKind::InvalidInput, "omega", "J12 is required in the irreducible-singular regime");
      const Val J12 = ctx.val(j12->value);
      if (MonoVal{F{a0, -6}, F{v.B2, 9}, F{J12, -1}}.in_R() && MonoVal{F{a0, -120}, F{v.A5, 36}, F{J12, -5}}.in_R())
        return OmegaStatus::NonRamified;
      if (MonoVal{F{a0, 120}, F{v.A5, -36}, F{J12, 5}}.in_m() && MonoVal{F{v.B2, 60}, F{v.A5, -12}, F{J12, -5}}.in_R())
        return OmegaStatus::RamifiedRegularPreimage;
      if (MonoVal{F{a0, 6}, F{v.B2, -9}, F{J12, 1}}.in_m() && MonoVal{F{v.B2, -60}, F{v.A5, 12}, F{J12, 5}}.in_m())
        return OmegaStatus::RamifiedSingularPreimage;
      break;
    }
    case Regime::NotIrreducible: {
      const MonoVal b = MonoVal{F{a0, -2}, F{v.B2, 3}, F{v.J2, -2}};
      const MonoVal a3 = MonoVal{F{a0, -4}, F{v.A3, 2}, F{v.J2, -1}};
      const MonoVal a5 = MonoVal{F{a0, -20}, F{v.A5, 6}, F{v.J2, -5}};
      if (b.in_R() && a3.in_R() && a5.in_R() && (a3.is_unit() || a5.is_unit())) return OmegaStatus::NonRamified;
      if (MonoVal{F{a0, 20}, F{v.A5, -6}, F{v.J2, 5}}.in_m() && MonoVal{F{v.B2, 10}, F{v.A5, -2}, F{v.J2, -5}}.in_R())
        return OmegaStatus::RamifiedRegularPreimage;
      if (MonoVal{F{a0, 2}, F{v.B2, -3}, F{v.J2, 2}}.in_m() && MonoVal{F{v.B2, -10}, F{v.A5, 2}, F{v.J2, 5}}.in_m())
        return OmegaStatus::RamifiedSingularPreimage;
      if (b.in_R() && a3.in_m() && a5.in_m()) return OmegaStatus::OmegaSingular;
      break;
    }
  }
  throw Error(ErrorKind::IndeterminateOmega, "omega",
              "no status block matched in the " + std::string(to_string(regime)) + " regime");
}

RamSources smooth_sources(const InvariantSet& inv, const SexticForm& p, OmegaStatus omega, const LocalContext& ctx) {
  require_a0(p, "ram");
  const Val a0 = ctx.val(p[0]);
  const InvariantValuations v = valuations(inv, ctx);
  RamSources s;
  s.regime = Regime::Smooth;
  s.omega = omega;
  if (omega == OmegaStatus::NonRamified) {
    s.r = source(MonoVal{F{a0, 10}, F{v.J10, -1}}, 30, "a0^10 J10^-1");
    s.q = source(MonoVal{F{a0, 5}, F{v.J10, -1}}, 10, "a0^5 J10^-1");
  } else {
    s.r = source(MonoVal{F{v.A5, -2}, F{v.J10, 1}}, 20, "A5^-2 J10");
    s.q = source(MonoVal{F{v.A5, -6}, F{v.J10, 5}}, 40, "A5^-6 J10^5");
  }
  return s;
}

RamSources irreducible_singular_sources(const InvariantSet& inv, const J12Selector& j12, const SexticForm& p,
                                        OmegaStatus omega, const LocalContext& ctx) {
  require_a0(p, "ram");
  const Val a0 = ctx.val(p[0]);
  const Val J12 = ctx.val(j12.value);
  const InvariantValuations v = valuations(inv, ctx);
  RamSources s;
  s.regime = Regime::IrreducibleSingular;
  s.omega = omega;
  switch (omega) {
    case OmegaStatus::NonRamified:
      s.r = source(MonoVal{F{a0, 12}, F{J12, -1}}, 36, "a0^12 J12^-1");
      s.q = source(MonoVal{F{a0, 6}, F{J12, -1}}, 12, "a0^6 J12^-1");
      break;
    case OmegaStatus::RamifiedRegularPreimage:
      s.q = source(MonoVal{F{v.A5, 36}, F{J12, -25}}, 240, "A5^36 J12^-25");
      s.r_from_q = true;
      break;
    case OmegaStatus::RamifiedSingularPreimage:
      s.r = source(MonoVal{F{v.B2, -6}, F{J12, 1}}, 12, "B2^-6 J12");
      s.q = source(MonoVal{F{v.B2, -9}, F{J12, 1}}, 12, "B2^-9 J12");
      break;
    case OmegaStatus::OmegaSingular:
      throw Error(ErrorKind::IndeterminateOmega, "ram", "omega cannot be singular in the irreducible regime");
  }
  return s;
}

RamSources not_irreducible_sources(const InvariantSet& inv, const SexticForm& p, OmegaStatus omega,
                                   FiberCase shape, const LocalContext& ctx) {
  if (ctx.p() == 3)
    throw Error(ErrorKind::OutsideRegime, "ram", "two-component stable fiber in characteristic 3");
  require_a0(p, "ram");
  const Val a0 = ctx.val(p[0]);
  const InvariantValuations v = valuations(inv, ctx);
  RamSources s;
  s.regime = Regime::NotIrreducible;
  s.omega = omega;
  switch (shape) {
    case FiberCase::TwoSmoothOneNode: s.dK = source(MonoVal{F{v.J10, 1}, F{v.J2, -5}}, 12, "J10 J2^-5"); break;
    case FiberCase::OneSmoothOneSingular: s.dK = source(MonoVal{F{v.I12, 1}, F{v.J2, -6}}, 12, "I12 J2^-6"); break;
    case FiberCase::TwoSingularOneNode: s.dK = source(MonoVal{F{v.I4, 1}, F{v.J2, -2}}, 4, "I4 J2^-2"); break;
    default:
      throw Error(ErrorKind::OutsideRegime, "ram",
                  "not a two-component shape: " + std::string(to_string(shape)));
  }
  if (v.J2.is_infinite()) throw Error(ErrorKind::DegenerateInvariant, "ram", "J2 = 0 in the two-component regime");
  s.j2_even = v.J2.value() % 2 == 0;
  const Rational nu_a0(a0.value());

  if (!*s.j2_even) {
    s.rK = (*s.dK + nu_a0) / 2;
    return s;
  }
  switch (omega) {
    case OmegaStatus::NonRamified: s.r = source(MonoVal{F{a0, 1}, F{v.J2, 1}}, 6, "a0 J2"); break;
    case OmegaStatus::RamifiedRegularPreimage: s.r = source(MonoVal{F{v.A5, 2}, F{v.J2, 1}}, 8, "A5^2 J2"); break;
    case OmegaStatus::RamifiedSingularPreimage: s.r = source(MonoVal{F{v.B2, 1}}, 4, "B2"); break;
    case OmegaStatus::OmegaSingular: {
      std::optional<Rational> best = *s.dK / 2;
      auto consider = [&](const MonoVal& m, std::int64_t div) {
        if (m.kind() == MonoVal::Kind::PlusInfinity) return;
        Rational x = m.over(div, "r_K term");
        if (x < *best) best = x;
      };
      consider(MonoVal{F{v.A2, -3}, F{v.A3, 2}}, 8);
      const Rational mix = inv.A2 * inv.A3 - 3 * inv.A5;
      consider(MonoVal{F{v.A2, -5}, F{ctx.val(mix), 2}}, 12);
      s.rK = nu_a0 / 2 + *best;
      s.r = s.rK;
      break;
    }
  }
  return s;
}

RamData ram_data(const RamSources& s) {
  RamData out;
  out.dK = s.dK;
  out.rK = s.rK;
  out.j2_even = s.j2_even;

  if (s.regime == Regime::NotIrreducible) {
    if (!s.dK) throw Error(ErrorKind::InvalidInput, "ram", "missing d_K");
    if (!*s.j2_even) {
      const Integer m = denominator_of(*s.dK);
      out.n = 2 * to_int64(Rational(m));
      Rational r_raw = *s.dK * m;
      out.r_raw = r_raw.get_num();
      out.r = mod_floor(out.r_raw, out.n);
      out.d = to_int64(*s.dK * out.n);
      return out;
    }
    out.n = to_int64(Rational(lcd({*s.dK, *s.r})));
    out.r_raw = Rational(*s.r * out.n).get_num();
    out.r = mod_floor(out.r_raw, out.n);
    out.d = to_int64(*s.dK * out.n);
    return out;
  }

  if (s.r_from_q) {
    out.n = to_int64(Rational(denominator_of(*s.q)));
    out.q_raw = Rational(*s.q * out.n).get_num();
    out.r_raw = -2 * *out.q_raw;
  } else {
    out.n = to_int64(Rational(lcd({*s.r, *s.q})));
    out.r_raw = Rational(*s.r * out.n).get_num();
    out.q_raw = Rational(*s.q * out.n).get_num();
  }
  out.r = mod_floor(out.r_raw, out.n);
  out.q = mod_floor(*out.q_raw, out.n);
  return out;
}

RamSources twist_sources(const RamSources& s) {
  RamSources t = s;
  const Rational half(1, 2);
  switch (s.regime) {
    case Regime::Smooth:
      *t.q += s.omega == OmegaStatus::NonRamified ? Rational(-half) : half;
      break;
    case Regime::IrreducibleSingular: *t.q -= half; break;
    case Regime::NotIrreducible:
      if (t.rK) *t.rK += half;
      if (!*s.j2_even) break;
      if (s.omega == OmegaStatus::OmegaSingular)
        t.r = t.rK;
      else
        *t.r += s.omega == OmegaStatus::RamifiedRegularPreimage ? Rational(3, 2) : half;
      break;
  }
  return t;
}

}  // namespace g2t
