#include "g2twist/twist.hpp"

#include "g2twist/error.hpp"

namespace g2t {

namespace {

RamSources sources_for(const InvariantSet& inv, const SexticForm& form, FiberCase shape, OmegaStatus omega,
                       const std::optional<J12Selector>& j12, const LocalContext& ctx) {
  switch (regime_of(shape)) {
    case Regime::Smooth: return smooth_sources(inv, form, omega, ctx);
    case Regime::IrreducibleSingular: return irreducible_singular_sources(inv, *j12, form, omega, ctx);
    case Regime::NotIrreducible: return not_irreducible_sources(inv, form, omega, shape, ctx);
  }
  throw Error(ErrorKind::InvalidInput, "ram", "unknown regime");
}

std::optional<std::int64_t> remark_q_of(const InvariantSet& inv, FiberCase shape, const LocalContext& ctx) {
  if (shape != FiberCase::OneSmoothOneSingular) return std::nullopt;
  const InvariantValuations v = valuations(inv, ctx);
  MonoVal m{MonoVal::Factor{v.J2, 1}, MonoVal::Factor{v.J10, 1}, MonoVal::Factor{v.I12, -1}};
  if (!m.is_finite()) return std::nullopt;
  return m.value();
}

SingularityDegrees degrees_for(FiberCase shape, const InvariantSet& inv, std::int64_t n, const LocalContext& ctx) {
  if (shape == FiberCase::Smooth) return SingularityDegrees{shape, {}};
  return singularity_degrees(shape, inv, ExtValuation{n}, epsilon(ctx), ctx);
}

ReductionSymbol wild_type(const CurveAnalysis& a, const AnalysisOptions& opts, const LocalContext& ctx,
                          const std::optional<Rational>& d) {
  if (ctx.p() == 3 && opts.wild.char3) return wild_char3_type(opts.wild.char3->a0, opts.wild.char3->c, d);
  if (ctx.p() == 5 && opts.wild.char5) return wild_char5_type(*opts.wild.char5, d);
  std::string need = ctx.p() == 3
                         ? "a0, c1..c6 of z^2 = a0((u^3+c1u^2+c2u+c3)^2 + c4u^2+c5u+c6)"
                         : "b0..b6 of z^2 = b0u^6+...+b6 with nu(b1) = 0";
  const std::string why = regime_of(a.stable.kind) == Regime::NotIrreducible
                              ? "two-component stable fiber in characteristic 3 is outside the tame tables"
                              : "L/K is wildly ramified";
  throw Error(ErrorKind::NormalFormRequired, "wild",
              why + " (" + std::string(to_string(a.stable.kind)) + "); supply " + need);
}

}  // namespace

TableQuery CurveAnalysis::query(const AnalysisOptions& opts) const {
  TableQuery q;
  q.shape = stable.kind;
  if (ram) q.ram = *ram;
  if (degrees) q.degrees = *degrees;
  if (omega) q.omega = *omega;
  q.remark_q = remark_q;
  q.e1_smooth = opts.e1_smooth;
  return q;
}

CurveAnalysis analyze(const SexticForm& p, const LocalContext& ctx, const AnalysisOptions& opts) {
  CurveAnalysis a;
  a.input = p;
  a.model = normalize_model(p, ctx);
  a.inv = compute_invariants(a.model.form);
  a.stable = classify_stable(a.inv, ctx);
  const FiberCase shape = a.stable.kind;
  const Regime regime = regime_of(shape);

  if (ctx.p() == 3 || ctx.p() == 5) a.tests = special_fiber_tests(a.inv, ctx);
  if (regime == Regime::IrreducibleSingular) a.j12 = select_J12(a.inv, shape);

  if (ctx.p() == 3 && regime == Regime::NotIrreducible) {
    a.tame = false;
  } else {
    a.omega = omega_status(a.inv, a.model.form, regime, a.j12, ctx);
    a.tame = is_tame(shape, a.tests.value_or(SpecialFiberTests{}), a.omega, ctx);
  }

  if (!a.tame) {
    a.type_X = wild_type(a, opts, ctx, std::nullopt);
    return a;
  }

  a.sources = sources_for(a.inv, a.model.form, shape, *a.omega, a.j12, ctx);
  a.ram = ram_data(*a.sources);
  a.degrees = degrees_for(shape, a.inv, a.ram->n, ctx);
  a.remark_q = remark_q_of(a.inv, shape, ctx);
  a.table = lookup(a.query(opts));
  a.type_X = a.table->x;
  return a;
}

TwistParity twist_parity(const Rational& d, const LocalContext& ctx) {
  if (d == 0) throw Error(ErrorKind::InvalidInput, "twist", "D must be nonzero");
  const std::int64_t v = ctx.val(d).value();
  const std::int64_t k = v >= 0 ? v / 2 : -((-v + 1) / 2);
  Rational t2k = 1;
  Integer p2 = Integer(ctx.p()) * ctx.p();
  for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) t2k *= Rational(p2);
  TwistParity out;
  out.normalized = k >= 0 ? Rational(d / t2k) : Rational(d * t2k);
  out.ramified = (v - 2 * k) == 1;
  return out;
}

namespace {

// Relations of the twist lemmas between the untwisted data and the data read directly off the
// twisted curve. Returns the failures.
std::vector<std::string> lemma_relations(const RamSources& s, const RamData& a, const RamData& b) {
  std::vector<std::string> bad;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  const Integer n(a.n), n2(b.n);
  switch (s.regime) {
    case Regime::Smooth: {
      const int sign = s.omega == OmegaStatus::NonRamified ? -1 : 1;
      check(n * b.r_raw == n2 * a.r_raw, "n r' = n' r");
      check(2 * n * *b.q_raw == n2 * (2 * *a.q_raw + sign * n), sign < 0 ? "q' = n'(q/n - 1/2)" : "q' = n'(q/n + 1/2)");
      break;
    }
    case Regime::IrreducibleSingular:
      if (!s.r_from_q) check(n * b.r_raw == n2 * a.r_raw, "n r' = n' r");
      check(2 * n * *b.q_raw == n2 * (2 * *a.q_raw - n), "q' = n'(q/n - 1/2)");
      break;
    case Regime::NotIrreducible:
      check(n * *b.d == n2 * *a.d, "n d' = n' d");
      check(a.j2_even == b.j2_even, "parity of nu(J2) preserved");
      if (!*s.j2_even) {
        check(a.n == b.n, "n' = n");
        check(a.r_raw == b.r_raw, "r' = r");
      }
      break;
  }
  return bad;
}

}  // namespace

TwistReport run_twist(const SexticForm& p, const Rational& d, const LocalContext& ctx, const AnalysisOptions& opts) {
  TwistReport r;
  r.D = d;
  r.parity = twist_parity(d, ctx);
  r.x = analyze(p, ctx, opts);
  r.type_X = r.x.type_X;
  r.shape_chi = twist_stable_shape(r.x.stable.kind);

  if (!r.parity.ramified) {
    r.inv_chi = twist_invariants(r.x.inv, r.parity.normalized);
    r.omega_chi = r.x.omega;
    r.ram_chi = r.x.ram;
    r.degrees_chi = r.x.degrees;
    r.type_Xchi = r.type_X;
    return r;
  }

  const Rational& dn = r.parity.normalized;
  if (!r.x.tame) {
    r.wild = true;
    r.type_Xchi = wild_type(r.x, opts, ctx, dn);
    return r;
  }

  const FiberCase shape = r.x.stable.kind;
  const SexticForm model_chi = r.x.model.form.scaled(dn);
  r.inv_chi = twist_invariants(r.x.inv, dn);
  if (compute_invariants(model_chi) != *r.inv_chi) r.lemma_violations.push_back("twisted invariants");
  if (classify_stable(*r.inv_chi, ctx).kind != shape) r.lemma_violations.push_back("stable shape preserved");

  std::optional<J12Selector> j12_chi;
  if (regime_of(shape) == Regime::IrreducibleSingular) j12_chi = select_J12(*r.inv_chi, shape);
  r.omega_chi = omega_status(*r.inv_chi, model_chi, regime_of(shape), j12_chi, ctx);
  if (*r.omega_chi != *r.x.omega) r.lemma_violations.push_back("omega status preserved");

  r.sources_chi = twist_sources(*r.x.sources);
  r.ram_chi = ram_data(*r.sources_chi);

  const RamData direct = ram_data(sources_for(*r.inv_chi, model_chi, shape, *r.omega_chi, j12_chi, ctx));
  if (direct != *r.ram_chi) r.lemma_violations.push_back("shifted data equals data of the twist");
  for (auto& v : lemma_relations(*r.x.sources, *r.x.ram, direct)) r.lemma_violations.push_back(v);

  r.degrees_chi = degrees_for(shape, *r.inv_chi, r.ram_chi->n, ctx);
  r.type_Xchi = r.x.table->xchi;

  TableQuery q;
  q.shape = shape;
  q.ram = *r.ram_chi;
  q.degrees = *r.degrees_chi;
  q.omega = *r.omega_chi;
  q.remark_q = remark_q_of(*r.inv_chi, shape, ctx);
  q.e1_smooth = opts.e1_smooth;
  try {
    r.type_Xchi_primed_row = lookup(q).x;
  } catch (const Error& e) {
    r.primed_row_error = e.what();
  }
  return r;
}

}  // namespace g2t
