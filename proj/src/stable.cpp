#include "g2twist/stable.hpp"

#include <algorithm>
#include <string>

#include "g2twist/error.hpp"

namespace g2t {

Epsilon epsilon(const LocalContext& ctx) { return Epsilon{ctx.p() == 3 ? 3 : 1}; }

namespace {

using F = MonoVal::Factor;

struct Blocks {
  const InvariantValuations& v;
  int eps;
  Val I2e;  // I_{2 eps}

  Val J(int i) const {
    switch (i) {
      case 1: return v.J2;
      case 2: return v.J4;
      case 3: return v.J6;
      case 4: return v.J8;
      default: return v.J10;
    }
  }

  bool smooth() const {
    for (int i = 1; i <= 5; ++i)
      if (!MonoVal{F{J(i), 5}, F{v.J10, -i}}.in_R()) return false;
    return true;
  }

  bool one_node() const {
    for (int i = 1; i <= 5; ++i)
      if (!MonoVal{F{J(i), 6}, F{v.I12, -i}}.in_R()) return false;
    return MonoVal{F{v.J10, 6}, F{v.I12, -5}}.in_m();
  }

  bool two_nodes() const {
    for (int i = 1; i <= 5; ++i)
      if (!MonoVal{F{J(i), 2}, F{v.I4, -i}}.in_R()) return false;
    if (!MonoVal{F{v.J10, 2}, F{v.I4, -5}}.in_m()) return false;
    if (!MonoVal{F{v.I12, 1}, F{v.I4, -3}}.in_m()) return false;
    return MonoVal{F{v.J4, 1}, F{v.I4, -1}}.is_unit() || MonoVal{F{v.J6, 2}, F{v.I4, -3}}.is_unit();
  }

  bool c000() const {
    for (int i = 2; i <= 5; ++i)
      if (!MonoVal{F{J(i), 2}, F{v.I4, -i}}.in_m()) return false;
    return true;
  }

  bool two_components() const {
    return MonoVal{F{v.I4, eps}, F{I2e, -2}}.in_m() && MonoVal{F{v.J10, eps}, F{I2e, -5}}.in_m() &&
           MonoVal{F{v.I12, eps}, F{I2e, -6}}.in_m();
  }

  bool both_smooth() const {
    return two_components() && MonoVal{F{v.I4, 3 * eps}, F{v.J10, -eps}, F{I2e, -1}}.in_R() &&
           MonoVal{F{v.I12, eps}, F{v.J10, -eps}, F{I2e, -1}}.in_R();
  }

  bool one_smooth() const {
    return two_components() && MonoVal{F{v.I4, 3}, F{v.I12, -1}}.in_R() &&
           MonoVal{F{v.J10, eps}, F{I2e, 1}, F{v.I12, -eps}}.in_m();
  }

  bool both_singular() const {
    return two_components() && MonoVal{F{v.I12, 1}, F{v.I4, -3}}.in_m() &&
           MonoVal{F{v.J10, eps}, F{I2e, 1}, F{v.I4, -3 * eps}}.in_m();
  }
};

Rational pow(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

std::optional<std::uint32_t> residue_of(const Rational& num, const Rational& den, const LocalContext& ctx) {
  if (den == 0) return std::nullopt;
  Rational q = num / den;
  if (!ctx.in_R(q)) return std::nullopt;
  return ctx.residue(q);
}

ResidueReport residues(FiberCase c, const InvariantSet& inv, int eps, const LocalContext& ctx) {
  ResidueReport out;
  const Rational& I2e = eps == 3 ? inv.I6 : inv.I2;
  switch (c) {
    case FiberCase::IrreducibleOneNode:
    case FiberCase::OneSmoothOneSingular: out.j = residue_of(pow(inv.I4, 3), inv.I12, ctx); break;
    case FiberCase::TwoSmoothOneNode: {
      const Rational den = pow(inv.J10, eps) * I2e;
      out.j1j2_pow_eps = residue_of(pow(inv.I4, 3 * eps), den, ctx);
      if (auto s = residue_of(pow(inv.I12, eps), den, ctx))
        out.j1_plus_j2_pow_eps = static_cast<std::uint32_t>((*s + 1728ULL) % ctx.p());
      break;
    }
    default: break;
  }
  return out;
}

}  // namespace

std::vector<FiberCase> matching_blocks(const InvariantSet& inv, const LocalContext& ctx) {
  const InvariantValuations v = valuations(inv, ctx);
  const int eps = epsilon(ctx).value;
  Blocks b{v, eps, eps == 3 ? v.I6 : v.I2};
  std::vector<FiberCase> out;
  if (b.smooth()) out.push_back(FiberCase::Smooth);
  if (b.one_node()) out.push_back(FiberCase::IrreducibleOneNode);
  if (b.two_nodes()) out.push_back(FiberCase::IrreducibleTwoNodes);
  if (b.c000()) out.push_back(FiberCase::TwoRationalThreeNodes);
  if (b.both_smooth()) out.push_back(FiberCase::TwoSmoothOneNode);
  if (b.one_smooth()) out.push_back(FiberCase::OneSmoothOneSingular);
  if (b.both_singular()) out.push_back(FiberCase::TwoSingularOneNode);
  return out;
}

StableFiberType classify_stable(const InvariantSet& inv, const LocalContext& ctx) {
  if (inv.J10 == 0) throw Error(ErrorKind::InvalidInput, "stable", "J10 = 0: P has a repeated root");
  StableFiberType out;
  out.matches = matching_blocks(inv, ctx);
  if (out.matches.empty())
    throw Error(ErrorKind::Unclassifiable, "stable", "no block of the seven-case classification matched");
  out.kind = out.matches.front();
  out.residues = residues(out.kind, inv, epsilon(ctx).value, ctx);
  return out;
}

SpecialFiberTests special_fiber_tests(const InvariantSet& inv, const LocalContext& ctx) {
  const InvariantValuations v = valuations(inv, ctx);
  SpecialFiberTests out;
  if (ctx.p() == 3) {
    bool member = inv.J2 != 0 && MonoVal{F{v.J4, 1}, F{v.J2, -2}}.in_m() &&
                  MonoVal{F{v.J10, 1}, F{v.J2, -5}}.is_unit();
    if (member) {
      const Rational diff = inv.J6 / pow(inv.J2, 3) - inv.J10 / pow(inv.J2, 5);
      member = ctx.in_m(diff);
    }
    out.gamma_member = member;
  } else if (ctx.p() == 5) {
    bool iso = true;
    for (auto [val, i] : {std::pair{v.J2, 1}, {v.J4, 2}, {v.J6, 3}, {v.J8, 4}})
      iso = iso && MonoVal{F{val, 5}, F{v.J10, -i}}.in_m();
    out.c0_iso = iso;
  } else {
    throw Error(ErrorKind::InvalidInput, "special-fiber",
                "Gamma and C0 tests are defined only for p = 3 and p = 5");
  }
  return out;
}

bool is_tame(FiberCase shape, const SpecialFiberTests& tests, std::optional<OmegaStatus> omega,
             const LocalContext& ctx) {
  const bool ramified = omega && *omega != OmegaStatus::NonRamified;
  if (ctx.p() != 3 && ctx.p() != 5) return true;
  if (ctx.p() == 3) {
    switch (regime_of(shape)) {
      case Regime::Smooth:
        if (!tests.gamma_member) throw Error(ErrorKind::InvalidInput, "tame", "missing Gamma test at p = 3");
        return ramified || !*tests.gamma_member;
      case Regime::IrreducibleSingular:
        return shape != FiberCase::TwoRationalThreeNodes || ramified;
      case Regime::NotIrreducible: return false;
    }
  }
  if (shape != FiberCase::Smooth) return true;
  if (!tests.c0_iso) throw Error(ErrorKind::InvalidInput, "tame", "missing C0 test at p = 5");
  return !ramified || !*tests.c0_iso;
}

namespace {

/// Base-field valuation of a monomial divided by `divisor`; nullopt for +infinity.
std::optional<Rational> ratio(const MonoVal& m, std::int64_t divisor, std::string_view what) {
  if (m.kind() == MonoVal::Kind::PlusInfinity) return std::nullopt;
  return m.over(divisor, what);
}

Rational finite_ratio(const MonoVal& m, std::int64_t divisor, std::string_view what) {
  return m.over(divisor, what);
}

Rational inf_of(std::initializer_list<std::optional<Rational>> xs, std::string_view what) {
  std::optional<Rational> best;
  for (const auto& x : xs)
    if (x && (!best || *x < *best)) best = *x;
  if (!best)
    throw Error(ErrorKind::DegenerateInvariant, "degrees", "every term of " + std::string(what) + " is infinite");
  return *best;
}

std::int64_t positive_integer(const Rational& x, std::string_view name) {
  if (!is_integral(x))
    throw Error(ErrorKind::NonIntegralDegree, "degrees",
                std::string(name) + " = " + x.get_str() + " is not an integer (wrong n or wild regime)");
  if (x < 1)
    throw Error(ErrorKind::NonIntegralDegree, "degrees", std::string(name) + " = " + x.get_str() + " is not positive");
  return to_int64(x);
}

}  // namespace

SingularityDegrees singularity_degrees(FiberCase shape, const InvariantSet& inv, const ExtValuation& ext,
                                       Epsilon eps_, const LocalContext& ctx) {
  const InvariantValuations v = valuations(inv, ctx);
  const int eps = eps_.value;
  const Val I2e = eps == 3 ? v.I6 : v.I2;
  const Rational n = ext.n;
  SingularityDegrees out;
  out.kind = shape;

  switch (shape) {
    case FiberCase::Smooth:
      throw Error(ErrorKind::InvalidInput, "degrees", "the smooth fiber has no singular points");

    case FiberCase::IrreducibleOneNode: {
      Rational e = n * finite_ratio(MonoVal{F{v.J10, 6}, F{v.I12, -5}}, 6, "J10^6 I12^-5");
      out.e = {positive_integer(e, "e")};
      break;
    }

    case FiberCase::IrreducibleTwoNodes: {
      auto a = ratio(MonoVal{F{v.I12, 1}, F{v.I4, -3}}, 1, "I12 I4^-3");
      Rational b = finite_ratio(MonoVal{F{v.J10, 2}, F{v.I4, -5}}, 1, "J10^2 I4^-5");
      // The printed inf takes b itself, which breaks e1 <= e2; b/4 keeps it (as in case VII).
      Rational e1 = n * inf_of({a, Rational(b / 4)}, "e1");
      Rational e2 = n * b / 2 - e1;
      out.e = {positive_integer(e1, "e1"), positive_integer(e2, "e2")};
      break;
    }

    case FiberCase::TwoRationalThreeNodes: {
      Rational l = n * finite_ratio(MonoVal{F{v.J10, 1}, F{v.J2, -5}}, 1, "J10 J2^-5");
      auto nn = ratio(MonoVal{F{v.I12, 1}, F{v.J2, -6}}, 1, "I12 J2^-6");
      auto m = ratio(MonoVal{F{v.J4, 1}, F{v.J2, -2}}, 1, "J4 J2^-2");
      if (nn) *nn *= n;
      if (m) *m *= n;
      Rational e1 = inf_of({Rational(l / 3), nn ? std::optional<Rational>(*nn / 2) : std::nullopt, m}, "e1");
      Rational e2 = inf_of({Rational((l - e1) / 2), nn ? std::optional<Rational>(*nn - e1) : std::nullopt}, "e2");
      Rational e3 = l - e1 - e2;
      out.e = {positive_integer(e1, "e1"), positive_integer(e2, "e2"), positive_integer(e3, "e3")};
      break;
    }

    case FiberCase::TwoSmoothOneNode: {
      Rational e = n * finite_ratio(MonoVal{F{v.J10, eps}, F{I2e, -5}}, 12 * eps, "J10^eps I2eps^-5");
      out.e = {positive_integer(e, "e")};
      break;
    }

    case FiberCase::OneSmoothOneSingular: {
      Rational e0 = n * finite_ratio(MonoVal{F{v.I12, eps}, F{I2e, -6}}, 12 * eps, "I12^eps I2eps^-6");
      Rational e1 = n * finite_ratio(MonoVal{F{v.J10, eps}, F{I2e, 1}, F{v.I12, -eps}}, eps, "J10^eps I2eps I12^-eps");
      out.e = {positive_integer(e0, "e0"), positive_integer(e1, "e1")};
      break;
    }

    case FiberCase::TwoSingularOneNode: {
      // Normalized by 4 eps so that e0 is the node degree n * d_K.
      Rational e0 = n * finite_ratio(MonoVal{F{v.I4, eps}, F{I2e, -2}}, 4 * eps, "I4^eps I2eps^-2");
      auto a = ratio(MonoVal{F{v.I12, 1}, F{v.I4, -3}}, 1, "I12 I4^-3");
      Rational b = finite_ratio(MonoVal{F{v.J10, eps}, F{I2e, 1}, F{v.I4, -3 * eps}}, eps, "J10^eps I2eps I4^-3eps");
      if (a) *a *= n;
      Rational e1 = inf_of({a, Rational(n * b / 2)}, "e1");
      Rational e2 = n * b - e1;
      out.e = {positive_integer(e0, "e0"), positive_integer(e1, "e1"), positive_integer(e2, "e2")};
      break;
    }
  }
  return out;
}

J12Selector select_J12(const InvariantSet& inv, FiberCase shape) {
  switch (shape) {
    case FiberCase::IrreducibleOneNode: return {inv.I12, J12Source::I12};
    case FiberCase::IrreducibleTwoNodes: return {pow(inv.I4, 3), J12Source::I4Cubed};
    case FiberCase::TwoRationalThreeNodes: return {pow(inv.J2, 6), J12Source::J2Sixth};
    default:
      throw Error(ErrorKind::OutsideRegime, "J12",
                  "J12 is defined only for the irreducible singular shapes, not " + std::string(to_string(shape)));
  }
}

}  // namespace g2t
