#pragma once

#include <cstdint>
#include <optional>

#include "g2twist/invariants.hpp"
#include "g2twist/shape.hpp"
#include "g2twist/stable.hpp"

namespace g2t {

/// A model with a0 a nonzero element, obtained by x -> 1/x (after a shift x -> x + c when
/// a6 = 0 as well). Igusa invariants are unchanged; the affine ones are not.
struct NormalizedModel {
  SexticForm form;
  bool reversed = false;
  Rational shift = 0;
};

NormalizedModel normalize_model(const SexticForm& p, const LocalContext& ctx);

/// Requires a0 != 0. `j12` is needed only in the irreducible-singular regime.
/// Throws Error(IndeterminateOmega) when no block matches.
OmegaStatus omega_status(const InvariantSet& inv, const SexticForm& p, Regime regime,
                         const std::optional<J12Selector>& j12, const LocalContext& ctx);

/// The base-field rationals from which n, r, q and d are read off. A twist by D with
/// nu(D) = 1 changes only these rationals, by the shifts of the twist lemmas.
struct RamSources {
  Regime regime = Regime::Smooth;
  OmegaStatus omega = OmegaStatus::NonRamified;
  std::optional<Rational> r;   // r = n * r mod n
  std::optional<Rational> q;   // q = n * q mod n
  std::optional<Rational> dK;  // two-component regime
  std::optional<Rational> rK;  // omega-singular subcase
  /// Irreducible (b): n is the denominator of q alone and r = -2q.
  bool r_from_q = false;
  /// Two-component regime: parity of nu(J2).
  std::optional<bool> j2_even;
};

struct RamData {
  std::int64_t n = 1;
  std::int64_t r = 0;               // in [0, n)
  std::optional<std::int64_t> q;    // in [0, n)
  std::optional<Rational> dK;
  std::optional<Rational> rK;
  std::optional<std::int64_t> d;    // n * dK
  std::optional<bool> j2_even;
  /// Unreduced r (and q): n times the source rational. The lemma relations hold on these.
  Integer r_raw = 0;
  std::optional<Integer> q_raw;

  friend bool operator==(const RamData&, const RamData&) = default;
};

RamSources smooth_sources(const InvariantSet& inv, const SexticForm& p, OmegaStatus omega, const LocalContext& ctx);
RamSources irreducible_singular_sources(const InvariantSet& inv, const J12Selector& j12, const SexticForm& p,
                                        OmegaStatus omega, const LocalContext& ctx);
/// Throws Error(OutsideRegime) at p = 3.
RamSources not_irreducible_sources(const InvariantSet& inv, const SexticForm& p, OmegaStatus omega,
                                   FiberCase shape, const LocalContext& ctx);

RamData ram_data(const RamSources& s);

/// Shifts of the twist lemmas for nu(D) = 1.
RamSources twist_sources(const RamSources& s);

inline RamData ram_data_smooth(const InvariantSet& inv, const SexticForm& p, OmegaStatus omega,
                               const LocalContext& ctx) {
  return ram_data(smooth_sources(inv, p, omega, ctx));
}
inline RamData ram_data_irreducible_singular(const InvariantSet& inv, const J12Selector& j12, const SexticForm& p,
                                             OmegaStatus omega, const LocalContext& ctx) {
  return ram_data(irreducible_singular_sources(inv, j12, p, omega, ctx));
}
inline RamData ram_data_not_irreducible(const InvariantSet& inv, const SexticForm& p, OmegaStatus omega,
                                        FiberCase shape, const LocalContext& ctx) {
  return ram_data(not_irreducible_sources(inv, p, omega, shape, ctx));
}

}  // namespace g2t
