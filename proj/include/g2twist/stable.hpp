#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "g2twist/invariants.hpp"
#include "g2twist/shape.hpp"

namespace g2t {

/// 1 if p != 2, 3; 3 if p = 3 (4 for p = 2 is unreachable here).
struct Epsilon {
  int value = 1;
};

Epsilon epsilon(const LocalContext& ctx);

/// Residue-field data attached to the fiber shapes II, V and VI, when the relevant quotient is
/// p-integral. Values live in F_p.
struct ResidueReport {
  std::optional<std::uint32_t> j;                 // II, VI: residue of I4^3 / I12
  std::optional<std::uint32_t> j1j2_pow_eps;      // V: (j1 j2)^eps
  std::optional<std::uint32_t> j1_plus_j2_pow_eps;  // V: (j1 + j2)^eps
};

struct StableFiberType {
  FiberCase kind = FiberCase::Smooth;
  ResidueReport residues;
  /// Every block that matched, in evaluation order. Exactly one for valid inputs.
  std::vector<FiberCase> matches;
};

/// Evaluates the seven valuation blocks in order and returns the first match.
/// Throws Error(InvalidInput) if J10 = 0 and Error(Unclassifiable) if nothing matches.
StableFiberType classify_stable(const InvariantSet& inv, const LocalContext& ctx);

/// Whether each of the seven blocks holds, without picking a winner.
std::vector<FiberCase> matching_blocks(const InvariantSet& inv, const LocalContext& ctx);

/// Membership tests for the char-3 family Gamma and the char-5 curve y^2 = x^5 - x.
struct SpecialFiberTests {
  std::optional<bool> gamma_member;  // p = 3 only
  std::optional<bool> c0_iso;        // p = 5 only
};

/// Throws Error(InvalidInput) for p not in {3, 5}.
SpecialFiberTests special_fiber_tests(const InvariantSet& inv, const LocalContext& ctx);

/// Sufficient conditions for L/K to be tamely ramified. `false` means the wild-case
/// propositions apply. For the irreducible-singular regime in char 3 the curve C000 is tame only
/// when omega is ramified; the two-component regime in char 3 is reported as not tame.
bool is_tame(FiberCase shape, const SpecialFiberTests& tests, std::optional<OmegaStatus> omega,
             const LocalContext& ctx);

/// Degrees of singularity measured in nu_L. Layout by case:
/// II {e}; III {e1, e2}; IV {e1, e2, e3}; V {e}; VI {e0, e1}; VII {e0, e1, e2}.
struct SingularityDegrees {
  FiberCase kind = FiberCase::Smooth;
  std::vector<std::int64_t> e;

  friend bool operator==(const SingularityDegrees&, const SingularityDegrees&) = default;
};

/// Throws Error(NonIntegralDegree) when a formula does not give a positive integer.
SingularityDegrees singularity_degrees(FiberCase shape, const InvariantSet& inv, const ExtValuation& ext,
                                       Epsilon eps, const LocalContext& ctx);

enum class J12Source { I12, I4Cubed, J2Sixth };

struct J12Selector {
  Rational value;
  J12Source source;
};

/// I12 for one node, I4^3 for the irreducible rational fiber with two nodes, J2^6 for C000.
/// Throws Error(OutsideRegime) for the other shapes.
J12Selector select_J12(const InvariantSet& inv, FiberCase shape);

}  // namespace g2t
