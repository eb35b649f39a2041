#pragma once

#include <string_view>

namespace g2t {

/// The seven possible special fibers of the stable model.
enum class FiberCase {
  Smooth,                       // (I)
  IrreducibleOneNode,           // (II)
  IrreducibleTwoNodes,          // (III)
  TwoRationalThreeNodes,        // (IV), the curve C000
  TwoSmoothOneNode,             // (V) two elliptic curves
  OneSmoothOneSingular,         // (VI) one elliptic, one rational
  TwoSingularOneNode,           // (VII) two rational nodal curves
};

inline constexpr FiberCase kAllFiberCases[] = {
    FiberCase::Smooth,           FiberCase::IrreducibleOneNode,   FiberCase::IrreducibleTwoNodes,
    FiberCase::TwoRationalThreeNodes, FiberCase::TwoSmoothOneNode, FiberCase::OneSmoothOneSingular,
    FiberCase::TwoSingularOneNode,
};

std::string_view to_string(FiberCase c);
/// Inverse of to_string; throws Error(InvalidInput).
FiberCase parse_fiber_case(std::string_view s);

/// The three regimes of the quotient Z_k = C_k / <sigma>.
enum class Regime { Smooth, IrreducibleSingular, NotIrreducible };

constexpr Regime regime_of(FiberCase c) {
  switch (c) {
    case FiberCase::Smooth: return Regime::Smooth;
    case FiberCase::IrreducibleOneNode:
    case FiberCase::IrreducibleTwoNodes:
    case FiberCase::TwoRationalThreeNodes: return Regime::IrreducibleSingular;
    default: return Regime::NotIrreducible;
  }
}

std::string_view to_string(Regime r);

/// Behaviour of the point at infinity omega of the quotient line.
enum class OmegaStatus {
  NonRamified,
  RamifiedRegularPreimage,   // ramified, preimage is a regular point
  RamifiedSingularPreimage,  // ramified, preimage is a singular point
  OmegaSingular,             // omega-bar is the singular point (two-component regime only)
};

std::string_view to_string(OmegaStatus s);

}  // namespace g2t
