#include "g2twist/shape.hpp"

#include <string>

#include "g2twist/error.hpp"

namespace g2t {

std::string_view to_string(FiberCase c) {
  switch (c) {
    case FiberCase::Smooth: return "I-Smooth";
    case FiberCase::IrreducibleOneNode: return "II-IrreducibleOneNode";
    case FiberCase::IrreducibleTwoNodes: return "III-IrreducibleTwoNodes";
    case FiberCase::TwoRationalThreeNodes: return "IV-TwoRationalThreeNodes";
    case FiberCase::TwoSmoothOneNode: return "V-TwoSmoothOneNode";
    case FiberCase::OneSmoothOneSingular: return "VI-OneSmoothOneSingular";
    case FiberCase::TwoSingularOneNode: return "VII-TwoSingularOneNode";
  }
  return "?";
}

FiberCase parse_fiber_case(std::string_view s) {
  for (FiberCase c : kAllFiberCases) {
    std::string_view name = to_string(c);
    if (s == name || s == name.substr(0, name.find('-'))) return c;
  }
  throw Error(ErrorKind::InvalidInput, "parse", "unknown fiber case '" + std::string(s) + "'");
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Smooth: return "smooth";
    case Regime::IrreducibleSingular: return "irreducible-singular";
    case Regime::NotIrreducible: return "not-irreducible";
  }
  return "?";
}

std::string_view to_string(OmegaStatus s) {
  switch (s) {
    case OmegaStatus::NonRamified: return "non-ramified";
    case OmegaStatus::RamifiedRegularPreimage: return "ramified-regular-preimage";
    case OmegaStatus::RamifiedSingularPreimage: return "ramified-singular-preimage";
    case OmegaStatus::OmegaSingular: return "omega-singular";
  }
  return "?";
}

}  // namespace g2t
