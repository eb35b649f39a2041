#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace g2t {

enum class ErrorKind {
  InvalidInput,         // malformed or out-of-domain input
  DegenerateInvariant,  // a finite valuation was needed but the invariant vanishes
  Unclassifiable,       // no stable-fiber block matched
  IndeterminateOmega,   // no omega-status block matched
  NonIntegralDegree,    // a degree-of-singularity formula gave a non-integer
  NoMatchingRow,        // no reduction-type table row matched
  ParameterConstraint,  // a matched row's subscript is not a non-negative integer
  OutsideRegime,        // e.g. char 3 with two-component stable fiber
  NormalFormRequired,   // wild case without normal-form coefficients
  MissingFlag,          // a table row needs the E1-smoothness flag
};

const char* to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind and the pipeline stage that raised it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string stage, const std::string& what)
      : std::runtime_error(what), kind_(kind), stage_(std::move(stage)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& stage() const { return stage_; }

  /// Input errors map to CLI exit code 1, everything else to 2.
  bool is_input_error() const { return kind_ == ErrorKind::InvalidInput; }

 private:
  ErrorKind kind_;
  std::string stage_;
};

}  // namespace g2t
