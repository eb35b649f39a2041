#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace g2t {

/// A reduction-type symbol in ASCII form: family name with components joined by '-', a '*'
/// spelled "star", and integer parameters in brackets, e.g. "Istar[2,0,0]", "IX[3]", "IV-II[5]".
/// Families without parameters carry no brackets ("II", "Vstar").
struct ReductionSymbol {
  std::string family;
  std::vector<std::int64_t> params;

  std::string format() const;
  /// Throws Error(InvalidInput) on anything outside the grammar.
  static ReductionSymbol parse(std::string_view text);

  friend bool operator==(const ReductionSymbol&, const ReductionSymbol&) = default;
  friend auto operator<=>(const ReductionSymbol&, const ReductionSymbol&) = default;
};

/// True if every '-'-separated component of `family` is a known type name such as "2I0star".
bool valid_family(std::string_view family);

/// Integer-valued parameter expressions over named variables: integers, names, + - * /,
/// parentheses. Division must be exact.
using Bindings = std::map<std::string, std::int64_t, std::less<>>;

/// A symbol whose parameters are expressions, e.g. "IV-II[(d-2)/3]".
class SymbolTemplate {
 public:
  SymbolTemplate() = default;
  /// Throws Error(InvalidInput) on malformed templates.
  explicit SymbolTemplate(std::string_view text);

  const std::string& text() const { return text_; }
  const std::string& family() const { return family_; }
  /// Variables the parameters refer to.
  std::vector<std::string> variables() const;

  /// Throws Error(ParameterConstraint) when a division is not exact, and Error(InvalidInput)
  /// when a variable is unbound.
  ReductionSymbol instantiate(const Bindings& vars) const;

 private:
  std::string text_;
  std::string family_;
  std::vector<std::string> param_exprs_;
};

/// Evaluates one parameter expression.
std::int64_t evaluate_expression(std::string_view expr, const Bindings& vars);

}  // namespace g2t
