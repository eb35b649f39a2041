#include "g2twist/symbol.hpp"

#include <cctype>
#include <regex>
#include <set>

#include "g2twist/error.hpp"

namespace g2t {

namespace {

[[noreturn]] void bad_symbol(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::InvalidInput, "symbol", "bad symbol '" + std::string(text) + "': " + why);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

}  // namespace

bool valid_family(std::string_view family) {
  static const std::regex component("2?(I|II|III|IV|V|VI|VII|VIII|IX)0?(star)?");
  if (family.empty()) return false;
  for (auto part : split(family, '-'))
    if (!std::regex_match(part.begin(), part.end(), component)) return false;
  return true;
}

std::string ReductionSymbol::format() const {
  std::string out = family;
  if (params.empty()) return out;
  out += '[';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(params[i]);
  }
  out += ']';
  return out;
}

ReductionSymbol ReductionSymbol::parse(std::string_view text) {
  ReductionSymbol s;
  std::size_t open = text.find('[');
  s.family = std::string(text.substr(0, open));
  if (!valid_family(s.family)) bad_symbol(text, "unknown family");
  if (open == std::string_view::npos) return s;
  if (text.back() != ']') bad_symbol(text, "missing ']'");
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  for (auto item : split(body, ',')) {
    std::string_view digits = item;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty() || digits.size() > 18) bad_symbol(text, "parameter is not an integer");
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad_symbol(text, "parameter is not an integer");
    s.params.push_back(std::stoll(std::string(item)));
  }
  if (s.params.empty()) bad_symbol(text, "empty brackets");
  return s;
}

namespace {

/// Recursive-descent evaluator: expr := term (('+'|'-') term)*, term := unary (('*'|'/') unary)*,
/// unary := '-' unary | atom, atom := integer | name | '(' expr ')'.
class Parser {
 public:
  Parser(std::string_view s, const Bindings* vars, std::set<std::string>* names)
      : s_(s), vars_(vars), names_(names) {}

  std::int64_t run() {
    std::int64_t v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::InvalidInput, "template", "bad expression '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t expr() {
    std::int64_t v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  std::int64_t term() {
    std::int64_t v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        std::int64_t den = unary();
        if (!vars_) continue;
        if (den == 0) fail("division by zero");
        if (v % den != 0)
          throw Error(ErrorKind::ParameterConstraint, "template",
                      "'" + std::string(s_) + "' is not an integer for these parameters (" + std::to_string(v) +
                          "/" + std::to_string(den) + ")");
        v /= den;
      } else {
        return v;
      }
    }
  }

  std::int64_t unary() {
    if (eat('-')) return -unary();
    return atom();
  }

  std::int64_t atom() {
    skip();
    if (eat('(')) {
      std::int64_t v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (names_) names_->insert(name);
      if (!vars_) return 1;
      auto it = vars_->find(name);
      if (it == vars_->end())
        throw Error(ErrorKind::InvalidInput, "template", "unbound variable '" + name + "' in '" + std::string(s_) + "'");
      return it->second;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const Bindings* vars_;
  std::set<std::string>* names_;
};

}  // namespace

std::int64_t evaluate_expression(std::string_view expr, const Bindings& vars) { return Parser(expr, &vars, nullptr).run(); }

SymbolTemplate::SymbolTemplate(std::string_view text) : text_(text) {
  std::size_t open = text.find('[');
  family_ = std::string(text.substr(0, open));
  if (!valid_family(family_)) bad_symbol(text, "unknown family");
  if (open == std::string_view::npos) return;
  if (text.back() != ']') bad_symbol(text, "missing ']'");
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  // Commas never occur inside a parameter expression.
  for (auto item : split(body, ',')) {
    std::set<std::string> names;
    Parser(item, nullptr, &names).run();
    param_exprs_.emplace_back(item);
  }
}

std::vector<std::string> SymbolTemplate::variables() const {
  std::set<std::string> names;
  for (const auto& e : param_exprs_) Parser(e, nullptr, &names).run();
  return {names.begin(), names.end()};
}

ReductionSymbol SymbolTemplate::instantiate(const Bindings& vars) const {
  ReductionSymbol s;
  s.family = family_;
  for (const auto& e : param_exprs_) s.params.push_back(evaluate_expression(e, vars));
  return s;
}

}  // namespace g2t
