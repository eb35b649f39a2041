#include "g2twist/valuation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "g2twist/error.hpp"

namespace g2t {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::DegenerateInvariant: return "degenerate invariant";
    case ErrorKind::Unclassifiable: return "unclassifiable";
    case ErrorKind::IndeterminateOmega: return "indeterminate status";
    case ErrorKind::NonIntegralDegree: return "non-integral degree";
    case ErrorKind::NoMatchingRow: return "no matching row";
    case ErrorKind::ParameterConstraint: return "parameter constraint";
    case ErrorKind::OutsideRegime: return "outside regime";
    case ErrorKind::NormalFormRequired: return "normal form required";
    case ErrorKind::MissingFlag: return "missing flag";
  }
  return "unknown";
}

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorKind::InvalidInput, "parse", "not an exact rational: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) bad_number(whole);
  Integer out;
  if (out.set_str(std::string(s.front() == '+' ? s.substr(1) : s), 10) != 0) bad_number(whole);
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) bad_number(text);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) bad_number(text);
    Integer den = parse_integer(den_text, text);
    if (den == 0) bad_number(text);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if (int_part.empty() && frac.empty()) bad_number(text);
    if (!int_part.empty() && !all_digits(int_part)) bad_number(text);
    if (!frac.empty() && !all_digits(frac)) bad_number(text);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer whole = int_part.empty() ? Integer(0) : parse_integer(int_part, text);
    Integer fraction = frac.empty() ? Integer(0) : parse_integer(frac, text);
    Rational q(whole * scale + fraction, scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::int64_t Val::value() const {
  if (infinite_) throw Error(ErrorKind::DegenerateInvariant, "valuation", "valuation of zero requested as an integer");
  return value_;
}

std::ostream& operator<<(std::ostream& os, Val v) {
  if (v.is_infinite()) return os << "inf";
  return os << v.value();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

LocalContext::LocalContext(std::uint32_t p) : p_(p) {
  if (p < 3 || !is_prime(p))
    throw Error(ErrorKind::InvalidInput, "context", "residue characteristic must be an odd prime, got " + std::to_string(p));
}

namespace {

std::int64_t remove_factor(const Integer& n, std::uint32_t p) {
  if (n == 0) return 0;
  Integer rest;
  Integer prime(p);
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

}  // namespace

Val LocalContext::val(const Rational& x) const {
  if (x == 0) return Val::infinity();
  return Val(remove_factor(x.get_num(), p_) - remove_factor(x.get_den(), p_));
}

bool LocalContext::in_R(const Rational& x) const { return val(x) >= Val(0); }
bool LocalContext::in_m(const Rational& x) const { return val(x) > Val(0); }
bool LocalContext::is_unit(const Rational& x) const { return val(x) == Val(0); }

std::uint32_t LocalContext::residue(const Rational& x) const {
  if (!in_R(x)) throw Error(ErrorKind::InvalidInput, "residue", "residue of a non-integral element");
  Integer prime(p_);
  Integer num = x.get_num() % prime;
  if (num < 0) num += prime;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), Integer(x.get_den() % prime).get_mpz_t(), prime.get_mpz_t());
  Integer r = (num * inv) % prime;
  return static_cast<std::uint32_t>(r.get_ui());
}

Val val(const Rational& x, const LocalContext& ctx) { return ctx.val(x); }

Integer denominator_of(const Rational& v) {
  Rational c(v);
  c.canonicalize();
  return c.get_den();
}

Integer lcd(std::span<const Rational> values) {
  if (values.empty()) throw Error(ErrorKind::InvalidInput, "lcd", "lcd of an empty list");
  Integer m = 1;
  for (const auto& v : values) {
    Integer d = denominator_of(v);
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
  }
  return m;
}

Integer lcd(std::initializer_list<Rational> values) {
  return lcd(std::span<const Rational>(values.begin(), values.size()));
}

MonoVal::MonoVal(std::initializer_list<Factor> factors) {
  bool plus_inf = false;
  bool minus_inf = false;
  std::int64_t sum = 0;
  for (const auto& f : factors) {
    if (f.exponent == 0) continue;
    if (f.val.is_infinite()) {
      (f.exponent > 0 ? plus_inf : minus_inf) = true;
    } else {
      sum += f.exponent * f.val.value();
    }
  }
  if (plus_inf && minus_inf)
    kind_ = Kind::Undefined;
  else if (plus_inf)
    kind_ = Kind::PlusInfinity;
  else if (minus_inf)
    kind_ = Kind::MinusInfinity;
  else
    value_ = sum;
}

MonoVal MonoVal::finite(std::int64_t v) {
  MonoVal m;
  m.value_ = v;
  return m;
}

std::int64_t MonoVal::value() const {
  if (!is_finite()) throw Error(ErrorKind::DegenerateInvariant, "valuation", "quotient valuation is not finite");
  return value_;
}

Rational MonoVal::over(std::int64_t divisor, std::string_view what) const {
  if (!is_finite())
    throw Error(ErrorKind::DegenerateInvariant, "valuation",
                "valuation of " + std::string(what) + " is not finite (an invariant vanishes)");
  Rational q(value_, divisor);
  q.canonicalize();
  return q;
}

std::ostream& operator<<(std::ostream& os, const MonoVal& v) {
  switch (v.kind()) {
    case MonoVal::Kind::Finite: return os << v.value();
    case MonoVal::Kind::PlusInfinity: return os << "+inf";
    case MonoVal::Kind::MinusInfinity: return os << "-inf";
    case MonoVal::Kind::Undefined: return os << "undefined";
  }
  return os;
}

std::int64_t mod_floor(const Integer& a, std::int64_t n) {
  Integer r = a % n;
  if (r < 0) r += n;
  return r.get_si();
}

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

bool is_integral(const Rational& x) { return denominator_of(x) == 1; }

std::int64_t to_int64(const Rational& x) {
  if (!is_integral(x)) throw Error(ErrorKind::InvalidInput, "arith", "expected an integer, got " + x.get_str());
  Integer n = x.get_num();
  if (!n.fits_slong_p()) throw Error(ErrorKind::InvalidInput, "arith", "integer out of range: " + n.get_str());
  return n.get_si();
}

}  // namespace g2t
