#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace g2t {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "17", "-3/4" or "0.25" into an exact rational. Throws Error(InvalidInput).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);

/// A valuation value: an integer or +infinity (the valuation of zero).
class Val {
 public:
  constexpr Val() = default;
  constexpr explicit Val(std::int64_t v) : value_(v) {}
  static constexpr Val infinity() {
    Val v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  /// Precondition: finite.
  std::int64_t value() const;

  friend constexpr Val operator+(Val a, Val b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Val(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Val a, Val b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Val a, Val b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, Val v);

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

/// Residue characteristic and uniformizer of the base field, modeled as Q with the p-adic
/// valuation. p must be an odd prime.
class LocalContext {
 public:
  explicit LocalContext(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  Rational uniformizer() const { return Rational(p_); }

  Val val(const Rational& x) const;
  bool in_R(const Rational& x) const;
  bool in_m(const Rational& x) const;
  bool is_unit(const Rational& x) const;

  /// Image of x in F_p. Precondition: in_R(x).
  std::uint32_t residue(const Rational& x) const;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// The valuation of x at p.
Val val(const Rational& x, const LocalContext& ctx);

/// Normalized valuation of a ramified extension of degree n: nu_L(x) = n * nu(x).
struct ExtValuation {
  std::int64_t n = 1;
  Rational of(const Rational& base_valuation) const { return base_valuation * n; }
};

/// Smallest positive m with m*v integral for every v.
Integer lcd(std::span<const Rational> values);
Integer lcd(std::initializer_list<Rational> values);
/// Least denominator of a single rational.
Integer denominator_of(const Rational& v);

/// Valuation of a product of powers of field elements, where each element is given by its
/// valuation. Factors equal to zero raised to negative powers give -infinity, and mixing
/// +infinity with -infinity gives an undefined quotient. Membership predicates are false on
/// -infinity and on undefined values, so conditions such as "x in R" fail closed.
class MonoVal {
 public:
  enum class Kind { Finite, PlusInfinity, MinusInfinity, Undefined };

  struct Factor {
    Val val;
    std::int64_t exponent;
  };

  MonoVal() = default;
  MonoVal(std::initializer_list<Factor> factors);
  static MonoVal finite(std::int64_t v);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// Precondition: finite.
  std::int64_t value() const;

  bool in_R() const { return kind_ == Kind::PlusInfinity || (is_finite() && value_ >= 0); }
  bool in_m() const { return kind_ == Kind::PlusInfinity || (is_finite() && value_ > 0); }
  bool is_unit() const { return is_finite() && value_ == 0; }

  /// Base-field valuation divided by `divisor`, as an exact rational. Throws
  /// Error(DegenerateInvariant) when not finite; `what` names the quantity.
  Rational over(std::int64_t divisor, std::string_view what) const;

  friend std::ostream& operator<<(std::ostream& os, const MonoVal& v);

 private:
  Kind kind_ = Kind::Finite;
  std::int64_t value_ = 0;
};

/// Non-negative residue of an integer modulo n.
std::int64_t mod_floor(const Integer& a, std::int64_t n);
std::int64_t mod_floor(std::int64_t a, std::int64_t n);

/// Converts an integral rational to int64. Throws Error(kind) if it is not an integer.
std::int64_t to_int64(const Rational& x);
bool is_integral(const Rational& x);

}  // namespace g2t
