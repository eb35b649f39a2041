#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2twist/valuation.hpp"

namespace g2t {

/// y^2 = P(x) with P(x) = a0 x^6 + a1 x^5 + ... + a6. Degree-5 models have a0 = 0.
class SexticForm {
 public:
  using Coefficients = std::array<Rational, 7>;

  SexticForm() = default;
  /// Throws Error(InvalidInput) unless a0 != 0 or a1 != 0.
  explicit SexticForm(Coefficients a);

  const Rational& operator[](std::size_t i) const { return a_[i]; }
  const Coefficients& coefficients() const { return a_; }
  int degree() const { return a_[0] != 0 ? 6 : 5; }

  /// D * P, the model of the quadratic twist by D.
  SexticForm scaled(const Rational& d) const;
  /// x -> 1/x: the reversed coefficient list (requires a6 != 0 to stay a valid form).
  SexticForm reversed() const;
  /// x -> x + c.
  SexticForm shifted(const Rational& c) const;
  Rational evaluate(const Rational& x) const;

  friend bool operator==(const SexticForm&, const SexticForm&) = default;

 private:
  Coefficients a_{};
};

std::string to_string(const SexticForm& p);

/// Homogeneous binary form sum_k c[k] x^(m-k) y^k of degree m = c.size() - 1.
struct BinaryForm {
  std::vector<Rational> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const;
  /// Coefficient of a constant form (degree 0).
  const Rational& scalar() const { return c.at(0); }
};

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
/// The k-th transvectant (f, g)_k with the normalization (m-k)!(n-k)!/(m!n!).
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int k);

struct IgusaClebsch {
  Rational I2, I4, I6, I10;
};

/// Igusa-Clebsch invariants from Clebsch's transvectant invariants A, B, C, D.
IgusaClebsch igusa_clebsch(const SexticForm& p);

/// All invariants of a sextic: Igusa J2..J10, derived I2..I12, affine A2..A5 and B2.
struct InvariantSet {
  Rational J2, J4, J6, J8, J10;
  Rational I2, I4, I6, I8, I12;
  Rational A2, A3, A4, A5, B2;

  friend bool operator==(const InvariantSet&, const InvariantSet&) = default;
};

InvariantSet compute_invariants(const SexticForm& p);

/// Binary-form discriminant: a0^10 prod (r_i - r_j)^2, which for a0 = 0 equals
/// a1^2 times the discriminant of the quintic. Computed from a Sylvester resultant.
Rational discriminant(const SexticForm& p);

/// Lemma-level transformation of the invariants under P -> D*P.
InvariantSet twist_invariants(const InvariantSet& inv, const Rational& d);

/// Visits every invariant with its name and homogeneous degree in the coefficients.
template <class F>
void for_each_invariant(const InvariantSet& inv, F&& f) {
  f("J2", inv.J2, 2);
  f("J4", inv.J4, 4);
  f("J6", inv.J6, 6);
  f("J8", inv.J8, 8);
  f("J10", inv.J10, 10);
  f("I2", inv.I2, 2);
  f("I4", inv.I4, 4);
  f("I6", inv.I6, 6);
  f("I8", inv.I8, 8);
  f("I12", inv.I12, 12);
  f("A2", inv.A2, 2);
  f("A3", inv.A3, 3);
  f("A4", inv.A4, 4);
  f("A5", inv.A5, 5);
  f("B2", inv.B2, 2);
}

/// Valuations of every invariant; the input to all classification tests.
struct InvariantValuations {
  Val J2, J4, J6, J8, J10, I2, I4, I6, I8, I12, A2, A3, A4, A5, B2;
};

InvariantValuations valuations(const InvariantSet& inv, const LocalContext& ctx);

}  // namespace g2t
