#pragma once

#include <random>
#include <vector>

#include "g2twist/invariants.hpp"

namespace g2t::test {

inline SexticForm form(std::initializer_list<long> a) {
  SexticForm::Coefficients c;
  std::size_t i = 0;
  for (long x : a) c[i++] = x;
  return SexticForm(c);
}

inline SexticForm from_roots(long lead, const std::vector<long>& roots) {
  std::vector<Rational> poly{Rational(lead)};
  for (long r : roots) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= poly[i] * r;
    }
    poly = next;
  }
  SexticForm::Coefficients c;
  std::size_t shift = 7 - poly.size();
  for (std::size_t i = 0; i < poly.size(); ++i) c[shift + i] = poly[i];
  return SexticForm(c);
}

inline SexticForm random_form(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> d(-bound, bound);
  for (;;) {
    SexticForm::Coefficients c;
    for (auto& x : c) x = d(rng);
    if (c[0] != 0) return SexticForm(c);
  }
}

inline Rational random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 30);
  for (;;) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (q != 0) return q;
  }
}

}  // namespace g2t::test
