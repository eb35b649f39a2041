#include "g2twist/invariants.hpp"

#include <sstream>
#include <utility>

#include "g2twist/error.hpp"

namespace g2t {

SexticForm::SexticForm(Coefficients a) : a_(std::move(a)) {
  for (auto& c : a_) c.canonicalize();
  if (a_[0] == 0 && a_[1] == 0)
    throw Error(ErrorKind::InvalidInput, "sextic", "P must have degree 5 or 6 (a0 or a1 nonzero)");
}

SexticForm SexticForm::scaled(const Rational& d) const {
  Coefficients out;
  for (std::size_t i = 0; i < 7; ++i) out[i] = a_[i] * d;
  return SexticForm(out);
}

SexticForm SexticForm::reversed() const {
  Coefficients out;
  for (std::size_t i = 0; i < 7; ++i) out[i] = a_[6 - i];
  return SexticForm(out);
}

SexticForm SexticForm::shifted(const Rational& c) const {
  // Taylor shift: coefficients in ascending powers, repeated synthetic division.
  std::array<Rational, 7> asc;
  for (std::size_t i = 0; i < 7; ++i) asc[i] = a_[6 - i];
  for (int i = 0; i < 6; ++i)
    for (int j = 5; j >= i; --j) asc[j] += c * asc[j + 1];
  Coefficients out;
  for (std::size_t i = 0; i < 7; ++i) out[i] = asc[6 - i];
  return SexticForm(out);
}

Rational SexticForm::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (const auto& c : a_) acc = acc * x + c;
  return acc;
}

std::string to_string(const SexticForm& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < 7; ++i) os << (i ? "," : "") << p[i].get_str();
  return os.str();
}

bool BinaryForm::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
  BinaryForm h;
  h.c.assign(f.c.size() + g.c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < f.c.size(); ++i)
    for (std::size_t j = 0; j < g.c.size(); ++j) h.c[i + j] += f.c[i] * g.c[j];
  return h;
}

namespace {

/// d^a/dx^a d^b/dy^b of a binary form.
BinaryForm partial(const BinaryForm& f, int dx, int dy) {
  const int m = f.degree();
  BinaryForm out;
  if (dx + dy > m) {
    out.c.assign(1, Rational(0));
    return out;
  }
  out.c.assign(m - dx - dy + 1, Rational(0));
  for (int k = 0; k <= m; ++k) {
    const int px = m - k;
    const int py = k;
    if (px < dx || py < dy) continue;
    Integer factor = 1;
    for (int t = 0; t < dx; ++t) factor *= px - t;
    for (int t = 0; t < dy; ++t) factor *= py - t;
    out.c[k - dy] += f.c[k] * factor;
  }
  return out;
}

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

void add_scaled(BinaryForm& acc, const BinaryForm& term, const Rational& s) {
  if (acc.c.empty()) acc.c.assign(term.c.size(), Rational(0));
  for (std::size_t i = 0; i < term.c.size(); ++i) acc.c[i] += s * term.c[i];
}

BinaryForm as_binary(const SexticForm& p) {
  return BinaryForm{std::vector<Rational>(p.coefficients().begin(), p.coefficients().end())};
}

}  // namespace

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int k) {
  const int m = f.degree();
  const int n = g.degree();
  if (k > m || k > n) throw Error(ErrorKind::InvalidInput, "transvectant", "order exceeds form degree");
  BinaryForm acc;
  for (int i = 0; i <= k; ++i) {
    Rational sign = (i % 2 == 0) ? 1 : -1;
    add_scaled(acc, partial(f, k - i, i) * partial(g, i, k - i), sign * Rational(binomial(k, i)));
  }
  Rational norm(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n));
  norm.canonicalize();
  for (auto& x : acc.c) x *= norm;
  return acc;
}

IgusaClebsch igusa_clebsch(const SexticForm& p) {
  const BinaryForm f = as_binary(p);
  const BinaryForm i = transvectant(f, f, 4);
  const BinaryForm delta = transvectant(i, i, 2);
  const BinaryForm y1 = transvectant(f, i, 4);
  const BinaryForm y2 = transvectant(i, y1, 2);
  const BinaryForm y3 = transvectant(i, y2, 2);

  const Rational A = transvectant(f, f, 6).scalar();
  const Rational B = transvectant(i, i, 4).scalar();
  const Rational C = transvectant(i, delta, 4).scalar();
  const Rational D = transvectant(y3, y1, 2).scalar();

  IgusaClebsch ic;
  ic.I2 = -120 * A;
  ic.I4 = -720 * A * A + 6750 * B;
  ic.I6 = 8640 * A * A * A - 108000 * A * B + 202500 * C;
  ic.I10 = -62208 * A * A * A * A * A + 972000 * A * A * A * B + 1620000 * A * A * C - 3037500 * A * B * B -
           6075000 * B * C - 4556250 * D;
  return ic;
}

InvariantSet compute_invariants(const SexticForm& p) {
  const IgusaClebsch ic = igusa_clebsch(p);
  const auto& a = p.coefficients();

  InvariantSet s;
  s.J2 = ic.I2 / 8;
  s.J4 = (4 * s.J2 * s.J2 - ic.I4) / 96;
  s.J6 = (8 * s.J2 * s.J2 * s.J2 - 160 * s.J2 * s.J4 - ic.I6) / 576;
  s.J8 = (s.J2 * s.J6 - s.J4 * s.J4) / 4;
  s.J10 = ic.I10 / 4096;

  s.I2 = s.J2 / 12;
  s.I4 = s.J2 * s.J2 - 24 * s.J4;
  s.I6 = s.J6;
  s.I8 = s.J8;
  const Rational& J2 = s.J2;
  const Rational& J4 = s.J4;
  const Rational& J6 = s.J6;
  s.I12 = (J2 * J2 * J4 * J4 - 32 * J4 * J4 * J4 - J2 * J2 * J2 * J6 + 36 * J2 * J4 * J6 - 108 * J6 * J6) / 4;

  s.A2 = -5 * a[1] * a[1] + 12 * a[0] * a[2];
  s.A3 = 5 * a[1] * a[1] * a[1] + 9 * a[0] * (-2 * a[2] * a[1] + 3 * a[0] * a[3]);
  s.A4 = -5 * a[1] * a[1] * a[1] * a[1] +
         24 * a[0] * (a[2] * a[1] * a[1] - 3 * a[3] * a[0] * a[1] + 6 * a[4] * a[0] * a[0]);
  s.A5 = a[1] * a[1] * a[1] * a[1] * a[1] +
         3 * a[0] *
             (-2 * a[2] * a[1] * a[1] * a[1] + 9 * a[0] * a[3] * a[1] * a[1] - 36 * a[0] * a[0] * a[4] * a[1] +
              108 * a[0] * a[0] * a[0] * a[5]);
  s.B2 = 2 * a[2] * a[2] - 5 * a[1] * a[3] + 10 * a[0] * a[4];
  return s;
}

namespace {

/// Determinant by Gaussian elimination over Q.
Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

/// Resultant of two polynomials given by descending coefficient lists with nonzero leading terms.
Rational resultant(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = f[k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = g[k];
  return determinant(std::move(s));
}

Rational polynomial_discriminant(const std::vector<Rational>& f) {
  const std::size_t n = f.size() - 1;
  std::vector<Rational> df(n);
  for (std::size_t k = 0; k < n; ++k) df[k] = f[k] * static_cast<long>(n - k);
  Rational res = resultant(f, df) / f[0];
  if ((n * (n - 1) / 2) % 2 == 1) res = -res;
  return res;
}

}  // namespace

Rational discriminant(const SexticForm& p) {
  const auto& a = p.coefficients();
  if (a[0] != 0) return polynomial_discriminant(std::vector<Rational>(a.begin(), a.end()));
  Rational quintic = polynomial_discriminant(std::vector<Rational>(a.begin() + 1, a.end()));
  return a[1] * a[1] * quintic;
}

InvariantSet twist_invariants(const InvariantSet& inv, const Rational& d) {
  if (d == 0) throw Error(ErrorKind::InvalidInput, "twist", "twisting parameter D must be nonzero");
  InvariantSet out = inv;
  auto scale = [&](Rational& v, int degree) {
    for (int i = 0; i < degree; ++i) v *= d;
  };
  scale(out.J2, 2);
  scale(out.J4, 4);
  scale(out.J6, 6);
  scale(out.J8, 8);
  scale(out.J10, 10);
  scale(out.I2, 2);
  scale(out.I4, 4);
  scale(out.I6, 6);
  scale(out.I8, 8);
  scale(out.I12, 12);
  scale(out.A2, 2);
  scale(out.A3, 3);
  scale(out.A4, 4);
  scale(out.A5, 5);
  scale(out.B2, 2);
  return out;
}

InvariantValuations valuations(const InvariantSet& s, const LocalContext& ctx) {
  return InvariantValuations{ctx.val(s.J2), ctx.val(s.J4), ctx.val(s.J6), ctx.val(s.J8), ctx.val(s.J10),
                             ctx.val(s.I2), ctx.val(s.I4), ctx.val(s.I6), ctx.val(s.I8), ctx.val(s.I12),
                             ctx.val(s.A2), ctx.val(s.A3), ctx.val(s.A4), ctx.val(s.A5), ctx.val(s.B2)};
}

}  // namespace g2t
