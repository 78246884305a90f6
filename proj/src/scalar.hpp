#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <string_view>

namespace hgc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Reduced "p/q", or plain "p" when the denominator is 1.
std::string format_rational(const Rational& r);

/// Accepts "p", "p/q" and unreduced fractions; denominator must be a positive
/// integer. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

/// Gaussian rational a + bi. All algebraic operations are exact; floating
/// point appears only when a modulus is requested.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() = default;
  Scalar(Rational real) : re(std::move(real)) {}  // NOLINT: implicit by design
  Scalar(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  Scalar(int real) : re(real) {}  // NOLINT

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
  double abs() const;
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  Scalar operator-() const { return {-re, -im}; }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  bool operator==(const Scalar& o) const = default;
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
/// Exact division; throws ArgumentError when dividing by zero.
Scalar operator/(const Scalar& a, const Scalar& b);

/// "a", "bi" or "a+bi" with reduced rational parts (diagnostics only; files
/// serialize the two parts separately).
std::string format_scalar(const Scalar& s);

}  // namespace hgc
