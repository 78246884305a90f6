#include "scalar.hpp"

#include <cctype>
#include <cmath>

#include "error.hpp"

namespace hgc {

std::string format_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("bad rational literal '" + std::string(text) + "'");
  }
  BigInt n{std::string(num)};
  BigInt d{std::string(den)};
  if (d == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Rational(n, d);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

double Scalar::abs() const {
  if (im == 0) return std::fabs(to_double(re));
  return std::sqrt(to_double(norm2()));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  const Rational n2 = b.norm2();
  if (n2 == 0) throw ArgumentError("scalar division by zero");
  const Scalar num = a * b.conj();
  return {num.re / n2, num.im / n2};
}

std::string format_scalar(const Scalar& s) {
  if (s.im == 0) return format_rational(s.re);
  std::string imag = format_rational(s.im) + "i";
  if (s.re == 0) return imag;
  if (s.im > 0) return format_rational(s.re) + "+" + imag;
  return format_rational(s.re) + imag;
}

}  // namespace hgc
