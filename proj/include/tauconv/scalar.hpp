#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <utility>

namespace tauconv {

/// Arbitrary-precision rational. Serialized as "p" or "p/q".
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

/// Complex number with exact rational real/imaginary parts.
///
/// The convolution algebra only ever needs +, -, *, negation and
/// conjugation, so every identity it satisfies can be checked with exact
/// equality. Division exists for the linear solver in the verification
/// suite.
struct GaussianRational {
  Rational re{};
  Rational im{};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(int r) : re(r) {}
  GaussianRational(int r, int i) : re(r), im(i) {}

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }
inline Rational abs_sq(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }

/// Backend glue shared by the exact and floating scalar types.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<std::complex<double>> {
  using real_type = double;
  static constexpr bool exact = false;
  static const char* name() { return "float"; }

  static std::complex<double> zero() { return {}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static std::complex<double> half() { return {0.5, 0.0}; }
  static std::complex<double> conjugate(const std::complex<double>& z) { return std::conj(z); }
  static real_type abs_sq(const std::complex<double>& z) { return std::norm(z); }
  static double abs_value(const std::complex<double>& z) { return std::abs(z); }
  static bool is_zero(const std::complex<double>& z) { return z == std::complex<double>{}; }
  static std::complex<double> to_complex(const std::complex<double>& z) { return z; }
  static std::complex<double> from_real(double x) { return {x, 0.0}; }
  static bool is_real_nonnegative(const std::complex<double>& z) {
    return z.imag() == 0.0 && z.real() >= 0.0;
  }
  static real_type real_part(const std::complex<double>& z) { return z.real(); }
};

template <>
struct scalar_traits<GaussianRational> {
  using real_type = Rational;
  static constexpr bool exact = true;
  static const char* name() { return "exact"; }

  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {1}; }
  static GaussianRational half() { return {Rational(1, 2)}; }
  static GaussianRational conjugate(const GaussianRational& z) { return conj(z); }
  static Rational abs_sq(const GaussianRational& z) { return tauconv::abs_sq(z); }
  static double abs_value(const GaussianRational& z) {
    return std::sqrt(to_double(tauconv::abs_sq(z)));
  }
  static bool is_zero(const GaussianRational& z) { return z.re == 0 && z.im == 0; }
  static std::complex<double> to_complex(const GaussianRational& z) {
    return {to_double(z.re), to_double(z.im)};
  }
  static GaussianRational from_real(double x) {
    // exact when x is a dyadic rational (the only way floats enter exact data)
    return {Rational(x)};
  }
  static bool is_real_nonnegative(const GaussianRational& z) { return z.im == 0 && z.re >= 0; }
  static Rational real_part(const GaussianRational& z) { return z.re; }
};

using Complexd = std::complex<double>;

}  // namespace tauconv
