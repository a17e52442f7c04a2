#ifndef SYMTENSOR_SCALAR_HPP
#define SYMTENSOR_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "symtensor/errors.hpp"

namespace symtensor {

// Exact arbitrary-precision rational (GMP backend, expression templates off
// so Eigen sees a plain scalar).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Element of Q(i): exact complex number with rational real and imaginary
// parts. The exact scalar mode of every matrix routine; all identity tests
// over this type are equalities, not tolerances.
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int v) : re_(v), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}
  GaussianRational(long long v) : re_(static_cast<long>(v)), im_(0) {}
  GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n2 = o.re_ * o.re_ + o.im_ * o.im_;
    if (n2 == 0) throw std::domain_error("GaussianRational: division by zero");
    Rational r = (re_ * o.re_ + im_ * o.im_) / n2;
    im_ = (im_ * o.re_ - re_ * o.im_) / n2;
    re_ = std::move(r);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::complex<double> to_complex() const {
    return {re_.convert_to<double>(), im_.convert_to<double>()};
  }

private:
  Rational re_, im_;
};

inline GaussianRational conj(const GaussianRational& z) { return {z.real(), -z.imag()}; }
inline Rational real(const GaussianRational& z) { return z.real(); }
inline Rational imag(const GaussianRational& z) { return z.imag(); }
inline Rational abs2(const GaussianRational& z) {
  return z.real() * z.real() + z.imag() * z.imag();
}

// Canonical text form: "p/q" (q omitted when 1), imaginary part appended as
// "+r/si" / "-r/si"; pure-imaginary values print as "r/si". parse() accepts
// exactly the forms format() emits, plus plain integers.
std::string format(const GaussianRational& z);
GaussianRational parse_gaussian_rational(const std::string& text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

// Uniform access to the two scalar modes for templated matrix code.
template <typename Scalar>
struct scalar_traits;

template <>
struct scalar_traits<GaussianRational> {
  static constexpr bool is_exact = true;
  using RealScalar = Rational;
  static GaussianRational from_int(long long v) { return GaussianRational(v); }
  static GaussianRational from_ratio(long long num, long long den) {
    return GaussianRational(Rational(static_cast<long>(num), static_cast<long>(den)));
  }
  static GaussianRational from_rational(const Rational& r) { return GaussianRational(r); }
  static double abs_approx(const GaussianRational& z) { return std::abs(z.to_complex()); }
  static GaussianRational conjugate(const GaussianRational& z) { return conj(z); }
  static bool equal(const GaussianRational& a, const GaussianRational& b) { return a == b; }
};

template <>
struct scalar_traits<std::complex<double>> {
  static constexpr bool is_exact = false;
  using RealScalar = double;
  static std::complex<double> from_int(long long v) { return {static_cast<double>(v), 0.0}; }
  static std::complex<double> from_ratio(long long num, long long den) {
    return {static_cast<double>(num) / static_cast<double>(den), 0.0};
  }
  static std::complex<double> from_rational(const Rational& r) {
    return {r.convert_to<double>(), 0.0};
  }
  static double abs_approx(const std::complex<double>& z) { return std::abs(z); }
  static std::complex<double> conjugate(const std::complex<double>& z) { return std::conj(z); }
  static bool equal(const std::complex<double>& a, const std::complex<double>& b) {
    return a == b;
  }
};

} // namespace symtensor

namespace Eigen {

template <>
struct NumTraits<symtensor::GaussianRational>
    : GenericNumTraits<symtensor::GaussianRational> {
  typedef symtensor::Rational Real;
  typedef symtensor::GaussianRational NonInteger;
  typedef symtensor::GaussianRational Nested;
  typedef symtensor::GaussianRational Literal;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 100
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

} // namespace Eigen

#endif
