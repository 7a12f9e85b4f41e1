#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>

namespace jostlab {

//! Forward-mode dual number v + d*eps, eps^2 = 0.
/*! With T = std::complex<double> this differentiates holomorphic functions
    of a complex variable exactly, which the matching kernels use for the
    Newton and winding-number derivatives of the Jost function. */
template <typename T>
struct Dual {
  T v{};
  T d{};

  Dual() = default;
  Dual(double x) : v(x), d(0.0) {}
  Dual(const T& value, const T& deriv = T(0.0)) : v(value), d(deriv) {}

  static Dual variable(const T& x) { return Dual(x, T(1.0)); }

  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
  Dual& operator*=(const Dual& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
  Dual& operator/=(const Dual& o) {
    const T inv = T(1.0) / o.v;
    d = (d - v * inv * o.d) * inv;
    v *= inv;
    return *this;
  }
};

template <typename T> Dual<T> operator-(const Dual<T>& a) { return {-a.v, -a.d}; }
template <typename T> Dual<T> operator+(Dual<T> a, const Dual<T>& b) { return a += b; }
template <typename T> Dual<T> operator-(Dual<T> a, const Dual<T>& b) { return a -= b; }
template <typename T> Dual<T> operator*(Dual<T> a, const Dual<T>& b) { return a *= b; }
template <typename T> Dual<T> operator/(Dual<T> a, const Dual<T>& b) { return a /= b; }

// mixed arithmetic with the underlying scalar and with double
#define JOSTLAB_DUAL_MIXED(Other)                                                              \
  template <typename T> Dual<T> operator+(const Dual<T>& a, const Other& b) { return {a.v + b, a.d}; } \
  template <typename T> Dual<T> operator+(const Other& b, const Dual<T>& a) { return {a.v + b, a.d}; } \
  template <typename T> Dual<T> operator-(const Dual<T>& a, const Other& b) { return {a.v - b, a.d}; } \
  template <typename T> Dual<T> operator-(const Other& b, const Dual<T>& a) { return {b - a.v, -a.d}; } \
  template <typename T> Dual<T> operator*(const Dual<T>& a, const Other& b) { return {a.v * b, a.d * b}; } \
  template <typename T> Dual<T> operator*(const Other& b, const Dual<T>& a) { return {a.v * b, a.d * b}; } \
  template <typename T> Dual<T> operator/(const Dual<T>& a, const Other& b) { return {a.v / b, a.d / b}; } \
  template <typename T> Dual<T> operator/(const Other& b, const Dual<T>& a) {                        \
    return Dual<T>(T(b)) / a;                                                                         \
  }

JOSTLAB_DUAL_MIXED(std::complex<double>)
JOSTLAB_DUAL_MIXED(double)
#undef JOSTLAB_DUAL_MIXED

template <typename T> Dual<T> exp(const Dual<T>& a) {
  using std::exp;
  const T e = exp(a.v);
  return {e, e * a.d};
}
template <typename T> Dual<T> sin(const Dual<T>& a) {
  using std::sin; using std::cos;
  return {sin(a.v), cos(a.v) * a.d};
}
template <typename T> Dual<T> cos(const Dual<T>& a) {
  using std::sin; using std::cos;
  return {cos(a.v), -sin(a.v) * a.d};
}
template <typename T> Dual<T> sqrt(const Dual<T>& a) {
  using std::sqrt;
  const T s = sqrt(a.v);
  return {s, a.d / (T(2.0) * s)};
}

inline const std::complex<double>& value_of(const std::complex<double>& x) { return x; }
inline std::complex<double> derivative_of(const std::complex<double>&) { return 0.0; }
template <typename T> const T& value_of(const Dual<T>& x) { return x.v; }
template <typename T> const T& derivative_of(const Dual<T>& x) { return x.d; }

using DualC = Dual<std::complex<double>>;

}  // namespace jostlab

namespace Eigen {

template <>
struct NumTraits<jostlab::DualC> : GenericNumTraits<jostlab::DualC> {
  using Real = jostlab::DualC;
  using NonInteger = jostlab::DualC;
  using Nested = jostlab::DualC;
  using Literal = jostlab::DualC;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 4,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(std::numeric_limits<double>::epsilon()); }
  static inline Real dummy_precision() { return Real(1e-12); }
  static inline int digits10() { return std::numeric_limits<double>::digits10; }
};

}  // namespace Eigen
