// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bihar/rational.hpp"
#include "bihar/surd.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>

#include <cmath>
#include <string>

namespace bihar {

/// ~34 significant digits (IEEE binary128 via libquadmath).
using Extended = boost::multiprecision::float128;

template <class T>
inline T to_scalar(const Rational& r) {
  return r.template convert_to<T>();
}

template <class T>
inline T surd_to_scalar(const Surd& s) {
  using std::sqrt;
  T r = to_scalar<T>(s.p());
  if (!s.is_rational()) r += to_scalar<T>(s.q()) * sqrt(to_scalar<T>(s.d()));
  return r;
}

template <class T>
inline double to_double(const T& x) {
  return static_cast<double>(x);
}

template <class T>
inline const char* scalar_name();
template <>
inline const char* scalar_name<double>() {
  return "double";
}
template <>
inline const char* scalar_name<long double>() {
  return "long double";
}
template <>
inline const char* scalar_name<Extended>() {
  return "float128";
}

/// pi in the working precision.
template <class T>
inline T pi() {
  if constexpr (std::is_floating_point_v<T>) {
    return static_cast<T>(3.141592653589793238462643383279502884L);
  } else {
    return boost::math::constants::pi<T>();
  }
}

}  // namespace bihar
