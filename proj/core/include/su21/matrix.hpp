#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <stdexcept>

#include "su21/rational.hpp"

namespace su21 {

inline std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }

/// 3x3 matrix over a complex scalar type (GaussRat for exact mode,
/// std::complex<double> for float mode).
template <class S>
struct Matrix3 {
  std::array<S, 9> e{};

  Matrix3() = default;
  Matrix3(std::initializer_list<S> init) {
    if (init.size() != 9) throw std::invalid_argument("Matrix3 needs 9 entries");
    std::copy(init.begin(), init.end(), e.begin());
  }

  S& operator()(int i, int j) { return e[3 * i + j]; }
  const S& operator()(int i, int j) const { return e[3 * i + j]; }

  static Matrix3 zero() { return {}; }
  static Matrix3 identity() {
    Matrix3 m;
    m(0, 0) = S(1);
    m(1, 1) = S(1);
    m(2, 2) = S(1);
    return m;
  }

  friend Matrix3 operator+(const Matrix3& a, const Matrix3& b) {
    Matrix3 r;
    for (int k = 0; k < 9; ++k) r.e[k] = a.e[k] + b.e[k];
    return r;
  }
  friend Matrix3 operator-(const Matrix3& a, const Matrix3& b) {
    Matrix3 r;
    for (int k = 0; k < 9; ++k) r.e[k] = a.e[k] - b.e[k];
    return r;
  }
  friend Matrix3 operator-(const Matrix3& a) {
    Matrix3 r;
    for (int k = 0; k < 9; ++k) r.e[k] = -a.e[k];
    return r;
  }
  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        S s = a(i, 0) * b(0, j);
        s += a(i, 1) * b(1, j);
        s += a(i, 2) * b(2, j);
        r(i, j) = s;
      }
    return r;
  }
  friend Matrix3 operator*(const S& c, const Matrix3& a) {
    Matrix3 r;
    for (int k = 0; k < 9; ++k) r.e[k] = c * a.e[k];
    return r;
  }
  friend bool operator==(const Matrix3& a, const Matrix3& b) { return a.e == b.e; }

  S trace() const { return e[0] + e[4] + e[8]; }

  S det() const {
    return e[0] * (e[4] * e[8] - e[5] * e[7]) - e[1] * (e[3] * e[8] - e[5] * e[6]) +
           e[2] * (e[3] * e[7] - e[4] * e[6]);
  }

  Matrix3 transpose() const {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  Matrix3 conj_transpose() const {
    using su21::conj;
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = conj((*this)(j, i));
    return r;
  }

  Matrix3 adjugate() const {
    const Matrix3& m = *this;
    Matrix3 r;
    r(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    r(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    r(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    r(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    r(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    r(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    r(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    r(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    r(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return r;
  }

  Matrix3 inverse() const {
    S d = det();
    Matrix3 adj = adjugate();
    Matrix3 r;
    for (int k = 0; k < 9; ++k) r.e[k] = adj.e[k] / d;
    return r;
  }

  bool is_zero() const {
    for (const S& s : e)
      if (!entry_is_zero(s)) return false;
    return true;
  }

 private:
  static bool entry_is_zero(const GaussRat& s) { return s.is_zero(); }
  static bool entry_is_zero(const std::complex<double>& s) { return s == 0.0; }
};

using ExactMat = Matrix3<GaussRat>;
using CMat = Matrix3<std::complex<double>>;

inline CMat to_float(const ExactMat& m) {
  CMat r;
  for (int k = 0; k < 9; ++k) r.e[k] = m.e[k].to_complex();
  return r;
}

inline double max_abs(const CMat& m) {
  double v = 0;
  for (const auto& z : m.e) v = std::max(v, std::abs(z));
  return v;
}

inline double max_abs_diff(const CMat& a, const CMat& b) { return max_abs(a - b); }

}  // namespace su21
