#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace spinent {

using cplx = std::complex<double>;

constexpr double kDefaultTol = 1e-10;

// Dense N x N complex matrix in row-major order. Everything in this
// project is 2x2 or 4x4, so storage is a flat std::array and all
// operations are value-semantic and allocation-free.
template <std::size_t N>
struct Matrix {
  std::array<cplx, N * N> e{};

  static constexpr std::size_t dim = N;

  constexpr cplx& operator()(std::size_t r, std::size_t c) { return e[r * N + c]; }
  constexpr const cplx& operator()(std::size_t r, std::size_t c) const { return e[r * N + c]; }

  static constexpr Matrix zero() { return {}; }

  static constexpr Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    Matrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }

  Matrix operator-() const {
    Matrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.e[i] = -e[i];
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx a = (*this)(i, k);
        if (a == 0.0) continue;
        for (std::size_t j = 0; j < N; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
  Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

  friend Matrix operator*(cplx s, const Matrix& m) {
    Matrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.e[i] = s * m.e[i];
    return r;
  }
  friend Matrix operator*(const Matrix& m, cplx s) { return s * m; }
  friend Matrix operator*(double s, const Matrix& m) { return cplx(s, 0.0) * m; }
  friend Matrix operator*(const Matrix& m, double s) { return cplx(s, 0.0) * m; }

  Matrix adjoint() const {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  Matrix transpose() const {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  Matrix conjugate() const {
    Matrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.e[i] = std::conj(e[i]);
    return r;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& v : e) m = std::max(m, std::abs(v));
    return m;
  }

  double one_norm() const {
    double m = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < N; ++i) s += std::abs((*this)(i, j));
      m = std::max(m, s);
    }
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : e) s += std::norm(v);
    return std::sqrt(s);
  }

  bool is_finite() const {
    for (const cplx& v : e)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }
};

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  return (a - b).max_abs();
}

// Equality always carries an explicit absolute tolerance.
template <std::size_t N>
bool approx_equal(const Matrix<N>& a, const Matrix<N>& b, double tol = kDefaultTol) {
  return max_abs_diff(a, b) <= tol;
}

template <std::size_t N>
struct Vector {
  std::array<cplx, N> c{};

  static constexpr std::size_t dim = N;

  constexpr cplx& operator[](std::size_t i) { return c[i]; }
  constexpr const cplx& operator[](std::size_t i) const { return c[i]; }

  Vector operator+(const Vector& o) const {
    Vector r;
    for (std::size_t i = 0; i < N; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }

  Vector operator-(const Vector& o) const {
    Vector r;
    for (std::size_t i = 0; i < N; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }

  Vector operator-() const {
    Vector r;
    for (std::size_t i = 0; i < N; ++i) r.c[i] = -c[i];
    return r;
  }

  friend Vector operator*(cplx s, const Vector& v) {
    Vector r;
    for (std::size_t i = 0; i < N; ++i) r.c[i] = s * v.c[i];
    return r;
  }
  friend Vector operator*(const Vector& v, cplx s) { return s * v; }
  friend Vector operator*(double s, const Vector& v) { return cplx(s, 0.0) * v; }
  friend Vector operator*(const Vector& v, double s) { return cplx(s, 0.0) * v; }

  // Euclidean squared norm, used for scale bookkeeping only; the physical
  // norms in this project are the indefinite ones below.
  double norm2_euclid() const {
    double s = 0.0;
    for (const cplx& v : c) s += std::norm(v);
    return s;
  }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& v : c) m = std::max(m, std::abs(v));
    return m;
  }
};

template <std::size_t N>
Vector<N> operator*(const Matrix<N>& m, const Vector<N>& v) {
  Vector<N> r;
  for (std::size_t i = 0; i < N; ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < N; ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

template <std::size_t N>
double max_abs_diff(const Vector<N>& a, const Vector<N>& b) {
  return (a - b).max_abs();
}

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;
using Vec2 = Vector<2>;
using Vec4 = Vector<4>;

// Domain aliases: a Dirac spinor has four complex components, the factor
// spaces are two-component.
using Spinor = Vec4;
using TwoSpinor = Vec2;

// Index convention, fixed once for the whole project: component (i,k) of
// a tensor product sits at 2*i + k, so the A factor owns the coarse
// (block) index and the B factor the fine index.
inline Mat4 tensor_product(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

inline Vec4 tensor_product(const Vec2& a, const Vec2& b) {
  Vec4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) r[2 * i + k] = a[i] * b[k];
  return r;
}

// <psi, phi>_kappa = psi^dag kappa phi: conjugate-linear in the first
// argument, linear in the second.
inline cplx kappa_inner(const Mat2& kappa, const TwoSpinor& psi, const TwoSpinor& phi) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) s += std::conj(psi[i]) * kappa(i, j) * phi[j];
  return s;
}

// The indefinite spinor product <Psi, Phi> = Psi^dag gamma4 Phi.
inline cplx spinor_inner(const Mat4& gamma4, const Spinor& psi, const Spinor& phi) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s += std::conj(psi[i]) * gamma4(i, j) * phi[j];
  return s;
}

// Adjoint row covector: conjugate-transpose of psi right-multiplied by gamma4.
inline Vec4 adjoint_row(const Spinor& psi, const Mat4& gamma4) {
  Vec4 r;
  for (std::size_t j = 0; j < 4; ++j) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) s += std::conj(psi[i]) * gamma4(i, j);
    r[j] = s;
  }
  return r;
}

template <std::size_t N>
Matrix<N> commutator(const Matrix<N>& a, const Matrix<N>& b) {
  return a * b - b * a;
}

template <std::size_t N>
Matrix<N> anticommutator(const Matrix<N>& a, const Matrix<N>& b) {
  return a * b + b * a;
}

// exp(m) by scaling-and-squaring on the truncated Taylor series; the
// series is summed once the argument is scaled below 0.5 in the 1-norm.
template <std::size_t N>
Matrix<N> expm(const Matrix<N>& m) {
  if (!m.is_finite()) throw std::invalid_argument("expm: non-finite matrix entry");
  int squarings = 0;
  double nrm = m.one_norm();
  while (nrm > 0.5) {
    nrm *= 0.5;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  const Matrix<N> x = scale * m;

  Matrix<N> sum = Matrix<N>::identity();
  Matrix<N> term = Matrix<N>::identity();
  for (int k = 1; k <= 40; ++k) {
    term = (1.0 / k) * (term * x);
    sum += term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

// Evolution operator exp(-i h tau) of a one-parameter transformation
// generated by h.
template <std::size_t N>
Matrix<N> evolution_operator(const Matrix<N>& h, double tau) {
  if (!std::isfinite(tau)) throw std::invalid_argument("evolution_operator: non-finite tau");
  return expm(cplx(0.0, -tau) * h);
}

}  // namespace spinent
