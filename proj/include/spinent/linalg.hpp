#pragma once

#include <vector>

#include "spinent/matrix.hpp"

namespace spinent {

// Eigenvalues in descending order; column j of `vectors` is the
// unit eigenvector for values[j].
template <std::size_t N>
struct HermitianEigen {
  std::array<double, N> values{};
  Matrix<N> vectors;
};

// Cyclic complex Jacobi iteration. The input is symmetrized first, so
// callers may pass matrices that are Hermitian only up to roundoff.
template <std::size_t N>
HermitianEigen<N> hermitian_eigen(const Matrix<N>& m) {
  Matrix<N> a = 0.5 * (m + m.adjoint());
  Matrix<N> v = Matrix<N>::identity();

  auto off_diag2 = [](const Matrix<N>& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (i != j) s += std::norm(x(i, j));
    return s;
  };

  for (int sweep = 0; sweep < 60 && off_diag2(a) > 1e-30; ++sweep) {
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) {
        const cplx g = a(p, q);
        const double ag = std::abs(g);
        if (ag < 1e-300) continue;
        // Phase rotation makes the pivot real, then a real Jacobi
        // rotation annihilates it.
        const cplx phase = g / ag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * ag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        Matrix<N> j = Matrix<N>::identity();
        j(p, p) = c;
        j(p, q) = s;
        j(q, p) = -s * std::conj(phase);
        j(q, q) = c * std::conj(phase);

        a = j.adjoint() * a * j;
        v = v * j;
      }
  }

  HermitianEigen<N> out;
  std::array<std::size_t, N> order{};
  for (std::size_t i = 0; i < N; ++i) order[i] = i;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = i + 1; k < N; ++k)
      if (a(order[k], order[k]).real() > a(order[i], order[i]).real()) std::swap(order[i], order[k]);

  for (std::size_t i = 0; i < N; ++i) {
    out.values[i] = a(order[i], order[i]).real();
    for (std::size_t r = 0; r < N; ++r) out.vectors(r, i) = v(r, order[i]);
  }
  return out;
}

// Row-major flattening of a 2x2 block: component (i,j) -> 2*i + j.
inline Vec4 vec_of(const Mat2& m) {
  Vec4 v;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) v[2 * i + j] = m(i, j);
  return v;
}

inline Mat2 mat_of(const Vec4& v) {
  Mat2 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(i, j) = v[2 * i + j];
  return m;
}

// One term of M = sum_n coeff_n * factor_a_n (x) factor_b_n with
// coeff_n > 0 and Frobenius-normalized factors.
struct OperatorSchmidtTerm {
  double coeff = 0.0;
  Mat2 factor_a;
  Mat2 factor_b;
};

// Expansion of a 4x4 operator over products of 2x2 factors, coefficients
// in descending order. Terms below 1e-13 of the leading coefficient are
// dropped; the zero matrix yields no terms.
std::vector<OperatorSchmidtTerm> operator_schmidt_terms(const Mat4& m);

// Number of product terms with coefficient above `tol`.
std::size_t operator_schmidt_rank(const Mat4& m, double tol = kDefaultTol);

// Reassembles sum coeff * a (x) b; inverse of operator_schmidt_terms up
// to roundoff.
Mat4 assemble_schmidt_terms(const std::vector<OperatorSchmidtTerm>& terms);

// Gaussian elimination with partial pivoting for small dense systems.
// Throws std::domain_error when the matrix is numerically singular.
std::vector<double> solve_linear_system(std::vector<std::vector<double>> a, std::vector<double> b);

}  // namespace spinent
