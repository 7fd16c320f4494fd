#include "spinent/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinent {

namespace {

// Block transpose ("reshuffle"): R[(i,j),(k,l)] = M[(i,k),(j,l)]. A product
// a (x) b turns into the rank-one matrix vec(a) vec(b)^T, so a singular
// value decomposition of R is exactly the product expansion of M.
Mat4 reshuffle(const Mat4& m) {
  Mat4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(2 * i + j, 2 * k + l) = m(2 * i + k, 2 * j + l);
  return r;
}

}  // namespace

std::vector<OperatorSchmidtTerm> operator_schmidt_terms(const Mat4& m) {
  const Mat4 r = reshuffle(m);
  // SVD via the eigendecomposition of R^dag R: eigenvalues are squared
  // singular values, eigenvectors the right singular vectors.
  const HermitianEigen<4> eig = hermitian_eigen(r.adjoint() * r);

  const double smax = std::sqrt(std::max(eig.values[0], 0.0));
  std::vector<OperatorSchmidtTerm> terms;
  if (smax == 0.0) return terms;

  for (std::size_t n = 0; n < 4; ++n) {
    const double s = std::sqrt(std::max(eig.values[n], 0.0));
    if (s <= 1e-13 * smax) continue;
    Vec4 v;
    for (std::size_t i = 0; i < 4; ++i) v[i] = eig.vectors(i, n);
    Vec4 u = (1.0 / s) * (r * v);

    OperatorSchmidtTerm term;
    term.coeff = s;
    term.factor_a = mat_of(u);
    // R v = s u and R = sum s_n vec(a_n) conj(vec(b_n))^dag, so the B
    // factor is the conjugate of the right singular vector.
    Vec4 vb;
    for (std::size_t i = 0; i < 4; ++i) vb[i] = std::conj(v[i]);
    term.factor_b = mat_of(vb);
    terms.push_back(term);
  }
  return terms;
}

std::size_t operator_schmidt_rank(const Mat4& m, double tol) {
  const auto terms = operator_schmidt_terms(m);
  return static_cast<std::size_t>(
      std::count_if(terms.begin(), terms.end(),
                    [tol](const OperatorSchmidtTerm& t) { return t.coeff > tol; }));
}

Mat4 assemble_schmidt_terms(const std::vector<OperatorSchmidtTerm>& terms) {
  Mat4 m;
  for (const auto& t : terms) m += t.coeff * tensor_product(t.factor_a, t.factor_b);
  return m;
}

std::vector<double> solve_linear_system(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  if (a.size() != n) throw std::invalid_argument("solve_linear_system: shape mismatch");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-14)
      throw std::domain_error("solve_linear_system: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);

    const double inv = 1.0 / a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] * inv;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }

  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace spinent
