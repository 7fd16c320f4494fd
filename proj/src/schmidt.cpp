#include "spinent/schmidt.hpp"

#include <cmath>
#include <cstdio>

#include "spinent/linalg.hpp"
#include "spinent/rng.hpp"

namespace spinent {

namespace {

// Rejection and consistency thresholds. Euclidean norms provide the
// reference scale so the checks are invariant under rescaling the input.
constexpr double kNullSpinorTol = 1e-8;    // |<Psi,Psi>| against the Euclidean norm^2
constexpr double kImagEigenTol = 1e-9;     // imaginary part of a density eigenvalue
constexpr double kNullVectorTol = 1e-8;    // |<v,v>_kappa| against the Euclidean norm^2
constexpr double kDegenerateGap = 1e-10;   // eigenvalue spacing treated as degenerate
constexpr double kOrthogonalityTol = 1e-8; // cross terms between Schmidt partners
constexpr double kCoefficientTol = 1e-8;   // deviation of |c1|^2 + |c2|^2 from 1
constexpr double kResidualTol = 1e-10;     // reconstruction residual per unit scale
constexpr double kProductWeight = 1e-16;   // squared weight below which P = 1 is exact

void canonicalize_phase(TwoSpinor& v) {
  std::size_t imax = std::abs(v[1]) > std::abs(v[0]) ? 1 : 0;
  const double mag = std::abs(v[imax]);
  if (mag == 0.0) return;
  v = (std::conj(v[imax]) / mag) * v;
  v[imax] = cplx(std::abs(v[imax]), 0.0);
}

bool lex_less(const TwoSpinor& u, const TwoSpinor& v) {
  for (std::size_t r = 0; r < 2; ++r) {
    if (u[r].real() != v[r].real()) return u[r].real() < v[r].real();
    if (u[r].imag() != v[r].imag()) return u[r].imag() < v[r].imag();
  }
  return false;
}

// (a^dag kappa_a (x) 1) Psi: for Psi = sum_j c_j a_j (x) b_j over a
// kappa_a-orthonormal frame this picks out s_m c_m b_m.
TwoSpinor contract_a(const Spinor& psi, const TwoSpinor& a, const Mat2& kappa_a) {
  TwoSpinor row;
  for (std::size_t i = 0; i < 2; ++i) {
    cplx s = 0.0;
    for (std::size_t ip = 0; ip < 2; ++ip) s += std::conj(a[ip]) * kappa_a(ip, i);
    row[i] = s;
  }
  TwoSpinor u;
  for (std::size_t k = 0; k < 2; ++k) u[k] = row[0] * psi[k] + row[1] * psi[2 + k];
  return u;
}

// kappa-orthogonal partner of b, with the opposite kappa-norm sign and
// the same norm magnitude.
TwoSpinor kappa_complement(const TwoSpinor& b, const Mat2& kappa) {
  const TwoSpinor rotated{{-std::conj(b[1]), std::conj(b[0])}};
  return kappa * rotated;
}

std::string format_pair(double x, double y) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "(%.6g, %.6g)", x, y);
  return buf;
}

}  // namespace

std::string failure_name(DecomposeFailure code) {
  switch (code) {
    case DecomposeFailure::ComplexEigenvalues: return "complex-eigenvalues";
    case DecomposeFailure::DefectiveEigenframe: return "defective-eigenframe";
    case DecomposeFailure::NullSchmidtVector: return "null-schmidt-vector";
    case DecomposeFailure::CoefficientsOutOfRange: return "coefficients-out-of-range";
  }
  return "unknown";
}

KappaFrame kappa_frame(const Mat2& kappa) {
  const HermitianEigen<2> eig = hermitian_eigen(kappa);
  if (std::abs(eig.values[0] - 1.0) > 1e-9 || std::abs(eig.values[1] + 1.0) > 1e-9)
    throw TpsError("factor metric has eigenvalues " + format_pair(eig.values[0], eig.values[1]) +
                   " but the decomposition requires signature (1,1)");
  KappaFrame frame;
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t r = 0; r < 2; ++r) frame.vectors[j][r] = eig.vectors(r, j);
    canonicalize_phase(frame.vectors[j]);
  }
  return frame;
}

Mat2 coefficient_matrix(const Spinor& psi) {
  Mat2 c;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) c(i, k) = psi[2 * i + k];
  return c;
}

Spinor spinor_from_matrix(const Mat2& c) {
  Spinor psi;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) psi[2 * i + k] = c(i, k);
  return psi;
}

Mat2 weighted_partial_trace_b(const Mat4& x, const GammaRepresentation& rep) {
  const Mat4 w = tensor_product(rep.kappa_a, rep.kappa_b) * x *
                 tensor_product(Mat2::identity(), rep.kappa_b);
  Mat2 traced;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < 2; ++k) s += w(2 * i + k, 2 * j + k);
      traced(i, j) = s;
    }
  return rep.kappa_a * traced;
}

Mat2 reduced_density_a(const Spinor& psi, const GammaRepresentation& rep) {
  const double e2 = psi.norm2_euclid();
  const cplx n = spinor_inner(rep.gamma(4), psi, psi);
  if (e2 == 0.0 || std::abs(n) < kNullSpinorTol * e2)
    throw NullSpinorError("cannot form a reduced density for a (near-)null spinor");
  const Mat2 c = coefficient_matrix(psi);
  return (1.0 / n) * (c * rep.kappa_b.transpose() * c.adjoint() * rep.kappa_a);
}

SchmidtDecomposition decompose(const Spinor& psi, const GammaRepresentation& rep) {
  for (const cplx& v : psi.c)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("decompose: non-finite spinor component");

  const double e2 = psi.norm2_euclid();
  if (e2 == 0.0) throw NullSpinorError("zero spinor");
  const double n_raw = spinor_inner(rep.gamma(4), psi, psi).real();
  if (std::abs(n_raw) < kNullSpinorTol * e2)
    throw NullSpinorError("indefinite squared norm below 1e-8 of the Euclidean squared norm");

  const KappaFrame frame_a = kappa_frame(rep.kappa_a);
  kappa_frame(rep.kappa_b);

  SchmidtDecomposition d;
  d.scale = std::sqrt(std::abs(n_raw));
  d.norm = n_raw > 0.0 ? 1.0 : -1.0;
  const Spinor pn = (1.0 / d.scale) * psi;
  const double pn_e2 = pn.norm2_euclid();

  const Mat2 rho = reduced_density_a(pn, rep);

  // Closed-form eigenvalues; the trace is exactly the normalized norm
  // ratio, so it sits at 1 up to roundoff.
  const cplx tr = rho.trace();
  const cplx det = rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0);
  const cplx disc = tr * tr - 4.0 * det;
  // The square root turns eps-level noise in the discriminant into a
  // ~1e-8 eigenvalue perturbation, so a discriminant within roundoff of
  // zero must be treated as an exact double root before taking it.
  const double disc_noise = 1e-13 * std::max(1.0, std::norm(tr) + 4.0 * std::abs(det));
  const cplx root = std::abs(disc) < disc_noise ? cplx(0.0) : std::sqrt(disc);
  cplx l1 = 0.5 * (tr + root);
  cplx l2 = 0.5 * (tr - root);
  if (l1.real() < l2.real()) std::swap(l1, l2);
  if (std::abs(l1.imag()) > kImagEigenTol || std::abs(l2.imag()) > kImagEigenTol)
    throw NotDecomposableError(
        DecomposeFailure::ComplexEigenvalues,
        "reduced density eigenvalues " + format_pair(l1.real(), l1.imag()) + " and " +
            format_pair(l2.real(), l2.imag()));

  TwoSpinor a1, a2;
  int s1 = 1, s2 = -1;
  if (std::abs(l1 - l2) < kDegenerateGap) {
    // Scalar reduced density: every direction is an eigenvector, so any
    // kappa_a-orthonormal frame works; the metric eigenframe makes the
    // output deterministic.
    Mat2 scalar_part;
    scalar_part(0, 0) = 0.5 * tr;
    scalar_part(1, 1) = 0.5 * tr;
    if (max_abs_diff(rho, scalar_part) > kImagEigenTol)
      throw NotDecomposableError(DecomposeFailure::DefectiveEigenframe,
                                 "degenerate eigenvalues with a non-scalar reduced density");
    a1 = frame_a.vectors[0];
    s1 = frame_a.signs[0];
    a2 = frame_a.vectors[1];
    s2 = frame_a.signs[1];
    if (lex_less(a1, a2)) {
      std::swap(a1, a2);
      std::swap(s1, s2);
    }
  } else {
    auto eigenvector = [&rho](double lambda) {
      Mat2 m = rho;
      m(0, 0) -= lambda;
      m(1, 1) -= lambda;
      // Either row of the singular 2x2 matrix yields a kernel vector;
      // take the better-conditioned one.
      const TwoSpinor v1{{m(0, 1), -m(0, 0)}};
      const TwoSpinor v2{{m(1, 1), -m(1, 0)}};
      return v1.norm2_euclid() >= v2.norm2_euclid() ? v1 : v2;
    };
    a1 = eigenvector(l1.real());
    a2 = eigenvector(l2.real());

    auto normalize_a = [&rep](TwoSpinor& a, int& s) {
      const double nu = kappa_inner(rep.kappa_a, a, a).real();
      if (std::abs(nu) < kNullVectorTol * a.norm2_euclid())
        throw NotDecomposableError(DecomposeFailure::NullSchmidtVector,
                                   "kappa-null eigenvector of the reduced density");
      s = nu > 0.0 ? 1 : -1;
      a = (1.0 / std::sqrt(std::abs(nu))) * a;
      canonicalize_phase(a);
    };
    normalize_a(a1, s1);
    normalize_a(a2, s2);

    if (std::abs(kappa_inner(rep.kappa_a, a1, a2)) > kOrthogonalityTol)
      throw NotDecomposableError(DecomposeFailure::DefectiveEigenframe,
                                 "eigenvectors of the reduced density lost kappa-orthogonality");
  }

  // Contraction leaves c_m b_m; the kappa-norm of that product splits
  // into the non-negative coefficient and the sign-carrying unit vector.
  TwoSpinor w1 = double(s1) * contract_a(pn, a1, rep.kappa_a);
  TwoSpinor w2 = double(s2) * contract_a(pn, a2, rep.kappa_a);

  auto split = [&rep, pn_e2](const TwoSpinor& w, double& c, int& t, TwoSpinor& b) {
    const double we = w.norm2_euclid();
    if (we < kProductWeight * std::max(1.0, pn_e2)) return false;
    const double nu = kappa_inner(rep.kappa_b, w, w).real();
    if (std::abs(nu) < kNullVectorTol * we)
      throw NotDecomposableError(DecomposeFailure::NullSchmidtVector,
                                 "kappa-null Schmidt vector on the B side");
    c = std::sqrt(std::abs(nu));
    t = nu > 0.0 ? 1 : -1;
    b = (1.0 / c) * w;
    return true;
  };

  double c1 = 0.0, c2 = 0.0;
  int t1 = 1, t2 = -1;
  TwoSpinor b1, b2;
  bool have1 = split(w1, c1, t1, b1);
  bool have2 = split(w2, c2, t2, b2);

  if (!have1 && !have2)
    throw NotDecomposableError(DecomposeFailure::DefectiveEigenframe,
                               "both Schmidt weights vanish");
  if (!have1) {
    std::swap(a1, a2);
    std::swap(s1, s2);
    std::swap(c1, c2);
    std::swap(t1, t2);
    std::swap(b1, b2);
    std::swap(have1, have2);
  }

  double w_major = 1.0;
  double w_minor = 0.0;
  if (!have2) {
    // Product spinor: the second weight is pure roundoff. Pin P to the
    // boundary so downstream rates vanish identically, and complete the
    // B frame with the kappa-orthogonal partner.
    d.P = 1.0;
    b2 = kappa_complement(b1, rep.kappa_b);
    canonicalize_phase(b2);
    t2 = -t1;
  } else {
    if (c2 > c1) {
      std::swap(a1, a2);
      std::swap(s1, s2);
      std::swap(c1, c2);
      std::swap(t1, t2);
      std::swap(b1, b2);
    }
    const double sum = c1 * c1 + c2 * c2;
    if (std::abs(sum - 1.0) > kCoefficientTol)
      throw NotDecomposableError(
          DecomposeFailure::CoefficientsOutOfRange,
          "coefficients square-sum to " + format_pair(sum, sum - 1.0) +
              " instead of 1; the sign pattern admits no two-term expansion");
    // The minor B vector is read off a contraction of magnitude c2, so
    // its direction is only determined to roundoff divided by c2. Widen
    // the gate by that factor near the product boundary.
    const double ortho_allowed = std::max(
        kOrthogonalityTol, 1e-13 * std::max(1.0, std::sqrt(pn_e2)) / std::max(c2, 1e-300));
    if (std::abs(kappa_inner(rep.kappa_b, b1, b2)) > ortho_allowed)
      throw NotDecomposableError(DecomposeFailure::DefectiveEigenframe,
                                 "B-side Schmidt vectors lost kappa-orthogonality");
    const double root_sum = std::sqrt(sum);
    w_major = c1 / root_sum;
    w_minor = c2 / root_sum;
    d.P = std::min(1.0, std::max(0.5, (c1 * c1) / sum));
  }

  d.psi_a = a1;
  d.psi_a_perp = a2;
  d.psi_b = b1;
  d.psi_b_perp = b2;
  d.s_a = s1;
  d.s_a_perp = s2;
  d.s_b = t1;
  d.s_b_perp = t2;

  // Gate on the unrounded weights. Round-tripping them through the stored
  // P costs about eps / sqrt(1 - P) near the product boundary, a storage
  // artifact that says nothing about the quality of the frames.
  const Spinor rebuilt = d.scale * (w_major * tensor_product(a1, b1) +
                                    w_minor * tensor_product(a2, b2));
  const double residual = max_abs_diff(rebuilt, psi);
  if (residual > kResidualTol * std::max(1.0, d.scale))
    throw NotDecomposableError(
        DecomposeFailure::DefectiveEigenframe,
        "reconstruction residual " + format_pair(residual, d.scale) + " exceeds tolerance");
  return d;
}

Spinor reconstruct(const SchmidtDecomposition& d) {
  const double cp = std::sqrt(std::max(0.0, d.P));
  const double cm = std::sqrt(std::max(0.0, 1.0 - d.P));
  const Spinor sum = cp * tensor_product(d.psi_a, d.psi_b) +
                     cm * tensor_product(d.psi_a_perp, d.psi_b_perp);
  return d.scale * sum;
}

Spinor sample_decomposable(const GammaRepresentation& rep, std::optional<double> p,
                           std::uint64_t seed) {
  if (p && !(*p >= 0.5 && *p <= 1.0))
    throw std::invalid_argument("sample_decomposable: p must lie in [1/2, 1]");

  RandomStream rng(mix_seed(seed, 0));
  const KappaFrame frame_a = kappa_frame(rep.kappa_a);
  const KappaFrame frame_b = kappa_frame(rep.kappa_b);

  auto random_pseudo_unitary = [&rng](const Mat2& kappa) {
    // i kappa S with Hermitian S is kappa-anti-pseudo-Hermitian, so its
    // exponential preserves every kappa-norm. The rapidity scales stay
    // moderate: the curvature of P along an orbit grows exponentially
    // with the frame rapidity, and wild frames would push the documented
    // finite-difference steps outside their quoted accuracy.
    Mat2 s;
    s(0, 0) = 0.35 * rng.normal();
    s(1, 1) = 0.35 * rng.normal();
    const cplx off = 0.2 * rng.normal_complex();
    s(0, 1) = off;
    s(1, 0) = std::conj(off);
    return expm(cplx(0, 1) * (kappa * s));
  };

  const Mat2 ua = random_pseudo_unitary(rep.kappa_a);
  const Mat2 ub = random_pseudo_unitary(rep.kappa_b);

  TwoSpinor a1 = ua * frame_a.vectors[0];
  TwoSpinor a2 = ua * frame_a.vectors[1];
  TwoSpinor b1 = ub * frame_b.vectors[0];
  TwoSpinor b2 = ub * frame_b.vectors[1];
  if (rng.coin()) std::swap(a1, a2);
  if (rng.coin()) std::swap(b1, b2);

  const double two_pi = 6.283185307179586476925286766559;
  b1 = std::polar(1.0, two_pi * rng.uniform()) * b1;
  b2 = std::polar(1.0, two_pi * rng.uniform()) * b2;

  // The default draw keeps clear of both ends of the coefficient range.
  // P = 1/2 borders the region of complex eigenvalues, where derivatives
  // of P along an orbit blow up like inverse powers of P - 1/2; P = 1 is
  // the product boundary.
  const double coeff = p ? *p : 0.5 + 0.5 * (0.06 + 0.936 * rng.uniform());
  return std::sqrt(coeff) * tensor_product(a1, b1) +
         std::sqrt(1.0 - coeff) * tensor_product(a2, b2);
}

}  // namespace spinent
