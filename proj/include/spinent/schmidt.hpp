#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "spinent/clifford.hpp"
#include "spinent/matrix.hpp"

namespace spinent {

// Two-term expansion of a spinor over kappa-orthonormal factor frames,
//
//   Psi = scale * (sqrt(P) psi_a (x) psi_b
//                  + sqrt(1-P) psi_a_perp (x) psi_b_perp),
//
// with 1/2 <= P <= 1, both coefficients real non-negative, and every
// factor vector of unit kappa-norm magnitude. The s_* members carry the
// kappa-norm signs; the perp vector of a factor always has the opposite
// sign of its partner. `norm` is the indefinite squared norm of the
// rescaled spinor (so +1 or -1, equal to s_a*s_b), and `scale` the
// positive factor removed when normalizing, so the original spinor has
// squared norm equal to norm*scale^2.
struct SchmidtDecomposition {
  double P = 1.0;
  TwoSpinor psi_a, psi_a_perp, psi_b, psi_b_perp;
  int s_a = 1, s_a_perp = -1, s_b = 1, s_b_perp = -1;
  double norm = 1.0;
  double scale = 1.0;
};

// Spinors with vanishing indefinite norm cannot be normalized and are
// excluded from decomposition and density-operator construction.
class NullSpinorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a factor metric does not have signature (1,1); such a
// tensor product structure admits no two-sided decomposition of the form
// above for general spinors.
class TpsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The indefinite setting genuinely lacks a decomposition for some
// spinors; the code pins down which failure mode was detected.
enum class DecomposeFailure {
  ComplexEigenvalues,      // reduced density has a non-real eigenvalue pair
  DefectiveEigenframe,     // degenerate but non-scalar, or frame lost orthogonality
  NullSchmidtVector,       // a candidate factor vector is kappa-null
  CoefficientsOutOfRange,  // coefficients violate |c1|^2 + |c2|^2 = 1
};

std::string failure_name(DecomposeFailure code);

class NotDecomposableError : public std::runtime_error {
 public:
  NotDecomposableError(DecomposeFailure code, const std::string& detail)
      : std::runtime_error(failure_name(code) + ": " + detail), code_(code) {}

  DecomposeFailure code() const { return code_; }

 private:
  DecomposeFailure code_;
};

// kappa-orthonormal eigenframe of a factor metric: vectors[0] has
// kappa-norm +1, vectors[1] has -1. Requires signature (1,1); for
// kappa = sigma3 the frame is exactly {e1, e2}.
struct KappaFrame {
  std::array<TwoSpinor, 2> vectors;
  std::array<int, 2> signs{1, -1};
};

KappaFrame kappa_frame(const Mat2& kappa);  // throws TpsError

// Reshape bridging the spinor and bipartite views: C(i,k) is the
// component of Psi on basis vector e_i (x) e_k, so coefficient_matrix of
// a (x) b equals a b^T.
Mat2 coefficient_matrix(const Spinor& psi);

Spinor spinor_from_matrix(const Mat2& c);

// Partial trace over the B factor weighted by the indefinite metric:
// the unique map with <phi, tr_B[X] psi>_kappaA summing the diagonal
// B-matrix elements of X against any kappa_b-orthonormal frame with its
// signs. Closed form: kappa_a * ptr_B[(kappa_a (x) kappa_b) X (1 (x) kappa_b)].
Mat2 weighted_partial_trace_b(const Mat4& x, const GammaRepresentation& rep);

// rho_A = tr_B[Psi Psi^dag gamma4] / <Psi,Psi>. Trace exactly 1;
// kappa_a-pseudo-Hermitian rather than Hermitian. Throws NullSpinorError
// when |<Psi,Psi>| < 1e-8 of the Euclidean squared norm.
Mat2 reduced_density_a(const Spinor& psi, const GammaRepresentation& rep);

// Constructive route: eigen-decompose rho_A, contract Psi against the
// A-frame to obtain the B vectors, push all phases into the B side so
// both coefficients come out real non-negative. Deterministic: the
// larger coefficient defines psi_a, and at exact degeneracy (P = 1/2,
// scalar rho_A) the kappa_a eigenframe is used with the lexicographically
// larger vector first. Throws NullSpinorError, TpsError, or
// NotDecomposableError.
SchmidtDecomposition decompose(const Spinor& psi, const GammaRepresentation& rep);

// Right-hand side of the decomposition equation, including the recorded
// scale; inverse of decompose up to roundoff.
Spinor reconstruct(const SchmidtDecomposition& d);

// Deterministic generator of decomposable spinors: pseudo-unitary frames
// from exponentials of random kappa-anti-pseudo-Hermitian matrices,
// random phases on the B side, coefficient p given or drawn from the
// open interval (1/2, 1). The result has |<Psi,Psi>| = 1.
Spinor sample_decomposable(const GammaRepresentation& rep, std::optional<double> p,
                           std::uint64_t seed);

}  // namespace spinent
