#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spinent/matrix.hpp"

namespace spinent {

enum class RepId { A, B, Custom };

std::string rep_name(RepId id);

// A gamma-matrix representation over the split-signature space: metric
// diag(-1,-1,-1,+1), gamma4 Hermitian and factorized as kappa_a (x)
// kappa_b, the spatial gammas anti-Hermitian.
struct GammaRepresentation {
  std::array<Mat4, 4> gammas{};  // gamma_1 .. gamma_4
  Mat4 gamma5;                   // gamma_1 gamma_2 gamma_3 gamma_4
  Mat2 kappa_a;
  Mat2 kappa_b;
  RepId id = RepId::Custom;

  // mu runs 1..4 throughout, matching the index the matrices carry.
  const Mat4& gamma(int mu) const {
    if (mu < 1 || mu > 4) throw std::out_of_range("gamma index must be 1..4");
    return gammas[static_cast<std::size_t>(mu - 1)];
  }

  static double metric(int mu, int nu) {
    if (mu < 1 || mu > 4 || nu < 1 || nu > 4) throw std::out_of_range("metric index must be 1..4");
    if (mu != nu) return 0.0;
    return mu == 4 ? 1.0 : -1.0;
  }
};

// User-supplied representation before validation.
struct CustomRep {
  std::array<Mat4, 4> gammas{};
  Mat2 kappa_a;
  Mat2 kappa_b;
};

class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliffordCheck {
  std::string name;
  double violation = 0.0;
};

struct CliffordReport {
  std::vector<CliffordCheck> checks;

  double max_violation() const;
  bool pass(double tol = kDefaultTol) const;
  // First check exceeding tol, or nullptr when all pass.
  const CliffordCheck* first_failure(double tol = kDefaultTol) const;
};

// The two named representations share kappa_a = kappa_b = sigma3 and the
// same gamma5; they differ by a cyclic relabeling of the spatial gammas.
GammaRepresentation build_rep(RepId id);

// Validates a custom payload and throws RepresentationError naming the
// first violated identity. A gamma4 without a rank-one product structure
// is rejected up front, since no kappa factor pair can exist for it.
GammaRepresentation build_rep(const CustomRep& custom, double tol = kDefaultTol);

// Packs a payload into a GammaRepresentation without any validation,
// deriving gamma5 from the product; callers wanting guarantees go
// through build_rep or verify_custom.
GammaRepresentation assemble_rep(const CustomRep& custom);

// Non-throwing variant of custom validation, for reporting.
CliffordReport verify_custom(const CustomRep& custom);

// Every defining identity with its numerical violation: pairwise
// anticommutators against the metric, (anti-)hermiticity per index,
// the gamma5 product and square, hermiticity of i*gamma5, the kappa
// factorization of gamma4, and involutivity of the kappa factors.
CliffordReport verify_clifford(const GammaRepresentation& rep);

// (P_minus, P_plus) with P_-+ = (1 -+ i gamma5)/2; complementary
// idempotents commuting with gamma5.
std::pair<Mat4, Mat4> chiral_projectors(const GammaRepresentation& rep);

}  // namespace spinent
