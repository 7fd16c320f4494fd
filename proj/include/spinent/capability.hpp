#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinent/generators.hpp"
#include "spinent/schmidt.hpp"

namespace spinent {

// Rate of change of the Schmidt coefficient at tau = 0 under the
// evolution generated by h, from the decomposition frame:
//   Pdot = 2 sqrt(P(1-P)) Im<psi_a (x) psi_b, h (psi_a_perp (x) psi_b_perp)> / <Psi,Psi>.
// Exactly zero at the product boundary P = 1.
double pdot_analytic(const SchmidtDecomposition& d, const Generator& h,
                     const GammaRepresentation& rep);

// Same rate through the reduced density: rho_dot_A = -i tr_B[h, rho] and
// Pdot = <psi_a, rho_dot_A psi_a>_kappa_a / <psi_a, psi_a>_kappa_a.
double pdot_density(const Spinor& psi, const Generator& h, const GammaRepresentation& rep);

// Central difference of P(tau) across tau = 0. Follows the eigenvalue
// branch of the tau = 0 frame through the fold at P = 1/2, where the
// ordered coefficient P(tau) has a kink but the branch stays smooth.
// step must lie in [1e-6, 1e-2].
double pdot_fd(const Spinor& psi, const Generator& h, const GammaRepresentation& rep,
               double step = 1e-4);

// d(entropy)/dtau by the chain rule, E'(P) * Pdot, with the base-2
// entropy E(P) = -P log2 P - (1-P) log2 (1-P).
struct RateOfChange {
  double gamma = 0.0;
  std::string measure = "entropy_log2";
  double P = 1.0;
  double pdot = 0.0;
  // P = 1: E'(P) diverges but Pdot vanishes identically there; gamma is
  // 0 by that convention and the flag records the boundary evaluation.
  bool at_boundary = false;
};

RateOfChange entanglement_rate(const SchmidtDecomposition& d, const Generator& h,
                               const GammaRepresentation& rep,
                               const std::string& measure = "entropy");

// True iff h acts as X (x) 1 + 1 (x) Y: all Pauli components with both
// factors orthogonal to the identity vanish. Such generators cannot
// change P for any spinor.
bool local_form_check(const Generator& h, double tol = kDefaultTol);

enum class Verdict { Vanishing, NonVanishing };

std::string verdict_name(Verdict v);

struct ClassificationEntry {
  GeneratorLabel label;
  Verdict verdict = Verdict::Vanishing;
  double max_abs_pdot = 0.0;
  // The sampled spinor achieving max |Pdot|; present for non-vanishing
  // verdicts only.
  std::optional<Spinor> witness;
};

struct ClassificationTable {
  std::string rep;
  Branch branch = Branch::Upper;
  double tolerance = kDefaultTol;
  int samples = 0;
  std::vector<ClassificationEntry> entries;

  std::vector<std::string> vanishing_labels() const;
};

// Evaluates pdot_analytic for every generator over `samples` seeded
// random decomposable spinors (random frames and phases, P away from the
// endpoints). A generator is vanishing when max |Pdot| stays below tol;
// otherwise the best witness is stored. samples must be at least 50.
ClassificationTable classify(const GammaRepresentation& rep, Branch branch, int samples,
                             double tol, std::uint64_t seed);

// The built-in reference sets of vanishing generators per representation
// (the same for both branches); empty for custom representations.
std::vector<std::string> reference_vanishing_set(RepId id);

// One spinor evaluated by all three routes, with cross-route residuals.
struct CapabilityRecord {
  GeneratorLabel label;
  Branch branch = Branch::Upper;
  double analytic = 0.0;
  double density = 0.0;
  double fd = 0.0;
  double fd_step = 1e-4;
  Spinor spinor;
  double residual_density = 0.0;
  double residual_fd = 0.0;
};

CapabilityRecord evaluate_capability(const GammaRepresentation& rep, Branch branch,
                                     const GeneratorLabel& label, const Spinor& psi,
                                     double fd_step = 1e-4);

}  // namespace spinent
