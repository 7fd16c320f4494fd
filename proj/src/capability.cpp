#include "spinent/capability.hpp"

#include <cmath>
#include <cstdio>

#include "spinent/pauli.hpp"
#include "spinent/rng.hpp"

namespace spinent {

double pdot_analytic(const SchmidtDecomposition& d, const Generator& h,
                     const GammaRepresentation& rep) {
  const double weight = d.P * (1.0 - d.P);
  if (weight <= 0.0) return 0.0;
  const Spinor left = tensor_product(d.psi_a, d.psi_b);
  const Spinor right = h.matrix * tensor_product(d.psi_a_perp, d.psi_b_perp);
  const cplx cross = spinor_inner(rep.gamma(4), left, right);
  return 2.0 * std::sqrt(weight) * cross.imag() / d.norm;
}

double pdot_density(const Spinor& psi, const Generator& h, const GammaRepresentation& rep) {
  const SchmidtDecomposition d = decompose(psi, rep);

  const cplx n = spinor_inner(rep.gamma(4), psi, psi);
  const Vec4 bar = adjoint_row(psi, rep.gamma(4));
  Mat4 rho;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) rho(i, j) = psi[i] * bar[j] / n;

  const Mat2 rho_dot = cplx(0, -1) * weighted_partial_trace_b(commutator(h.matrix, rho), rep);
  const cplx num = kappa_inner(rep.kappa_a, d.psi_a, rho_dot * d.psi_a);
  return num.real() / static_cast<double>(d.s_a);
}

double pdot_fd(const Spinor& psi, const Generator& h, const GammaRepresentation& rep,
               double step) {
  if (!(step >= 1e-6 && step <= 1e-2))
    throw std::invalid_argument("pdot_fd: step must lie in [1e-6, 1e-2]");
  const SchmidtDecomposition d0 = decompose(psi, rep);

  auto branch_p = [&](double tau) {
    const Spinor evolved = evolution_operator(h.matrix, tau) * psi;
    SchmidtDecomposition d;
    try {
      d = decompose(evolved, rep);
    } catch (const NotDecomposableError& e) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), " (evolution left the decomposable set at tau=%.6g)", tau);
      std::string detail = e.what();
      const std::size_t sep = detail.find(": ");
      if (sep != std::string::npos) detail.erase(0, sep + 2);
      throw NotDecomposableError(e.code(), detail + buf);
    }
    // The ordered coefficient folds at P = 1/2: past the degeneracy the
    // roles of the frame vectors swap. Staying on the eigenvalue branch
    // of the tau = 0 frame means taking 1 - P whenever the evolved
    // psi_a aligns with the original psi_a_perp instead of psi_a.
    const double keep = std::abs(kappa_inner(rep.kappa_a, d0.psi_a, d.psi_a));
    const double crossed = std::abs(kappa_inner(rep.kappa_a, d0.psi_a, d.psi_a_perp));
    return crossed > keep ? 1.0 - d.P : d.P;
  };
  return (branch_p(step) - branch_p(-step)) / (2.0 * step);
}

RateOfChange entanglement_rate(const SchmidtDecomposition& d, const Generator& h,
                               const GammaRepresentation& rep, const std::string& measure) {
  if (measure != "entropy")
    throw std::invalid_argument("unknown entanglement measure \"" + measure +
                                "\" (supported: entropy)");
  RateOfChange rate;
  rate.P = d.P;
  rate.pdot = pdot_analytic(d, h, rep);
  if (d.P >= 1.0) {
    rate.at_boundary = true;
    return rate;
  }
  rate.gamma = std::log2((1.0 - d.P) / d.P) * rate.pdot;
  return rate;
}

bool local_form_check(const Generator& h, double tol) {
  double worst = 0.0;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      const cplx coeff = 0.25 * (tensor_product(sigma(a), sigma(b)) * h.matrix).trace();
      worst = std::max(worst, std::abs(coeff));
    }
  return worst <= tol;
}

std::string verdict_name(Verdict v) {
  return v == Verdict::Vanishing ? "vanishing" : "non-vanishing";
}

std::vector<std::string> ClassificationTable::vanishing_labels() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (e.verdict == Verdict::Vanishing) out.push_back(e.label.str());
  return out;
}

ClassificationTable classify(const GammaRepresentation& rep, Branch branch, int samples,
                             double tol, std::uint64_t seed) {
  if (samples < 50) throw std::invalid_argument("classify: at least 50 samples required");

  ClassificationTable table;
  table.rep = rep_name(rep.id);
  table.branch = branch;
  table.tolerance = tol;
  table.samples = samples;

  std::vector<Spinor> spinors;
  std::vector<SchmidtDecomposition> decs;
  spinors.reserve(static_cast<std::size_t>(samples));
  decs.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    spinors.push_back(
        sample_decomposable(rep, std::nullopt, mix_seed(seed, static_cast<std::uint64_t>(k))));
    decs.push_back(decompose(spinors.back(), rep));
  }

  for (const Generator& g : all_generators(rep, branch)) {
    ClassificationEntry entry;
    entry.label = g.label;
    std::size_t best = 0;
    for (std::size_t k = 0; k < decs.size(); ++k) {
      const double v = std::abs(pdot_analytic(decs[k], g, rep));
      if (v > entry.max_abs_pdot) {
        entry.max_abs_pdot = v;
        best = k;
      }
    }
    if (entry.max_abs_pdot < tol) {
      entry.verdict = Verdict::Vanishing;
    } else {
      entry.verdict = Verdict::NonVanishing;
      entry.witness = spinors[best];
    }
    table.entries.push_back(entry);
  }
  return table;
}

std::vector<std::string> reference_vanishing_set(RepId id) {
  switch (id) {
    case RepId::A: return {"M12", "M14", "M24", "D", "P3", "K3"};
    case RepId::B: return {"M23", "M24", "M34", "D", "P1", "K1"};
    case RepId::Custom: return {};
  }
  return {};
}

CapabilityRecord evaluate_capability(const GammaRepresentation& rep, Branch branch,
                                     const GeneratorLabel& label, const Spinor& psi,
                                     double fd_step) {
  CapabilityRecord record;
  record.label = label;
  record.branch = branch;
  record.fd_step = fd_step;
  record.spinor = psi;

  const Generator g = make_generator(rep, label, branch);
  const SchmidtDecomposition d = decompose(psi, rep);
  record.analytic = pdot_analytic(d, g, rep);
  record.density = pdot_density(psi, g, rep);
  record.fd = pdot_fd(psi, g, rep, fd_step);
  record.residual_density = std::abs(record.analytic - record.density);
  record.residual_fd = std::abs(record.analytic - record.fd);
  return record;
}

}  // namespace spinent
