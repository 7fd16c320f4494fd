#include "spinent/clifford.hpp"

#include <cstdio>
#include <utility>

#include "spinent/linalg.hpp"
#include "spinent/pauli.hpp"

namespace spinent {

std::string rep_name(RepId id) {
  switch (id) {
    case RepId::A: return "A";
    case RepId::B: return "B";
    case RepId::Custom: return "custom";
  }
  return "custom";
}

double CliffordReport::max_violation() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.violation);
  return m;
}

bool CliffordReport::pass(double tol) const { return first_failure(tol) == nullptr; }

const CliffordCheck* CliffordReport::first_failure(double tol) const {
  for (const auto& c : checks)
    if (!(c.violation <= tol)) return &c;
  return nullptr;
}

namespace {

GammaRepresentation finish(std::array<Mat4, 4> gammas, Mat2 ka, Mat2 kb, RepId id) {
  GammaRepresentation rep;
  rep.gammas = gammas;
  rep.gamma5 = gammas[0] * gammas[1] * gammas[2] * gammas[3];
  rep.kappa_a = ka;
  rep.kappa_b = kb;
  rep.id = id;
  return rep;
}

}  // namespace

GammaRepresentation build_rep(RepId id) {
  const cplx i(0.0, 1.0);
  const Mat4 g4 = tensor_product(kSigma3, kSigma3);
  switch (id) {
    case RepId::A:
      return finish({i * tensor_product(kSigma3, kSigma1),  //
                     i * tensor_product(kSigma3, kSigma2),  //
                     i * tensor_product(kSigma2, kId2),     //
                     g4},
                    kSigma3, kSigma3, RepId::A);
    case RepId::B:
      return finish({i * tensor_product(kSigma2, kId2),     //
                     i * tensor_product(kSigma3, kSigma1),  //
                     i * tensor_product(kSigma3, kSigma2),  //
                     g4},
                    kSigma3, kSigma3, RepId::B);
    case RepId::Custom:
      throw RepresentationError("build_rep: custom representations require an explicit payload");
  }
  throw RepresentationError("build_rep: unknown representation id");
}

CliffordReport verify_clifford(const GammaRepresentation& rep) {
  CliffordReport report;
  auto add = [&report](std::string name, double violation) {
    report.checks.push_back({std::move(name), violation});
  };

  const Mat4 id4 = Mat4::identity();
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = mu; nu <= 4; ++nu) {
      const Mat4 lhs = anticommutator(rep.gamma(mu), rep.gamma(nu));
      const Mat4 rhs = (2.0 * GammaRepresentation::metric(mu, nu)) * id4;
      add("{gamma" + std::to_string(mu) + ",gamma" + std::to_string(nu) + "} = 2 g" +
              std::to_string(mu) + std::to_string(nu) + " I",
          max_abs_diff(lhs, rhs));
    }

  for (int k = 1; k <= 3; ++k)
    add("gamma" + std::to_string(k) + " anti-hermitian",
        max_abs_diff(rep.gamma(k).adjoint(), -rep.gamma(k)));
  add("gamma4 hermitian", max_abs_diff(rep.gamma(4).adjoint(), rep.gamma(4)));

  add("gamma5 = gamma1 gamma2 gamma3 gamma4",
      max_abs_diff(rep.gamma5, rep.gamma(1) * rep.gamma(2) * rep.gamma(3) * rep.gamma(4)));
  add("gamma5^2 = -I", max_abs_diff(rep.gamma5 * rep.gamma5, -id4));
  add("i gamma5 hermitian",
      max_abs_diff((cplx(0, 1) * rep.gamma5).adjoint(), cplx(0, 1) * rep.gamma5));
  for (int mu = 1; mu <= 4; ++mu)
    add("{gamma5,gamma" + std::to_string(mu) + "} = 0",
        anticommutator(rep.gamma5, rep.gamma(mu)).max_abs());

  add("gamma4 = kappaA (x) kappaB",
      max_abs_diff(rep.gamma(4), tensor_product(rep.kappa_a, rep.kappa_b)));
  add("kappaA hermitian", max_abs_diff(rep.kappa_a.adjoint(), rep.kappa_a));
  add("kappaB hermitian", max_abs_diff(rep.kappa_b.adjoint(), rep.kappa_b));
  add("kappaA^2 = I", max_abs_diff(rep.kappa_a * rep.kappa_a, Mat2::identity()));
  add("kappaB^2 = I", max_abs_diff(rep.kappa_b * rep.kappa_b, Mat2::identity()));

  return report;
}

GammaRepresentation assemble_rep(const CustomRep& custom) {
  return finish(custom.gammas, custom.kappa_a, custom.kappa_b, RepId::Custom);
}

CliffordReport verify_custom(const CustomRep& custom) { return verify_clifford(assemble_rep(custom)); }

GammaRepresentation build_rep(const CustomRep& custom, double tol) {
  for (const auto& g : custom.gammas)
    if (!g.is_finite()) throw RepresentationError("custom payload has non-finite gamma entries");
  if (!custom.kappa_a.is_finite() || !custom.kappa_b.is_finite())
    throw RepresentationError("custom payload has non-finite kappa entries");

  const std::size_t rank = operator_schmidt_rank(custom.gammas[3], 1e-12);
  if (rank != 1)
    throw RepresentationError(
        "gamma4 is entangled: operator Schmidt rank " + std::to_string(rank) +
        ", so no kappaA (x) kappaB factorization exists");

  const CliffordReport report = verify_custom(custom);
  if (const CliffordCheck* bad = report.first_failure(tol)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", bad->violation);
    throw RepresentationError("custom representation violates \"" + bad->name +
                              "\" (violation " + buf + ")");
  }
  return assemble_rep(custom);
}

std::pair<Mat4, Mat4> chiral_projectors(const GammaRepresentation& rep) {
  const Mat4 ig5 = cplx(0, 1) * rep.gamma5;
  const Mat4 half = 0.5 * Mat4::identity();
  return {half - 0.5 * ig5, half + 0.5 * ig5};
}

}  // namespace spinent
