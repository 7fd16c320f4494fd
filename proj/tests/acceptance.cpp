// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "spinent/capability.hpp"
#include "spinent/io.hpp"
#include "spinent/linalg.hpp"
#include "support.hpp"

using namespace spinent;
using namespace testsupport;
using njson = nlohmann::json;

namespace {

const cplx I(0.0, 1.0);

int failures = 0;

void report(int n, bool pass, const std::string& what, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", n, what.c_str(),
              detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (RepId id : {RepId::A, RepId::B})
    worst = std::max(worst, verify_clifford(build_rep(id)).max_violation());
  const double dt = seconds_since(t0);
  report(1, worst < 1e-12 && dt < 1.0, "representation validity",
         "max violation " + fmt(worst) + ", " + fmt(dt) + " s");
}

void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_conj = 0.0;
  double worst_closure = 0.0;
  for (RepId id : {RepId::A, RepId::B}) {
    const auto rep = build_rep(id);
    for (Branch br : {Branch::Upper, Branch::Lower}) {
      const auto gens = all_generators(rep, br);
      for (const auto& g : gens)
        worst_conj = std::max(worst_conj, pseudo_hermiticity_violation(rep, g.matrix));
      worst_conj = std::max(worst_conj, conjugation_report(rep, br).max_violation());
      worst_closure = std::max(worst_closure, check_closure(gens).max_residual);
    }
  }
  const double dt = seconds_since(t0);
  report(2, worst_conj <= 1e-12 && worst_closure < 1e-10 && dt < 1.0, "generator algebra",
         "conjugation " + fmt(worst_conj) + ", closure " + fmt(worst_closure) + ", " + fmt(dt) +
             " s");
}

void classification_criterion(int n, const std::string& rep_flag,
                              const std::vector<std::string>& expected) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = run_cli(
      "classify --rep " + rep_flag + " --samples 200 --seed 1 --expect-paper --format json",
      false);
  const double dt = seconds_since(t0);
  const std::string what = "classification via the command line, rep " + rep_flag;

  if (res.code != 0) {
    report(n, false, what, "exit code " + std::to_string(res.code));
    return;
  }
  njson j = njson::parse(res.output, nullptr, false);
  if (j.is_discarded() || !j.contains("entries") || j["entries"].size() != 15) {
    report(n, false, what, "unparseable table");
    return;
  }

  std::vector<std::string> vanishing;
  double worst_vanishing = 0.0;
  double least_witness = 1e300;
  bool witnesses_ok = true;
  for (const auto& e : j["entries"]) {
    const double m = e["max_abs_pdot"].get<double>();
    if (e["verdict"] == "vanishing") {
      vanishing.push_back(e["generator"].get<std::string>());
      worst_vanishing = std::max(worst_vanishing, m);
      if (!e["witness"].is_null()) witnesses_ok = false;
    } else {
      least_witness = std::min(least_witness, m);
      if (!e["witness"].is_object()) witnesses_ok = false;
    }
  }

  const bool pass = vanishing == expected && worst_vanishing < 1e-10 && least_witness > 1e-3 &&
                    witnesses_ok && dt < 5.0;
  report(n, pass, what,
         "vanishing max " + fmt(worst_vanishing) + ", least witness " + fmt(least_witness) + ", " +
             fmt(dt) + " s");
}

void criterion_5() {
  double worst_analytic = 0.0;
  double worst_fd = 0.0;
  for (RepId id : {RepId::A, RepId::B}) {
    const auto rep = build_rep(id);
    const auto gens = all_generators(rep, Branch::Upper);
    for (int k = 0; k < 100; ++k) {
      const Spinor psi = sample_decomposable(rep, 1.0, mix_seed(50, static_cast<uint64_t>(k)));
      const auto d = decompose(psi, rep);
      for (const auto& g : gens) {
        worst_analytic = std::max(worst_analytic, std::abs(pdot_analytic(d, g, rep)));
        worst_fd = std::max(worst_fd, std::abs(pdot_fd(psi, g, rep, 1e-5)));
      }
    }
  }
  report(5, worst_analytic < 1e-12 && worst_fd < 1e-8, "product spinors keep zero rate",
         "analytic " + fmt(worst_analytic) + ", fd " + fmt(worst_fd));
}

void criterion_6() {
  double worst_density = 0.0;
  double worst_fd = 0.0;
  for (RepId id : {RepId::A, RepId::B}) {
    const auto rep = build_rep(id);
    for (int k = 0; k < 500; ++k) {
      const Branch br = (k % 2 == 0) ? Branch::Upper : Branch::Lower;
      const auto gens = all_generators(rep, br);
      const Spinor psi = sample_decomposable(
          rep, std::nullopt, mix_seed(60 + (id == RepId::B), static_cast<uint64_t>(k)));
      const auto d = decompose(psi, rep);
      for (const auto& g : gens)
        worst_density =
            std::max(worst_density, std::abs(pdot_analytic(d, g, rep) - pdot_density(psi, g, rep)));
      const auto& g = gens[static_cast<std::size_t>(k) % gens.size()];
      worst_fd =
          std::max(worst_fd, std::abs(pdot_analytic(d, g, rep) - pdot_fd(psi, g, rep, 1e-4)));
    }
  }

  // second-order convergence: halving the step divides the error by ~4
  const auto rep = build_rep(RepId::A);
  const auto gens = all_generators(rep, Branch::Upper);
  std::vector<double> ratios;
  for (int k = 0; k < 40; ++k) {
    const Spinor psi = sample_decomposable(rep, std::nullopt, mix_seed(61, static_cast<uint64_t>(k)));
    const auto d = decompose(psi, rep);
    const auto& g = gens[static_cast<std::size_t>(k) % gens.size()];
    const double exact = pdot_analytic(d, g, rep);
    const double e_full = std::abs(pdot_fd(psi, g, rep, 1e-3) - exact);
    const double e_half = std::abs(pdot_fd(psi, g, rep, 5e-4) - exact);
    if (e_full > 1e-9) ratios.push_back(e_full / std::max(e_half, 1e-300));
  }
  std::sort(ratios.begin(), ratios.end());
  const double median_ratio = ratios.empty() ? 0.0 : ratios[ratios.size() / 2];

  report(6,
         worst_density < 1e-9 && worst_fd < 1e-5 && !ratios.empty() && median_ratio > 3.0,
         "three-route consistency",
         "density gap " + fmt(worst_density) + ", fd gap " + fmt(worst_fd) +
             ", halving ratio " + fmt(median_ratio));
}

void criterion_7() {
  double worst_residual = 0.0;
  double worst_p = 0.0;
  double p_min = 1.0, p_max = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double p = 0.5 + 0.5 * static_cast<double>(k + 1) / 1000.0;
    const auto rep = build_rep(k % 2 == 0 ? RepId::A : RepId::B);
    const Spinor psi = sample_decomposable(rep, p, mix_seed(70, static_cast<uint64_t>(k)));
    const auto d = decompose(psi, rep);
    worst_residual = std::max(worst_residual, (reconstruct(d) - psi).max_abs());
    worst_p = std::max(worst_p, std::abs(d.P - p));
    p_min = std::min(p_min, d.P);
    p_max = std::max(p_max, d.P);
  }
  report(7, worst_residual < 1e-10 && worst_p < 1e-9 && p_min > 0.5 && p_max == 1.0,
         "decomposition round trip over 1000 samples",
         "residual " + fmt(worst_residual) + ", coefficient error " + fmt(worst_p) +
             ", P in [" + fmt(p_min) + ", " + fmt(p_max) + "]");
}

void criterion_8() {
  double worst = 0.0;
  RandomStream rng(80);
  std::vector<Spinor> spinors;
  for (int k = 0; k < 100; ++k) spinors.push_back(random_spinor(rng));

  for (RepId id : {RepId::A, RepId::B}) {
    const auto rep = build_rep(id);
    const Mat4 g4 = rep.gamma(4);
    for (Branch br : {Branch::Upper, Branch::Lower})
      for (const auto& g : all_generators(rep, br))
        for (double tau : {0.1, 0.5, 1.0}) {
          const Mat4 u = evolution_operator(g.matrix, tau);
          for (const Spinor& psi : spinors) {
            const Spinor evolved = u * psi;
            const double drift =
                std::abs(spinor_inner(g4, evolved, evolved) - spinor_inner(g4, psi, psi));
            worst = std::max(worst, drift);
          }
        }
  }
  report(8, worst < 1e-10, "pseudo-unitary evolution preserves the indefinite norm",
         "max drift " + fmt(worst));
}

void criterion_9() {
  bool sets_match = true;
  double worst_local = 0.0;
  for (RepId id : {RepId::A, RepId::B}) {
    const auto rep = build_rep(id);
    const auto expected = reference_vanishing_set(id);
    for (Branch br : {Branch::Upper, Branch::Lower}) {
      for (const auto& g : all_generators(rep, br)) {
        const bool expect_local =
            std::find(expected.begin(), expected.end(), g.label.str()) != expected.end();
        if (local_form_check(g) != expect_local) sets_match = false;
        if (!expect_local) continue;
        for (int k = 0; k < 50; ++k) {
          const Spinor psi =
              sample_decomposable(rep, std::nullopt, mix_seed(90, static_cast<uint64_t>(k)));
          const auto d = decompose(psi, rep);
          worst_local = std::max(worst_local, std::abs(pdot_analytic(d, g, rep)));
        }
      }
    }
  }
  report(9, sets_match && worst_local < 1e-12, "local form matches the vanishing sets",
         std::string(sets_match ? "sets match" : "sets differ") + ", local max rate " +
             fmt(worst_local));
}

void criterion_10() {
  const auto rep = build_rep(RepId::A);
  const double r = 1.0 / std::sqrt(2.0);
  const Spinor psi = make_spinor(r, 0.0, 0.0, r * I);
  const auto h = make_generator(rep, GeneratorLabel::parse("M13"), Branch::Upper);
  const auto d = decompose(psi, rep);

  const double analytic = pdot_analytic(d, h, rep);
  const double density = pdot_density(psi, h, rep);
  const double fd = pdot_fd(psi, h, rep, 1e-4);
  const bool pass = std::abs(analytic + 0.5) < 1e-9 && std::abs(density + 0.5) < 1e-9 &&
                    std::abs(fd + 0.5) < 1e-5;
  report(10, pass, "hand-derived spot rate -0.5",
         "analytic " + fmt(analytic) + ", density " + fmt(density) + ", fd " + fmt(fd));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  classification_criterion(3, "A", {"M12", "M14", "M24", "D", "P3", "K3"});
  classification_criterion(4, "B", {"M23", "M24", "M34", "D", "P1", "K1"});
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();

  if (failures == 0)
    std::printf("all 10 criteria passed\n");
  else
    std::printf("%d criteria failed\n", failures);
  return failures;
}
