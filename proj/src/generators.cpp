#include "spinent/generators.hpp"

#include <stdexcept>

#include "spinent/linalg.hpp"

namespace spinent {

std::string branch_name(Branch b) { return b == Branch::Upper ? "upper" : "lower"; }

Branch branch_from_string(const std::string& s) {
  if (s == "upper") return Branch::Upper;
  if (s == "lower") return Branch::Lower;
  throw std::invalid_argument("unknown branch \"" + s + "\" (expected upper or lower)");
}

std::string GeneratorLabel::str() const {
  switch (kind) {
    case GenKind::D: return "D";
    case GenKind::P: return "P" + std::to_string(mu);
    case GenKind::K: return "K" + std::to_string(mu);
    case GenKind::M: return "M" + std::to_string(mu) + std::to_string(nu);
  }
  return "?";
}

GeneratorLabel GeneratorLabel::parse(const std::string& s) {
  auto fail = [&s]() -> GeneratorLabel {
    throw std::invalid_argument("unknown generator label \"" + s + "\"");
  };
  if (s == "D") return {GenKind::D, 0, 0};
  if (s.size() == 2 && (s[0] == 'P' || s[0] == 'K')) {
    const int mu = s[1] - '0';
    if (mu < 1 || mu > 4) return fail();
    return {s[0] == 'P' ? GenKind::P : GenKind::K, mu, 0};
  }
  if (s.size() == 3 && s[0] == 'M') {
    const int mu = s[1] - '0';
    const int nu = s[2] - '0';
    if (mu < 1 || nu < 1 || mu >= nu || nu > 4) return fail();
    return {GenKind::M, mu, nu};
  }
  return fail();
}

const std::vector<GeneratorLabel>& canonical_labels() {
  static const std::vector<GeneratorLabel> labels = [] {
    std::vector<GeneratorLabel> v;
    v.push_back({GenKind::M, 1, 2});
    v.push_back({GenKind::M, 1, 3});
    v.push_back({GenKind::M, 2, 3});
    v.push_back({GenKind::M, 1, 4});
    v.push_back({GenKind::M, 2, 4});
    v.push_back({GenKind::M, 3, 4});
    v.push_back({GenKind::D, 0, 0});
    for (int mu = 1; mu <= 4; ++mu) v.push_back({GenKind::P, mu, 0});
    for (int mu = 1; mu <= 4; ++mu) v.push_back({GenKind::K, mu, 0});
    return v;
  }();
  return labels;
}

Generator make_generator(const GammaRepresentation& rep, const GeneratorLabel& label,
                         Branch branch) {
  const cplx i(0.0, 1.0);
  const Mat4 id4 = Mat4::identity();
  const Mat4 ig5 = i * rep.gamma5;
  // Branch sign: upper takes D = -gamma5/2, P with (1 - i gamma5), K with
  // (1 + i gamma5); lower flips all three signs and swaps the projector
  // assignment between P and K.
  const double s = branch == Branch::Upper ? 1.0 : -1.0;

  Mat4 m;
  switch (label.kind) {
    case GenKind::M:
      m = (i * 0.25) * commutator(rep.gamma(label.mu), rep.gamma(label.nu));
      break;
    case GenKind::D:
      m = (-0.5 * s) * rep.gamma5;
      break;
    case GenKind::P:
      m = (0.5 * s) * (rep.gamma(label.mu) * (id4 - s * ig5));
      break;
    case GenKind::K:
      m = (0.5 * s) * (rep.gamma(label.mu) * (id4 + s * ig5));
      break;
  }
  return {label, m};
}

std::vector<Generator> all_generators(const GammaRepresentation& rep, Branch branch) {
  std::vector<Generator> gens;
  gens.reserve(canonical_labels().size());
  for (const GeneratorLabel& label : canonical_labels())
    gens.push_back(make_generator(rep, label, branch));
  return gens;
}

double pseudo_hermiticity_violation(const GammaRepresentation& rep, const Mat4& m) {
  const Mat4& g4 = rep.gamma(4);
  return max_abs_diff(g4 * m.adjoint() * g4, m);
}

double ConjugationReport::max_violation() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.violation);
  return m;
}

bool ConjugationReport::pass(double tol) const {
  for (const auto& c : checks)
    if (!(c.violation <= tol)) return false;
  return true;
}

ConjugationReport conjugation_report(const GammaRepresentation& rep, Branch branch) {
  ConjugationReport report;
  auto gen = [&](const char* label) {
    return make_generator(rep, GeneratorLabel::parse(label), branch).matrix;
  };
  auto add = [&report](std::string name, const Mat4& lhs, const Mat4& rhs) {
    report.checks.push_back({std::move(name), max_abs_diff(lhs.adjoint(), rhs)});
  };

  for (const char* l : {"M12", "M13", "M23"}) add(std::string(l) + "^+ = " + l, gen(l), gen(l));
  for (const char* l : {"M14", "M24", "M34"})
    add(std::string(l) + "^+ = -" + l, gen(l), -gen(l));
  add("D^+ = -D", gen("D"), -gen("D"));
  for (int k = 1; k <= 3; ++k) {
    const std::string pk = "P" + std::to_string(k);
    const std::string kk = "K" + std::to_string(k);
    add(pk + "^+ = -" + kk, gen(pk.c_str()), -gen(kk.c_str()));
    add(kk + "^+ = -" + pk, gen(kk.c_str()), -gen(pk.c_str()));
  }
  add("P4^+ = K4", gen("P4"), gen("K4"));
  add("K4^+ = P4", gen("K4"), gen("P4"));
  return report;
}

namespace {

std::array<double, 32> real_components(const Mat4& m) {
  std::array<double, 32> v{};
  for (std::size_t i = 0; i < 16; ++i) {
    v[2 * i] = m.e[i].real();
    v[2 * i + 1] = m.e[i].imag();
  }
  return v;
}

}  // namespace

ClosureReport check_closure(const std::vector<Generator>& generators) {
  const std::size_t n = generators.size();
  // Span basis {i H_k} with real coefficients; commutators of the family
  // land there, while the real span of {H_k} alone would not close.
  std::vector<Mat4> basis;
  std::vector<std::array<double, 32>> basis_vec;
  basis.reserve(n);
  for (const Generator& g : generators) {
    basis.push_back(cplx(0, 1) * g.matrix);
    basis_vec.push_back(real_components(basis.back()));
  }

  std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0.0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      double s = 0.0;
      for (std::size_t t = 0; t < 32; ++t) s += basis_vec[a][t] * basis_vec[b][t];
      gram[a][b] = s;
    }

  ClosureReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Mat4 target = commutator(generators[i].matrix, generators[j].matrix);
      const auto tv = real_components(target);

      std::vector<double> rhs(n, 0.0);
      for (std::size_t a = 0; a < n; ++a) {
        double s = 0.0;
        for (std::size_t t = 0; t < 32; ++t) s += basis_vec[a][t] * tv[t];
        rhs[a] = s;
      }
      const std::vector<double> coeff = solve_linear_system(gram, rhs);

      Mat4 residual = target;
      for (std::size_t a = 0; a < n; ++a) residual -= coeff[a] * basis[a];
      const double r = residual.max_abs();
      if (r > report.max_residual) {
        report.max_residual = r;
        report.worst_pair =
            "[" + generators[i].label.str() + "," + generators[j].label.str() + "]";
      }
    }
  return report;
}

}  // namespace spinent
