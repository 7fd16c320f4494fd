#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinent/capability.hpp"
#include "spinent/io.hpp"
#include "spinent/linalg.hpp"

namespace {

using namespace spinent;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitNotDecomposable = 2;
constexpr int kExitNullSpinor = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitUsage = 64;

struct Options {
  std::string rep = "A";
  std::string branch = "upper";
  std::uint64_t seed = 1;
  int samples = 200;
  double tol = 1e-10;
  std::string format = "text";
  std::string out;
  std::string file;
  std::string rep_file;
  std::string generator;
  std::string method = "all";
  double step = 1e-4;
  double tau_max = 1.0;
  int steps = 100;
  bool expect_paper = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file \"" + opt.out + "\"");
  out << payload;
}

// verify reads the representation payload from --file; the other
// commands use --file for the spinor and --rep-file for the payload.
GammaRepresentation load_rep(const Options& opt, bool file_is_rep) {
  if (opt.rep == "A") return build_rep(RepId::A);
  if (opt.rep == "B") return build_rep(RepId::B);
  const std::string& path = file_is_rep ? opt.file : opt.rep_file;
  if (path.empty())
    throw std::invalid_argument(file_is_rep
                                    ? "--rep custom requires --file with a payload"
                                    : "--rep custom requires --rep-file with a payload");
  return build_rep(parse_custom_rep_json(read_file(path)), opt.tol);
}

Spinor load_spinor(const Options& opt) { return parse_spinor_json(read_file(opt.file)); }

int cmd_verify(const Options& opt) {
  std::vector<CliffordCheck> checks;
  GammaRepresentation rep;
  if (opt.rep == "custom") {
    if (opt.file.empty())
      throw std::invalid_argument("--rep custom requires --file with a payload");
    const CustomRep payload = parse_custom_rep_json(read_file(opt.file));
    checks = verify_custom(payload).checks;
    rep = assemble_rep(payload);
  } else {
    rep = build_rep(opt.rep == "A" ? RepId::A : RepId::B);
    checks = verify_clifford(rep).checks;
  }

  const auto terms = operator_schmidt_terms(rep.gamma(4));
  checks.push_back({"gamma4 operator Schmidt rank 1", terms.size() > 1 ? terms[1].coeff : 0.0});

  const Branch branch = branch_from_string(opt.branch);
  const std::vector<Generator> gens = all_generators(rep, branch);
  for (const Generator& g : gens)
    checks.push_back(
        {"pseudo-hermitian " + g.label.str(), pseudo_hermiticity_violation(rep, g.matrix)});
  for (const auto& c : conjugation_report(rep, branch).checks)
    checks.push_back({c.name, c.violation});

  double closure_residual;
  try {
    closure_residual = check_closure(gens).max_residual;
  } catch (const std::exception&) {
    closure_residual = std::numeric_limits<double>::infinity();
  }
  checks.push_back({"commutator closure", closure_residual});

  double worst = 0.0;
  const CliffordCheck* first_fail = nullptr;
  for (const auto& c : checks) {
    worst = std::max(worst, c.violation);
    if (!first_fail && !(c.violation <= opt.tol)) first_fail = &c;
  }
  const bool pass = first_fail == nullptr;

  std::string payload;
  if (opt.format == "json") {
    ojson j;
    j["rep"] = opt.rep;
    j["branch"] = opt.branch;
    j["tolerance"] = opt.tol;
    j["pass"] = pass;
    j["max_violation"] = worst;
    ojson rows = ojson::array();
    for (const auto& c : checks)
      rows.push_back(
          {{"name", c.name}, {"violation", c.violation}, {"pass", c.violation <= opt.tol}});
    j["checks"] = rows;
    payload = j.dump(2);
  } else if (opt.format == "csv") {
    payload = "check,violation\n";
    for (const auto& c : checks) payload += c.name + "," + format_double(c.violation) + "\n";
  } else if (opt.format == "md") {
    payload = "| check | violation |\n| --- | --- |\n";
    for (const auto& c : checks)
      payload += "| " + c.name + " | " + format_double(c.violation) + " |\n";
  } else {
    payload = "rep " + opt.rep + ", branch " + opt.branch + ", tolerance " +
              format_double(opt.tol) + "\n";
    for (const auto& c : checks) {
      std::string name = c.name;
      while (name.size() < 36) name += ' ';
      payload += (c.violation <= opt.tol ? "ok    " : "FAIL  ") + name + " (" +
                 format_double(c.violation) + ")\n";
    }
    payload += pass ? std::to_string(checks.size()) + " checks passed, max violation " +
                          format_double(worst) + "\n"
                    : "FAILED: " + first_fail->name + " (violation " +
                          format_double(first_fail->violation) + ")\n";
  }
  emit(opt, payload);

  if (!pass) {
    std::cerr << "verification failed: " << first_fail->name << " (violation "
              << format_double(first_fail->violation) << ")\n";
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_decompose(const Options& opt) {
  const GammaRepresentation rep = load_rep(opt, false);
  const Spinor psi = load_spinor(opt);
  const SchmidtDecomposition d = decompose(psi, rep);
  const double residual = max_abs_diff(reconstruct(d), psi);

  if (opt.format == "json")
    emit(opt, decomposition_to_json(d, residual));
  else if (opt.format == "text")
    emit(opt, decomposition_to_text(d, residual));
  else
    throw std::invalid_argument("decompose supports --format text or json");
  return kExitOk;
}

int cmd_capability(const Options& opt) {
  const GammaRepresentation rep = load_rep(opt, false);
  const Branch branch = branch_from_string(opt.branch);
  const GeneratorLabel label = GeneratorLabel::parse(opt.generator);
  const Spinor psi = load_spinor(opt);

  const Generator g = make_generator(rep, label, branch);
  const SchmidtDecomposition d = decompose(psi, rep);

  const bool all = opt.method == "all";
  CapabilityRecord r;
  r.label = label;
  r.branch = branch;
  r.fd_step = opt.step;
  r.spinor = psi;
  if (all || opt.method == "analytic") r.analytic = pdot_analytic(d, g, rep);
  if (all || opt.method == "density") r.density = pdot_density(psi, g, rep);
  if (all || opt.method == "fd") r.fd = pdot_fd(psi, g, rep, opt.step);
  if (all) {
    r.residual_density = std::abs(r.analytic - r.density);
    r.residual_fd = std::abs(r.analytic - r.fd);
  }

  if (opt.format == "json") {
    if (all) {
      emit(opt, capability_to_json(r, opt.rep));
    } else {
      ojson j;
      j["generator"] = label.str();
      j["rep"] = opt.rep;
      j["branch"] = opt.branch;
      j["method"] = opt.method;
      j["pdot"] = opt.method == "analytic" ? r.analytic
                  : opt.method == "density" ? r.density
                                            : r.fd;
      if (opt.method == "fd") j["fd_step"] = opt.step;
      emit(opt, j.dump(2));
    }
  } else if (opt.format == "text") {
    emit(opt, capability_to_text(r, opt.rep, opt.method));
  } else {
    throw std::invalid_argument("capability supports --format text or json");
  }
  return kExitOk;
}

int cmd_classify(const Options& opt) {
  const GammaRepresentation rep = load_rep(opt, false);
  const Branch branch = branch_from_string(opt.branch);
  const ClassificationTable table = classify(rep, branch, opt.samples, opt.tol, opt.seed);

  std::string payload;
  if (opt.format == "json")
    payload = classification_to_json(table);
  else if (opt.format == "csv")
    payload = classification_to_csv(table);
  else if (opt.format == "md")
    payload = classification_to_markdown(table);
  else
    payload = classification_to_text(table);
  emit(opt, payload);

  if (opt.expect_paper) {
    const std::vector<std::string> expected = reference_vanishing_set(rep.id);
    if (expected.empty())
      throw std::invalid_argument("--expect-paper needs a built-in representation (A or B)");
    const std::vector<std::string> got = table.vanishing_labels();
    if (got != expected) {
      auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
        return s;
      };
      std::cerr << "vanishing set mismatch: got {" << join(got) << "}, expected {"
                << join(expected) << "}\n";
      return kExitMismatch;
    }
  }
  return kExitOk;
}

int cmd_evolve(const Options& opt) {
  const GammaRepresentation rep = load_rep(opt, false);
  const Branch branch = branch_from_string(opt.branch);
  const Generator g = make_generator(rep, GeneratorLabel::parse(opt.generator), branch);
  const Spinor psi = load_spinor(opt);
  if (!(opt.tau_max > 0.0)) throw std::invalid_argument("--tau-max must be positive");

  // A null spinor stays null under pseudo-unitary evolution, so reject
  // it once up front; other decomposition failures are per-row data.
  try {
    decompose(psi, rep);
  } catch (const NotDecomposableError&) {
  }

  std::string csv = "tau,P,norm,decomposable\n";
  for (int i = 0; i <= opt.steps; ++i) {
    const double tau = opt.tau_max * static_cast<double>(i) / static_cast<double>(opt.steps);
    const Spinor evolved = evolution_operator(g.matrix, tau) * psi;
    const double norm = spinor_inner(rep.gamma(4), evolved, evolved).real();
    std::string p_field = "";
    std::string flag = "1";
    try {
      p_field = format_double(decompose(evolved, rep).P);
    } catch (const NotDecomposableError&) {
      flag = "0";
    }
    csv += format_double(tau) + "," + p_field + "," + format_double(norm) + "," + flag + "\n";
  }
  emit(opt, csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinor entanglement toolkit for the indefinite-metric two-qubit structure"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--rep", opt.rep, "representation: A, B, or custom")
        ->check(CLI::IsMember({"A", "B", "custom"}));
    cmd->add_option("--branch", opt.branch, "generator sign branch")
        ->check(CLI::IsMember({"upper", "lower"}));
    cmd->add_option("--seed", opt.seed, "random stream seed");
    cmd->add_option("--samples", opt.samples, "sample count for randomized sweeps");
    cmd->add_option("--tol", opt.tol, "comparison tolerance");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv", "md"}));
    cmd->add_option("--out", opt.out, "write output to this file instead of stdout");
  };

  CLI::App* verify =
      app.add_subcommand("verify", "check the identities defining a representation "
                                   "and its generator family");
  add_common(verify);
  verify->add_option("--file", opt.file, "custom representation payload (JSON)");

  CLI::App* dec = app.add_subcommand("decompose", "Schmidt-decompose a spinor");
  add_common(dec);
  dec->add_option("--file", opt.file, "spinor JSON file")->required();
  dec->add_option("--rep-file", opt.rep_file, "custom representation payload (JSON)");

  CLI::App* cap = app.add_subcommand(
      "capability", "rate of change of the Schmidt coefficient under one generator");
  add_common(cap);
  cap->add_option("--file", opt.file, "spinor JSON file")->required();
  cap->add_option("--generator", opt.generator, "generator label, e.g. M13 or D")->required();
  cap->add_option("--method", opt.method, "route: analytic, density, fd, or all")
      ->check(CLI::IsMember({"analytic", "density", "fd", "all"}));
  cap->add_option("--step", opt.step, "finite-difference step");
  cap->add_option("--rep-file", opt.rep_file, "custom representation payload (JSON)");

  CLI::App* cls =
      app.add_subcommand("classify", "verdict table over all fifteen generators");
  add_common(cls);
  cls->add_flag("--expect-paper", opt.expect_paper,
                "compare against the built-in reference sets; exit 4 on mismatch");
  cls->add_option("--rep-file", opt.rep_file, "custom representation payload (JSON)");

  CLI::App* evo = app.add_subcommand("evolve", "P(tau) trajectory as CSV");
  add_common(evo);
  evo->add_option("--file", opt.file, "spinor JSON file")->required();
  evo->add_option("--generator", opt.generator, "generator label")->required();
  evo->add_option("--tau-max", opt.tau_max, "end of the tau grid");
  evo->add_option("--steps", opt.steps, "grid intervals between 0 and tau-max")
      ->check(CLI::Range(2, 10000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt);
    if (dec->parsed()) return cmd_decompose(opt);
    if (cap->parsed()) return cmd_capability(opt);
    if (cls->parsed()) return cmd_classify(opt);
    if (evo->parsed()) return cmd_evolve(opt);
  } catch (const NotDecomposableError& e) {
    std::cerr << "not decomposable: " << e.what() << "\n";
    return kExitNotDecomposable;
  } catch (const NullSpinorError& e) {
    std::cerr << "null spinor: " << e.what() << "\n";
    return kExitNullSpinor;
  } catch (const TpsError& e) {
    std::cerr << "unsupported tensor product structure: " << e.what() << "\n";
    return kExitNotDecomposable;
  } catch (const RepresentationError& e) {
    std::cerr << "invalid representation: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
