#pragma once

#include <string>
#include <vector>

#include "spinent/clifford.hpp"
#include "spinent/matrix.hpp"

namespace spinent {

// The generator family splits into rotations/boosts M, the dilatation D,
// translations P and special conformal transformations K.
enum class GenKind { M, D, P, K };

// Two consistent sign conventions exist for (D, P, K); both satisfy the
// same conjugation table and the same algebra, so every entry point takes
// the branch explicitly.
enum class Branch { Upper, Lower };

std::string branch_name(Branch b);
Branch branch_from_string(const std::string& s);  // throws std::invalid_argument

struct GeneratorLabel {
  GenKind kind = GenKind::D;
  int mu = 0;  // first index for M, the only index for P/K, unused for D
  int nu = 0;  // second index for M (mu < nu), unused otherwise

  bool operator==(const GeneratorLabel&) const = default;

  std::string str() const;

  // Accepts exactly the canonical spellings: "D", "P1".."P4", "K1".."K4",
  // "M12","M13","M23","M14","M24","M34". Throws std::invalid_argument.
  static GeneratorLabel parse(const std::string& s);
};

struct Generator {
  GeneratorLabel label;
  Mat4 matrix;
};

// All fifteen labels in canonical order: the six M, then D, P1..P4, K1..K4.
const std::vector<GeneratorLabel>& canonical_labels();

Generator make_generator(const GammaRepresentation& rep, const GeneratorLabel& label,
                         Branch branch);

std::vector<Generator> all_generators(const GammaRepresentation& rep, Branch branch);

// max-abs of gamma4 m^dag gamma4 - m; zero for every admissible generator.
double pseudo_hermiticity_violation(const GammaRepresentation& rep, const Mat4& m);

struct ConjugationCheck {
  std::string name;
  double violation = 0.0;
};

// Adjoints resolved within the family: M with two spatial indices is
// Hermitian, M with a 4 index and D are anti-Hermitian, and dagger swaps
// P and K (up to sign for spatial indices).
struct ConjugationReport {
  std::vector<ConjugationCheck> checks;

  double max_violation() const;
  bool pass(double tol = kDefaultTol) const;
};

ConjugationReport conjugation_report(const GammaRepresentation& rep, Branch branch);

// Commutator closure over the real span of {i * generator}: each
// [H_i, H_j] is projected onto that span by least squares and the
// largest projection residual is reported.
struct ClosureReport {
  double max_residual = 0.0;
  std::string worst_pair;

  bool pass(double tol = kDefaultTol) const { return max_residual <= tol; }
};

ClosureReport check_closure(const std::vector<Generator>& generators);

}  // namespace spinent
