#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "spinent/generators.hpp"
#include "spinent/pauli.hpp"
#include "support.hpp"

using namespace spinent;
using namespace testsupport;

namespace {

const cplx I(0.0, 1.0);

Mat4 gen(const GammaRepresentation& rep, const std::string& label, Branch b) {
  return make_generator(rep, GeneratorLabel::parse(label), b).matrix;
}

}  // namespace

TEST_CASE("label parsing and formatting") {
  for (const auto& label : canonical_labels()) {
    CHECK(GeneratorLabel::parse(label.str()) == label);
  }
  CHECK(GeneratorLabel::parse("D").kind == GenKind::D);
  CHECK(GeneratorLabel::parse("P4").mu == 4);
  CHECK(GeneratorLabel::parse("M13").nu == 3);

  for (const char* bad : {"", "M21", "M11", "P5", "K0", "X1", "M121", "d", "p1", "M1"}) {
    CHECK_THROWS_AS((void)GeneratorLabel::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("canonical ordering") {
  const auto& labels = canonical_labels();
  REQUIRE(labels.size() == 15);
  CHECK(labels[0].str() == "M12");
  CHECK(labels[1].str() == "M13");
  CHECK(labels[2].str() == "M23");
  CHECK(labels[3].str() == "M14");
  CHECK(labels[5].str() == "M34");
  CHECK(labels[6].str() == "D");
  CHECK(labels[7].str() == "P1");
  CHECK(labels[10].str() == "P4");
  CHECK(labels[14].str() == "K4");
}

TEST_CASE("hand-computed generator matrices") {
  const auto a = build_rep(RepId::A);
  const auto b = build_rep(RepId::B);

  SUBCASE("rotations and boosts in the first representation") {
    CHECK(max_abs_diff(gen(a, "M12", Branch::Upper), 0.5 * tensor_product(kId2, kSigma3)) < 1e-15);
    CHECK(max_abs_diff(gen(a, "M13", Branch::Upper), -0.5 * tensor_product(kSigma1, kSigma1)) <
          1e-15);
    CHECK(max_abs_diff(gen(a, "M23", Branch::Upper), -0.5 * tensor_product(kSigma1, kSigma2)) <
          1e-15);
    CHECK(max_abs_diff(gen(a, "M14", Branch::Upper), (0.5 * I) * tensor_product(kId2, kSigma2)) <
          1e-15);
    CHECK(max_abs_diff(gen(a, "M24", Branch::Upper), (-0.5 * I) * tensor_product(kId2, kSigma1)) <
          1e-15);
    CHECK(max_abs_diff(gen(a, "M34", Branch::Upper), (-0.5 * I) * tensor_product(kSigma1, kSigma3)) <
          1e-15);
    // M is branch independent
    CHECK(max_abs_diff(gen(a, "M13", Branch::Upper), gen(a, "M13", Branch::Lower)) == 0.0);
  }

  SUBCASE("dilatation, translations, special conformal in the first representation") {
    CHECK(max_abs_diff(gen(a, "D", Branch::Upper), (-0.5 * I) * tensor_product(kSigma1, kId2)) <
          1e-15);
    CHECK(max_abs_diff(gen(a, "D", Branch::Lower), (0.5 * I) * tensor_product(kSigma1, kId2)) <
          1e-15);
    const Mat2 s2s1 = kSigma2 * kSigma1;
    CHECK(max_abs_diff(gen(a, "P3", Branch::Upper),
                       (0.5 * I) * tensor_product(kSigma2 + s2s1, kId2)) < 1e-15);
    CHECK(max_abs_diff(gen(a, "K3", Branch::Upper),
                       (0.5 * I) * tensor_product(kSigma2 - s2s1, kId2)) < 1e-15);
  }

  SUBCASE("local generators in the second representation") {
    CHECK(max_abs_diff(gen(b, "M23", Branch::Upper), 0.5 * tensor_product(kId2, kSigma3)) < 1e-15);
    CHECK(max_abs_diff(gen(b, "M24", Branch::Upper), (0.5 * I) * tensor_product(kId2, kSigma2)) <
          1e-15);
    CHECK(max_abs_diff(gen(b, "M34", Branch::Upper), (-0.5 * I) * tensor_product(kId2, kSigma1)) <
          1e-15);
    const Mat2 s2s1 = kSigma2 * kSigma1;
    CHECK(max_abs_diff(gen(b, "P1", Branch::Upper),
                       (0.5 * I) * tensor_product(kSigma2 + s2s1, kId2)) < 1e-15);
  }

  SUBCASE("branches are related by swapping and negating P and K") {
    for (const auto& rep : {a, b}) {
      for (int mu = 1; mu <= 4; ++mu) {
        const auto pu = gen(rep, "P" + std::to_string(mu), Branch::Upper);
        const auto pl = gen(rep, "P" + std::to_string(mu), Branch::Lower);
        const auto ku = gen(rep, "K" + std::to_string(mu), Branch::Upper);
        const auto kl = gen(rep, "K" + std::to_string(mu), Branch::Lower);
        CHECK(max_abs_diff(pl, -1.0 * ku) < 1e-15);
        CHECK(max_abs_diff(kl, -1.0 * pu) < 1e-15);
      }
      CHECK(max_abs_diff(gen(rep, "D", Branch::Lower), -1.0 * gen(rep, "D", Branch::Upper)) <
            1e-15);
    }
  }
}

TEST_CASE("pseudo-hermiticity of every generator") {
  for (RepId id : {RepId::A, RepId::B}) {
    const auto rep = build_rep(id);
    for (Branch br : {Branch::Upper, Branch::Lower}) {
      for (const auto& g : all_generators(rep, br)) {
        INFO(rep_name(id), " ", branch_name(br), " ", g.label.str());
        CHECK(pseudo_hermiticity_violation(rep, g.matrix) < 1e-12);
      }
    }
  }
}

TEST_CASE("conjugation table") {
  for (RepId id : {RepId::A, RepId::B}) {
    const auto rep = build_rep(id);
    for (Branch br : {Branch::Upper, Branch::Lower}) {
      const auto report = conjugation_report(rep, br);
      INFO(rep_name(id), " ", branch_name(br));
      CHECK(report.checks.size() == 15);
      CHECK(report.max_violation() < 1e-12);
      CHECK(report.pass(1e-12));
    }
  }

  // spot entries, directly against the adjoint
  const auto rep = build_rep(RepId::A);
  const auto m12 = gen(rep, "M12", Branch::Upper);
  const auto m14 = gen(rep, "M14", Branch::Upper);
  const auto p1 = gen(rep, "P1", Branch::Upper);
  const auto k1 = gen(rep, "K1", Branch::Upper);
  const auto p4 = gen(rep, "P4", Branch::Upper);
  const auto k4 = gen(rep, "K4", Branch::Upper);
  CHECK(max_abs_diff(m12.adjoint(), m12) < 1e-15);
  CHECK(max_abs_diff(m14.adjoint(), -1.0 * m14) < 1e-15);
  CHECK(max_abs_diff(p1.adjoint(), -1.0 * k1) < 1e-15);
  CHECK(max_abs_diff(k1.adjoint(), -1.0 * p1) < 1e-15);
  CHECK(max_abs_diff(p4.adjoint(), k4) < 1e-15);
  CHECK(max_abs_diff(k4.adjoint(), p4) < 1e-15);
}

TEST_CASE("commutator closure") {
  for (RepId id : {RepId::A, RepId::B}) {
    const auto rep = build_rep(id);
    for (Branch br : {Branch::Upper, Branch::Lower}) {
      const auto gens = all_generators(rep, br);
      REQUIRE(gens.size() == 15);
      const auto closure = check_closure(gens);
      INFO(rep_name(id), " ", branch_name(br), " worst ", closure.worst_pair);
      CHECK(closure.max_residual < 1e-10);
    }
  }

  SUBCASE("spot identity [D, P3] = i P3") {
    const auto rep = build_rep(RepId::A);
    const auto d = gen(rep, "D", Branch::Upper);
    const auto p3 = gen(rep, "P3", Branch::Upper);
    CHECK(max_abs_diff(commutator(d, p3), I * p3) < 1e-14);
    // the lower branch flips both signs, leaving the bracket intact
    const auto dl = gen(rep, "D", Branch::Lower);
    const auto p3l = gen(rep, "P3", Branch::Lower);
    CHECK(max_abs_diff(commutator(dl, p3l), I * p3l) < 1e-14);
  }

  SUBCASE("spot identity [M12, M13] = i M23") {
    const auto rep = build_rep(RepId::A);
    CHECK(max_abs_diff(commutator(gen(rep, "M12", Branch::Upper), gen(rep, "M13", Branch::Upper)),
                       I * gen(rep, "M23", Branch::Upper)) < 1e-14);
  }

  SUBCASE("corrupting one generator breaks closure") {
    auto gens = all_generators(build_rep(RepId::A), Branch::Upper);
    gens[6].matrix = Mat4::identity();  // replaces D
    const auto closure = check_closure(gens);
    CHECK(closure.max_residual > 0.1);
  }
}
