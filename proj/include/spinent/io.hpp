#pragma once

#include <string>

#include "spinent/capability.hpp"
#include "spinent/clifford.hpp"
#include "spinent/schmidt.hpp"

namespace spinent {

// Parsers throw std::invalid_argument with a readable message on any
// structural or syntactic problem.

// {"components": [[re,im],[re,im],[re,im],[re,im]]}
Spinor parse_spinor_json(const std::string& text);
std::string spinor_to_json(const Spinor& s);

// {"gamma": [m1,m2,m3,m4], "kappaA": m, "kappaB": m} where a 4x4 matrix
// is 16 [re,im] pairs and a 2x2 matrix is 4 pairs, both row-major.
CustomRep parse_custom_rep_json(const std::string& text);

std::string decomposition_to_json(const SchmidtDecomposition& d, double residual);
std::string decomposition_to_text(const SchmidtDecomposition& d, double residual);

std::string capability_to_json(const CapabilityRecord& r, const std::string& rep);
std::string capability_to_text(const CapabilityRecord& r, const std::string& rep,
                               const std::string& method);

std::string classification_to_json(const ClassificationTable& t);
std::string classification_to_csv(const ClassificationTable& t);
std::string classification_to_markdown(const ClassificationTable& t);
std::string classification_to_text(const ClassificationTable& t);

// 12 significant digits; the project-wide numeric text format.
std::string format_double(double v);
std::string format_complex(cplx v);

}  // namespace spinent
