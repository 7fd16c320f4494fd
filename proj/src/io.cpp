#include "spinent/io.hpp"

#include <cstdio>

#include "json.hpp"

namespace spinent {

using json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string format_complex(cplx v) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", v.real(), v.imag());
  return buf;
}

namespace {

void expect(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

cplx parse_pair(const json& j, const std::string& where) {
  expect(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
         where + ": expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json pair_of(cplx v) { return json::array({v.real(), v.imag()}); }

json spinor_node(const Spinor& s) {
  json comps = json::array();
  for (std::size_t i = 0; i < 4; ++i) comps.push_back(pair_of(s[i]));
  return json{{"components", comps}};
}

json two_spinor_node(const TwoSpinor& s) {
  return json::array({pair_of(s[0]), pair_of(s[1])});
}

std::string two_spinor_text(const TwoSpinor& s) {
  return "[" + format_complex(s[0]) + ", " + format_complex(s[1]) + "]";
}

std::string spinor_text(const Spinor& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) out += ", ";
    out += format_complex(s[i]);
  }
  return out + "]";
}

json parse_text(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  expect(!j.is_discarded(), what + ": malformed JSON");
  return j;
}

template <std::size_t N>
Matrix<N> parse_matrix(const json& j, const std::string& where) {
  expect(j.is_array() && j.size() == N * N,
         where + ": expected " + std::to_string(N * N) + " row-major [re, im] pairs");
  Matrix<N> m;
  for (std::size_t i = 0; i < N * N; ++i) m.e[i] = parse_pair(j[i], where);
  return m;
}

}  // namespace

Spinor parse_spinor_json(const std::string& text) {
  const json j = parse_text(text, "spinor");
  expect(j.is_object() && j.contains("components"), "spinor: missing \"components\"");
  const json& comps = j["components"];
  expect(comps.is_array() && comps.size() == 4, "spinor: \"components\" must hold 4 pairs");
  Spinor s;
  for (std::size_t i = 0; i < 4; ++i) s[i] = parse_pair(comps[i], "spinor component");
  return s;
}

std::string spinor_to_json(const Spinor& s) { return spinor_node(s).dump(2); }

CustomRep parse_custom_rep_json(const std::string& text) {
  const json j = parse_text(text, "representation");
  expect(j.is_object(), "representation: expected a JSON object");
  for (const char* key : {"gamma", "kappaA", "kappaB"})
    expect(j.contains(key), std::string("representation: missing \"") + key + "\"");
  const json& gamma = j["gamma"];
  expect(gamma.is_array() && gamma.size() == 4, "representation: \"gamma\" must hold 4 matrices");

  CustomRep rep;
  for (std::size_t mu = 0; mu < 4; ++mu)
    rep.gammas[mu] = parse_matrix<4>(gamma[mu], "gamma" + std::to_string(mu + 1));
  rep.kappa_a = parse_matrix<2>(j["kappaA"], "kappaA");
  rep.kappa_b = parse_matrix<2>(j["kappaB"], "kappaB");
  return rep;
}

std::string decomposition_to_json(const SchmidtDecomposition& d, double residual) {
  json j;
  j["P"] = d.P;
  j["psiA"] = two_spinor_node(d.psi_a);
  j["psiAperp"] = two_spinor_node(d.psi_a_perp);
  j["psiB"] = two_spinor_node(d.psi_b);
  j["psiBperp"] = two_spinor_node(d.psi_b_perp);
  j["sA"] = d.s_a;
  j["sAperp"] = d.s_a_perp;
  j["sB"] = d.s_b;
  j["sBperp"] = d.s_b_perp;
  j["norm"] = d.norm;
  j["scale"] = d.scale;
  j["residual"] = residual;
  return j.dump(2);
}

std::string decomposition_to_text(const SchmidtDecomposition& d, double residual) {
  std::string out;
  out += "P        = " + format_double(d.P) + "\n";
  out += "psiA     = " + two_spinor_text(d.psi_a) + "   sA = " + std::to_string(d.s_a) + "\n";
  out += "psiAperp = " + two_spinor_text(d.psi_a_perp) +
         "   sAperp = " + std::to_string(d.s_a_perp) + "\n";
  out += "psiB     = " + two_spinor_text(d.psi_b) + "   sB = " + std::to_string(d.s_b) + "\n";
  out += "psiBperp = " + two_spinor_text(d.psi_b_perp) +
         "   sBperp = " + std::to_string(d.s_b_perp) + "\n";
  out += "norm     = " + format_double(d.norm) + "\n";
  out += "scale    = " + format_double(d.scale) + "\n";
  out += "residual = " + format_double(residual) + "\n";
  return out;
}

std::string capability_to_json(const CapabilityRecord& r, const std::string& rep) {
  json j;
  j["generator"] = r.label.str();
  j["rep"] = rep;
  j["branch"] = branch_name(r.branch);
  j["analytic"] = r.analytic;
  j["density"] = r.density;
  j["fd"] = r.fd;
  j["fd_step"] = r.fd_step;
  j["residual_density"] = r.residual_density;
  j["residual_fd"] = r.residual_fd;
  return j.dump(2);
}

std::string capability_to_text(const CapabilityRecord& r, const std::string& rep,
                               const std::string& method) {
  std::string out =
      "generator " + r.label.str() + ", rep " + rep + ", branch " + branch_name(r.branch) + "\n";
  const bool all = method == "all";
  if (all || method == "analytic") out += "pdot_analytic = " + format_double(r.analytic) + "\n";
  if (all || method == "density") out += "pdot_density  = " + format_double(r.density) + "\n";
  if (all || method == "fd")
    out += "pdot_fd       = " + format_double(r.fd) + "   (step " + format_double(r.fd_step) +
           ")\n";
  if (all) {
    out += "|analytic - density| = " + format_double(r.residual_density) + "\n";
    out += "|analytic - fd|      = " + format_double(r.residual_fd) + "\n";
  }
  return out;
}

namespace {

json classification_node(const ClassificationTable& t) {
  json j;
  j["rep"] = t.rep;
  j["branch"] = branch_name(t.branch);
  j["tolerance"] = t.tolerance;
  j["samples"] = t.samples;
  json entries = json::array();
  for (const auto& e : t.entries) {
    json node;
    node["generator"] = e.label.str();
    node["verdict"] = verdict_name(e.verdict);
    node["max_abs_pdot"] = e.max_abs_pdot;
    node["witness"] = e.witness ? spinor_node(*e.witness) : json(nullptr);
    entries.push_back(node);
  }
  j["entries"] = entries;
  return j;
}

std::string padded(std::string s, std::size_t width) {
  while (s.size() < width) s += ' ';
  return s;
}

}  // namespace

std::string classification_to_json(const ClassificationTable& t) {
  return classification_node(t).dump(2);
}

std::string classification_to_csv(const ClassificationTable& t) {
  std::string out = "generator,verdict,max_abs_pdot\n";
  for (const auto& e : t.entries)
    out += e.label.str() + "," + verdict_name(e.verdict) + "," + format_double(e.max_abs_pdot) +
           "\n";
  return out;
}

std::string classification_to_markdown(const ClassificationTable& t) {
  std::string out = "representation " + t.rep + ", branch " + branch_name(t.branch) +
                    ", samples " + std::to_string(t.samples) + ", tolerance " +
                    format_double(t.tolerance) + "\n\n";
  out += "| generator | verdict | max_abs_pdot |\n";
  out += "| --- | --- | --- |\n";
  for (const auto& e : t.entries)
    out += "| " + e.label.str() + " | " + verdict_name(e.verdict) + " | " +
           format_double(e.max_abs_pdot) + " |\n";
  return out;
}

std::string classification_to_text(const ClassificationTable& t) {
  std::string out = "representation " + t.rep + ", branch " + branch_name(t.branch) +
                    ", samples " + std::to_string(t.samples) + ", tolerance " +
                    format_double(t.tolerance) + "\n";
  out += padded("generator", 10) + padded("verdict", 15) + "max_abs_pdot\n";
  for (const auto& e : t.entries)
    out += padded(e.label.str(), 10) + padded(verdict_name(e.verdict), 15) +
           format_double(e.max_abs_pdot) + "\n";

  out += "vanishing set: {";
  bool first = true;
  for (const std::string& label : t.vanishing_labels()) {
    if (!first) out += ", ";
    out += label;
    first = false;
  }
  out += "}\n";

  for (const auto& e : t.entries)
    if (e.witness)
      out += "witness " + e.label.str() + ": " + spinor_text(*e.witness) + "\n";
  return out;
}

}  // namespace spinent
