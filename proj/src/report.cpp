#include "pcn/report.hpp"

#include <sstream>

namespace pcn::report {

namespace {

Json pairs_json(const std::vector<std::pair<std::uint64_t, Element>>& pairs) {
  Json out = Json::array();
  for (const auto& [d, c] : pairs) out.push_back(Json{{"d", d}, {"c", c.code}});
  return out;
}

}  // namespace

Json field_json(const Field& F) {
  Json modulus = Json::array();
  for (std::uint32_t coefficient : F.modulus()) modulus.push_back(coefficient);
  return Json{{"p", F.characteristic()},
              {"m", F.degree()},
              {"order", F.order()},
              {"modulus", modulus},
              {"modulus_text", F.modulus_string()},
              {"generator", F.generator().code}};
}

Json spectrum_json(const Spectrum& S) {
  return Json{{"omega", S.omega}, {"total", S.total()}, {"weighted", S.weighted()}};
}

Json claim_json(const Claim& C) {
  Json j{{"kind", to_string(C.kind)}};
  if (C.kind == ClaimKind::kSpectrum)
    j["spectrum"] = C.spectrum.omega;
  else if (C.kind != ClaimKind::kNotPcn)
    j["value"] = C.value;
  j["text"] = C.describe();
  return j;
}

Json prediction_json(const Prediction& P) {
  Json j{{"theorem_id", P.theorem_id},
         {"applicable", P.applicable},
         {"reason", P.reason},
         {"claim", P.claim ? claim_json(*P.claim) : Json(nullptr)},
         {"citation", P.citation}};
  if (!P.notes.empty()) j["notes"] = P.notes;
  return j;
}

Json prediction_json(const Prediction& P, const Verdict& V) {
  Json j = prediction_json(P);
  j["verdict"] = Json{{"status", V.confirmed ? "confirmed" : "refuted"}, {"measured", V.measured}};
  return j;
}

Json congruence_json(const CongruenceSolution& S) {
  return Json{{"family", to_string(S.family)},
              {"p", S.p},
              {"m", S.m},
              {"k", S.k},
              {"modulus", S.modulus},
              {"coefficient", S.coefficient},
              {"rhs", S.rhs},
              {"gcd", S.gcd},
              {"solvable", S.solvable},
              {"solutions", S.solutions},
              {"odd_solutions", S.odd_solutions()},
              {"ell_odd", S.ell_odd}};
}

Json scan_json(const Field& F, const ScanReport& R) {
  Json entries = Json::array();
  for (const auto& e : R.entries) {
    Json cs = Json::array();
    for (Element c : e.pcn_constants) cs.push_back(c.code);
    entries.push_back(Json{{"d", e.d}, {"c", cs}});
  }
  return Json{{"version", kVersion},
              {"command", "scan"},
              {"field", field_json(F)},
              {"exponents_scanned", R.exponents_scanned},
              {"pairs_tested", R.pairs_tested},
              {"evaluations", R.evaluations},
              {"pcn_pair_count", R.pairs().size()},
              {"pcn", entries}};
}

Json conjecture_json(const ConjectureVerdict& V) {
  Json predicted = Json::array();
  for (const auto& [d, degrees] : V.predicted.exponents) predicted.push_back(Json{{"d", d}, {"subfield_degrees", degrees}});
  return Json{{"m", V.m},
              {"holds", V.holds()},
              {"exponents", V.exponents()},
              {"predicted", predicted},
              {"scan_not_predicted", pairs_json(V.scan_not_predicted)},
              {"predicted_not_scan", pairs_json(V.predicted_not_scan)}};
}

Json bluher_json(const Field& F, unsigned k, const BluherReport& R) {
  Json rows = Json::array();
  for (const auto& [i, count] : R.counts_bruteforce) {
    const FormulaValue& f = R.counts_formula.at(i);
    rows.push_back(Json{{"roots", i},
                        {"count", count},
                        {"formula", f.to_string()},
                        {"formula_integral", f.integral()},
                        {"agrees", R.agrees.at(i)}});
  }
  return Json{{"version", kVersion},
              {"command", "bluher"},
              {"field", field_json(F)},
              {"k", k},
              {"Q", R.Q},
              {"h", R.h},
              {"formula_case", R.formula_case},
              {"counts", rows},
              {"sum_counts", R.sum_counts()},
              {"sum_weighted", R.sum_weighted()},
              {"all_agree", R.all_agree()},
              {"non_integral", R.non_integral_entries()},
              {"unexpected_root_counts", R.unexpected_root_counts}};
}

Json systems_json(const Field& F, const SystemCountReport& R) {
  Json rows = Json::array();
  for (std::uint32_t b = 0; b < R.counts.size(); ++b) {
    const auto& c = R.counts[b];
    rows.push_back(Json{{"b", b}, {"counts", {c[0], c[1], c[2], c[3]}}});
  }
  Json violations = Json::array();
  for (const auto& v : R.violations) violations.push_back(Json{{"b", v.b.code}, {"what", v.what}});
  return Json{{"version", kVersion}, {"command", "systems"}, {"field", field_json(F)}, {"k", R.k},
              {"hypothesis", R.hypothesis}, {"per_b", rows}, {"violations", violations}};
}

std::string csv_field_header(const Field& F) {
  std::ostringstream os;
  os << "# field,p=" << F.characteristic() << ",m=" << F.degree() << ",modulus=" << F.modulus_string()
     << ",generator=" << F.generator().code << ",version=" << kVersion << "\n";
  return os.str();
}

std::string scan_csv(const Field& F, const ScanReport& R) {
  std::ostringstream os;
  os << csv_field_header(F) << "d,c\n";
  for (const auto& [d, c] : R.pairs()) os << d << "," << c.code << "\n";
  return os.str();
}

std::string bluher_csv(const Field& F, const BluherReport& R) {
  std::ostringstream os;
  os << csv_field_header(F) << "b,roots\n";
  for (std::uint32_t b = 1; b < R.roots_per_b.size(); ++b) os << b << "," << R.roots_per_b[b] << "\n";
  return os.str();
}

std::string systems_csv(const Field& F, const SystemCountReport& R) {
  std::ostringstream os;
  os << csv_field_header(F) << "b,n1,n2,n3,n4\n";
  for (std::uint32_t b = 0; b < R.counts.size(); ++b) {
    const auto& c = R.counts[b];
    os << b << "," << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << "\n";
  }
  return os.str();
}

}  // namespace pcn::report
