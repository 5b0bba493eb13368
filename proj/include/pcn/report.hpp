#pragma once

#include <string>

#include "json.hpp"
#include "pcn/cdiff.hpp"
#include "pcn/gf.hpp"
#include "pcn/oracle.hpp"
#include "pcn/theorems.hpp"

namespace pcn::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

// JSON fragments. Element values are written as their integer codes.
Json field_json(const Field& F);
Json spectrum_json(const Spectrum& S);
Json claim_json(const Claim& C);
Json prediction_json(const Prediction& P);
Json prediction_json(const Prediction& P, const Verdict& V);
Json congruence_json(const CongruenceSolution& S);

Json scan_json(const Field& F, const ScanReport& R);
Json conjecture_json(const ConjectureVerdict& V);
Json bluher_json(const Field& F, unsigned k, const BluherReport& R);
Json systems_json(const Field& F, const SystemCountReport& R);

/// First line of every CSV document:
/// `# field,p=<p>,m=<m>,modulus=<text>,generator=<code>,version=<v>`
std::string csv_field_header(const Field& F);

/// Columns `d,c`; one row per PcN pair, ascending d then c.
std::string scan_csv(const Field& F, const ScanReport& R);
/// Columns `b,roots`; one row per nonzero b.
std::string bluher_csv(const Field& F, const BluherReport& R);
/// Columns `b,n1,n2,n3,n4`; one row per b.
std::string systems_csv(const Field& F, const SystemCountReport& R);

}  // namespace pcn::report
