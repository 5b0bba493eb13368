#include "pcn/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "pcn/cdiff.hpp"
#include "pcn/oracle.hpp"
#include "pcn/report.hpp"
#include "pcn/suites.hpp"
#include "pcn/theorems.hpp"

namespace pcn::cli {

namespace {

using report::Json;

struct Config {
  std::optional<std::uint32_t> p;
  std::optional<unsigned> m;
  std::optional<unsigned> k;
  std::optional<std::uint64_t> d;
  std::optional<std::string> c;
  std::string format = "json";
  std::uint32_t cap = kDefaultSizeCap;
  unsigned workers = 0;
  bool conjecture = false;
  std::string suite;
  std::string output;
  std::string family = "both";
};

std::uint64_t parse_unsigned(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

unsigned effective_workers(const Config& cfg) {
  if (cfg.workers != 0) return cfg.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

Field build_field(const Config& cfg) { return Field::build(*cfg.p, *cfg.m, cfg.cap); }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string omega_text(const Spectrum& S) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < S.omega.size(); ++i) os << (i ? ", " : "") << S.omega[i];
  os << ")";
  return os.str();
}

void field_table(std::ostream& out, const Field& F) {
  out << "field      GF(" << F.characteristic() << "^" << F.degree() << "), " << F.order() << " elements\n"
      << "modulus    " << F.modulus_string() << "\n"
      << "generator  " << F.generator().code << "\n"
      << "version    " << report::kVersion << "\n";
}

// Exponents printed as PcN examples at c = -1 with k = 1 in the literature.
struct ListedExample {
  std::uint32_t p;
  unsigned m;
  std::uint64_t d;
};
constexpr ListedExample kListedExamples[] = {{3, 5, 61}, {7, 3, 43},  {11, 3, 111},
                                             {5, 5, 3645}, {13, 3, 157}, {17, 3, 111}};

std::vector<std::string> annotations(const Field& F, const PowerMap& P, Element c, const UniformityReport& U) {
  std::vector<std::string> out;
  if (c != F.minus_one() || F.characteristic() == 2) return out;
  for (const ListedExample& ex : kListedExamples) {
    if (ex.p != F.characteristic() || ex.m != F.degree() || ex.d != P.d_reduced) continue;
    const bool three_mod_four = powmod(ex.p, ex.m, 4) == 3;
    const CongruenceSolution S =
        solve_congruence(ex.p, ex.m, 1, three_mod_four ? CongruenceFamily::kT1 : CongruenceFamily::kT2);
    const bool solves = std::find(S.solutions.begin(), S.solutions.end(), ex.d) != S.solutions.end();
    std::ostringstream os;
    os << "d = " << ex.d << " is listed in the literature as PcN at c = -1 with k = 1; measured uniformity "
       << U.uniformity << "; ";
    if (solves) {
      os << "d solves the " << to_string(S.family) << " congruence";
    } else {
      os << "d does not solve the " << to_string(S.family) << " congruence, whose solutions are";
      for (std::uint64_t s : S.solutions) os << " " << s;
    }
    out.push_back(os.str());
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_field(const Config& cfg, std::ostream& out) {
  const Field F = build_field(cfg);
  std::vector<unsigned> subfields;
  for (unsigned g = 1; g <= F.degree(); ++g)
    if (F.degree() % g == 0) subfields.push_back(g);
  if (cfg.format == "json") {
    Json j{{"version", report::kVersion}, {"command", "field"}, {"field", report::field_json(F)},
           {"minus_one", F.minus_one().code}, {"subfield_degrees", subfields}};
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << report::csv_field_header(F) << "code,log\n";
    for (std::uint32_t x = 1; x < F.order(); ++x) out << x << "," << F.log(Element{x}) << "\n";
  } else {
    field_table(out, F);
  }
  return kOk;
}

int cmd_uniformity(const Config& cfg, std::ostream& out) {
  const Field F = build_field(cfg);
  const PowerMap P = PowerMap::make(F, *cfg.d);
  const Element c = parse_constant(F, *cfg.c);
  const unsigned workers = effective_workers(cfg);
  const UniformityReport U = c_uniformity(F, P, c, workers);
  const Spectrum S = c_spectrum(F, P, c, workers);

  std::vector<std::pair<Prediction, Verdict>> checked;
  for (const Prediction& pred : all_predictions(F, P.d, c))
    checked.emplace_back(pred, verify_prediction(pred, F, P.d, c));
  const auto notes = annotations(F, P, c, U);

  if (cfg.format == "json") {
    Json preds = Json::array();
    for (const auto& [pred, v] : checked) preds.push_back(report::prediction_json(pred, v));
    Json j{{"version", report::kVersion},
           {"command", "uniformity"},
           {"field", report::field_json(F)},
           {"d", P.d},
           {"d_reduced", P.d_reduced},
           {"gcd", P.gcd_d},
           {"c", c.code},
           {"c_token", *cfg.c},
           {"uniformity", U.uniformity},
           {"classification", to_string(U.classification)},
           {"branch", U.branch == UniformityBranch::kWithZeroShift ? "shifts 0 and 1" : "shift 1 only"},
           {"shift_one_max", U.shift_one_max},
           {"gcd_term", U.gcd_term},
           {"witness_b", U.witness_b ? Json(U.witness_b->code) : Json(nullptr)},
           {"spectrum", report::spectrum_json(S)},
           {"predictions", preds},
           {"annotations", notes}};
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << report::csv_field_header(F) << "theorem_id,claim,verdict,measured\n";
    for (const auto& [pred, v] : checked)
      out << csv_quote(pred.theorem_id) << "," << csv_quote(pred.claim->describe()) << ","
          << (v.confirmed ? "confirmed" : "refuted") << "," << csv_quote(v.measured) << "\n";
  } else {
    field_table(out, F);
    out << "d          " << P.d << " (gcd with p^m-1: " << P.gcd_d << ")\n"
        << "c          " << c.code << "\n"
        << "uniformity " << U.uniformity << " (" << to_string(U.classification) << ")\n"
        << "spectrum   " << omega_text(S) << "\n";
    for (const auto& [pred, v] : checked)
      out << "prediction " << pred.theorem_id << ": " << pred.claim->describe() << ", "
          << (v.confirmed ? "confirmed" : "refuted") << " (" << v.measured << ")\n";
    for (const auto& note : notes) out << "note       " << note << "\n";
  }
  return kOk;
}

int cmd_spectrum(const Config& cfg, std::ostream& out) {
  const Field F = build_field(cfg);
  const PowerMap P = PowerMap::make(F, *cfg.d);
  const Element c = parse_constant(F, *cfg.c);
  const Spectrum S = c_spectrum(F, P, c, effective_workers(cfg));

  std::vector<std::pair<Prediction, Verdict>> checked;
  for (const Prediction& pred : all_predictions(F, P.d, c))
    if (pred.claim->kind == ClaimKind::kSpectrum) checked.emplace_back(pred, verify_prediction(pred, F, P.d, c));

  if (cfg.format == "json") {
    Json preds = Json::array();
    for (const auto& [pred, v] : checked) preds.push_back(report::prediction_json(pred, v));
    Json j{{"version", report::kVersion}, {"command", "spectrum"}, {"field", report::field_json(F)},
           {"d", P.d}, {"c", c.code}, {"spectrum", report::spectrum_json(S)}, {"predictions", preds}};
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << report::csv_field_header(F) << "i,omega\n";
    for (std::size_t i = 0; i < S.omega.size(); ++i) out << i << "," << S.omega[i] << "\n";
  } else {
    field_table(out, F);
    out << "d          " << P.d << "\nc          " << c.code << "\nspectrum   " << omega_text(S) << "\n";
    for (const auto& [pred, v] : checked)
      out << "prediction " << pred.theorem_id << ": " << (v.confirmed ? "confirmed" : "refuted") << "\n";
  }
  return kOk;
}

int cmd_scan(const Config& cfg, std::ostream& stdout_stream) {
  const Field F = build_field(cfg);
  if (cfg.conjecture && F.characteristic() != 2)
    throw std::invalid_argument("--conjecture is only defined for p = 2");
  const unsigned workers = effective_workers(cfg);

  std::optional<ConjectureVerdict> verdict;
  ScanReport R;
  if (cfg.conjecture) {
    verdict = conjecture_check(F, workers);
    R = verdict->scan;
  } else {
    R = pcn_scan(F, workers);
  }

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) throw std::invalid_argument("cannot open output file '" + cfg.output + "'");
  }
  std::ostream& out = cfg.output.empty() ? stdout_stream : file;

  std::vector<std::string> notes;
  if (verdict && F.degree() == 6) {
    const auto agreed = verdict->exponents();
    const auto& u = published_u_m6();
    std::ostringstream os;
    os << "the published exponent set for m = 6 has " << u.size() << " elements; the measured set has "
       << agreed.size() << "; measured but not published:";
    for (std::uint64_t d : agreed)
      if (!std::binary_search(u.begin(), u.end(), d)) os << " " << d;
    notes.push_back(os.str());
  }

  if (cfg.format == "json") {
    Json j = report::scan_json(F, R);
    if (verdict) {
      j["conjecture"] = report::conjecture_json(*verdict);
      j["notes"] = notes;
    }
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << report::scan_csv(F, R);
  } else {
    field_table(out, F);
    for (const auto& e : R.entries) {
      out << "d = " << e.d << ":";
      for (Element c : e.pcn_constants) out << " " << c.code;
      out << "\n";
    }
    out << R.pairs().size() << " PcN pairs over " << R.exponents_scanned << " exponents\n";
    if (verdict) {
      out << "conjecture " << (verdict->holds() ? "holds" : "fails") << ": " << verdict->scan_not_predicted.size()
          << " unpredicted, " << verdict->predicted_not_scan.size() << " predicted but absent\n";
      for (const auto& note : notes) out << "note " << note << "\n";
    }
  }
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  SuiteParams params;
  params.p = cfg.p;
  params.m = cfg.m;
  params.k = cfg.k;
  params.workers = effective_workers(cfg);
  params.cap = cfg.cap;
  const SuiteReport R = run_suite(cfg.suite, params);
  if (cfg.format == "json") {
    out << suite_json(R).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "# suite," << R.suite << ",version=" << report::kVersion << "\nname,kind,passed,detail\n";
    for (const SuiteCheck& c : R.checks)
      out << csv_quote(c.name) << "," << (c.assertion ? "assertion" : "annotation") << ","
          << (c.passed ? "true" : "false") << "," << csv_quote(c.detail) << "\n";
  } else {
    for (const SuiteCheck& c : R.checks)
      out << (c.assertion ? (c.passed ? "PASS " : "FAIL ") : "NOTE ") << c.name << ": " << c.detail << "\n";
    out << R.suite << ": " << (R.passed() ? "passed" : "failed") << "\n";
  }
  return R.passed() ? kOk : kAssertionFailed;
}

int cmd_solve(const Config& cfg, std::ostream& out) {
  const Field F = build_field(cfg);
  if (F.characteristic() == 2) throw std::invalid_argument("the congruences need odd p");
  std::vector<CongruenceFamily> families;
  if (cfg.family == "T1" || cfg.family == "both") families.push_back(CongruenceFamily::kT1);
  if (cfg.family == "T2" || cfg.family == "both") families.push_back(CongruenceFamily::kT2);

  std::vector<std::pair<CongruenceSolution, std::vector<Prediction>>> solved;
  for (CongruenceFamily fam : families) {
    CongruenceSolution S = solve_congruence(F.characteristic(), F.degree(), *cfg.k, fam);
    std::vector<Prediction> preds;
    for (std::uint64_t d : S.solutions)
      preds.push_back(fam == CongruenceFamily::kT1 ? predict_thm_3mod4(F.characteristic(), F.degree(), *cfg.k, d)
                                                   : predict_thm_1mod4(F.characteristic(), F.degree(), *cfg.k, d));
    solved.emplace_back(std::move(S), std::move(preds));
  }

  if (cfg.format == "json") {
    Json fams = Json::array();
    for (const auto& [S, preds] : solved) {
      Json j = report::congruence_json(S);
      Json pj = Json::array();
      for (std::size_t i = 0; i < preds.size(); ++i) {
        Json one = report::prediction_json(preds[i]);
        one["d"] = S.solutions[i];
        pj.push_back(one);
      }
      j["predictions"] = pj;
      fams.push_back(j);
    }
    out << Json{{"version", report::kVersion}, {"command", "solve"}, {"field", report::field_json(F)},
                {"k", *cfg.k}, {"families", fams}}
               .dump(2)
        << "\n";
  } else if (cfg.format == "csv") {
    out << report::csv_field_header(F) << "family,k,d,ell_odd,applicable,claim\n";
    for (const auto& [S, preds] : solved)
      for (std::size_t i = 0; i < S.solutions.size(); ++i)
        out << to_string(S.family) << "," << S.k << "," << S.solutions[i] << "," << (S.ell_odd[i] ? 1 : 0) << ","
            << (preds[i].applicable ? 1 : 0) << ","
            << csv_quote(preds[i].claim ? preds[i].claim->describe() : "") << "\n";
  } else {
    field_table(out, F);
    for (const auto& [S, preds] : solved) {
      out << to_string(S.family) << " (k = " << S.k << "): ";
      if (!S.solvable) out << "no solutions";
      for (std::size_t i = 0; i < S.solutions.size(); ++i) {
        out << S.solutions[i];
        if (preds[i].applicable) out << " [" << preds[i].claim->describe() << "]";
        out << (i + 1 < S.solutions.size() ? ", " : "");
      }
      out << "\n";
    }
  }
  return kOk;
}

int cmd_bluher(const Config& cfg, std::ostream& out) {
  const Field F = build_field(cfg);
  const BluherReport R = bluher_counts(F, *cfg.k);
  if (cfg.format == "csv") {
    out << report::bluher_csv(F, R);
  } else if (cfg.format == "json") {
    out << report::bluher_json(F, *cfg.k, R).dump(2) << "\n";
  } else {
    field_table(out, F);
    out << "Q = " << R.Q << ", h = " << R.h << ", formula case " << R.formula_case << "\n";
    for (const auto& [i, n] : R.counts_bruteforce)
      out << "N" << i << " = " << n << " (formula " << R.counts_formula.at(i).to_string() << ")\n";
  }
  return kOk;
}

int cmd_systems(const Config& cfg, std::ostream& out) {
  const Field F = build_field(cfg);
  const SystemCountReport R = system_counts(F, *cfg.k);
  if (cfg.format == "csv") {
    out << report::systems_csv(F, R);
  } else if (cfg.format == "json") {
    out << report::systems_json(F, R).dump(2) << "\n";
  } else {
    field_table(out, F);
    for (std::uint32_t b = 0; b < R.counts.size(); ++b) {
      const auto& c = R.counts[b];
      out << "b = " << b << ": " << c[0] << " " << c[1] << " " << c[2] << " " << c[3] << "\n";
    }
    out << R.violations.size() << " violations" << (R.hypothesis ? "" : " (hypothesis does not hold)") << "\n";
  }
  return kOk;
}

}  // namespace

Element parse_constant(const Field& F, std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty constant");
  if (token[0] == 'g') {
    std::uint64_t e = 1;
    if (token.size() > 1) {
      if (token.size() < 3 || token[1] != '^') throw std::invalid_argument("malformed constant '" + std::string(token) + "'");
      e = parse_unsigned(token.substr(2), "generator exponent");
    }
    return F.pow(F.generator(), e);
  }
  if (token[0] == '-') {
    const std::uint64_t v = parse_unsigned(token.substr(1), "constant");
    return F.from_integer(-static_cast<std::int64_t>(v % F.characteristic()));
  }
  const std::uint64_t code = parse_unsigned(token, "constant");
  if (code >= F.order())
    throw std::invalid_argument("element code " + std::to_string(code) + " is outside GF(" +
                                std::to_string(F.characteristic()) + "^" + std::to_string(F.degree()) + ")");
  return Element{static_cast<std::uint32_t>(code)};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"c-differential uniformity of power maps over GF(p^m)", "pcn"};
  app.set_version_flag("--version", report::kVersion);
  app.require_subcommand(1);

  const auto formats = CLI::IsMember({"json", "csv", "table"});
  auto common = [&](CLI::App* sub, bool needs_field) {
    auto* p = sub->add_option("-p", cfg.p, "characteristic");
    auto* m = sub->add_option("-m", cfg.m, "extension degree");
    if (needs_field) {
      p->required();
      m->required();
    }
    sub->add_option("--format", cfg.format, "output format")->check(formats);
    sub->add_option("--cap", cfg.cap, "largest field order accepted");
    sub->add_option("--workers", cfg.workers, "worker threads (0: one per core)");
  };

  auto* field = app.add_subcommand("field", "field realization: modulus, generator");
  common(field, true);

  auto* uniformity = app.add_subcommand("uniformity", "c-differential uniformity of x^d, with matching predictions");
  common(uniformity, true);
  uniformity->add_option("-d", cfg.d, "exponent")->required();
  uniformity->add_option("-c", cfg.c, "constant: code, -1 or g^e")->required();

  auto* spectrum = app.add_subcommand("spectrum", "c-differential spectrum of x^d at shift 1");
  common(spectrum, true);
  spectrum->add_option("-d", cfg.d, "exponent")->required();
  spectrum->add_option("-c", cfg.c, "constant: code, -1 or g^e")->required();

  auto* scan = app.add_subcommand("scan", "every PcN pair (d, c) over the field");
  common(scan, true);
  scan->add_flag("--conjecture", cfg.conjecture, "compare with the Gold-derived exponent set (p = 2)");
  scan->add_option("-o,--output", cfg.output, "write the report to this file");

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  common(verify, false);
  verify->add_option("-k", cfg.k, "parameter k");
  auto* suite_pos = verify->add_option("suite_name", cfg.suite, "suite name")->check(CLI::IsMember(suite_names()));
  auto* suite_opt = verify->add_option("--suite", cfg.suite, "suite name")->check(CLI::IsMember(suite_names()));
  suite_pos->excludes(suite_opt);

  auto* solve = app.add_subcommand("solve", "solve the c = -1 congruence families for d");
  common(solve, true);
  solve->add_option("-k", cfg.k, "parameter k")->required();
  solve->add_option("--family", cfg.family, "T1, T2 or both")->check(CLI::IsMember({"T1", "T2", "both"}));

  auto* bluher = app.add_subcommand("bluher", "root counts of x^(p^k+1) - b x + b");
  common(bluher, true);
  bluher->add_option("-k", cfg.k, "parameter k")->required();

  auto* systems = app.add_subcommand("systems", "solution counts of the four quadratic systems");
  common(systems, true);
  systems->add_option("-k", cfg.k, "parameter k")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidParameters;
  }

  try {
    if (verify->parsed() && cfg.suite.empty()) throw std::invalid_argument("verify needs a suite name");
    if (*field) return cmd_field(cfg, out);
    if (*uniformity) return cmd_uniformity(cfg, out);
    if (*spectrum) return cmd_spectrum(cfg, out);
    if (*scan) return cmd_scan(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*solve) return cmd_solve(cfg, out);
    if (*bluher) return cmd_bluher(cfg, out);
    if (*systems) return cmd_systems(cfg, out);
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidParameters;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidParameters;
  }
  return kInvalidParameters;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"pcn"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pcn::cli
