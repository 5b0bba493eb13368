#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcn/gf.hpp"
#include "pcn/report.hpp"

namespace pcn {

/// One outcome inside a verification suite. Assertions decide the suite's
/// verdict; annotations record findings without failing it.
struct SuiteCheck {
  std::string name;
  bool assertion = true;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;
  /// Raw reports gathered while running (bluher, systems, conjecture).
  report::Json data = report::Json::array();

  bool passed() const;
  std::size_t failed_assertions() const;
};

/// Optional overrides of a suite's built-in parameter list.
struct SuiteParams {
  std::optional<std::uint32_t> p;
  std::optional<unsigned> m;
  std::optional<unsigned> k;
  unsigned workers = 1;
  std::uint32_t cap = kDefaultSizeCap;
};

const std::vector<std::string>& suite_names();

/// Runs the named suite. Throws std::invalid_argument for an unknown name or
/// parameters the suite cannot use.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

/// The set U printed for m = 6 in the literature next to the Gold corollary.
const std::vector<std::uint64_t>& published_u_m6();

report::Json suite_json(const SuiteReport& R);

}  // namespace pcn
