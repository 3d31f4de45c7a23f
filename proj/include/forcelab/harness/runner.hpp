#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forcelab/harness/config.hpp"
#include "forcelab/harness/registry.hpp"

namespace forcelab {

struct CaseReport {
  std::string property;
  Mode mode = Mode::Sampled;
  std::uint64_t serial = 0;  // exhaustive index or sampled serial
  Status status = Status::Pass;
  std::string detail;
  io::json inputs;
  std::map<std::string, std::uint64_t> counters;
  double elapsed_ms = 0;
  io::json payload;  // replay payload, present on fail
};

// One line of the report stream. Timing is written as 0 when `timing` is off
// so that streams of equal runs compare byte for byte.
std::string report_line(const CaseReport& r, bool timing = true);

struct PropertySummary {
  std::uint64_t pass = 0, fail = 0, skip = 0;
  std::map<std::string, std::uint64_t> counters;
  double elapsed_ms = 0;
};

struct RunSummary {
  std::map<std::string, PropertySummary> by_property;  // in registry order via `order`
  std::vector<std::string> order;
  bool any_fail() const;
  std::uint64_t total(Status s) const;
};

using ReportSink = std::function<void(const CaseReport&)>;

// Runs every selected property; reports arrive in (property, case) order
// whatever cfg.jobs is. CONFIG_ERROR if the configuration is invalid.
Outcome<RunSummary> run(const RunConfig& cfg, const ReportSink& sink);

// Re-executes the case described by a payload from a failed report.
Outcome<CaseReport> replay(const io::json& payload);
Outcome<CaseReport> replay_text(const std::string& text);

// The regimes behind the acceptance criteria, shared by the CLI and tests.
struct Regime {
  int criterion = 0;  // 1..7; 0 for properties outside the criteria
  std::string label;
  RunConfig cfg;
};
std::vector<Regime> default_suite(std::uint64_t seed = 0);

}  // namespace forcelab
