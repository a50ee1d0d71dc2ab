#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "vawrt/oracle.hpp"
#include "vawrt/problem.hpp"

namespace vawrt {

enum class QualsMode {
  kDiagnostic,  // report every hypothesis; exit status follows the inclusion
  kStrict,      // a rule whose hypotheses are not all Holds exits 2
};

struct RunOptions {
  std::string source;                // recorded in the report header
  std::optional<std::string> op;     // run only queries with this op
  std::optional<std::string> rule;   // with op "rule": only this rule
  std::optional<std::string> query;  // run only the query with this name
  bool decimal = false;
  bool cross_check = false;
  QualsMode quals = QualsMode::kDiagnostic;
  oracle::SamplingPlan plan;
};

/// Exit codes shared by reports and the command line.
enum ExitCode : int { kExitOk = 0, kExitFails = 1, kExitUnknown = 2, kExitInput = 3 };

struct RunResult {
  nlohmann::ordered_json report;
  int exit_code = kExitOk;
  std::vector<std::string> warnings;  // oracle disagreements
};

/// Runs the selected queries. Throws InputError for malformed queries or
/// when nothing matches the selection.
RunResult run_problem(const Problem& p, const RunOptions& opt);

/// Canonical text of a report: two-space indentation, trailing newline.
std::string render(const nlohmann::ordered_json& report);

/// Serializers used in reports.
nlohmann::ordered_json to_json(const Cone& c, bool decimal = false);
nlohmann::ordered_json to_json(const ConeUnion& u, bool decimal = false);
nlohmann::ordered_json to_json(const PolySet& s, bool decimal = false);
nlohmann::ordered_json to_json(const TriVerdict& v, bool decimal = false);
nlohmann::ordered_json vec_json(const RVec& v, bool decimal = false);

}  // namespace vawrt
