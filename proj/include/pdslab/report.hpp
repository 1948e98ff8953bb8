#pragma once

// JSON views of the library results and the three CLI commands as plain
// functions returning a report plus an exit code.

#include <optional>
#include <string>

#include <json.hpp>

#include "pdslab/families.hpp"
#include "pdslab/scheme.hpp"

namespace pdslab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "pdslab-report/1";

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2 };

Json to_json(const PdsParams& p);
Json to_json(const PdsFailure& f);
Json to_json(const PdsResult& r);
Json to_json(const IntersectionNumbers& p);
Json to_json(const SchemeWitness& w);
Json to_json(const AmorphyCertificate& c);
Json to_json(const GktReport& r, const GroupContext& ctx);
Json to_json(const RegularityReport& r);
Json to_json(const FamilyComparison& c);
Json to_json(const FamilySpec& s);
/// {"order", "class", "exponent", "derived", "center", "frattini", "eq2_match", "eq3_match", "eq4_match"}.
Json invariants_json(const DirectInvariants& d, const EquationMatches& m);

FamilySpec family_spec_from_json(const Json& j);
/// {"kind":"tau","v":..} | {"kind":"rho","a":..} | {"kind":"pi","v":..} | {"kind":"identity"}.
EndoMap map_from_json(const GroupContext& ctx, const Json& j);

struct RunResult {
  Json report;
  int exit_code = kExitOk;
};

enum class Pullback { automatic, none, all };
Pullback parse_pullback(std::string_view s);

struct VerifyPdsOptions {
  int n = 0;
  std::string e;
  std::string a;
  std::string level;
  int threads = 1;
};

struct SchemeOptions {
  int n = 0;
  std::string e;
  std::string a;
  int variant = 4;
  bool amorphic = false;
};

struct RegularOptions {
  std::optional<FamilySpec> family;
  /// JSON text of a custom triple {"n","e","a","tau","K_gens","h"}.
  std::optional<std::string> custom;
  /// JSON text of a map descriptor; requires e and a.
  std::optional<std::string> search;
  std::string e;
  std::string a;
  Pullback pullback = Pullback::automatic;
  int threads = 1;
};

/// Input errors propagate as InputError; the CLI maps them to exit code 2.
RunResult cmd_verify_pds(const VerifyPdsOptions& opt);
RunResult cmd_scheme(const SchemeOptions& opt);
RunResult cmd_regular(const RegularOptions& opt);

/// Report for a thrown input or contract error.
RunResult error_result(const std::string& command, const std::string& message, int exit_code);

}  // namespace pdslab
