#pragma once

// JSON, CSV and plain-text renderings of forms, sets and reports.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stablenorm/ext_nat.hpp"
#include "stablenorm/semilinear.hpp"
#include "stablenorm/sequence.hpp"
#include "stablenorm/stable_norm.hpp"

namespace stablenorm {

inline constexpr int kReportSchema = 1;

/// {"preperiod", "period", "residues": [{"intercept", "difference"}], "tau",
/// "uniform"}; infinity is the string "inf".
std::string form_to_json(const SemiArithmeticForm& form);
/// Throws ParseError on malformed input.
SemiArithmeticForm form_from_json(std::string_view text);

/// {"coordinates": [..], "components": [{"offset": [..], "generators": [[..]]}]}.
std::string semilinear_to_json(const SemilinearSet& s);
SemilinearSet semilinear_from_json(std::string_view text);

/// Keys sorted; "schema" is kReportSchema.
std::string report_to_json(const PipelineReport& report);

/// The fields a script needs from a report.
struct ReportSummary {
  int schema = 0;
  std::string verdict;
  std::string tau;
  std::vector<ExtNat> values;
  std::string symbolic_status;
};

/// Validates a report against the schema. Throws ParseError.
ReportSummary parse_report(std::string_view text);

/// "k,norm" header and one row per k.
std::string values_to_csv(std::span<const ExtNat> values);

std::string report_to_text(const PipelineReport& report);

/// "d/m", "d", or "undetermined".
std::string tau_to_string(const std::optional<Rational>& tau);

}  // namespace stablenorm
