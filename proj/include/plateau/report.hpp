#pragma once

#include <string>

#include "json.hpp"

#include "plateau/regularity.hpp"

namespace plateau {

nlohmann::json to_json(const PlateauReport& report);
nlohmann::json to_json(const SpectrumCertificate& cert);
nlohmann::json to_json(const SrgCertificate& cert);
nlohmann::json to_json(const WalkRegCertificate& cert);
nlohmann::json to_json(const Theorem1Verdict& verdict);
nlohmann::json to_json(const ConverseReport& converse);
nlohmann::json to_json(const CharacterizationReport& report);

// The full analysis document for one function: input echo, both spectra,
// the always-on check flags, and the characterization tree.  Passing the
// original ANF text (when the input arrived that way) echoes it verbatim.
nlohmann::json analyze_report(const BooleanFunction& f,
                              const AnalyzeOptions& opts,
                              const std::string* anf_source = nullptr);

// Structural validation of the documents this library emits
// ("plateau/analyze/v1" and "plateau/enumerate/v1"): required fields,
// types, enum values, multiplicity sums, certificate shapes.  Throws
// ParseError on the first violation.
void validate_report(const nlohmann::json& report);

}  // namespace plateau
