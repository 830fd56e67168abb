#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "acmwild/cohomology.hpp"
#include "acmwild/linear_forms.hpp"
#include "acmwild/moduli.hpp"
#include "acmwild/presentation.hpp"
#include "acmwild/restriction.hpp"
#include "acmwild/variety.hpp"
#include "acmwild/wildness.hpp"

namespace acmwild::io {

// Insertion-ordered, so key order is fixed by the writers below.
using Json = nlohmann::ordered_json;

Json to_json(const CohomologyTable& table);
CohomologyTable table_from_json(const Json& j);

Json to_json(const LinearFormMatrix& phi);
LinearFormMatrix linear_form_matrix_from_json(const Json& j);

Json to_json(const SurjectivityCertificate& cert);
SurjectivityCertificate certificate_from_json(const Json& j);

Json to_json(const StabilizerReport& report);
StabilizerReport stabilizer_from_json(const Json& j);

Json to_json(const VanishingChaseTrace& trace);
VanishingChaseTrace trace_from_json(const Json& j);

Json to_json(const AcmVerdict& verdict);
AcmVerdict verdict_from_json(const Json& j);

Json to_json(const ACMVarietyDescriptor& x);
ACMVarietyDescriptor variety_from_json(const Json& j);

Json to_json(const WildnessReport& report);
WildnessReport wildness_report_from_json(const Json& j);

/// Canonical text: two-space indentation, fixed key order, trailing newline.
std::string serialize(const Json& j);
Json parse(std::string_view text);

/// Rows i = 0..dim, one column per twist.
std::string table_markdown(const CohomologyTable& table);
std::string report_markdown(const WildnessReport& report);

}  // namespace acmwild::io
