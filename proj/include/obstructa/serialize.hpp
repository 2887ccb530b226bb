#pragma once

#include "json.hpp"

#include "obstructa/certificate.hpp"
#include "obstructa/decomposition.hpp"
#include "obstructa/detectors.hpp"
#include "obstructa/hamiltonicity.hpp"

namespace obstructa {

using Json = nlohmann::ordered_json;

// {"tag": "HamCycle", "parts": [[...], ...]}
Json to_json(const Certificate& c);

// Flat record: two_connected, wheel_free, contains_3pc, hamiltonian,
// hc_obstruction, recognized_3pc (spec text or null).
Json to_json(const ClassificationRecord& r);

// {"is_obstruction", "failure_reason", "witness"}
Json to_json(const ObstructionVerdict& v);

// {"step", "input_n", "result", "certificate"}
Json to_json(const PipelineStep& s);
Json to_json(const std::vector<PipelineStep>& steps);

}  // namespace obstructa
