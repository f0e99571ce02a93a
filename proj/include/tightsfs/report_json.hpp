#pragma once

#include <json.hpp>

#include "tightsfs/classifier.hpp"
#include "tightsfs/convex.hpp"
#include "tightsfs/surgery.hpp"

namespace tightsfs {

using json = nlohmann::json;

json report_to_json(const ClassificationReport& r, bool with_vectors = true);
ClassificationReport report_from_json(const json& j);

// {"central": coefficient, "chains": [[...], ...]}; integers stay integers,
// fractions are written as "p/q" strings.
json diagram_to_json(const SurgeryDiagram& d);

json sweep_to_json(const SweepSummary& s);
json audit_to_json(const ShirtAudit& a);

}  // namespace tightsfs
