// Structured documents for decomposition traces and suite reports.  Both
// carry a "kind" tag and validate against docs/magnus.schema.json.

#ifndef MAGNUS_SERIALIZE_HPP_
#define MAGNUS_SERIALIZE_HPP_

#include <json.hpp>

#include "magnus/engine.hpp"
#include "magnus/purity.hpp"

namespace magnus {

  nlohmann::json trace_to_json(DecompositionTrace const& trace);
  // {"kind": "decomposition", "trace": ..., "descent": [...]}
  nlohmann::json decomposition_document(DecompositionTrace const& trace);
  nlohmann::json report_to_json(PurityReport const& report);
  nlohmann::json report_to_json(AlphaReport const& report);

}  // namespace magnus

#endif  // MAGNUS_SERIALIZE_HPP_
