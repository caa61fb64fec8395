#pragma once

#include <string>

#include "ptol/enumeration.hpp"

namespace ptol {

// Renders a theorem report. With include_timing = false the output depends
// only on the corpus, which makes runs comparable byte for byte.
std::string report_text(TheoremReport const& report, bool include_timing = true);

// JSON document; the schema is described in docs/report-schema.md.
std::string report_json(TheoremReport const& report, bool include_timing = true);

}  // namespace ptol
