#pragma once

#include "tamefield/classify.hpp"
#include "tamefield/doag.hpp"
#include "tamefield/extension.hpp"
#include "tamefield/gauss.hpp"
#include "tamefield/pcs.hpp"
#include "tamefield/suite.hpp"

#include <json.hpp>

namespace tamefield {

/// JSON documents matching schema/report.schema.json.
using Json = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

Json value_json(const Value& v);  // "inf" or the group element as text
Json field_json(const ValuedField& K);

Json extension_json(const ValuedField& K, const ExtensionReport& r);
Json classification_json(const FieldClassification& c);
Json gauss_json(const ValuedField& K, const GaussAssignment& A, const MPoly& f);
Json hensel_json(const ValuedField& K, const HenselResult& r);
Json pcs_json(const ValuedField& K, const PcsPrefix& prefix, const PcsTrace& t);
Json suite_json(const SuiteResult& r);

/// {"version", "command", "input", "result"}.
Json envelope(const std::string& command, Json input, Json result);

}  // namespace tamefield
