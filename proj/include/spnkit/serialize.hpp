#pragma once

#include <json.hpp>

#include "spnkit/classes.hpp"
#include "spnkit/cones.hpp"
#include "spnkit/orbit.hpp"
#include "spnkit/signgraph.hpp"
#include "spnkit/stqp.hpp"

namespace spnkit {

using Json = nlohmann::ordered_json;

// Matrices inside JSON documents are strings in the shared text format, so a
// field can be written to a file and read back with read_matrix.

Json to_json(const ClassLabel& label);
Json to_json(const RowSignSummary& rows);
Json to_json(const TraceStep& step);
Json to_json(const SpnCertificate& c);
Json to_json(const DnnWitness& w);
Json to_json(const OrbitResult& r);
Json to_json(const StqpReport& r);
Json to_json(const Graph& g);
Json to_json(const SignGraphs& g);

/// Inverse of to_json(SpnCertificate). Throws ParseError on malformed input.
SpnCertificate certificate_from_json(const Json& j);
DnnWitness witness_from_json(const Json& j);

}  // namespace spnkit
