#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxplus/congruence.hpp"
#include "maxplus/invariance.hpp"
#include "maxplus/observer.hpp"
#include "maxplus/semimodule.hpp"
#include "maxplus/teg.hpp"

namespace maxplus::io {

using Json = nlohmann::ordered_json;

// Scalars: null = ε, integer, "+inf" = ⊤.
Json scalar_to_json(Scalar s);
Scalar scalar_from_json(const Json& j, bool allow_top);

// {"rows", "cols", "data"}. ⊤ is rejected unless `allow_top`.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, bool allow_top = false);

// Generator matrix (columns) plus "dim".
Json to_json(const Semimodule& x);
Semimodule semimodule_from_json(const Json& j);

// {"dim", "kernel"}.
Json to_json(const Congruence& w);
Congruence congruence_from_json(const Json& j);

Json to_json(const FixpointReport& r);
FixpointReport fixpoint_report_from_json(const Json& j);

Json to_json(const VolumeResult& v);
VolumeResult volume_result_from_json(const Json& j);

// {"F", "U", "V"}.
Json to_json(const ObserverMatrices& o);
ObserverMatrices observer_from_json(const Json& j);

Json to_json(const TegSpec& spec);
TegSpec teg_spec_from_json(const Json& j);

// {"n", "entries"} with null, v or [a, b] per entry, plus "C".
Json to_json(const CompiledTeg& teg);
CompiledTeg compiled_teg_from_json(const Json& j);

// Malformed files raise IoError; well-formed JSON of the wrong shape raises
// SpecError.
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
std::string dump(const Json& j);

/// Header k,x1..,y1..,z1..; one row per step with ε as "-inf". `observer`
/// may be empty, otherwise it needs one entry per state.
void write_trajectory_csv(std::ostream& os, const std::vector<Vector>& states,
                          const std::vector<Vector>& outputs,
                          const std::vector<Vector>& observer);

}  // namespace maxplus::io
