#pragma once

#include <string>

#include "json.hpp"

#include "quasiq/channels.hpp"
#include "quasiq/gallery.hpp"
#include "quasiq/measure.hpp"
#include "quasiq/state.hpp"

namespace quasiq {

// nlohmann::json keeps object keys sorted, so every serializer here emits a
// canonical byte sequence for a given value.
using Json = nlohmann::json;

// Complex matrices as nested row-major lists of [re, im] pairs.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json vector_to_json(const Eigen::VectorXcd& v);
Eigen::VectorXcd vector_from_json(const Json& j);

// State files: {"dims": [...], "rows": [[[re,im], ...], ...]}.
Json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const Json& j, const Tolerances& tol = {}, bool validate = true);

Json report_to_json(const MeasureReport& r);

// Unitaries: {"dims": [...], "factors": [matrix, ...]}.
Json unitary_to_json(const LocalUnitary& u);
LocalUnitary unitary_from_json(const Json& j);

// Channels: {"dims": [...], "factors": [{"kraus": [matrix, ...]}, ...]}.
Json channel_to_json(const LocalKrausChannel& ch);
LocalKrausChannel channel_from_json(const Json& j);

// Separability certificates: {"dims": [...], "weights": [...],
// "factors": [[vector per subsystem], ...]}.
Json ensemble_to_json(const SeparableEnsemble& e);
SeparableEnsemble ensemble_from_json(const Json& j);

// Structural problems (unreadable file, malformed JSON, wrong schema) surface
// as ParseError; physically invalid numbers as ValidationError.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace quasiq
