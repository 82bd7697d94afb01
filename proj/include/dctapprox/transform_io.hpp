#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "dctapprox/dct_core.hpp"

namespace dctapprox {

/// {"n": N, "den": 2, "entries": [[...]], "scale": [...]} with entries as
/// numerators over "den".
nlohmann::json transform_to_json(const OrthonormalTransform& t);

/// Validates shape and checks that diag(scale) * entries is orthonormal to
/// 1e-9. Throws Error(kParse) on malformed input, Error(kInfeasible) when the
/// rows are not orthonormal.
OrthonormalTransform transform_from_json(const nlohmann::json& j);

void save_transform(const std::filesystem::path& path, const OrthonormalTransform& t);
OrthonormalTransform load_transform(const std::filesystem::path& path);

}  // namespace dctapprox
