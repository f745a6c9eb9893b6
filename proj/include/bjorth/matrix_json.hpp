#pragma once

#include <filesystem>

#include <json.hpp>

#include "bjorth/matrix.hpp"

namespace bjorth {

// {"rows": n, "cols": m, "field": "real"|"complex", "data": [...]} row-major.
// Real data entries are plain numbers, complex entries are [re, im] pairs.

nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);
Matrix load_matrix(const std::filesystem::path& path);

nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(cx z);

}  // namespace bjorth
