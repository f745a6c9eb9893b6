#include "bjorth/matrix_json.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "bjorth/errors.hpp"

namespace bjorth {

using nlohmann::json;

json to_json(cx z) { return json::array({z.real(), z.imag()}); }

json to_json(const Matrix& m) {
  json data = json::array();
  for (const auto& z : m.entries()) {
    if (m.field() == Field::Real) {
      data.push_back(z.real());
    } else {
      data.push_back(to_json(z));
    }
  }
  return json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"field", std::string(to_string(m.field()))},
              {"data", std::move(data)}};
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& z : v.entries()) out.push_back(to_json(z));
  return out;
}

namespace {

double finite_number(const json& j) {
  if (!j.is_number()) throw InputError("matrix data entry is not a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw InputError("matrix data entry is not finite");
  return x;
}

std::size_t positive_size(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw InputError(std::string("matrix JSON: missing integer '") + key + "'");
  }
  const auto v = j.at(key).get<long long>();
  if (v <= 0) throw InputError(std::string("matrix JSON: '") + key + "' must be positive");
  return static_cast<std::size_t>(v);
}

}  // namespace

Matrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw InputError("matrix JSON must be an object");
  const std::size_t rows = positive_size(j, "rows");
  const std::size_t cols = positive_size(j, "cols");
  if (!j.contains("field") || !j.at("field").is_string()) {
    throw InputError("matrix JSON: missing string 'field'");
  }
  const Field field = field_from_string(j.at("field").get<std::string>());
  if (!j.contains("data") || !j.at("data").is_array()) {
    throw InputError("matrix JSON: missing array 'data'");
  }
  const json& data = j.at("data");
  if (data.size() != rows * cols) {
    throw InputError("matrix JSON: data has " + std::to_string(data.size()) +
                     " entries, expected " + std::to_string(rows * cols));
  }
  std::vector<cx> entries;
  entries.reserve(data.size());
  for (const auto& e : data) {
    if (field == Field::Real) {
      entries.emplace_back(finite_number(e), 0.0);
    } else {
      if (!e.is_array() || e.size() != 2) {
        throw InputError("matrix JSON: complex entries must be [re, im] pairs");
      }
      entries.emplace_back(finite_number(e[0]), finite_number(e[1]));
    }
  }
  return Matrix(rows, cols, std::move(entries), field);
}

Matrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return matrix_from_json(j);
}

}  // namespace bjorth
