#include "ramlab/module_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "ramlab/error.hpp"

namespace ramlab {

namespace {

using Json = nlohmann::ordered_json;

QMatrix parse_matrix(const Json& j, const FiniteField& field, std::int64_t trunc, std::size_t d, const char* key) {
  if (!j.is_array() || j.size() != d) throw Error(ErrorCode::kParseError, std::string(key) + " must be a list of " + std::to_string(d) + " rows");
  QMatrix out(d, d, QPoly(field, trunc));
  for (std::size_t r = 0; r < d; ++r) {
    if (!j[r].is_array() || j[r].size() != d) throw Error(ErrorCode::kParseError, std::string(key) + " rows must have " + std::to_string(d) + " entries");
    for (std::size_t c = 0; c < d; ++c) {
      if (!j[r][c].is_string()) throw Error(ErrorCode::kParseError, std::string(key) + " entries must be strings");
      out(r, c) = parse_qpoly_body(field, trunc, j[r][c].get<std::string>());
    }
  }
  return out;
}

Json matrix_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_body(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
T required(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::kParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::kParseError, std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

ModuleFile parse_module_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kParseError, "module file must be a JSON object");
  ModuleFile out{j.value("name", std::string()), j.value("description", std::string()),
                 WachModuleModP{FiniteField(2), 1, 0, 0, QMatrix(0, 0, QPoly(FiniteField(2), 1)), std::nullopt}};
  const auto p = required<std::uint32_t>(j, "p");
  const auto f = j.contains("f") ? required<std::uint32_t>(j, "f") : 1u;
  const auto n = required<std::int64_t>(j, "N");
  const auto d = required<std::size_t>(j, "d");
  const auto i = required<int>(j, "i");
  if (n < 1) throw Error(ErrorCode::kParseError, "N must be >= 1");
  const FiniteField field(p, f);
  WachModuleModP& m = out.module;
  m.field = field;
  m.trunc = n;
  m.rank = d;
  m.height = i;
  if (!j.contains("F")) throw Error(ErrorCode::kParseError, "missing field 'F'");
  m.F = parse_matrix(j["F"], field, n, d, "F");
  if (j.contains("G")) {
    if (!j.contains("uG")) throw Error(ErrorCode::kParseError, "G requires uG");
    m.gamma = GammaDatum{parse_matrix(j["G"], field, n, d, "G"), required<std::int64_t>(j, "uG")};
  } else if (j.contains("uG")) {
    throw Error(ErrorCode::kParseError, "uG given without G");
  }
  validate_shape(m);
  return out;
}

std::string module_to_json(const ModuleFile& file) {
  const WachModuleModP& m = file.module;
  Json j;
  j["name"] = file.name;
  j["description"] = file.description;
  j["p"] = m.field.characteristic();
  j["f"] = m.field.degree();
  j["N"] = m.trunc;
  j["d"] = m.rank;
  j["i"] = m.height;
  j["F"] = matrix_json(m.F);
  if (m.gamma) {
    j["G"] = matrix_json(m.gamma->G);
    j["uG"] = m.gamma->u;
  }
  return j.dump(2) + "\n";
}

ModuleFile load_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open module file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_module_json(buf.str());
}

}  // namespace ramlab
