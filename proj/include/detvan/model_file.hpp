#pragma once

// Model files:
//   {"variables": ["v","w","x","y","z"],
//    "matrix": [["v","x"],["w","y"],["-2*x*y","v^2+w^2+z^2"]],
//    "options": {"seed": 1, "max_degree": 24, "dimension_hint": 3}}
// Entries may be strings in the expression grammar or JSON integers.

#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "detvan/detmodel.hpp"
#include "detvan/errors.hpp"
#include "detvan/exprparse.hpp"

namespace detvan {

struct ModelOptions {
  std::optional<std::int64_t> seed;
  std::optional<unsigned> max_degree;
  std::optional<unsigned> dimension_hint;
};

struct ModelFile {
  std::vector<std::string> variables;
  std::vector<std::vector<std::string>> matrix;
  ModelOptions options;
};

inline ModelFile parse_model_file(std::string_view bytes) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!doc.is_object()) throw ModelError("model file must be a JSON object");
  ModelFile mf;

  if (!doc.contains("variables") || !doc["variables"].is_array())
    throw ModelError("model file needs a \"variables\" array");
  std::unordered_set<std::string> seen;
  for (const auto& v : doc["variables"]) {
    if (!v.is_string()) throw ModelError("variable names must be strings");
    const auto name = v.get<std::string>();
    if (!seen.insert(name).second) throw ModelError("duplicate variable name '" + name + "'");
    mf.variables.push_back(name);
  }

  if (!doc.contains("matrix") || !doc["matrix"].is_array()) throw ModelError("model file needs a \"matrix\" array");
  for (const auto& row : doc["matrix"]) {
    if (!row.is_array()) throw ModelError("matrix rows must be arrays");
    std::vector<std::string> r;
    for (const auto& e : row) {
      if (e.is_string()) r.push_back(e.get<std::string>());
      else if (e.is_number_integer()) r.push_back(std::to_string(e.get<std::int64_t>()));
      else throw ModelError("matrix entries must be expression strings or integers");
    }
    mf.matrix.push_back(std::move(r));
  }

  if (doc.contains("options")) {
    const auto& o = doc["options"];
    if (!o.is_object()) throw ModelError("\"options\" must be an object");
    if (o.contains("seed")) {
      if (!o["seed"].is_number_integer()) throw ModelError("seed must be an integer");
      mf.options.seed = o["seed"].get<std::int64_t>();
    }
    auto nat = [&](const char* key) -> std::optional<unsigned> {
      if (!o.contains(key) || o[key].is_null()) return std::nullopt;
      if (!o[key].is_number_unsigned()) throw ModelError(std::string(key) + " must be a natural number");
      return o[key].get<unsigned>();
    };
    mf.options.max_degree = nat("max_degree");
    mf.options.dimension_hint = nat("dimension_hint");
  }
  return mf;
}

/// Checks the 3×2 shape (rows = columns + 1 with two columns), parses every
/// entry and reports parse failures with their matrix position.
inline DetModel model_from_file(const ModelFile& mf) {
  const std::size_t rows = mf.matrix.size();
  const std::size_t cols = rows ? mf.matrix.front().size() : 0;
  for (const auto& r : mf.matrix)
    if (r.size() != cols) throw ModelError("matrix rows have different lengths");
  if (rows != cols + 1)
    throw ModelError("matrix must have one more row than columns, got " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  if (cols != 2)
    throw ModelError("only 3x2 matrices (Cohen-Macaulay type 2) are supported, got " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  if (mf.variables.empty()) throw ModelError("variable list is empty");
  const RingPtr ring = make_ring(mf.variables);
  DetModel::Grid g;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      try {
        g[i][j] = parse_poly(mf.matrix[i][j], ring);
      } catch (const ParseError& e) {
        throw ParseError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + e.message(),
                         e.offset());
      }
    }
  DetModel m(ring, g);
  if (mf.options.dimension_hint && *mf.options.dimension_hint + 2 != m.N())
    throw ModelError("dimension_hint " + std::to_string(*mf.options.dimension_hint) +
                     " disagrees with N - 2 = " + std::to_string(m.N() - 2));
  return m;
}

inline DetModel parse_model(std::string_view bytes) { return model_from_file(parse_model_file(bytes)); }

}  // namespace detvan
