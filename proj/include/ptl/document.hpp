#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "ptl/prototwilled.hpp"

namespace ptl {

/// A self-contained description of one proto-twilled structure plus named
/// candidate linear maps h -> g. Serialized as JSON with a "schema": 1 field;
/// scalars travel as strings over Q ("a/b") and integers over F_p, so no
/// binary-float pathway exists anywhere.
struct AlgebraDocument {
  Field field;
  int dim_g = 0;
  int dim_h = 0;
  OmegaStructure omega;
  std::map<std::string, Matrix> linear_maps;  // each dim_g x dim_h
  std::string name;
  nlohmann::json metadata;  // free-form, round-tripped untouched

  const Matrix& map_by_name(const std::string& n) const;
};

/// Parses and validates a document; diagnostics name the first violating
/// path, e.g. "maps.bracket_g[0]".
AlgebraDocument parse_document(const nlohmann::json& j);
AlgebraDocument load_document(const std::string& path);

nlohmann::json document_to_json(const AlgebraDocument& doc);
void save_document(const AlgebraDocument& doc, const std::string& path);

/// Scalar <-> JSON helpers shared with the report writers.
nlohmann::json scalar_to_json(const FieldScalar& s);
FieldScalar scalar_from_json(const Field& f, const nlohmann::json& j, const std::string& path);

nlohmann::json multimap_to_json(const MultiMap& m);
nlohmann::json bilinear_to_json(const Bilinear& b);
nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json vec_to_json(const Vec& v);
nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

}  // namespace ptl
