#include "ptl/document.hpp"

#include <fstream>

namespace ptl {

using nlohmann::json;

const Matrix& AlgebraDocument::map_by_name(const std::string& n) const {
  auto it = linear_maps.find(n);
  require(it != linear_maps.end(), ErrorKind::ShapeError,
          "document has no linear map named '" + n + "'");
  return it->second;
}

json scalar_to_json(const FieldScalar& s) {
  if (s.field().is_rational()) return s.str();
  return s.residue();
}

FieldScalar scalar_from_json(const Field& f, const json& j, const std::string& path) {
  try {
    if (j.is_string()) return FieldScalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return FieldScalar::of(f, j.get<long long>());
  } catch (const Error& e) {
    fail(ErrorKind::ParseError, std::string(e.what()) + " at " + path);
  }
  fail(ErrorKind::ParseError, "scalar must be a string or integer at " + path);
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return json{{"kind", "rational"}};
  return json{{"kind", "prime"}, {"p", f.p}};
}

Field field_from_json(const json& j) {
  require(j.is_object() && j.contains("kind"), ErrorKind::ParseError,
          "field descriptor must be an object with a 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return Field::rationals();
  if (kind == "prime") {
    require(j.contains("p") && j.at("p").is_number_integer(), ErrorKind::ParseError,
            "prime field descriptor needs an integer 'p'");
    return Field::prime(j.at("p").get<std::int64_t>());
  }
  fail(ErrorKind::ParseError, "unknown field kind '" + kind + "'");
}

namespace {

// nested-array reader for a tensor with the given shape (out, s1, s2, ...)
void read_tensor(const json& j, const std::vector<int>& shape, std::size_t depth,
                 const std::string& path, const Field& f, std::vector<FieldScalar>& out) {
  if (depth == shape.size()) {
    out.push_back(scalar_from_json(f, j, path));
    return;
  }
  require(j.is_array(), ErrorKind::ShapeError, "expected an array at " + path);
  require(static_cast<int>(j.size()) == shape[depth], ErrorKind::ShapeError,
          "expected " + std::to_string(shape[depth]) + " entries at " + path + ", found " +
              std::to_string(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    read_tensor(j[i], shape, depth + 1, path + "[" + std::to_string(i) + "]", f, out);
}

json write_tensor(const Vec& c, const std::vector<int>& shape, std::size_t depth, std::size_t& pos) {
  if (depth == shape.size()) return scalar_to_json(c[pos++]);
  json arr = json::array();
  for (int i = 0; i < shape[depth]; ++i) arr.push_back(write_tensor(c, shape, depth + 1, pos));
  return arr;
}

MultiMap read_multimap(const json& j, int arity, int dom, int cod, const Field& f,
                       const std::string& path) {
  std::vector<int> shape{cod};
  for (int i = 0; i < arity; ++i) shape.push_back(dom);
  std::vector<FieldScalar> flat;
  flat.reserve(static_cast<std::size_t>(cod));
  read_tensor(j, shape, 0, path, f, flat);
  MultiMap m(arity, dom, cod, f);
  m.raw() = std::move(flat);
  return m;
}

Bilinear read_bilinear(const json& j, int da, int db, int dout, const Field& f,
                       const std::string& path) {
  std::vector<FieldScalar> flat;
  read_tensor(j, {dout, da, db}, 0, path, f, flat);
  Bilinear b = Bilinear::zero(da, db, dout, f);
  b.c = std::move(flat);
  return b;
}

}  // namespace

json multimap_to_json(const MultiMap& m) {
  std::vector<int> shape{m.codomain_dim()};
  for (int i = 0; i < m.arity(); ++i) shape.push_back(m.domain_dim());
  std::size_t pos = 0;
  return write_tensor(m.raw(), shape, 0, pos);
}

json bilinear_to_json(const Bilinear& b) {
  std::size_t pos = 0;
  return write_tensor(b.c, {b.dim_out, b.dim_a, b.dim_b}, 0, pos);
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json vec_to_json(const Vec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(scalar_to_json(x));
  return arr;
}

AlgebraDocument parse_document(const json& j) {
  require(j.is_object(), ErrorKind::ParseError, "document must be a JSON object");
  require(j.contains("schema") && j.at("schema").is_number_integer() &&
              j.at("schema").get<int>() == 1,
          ErrorKind::ParseError, "document must declare \"schema\": 1");
  require(j.contains("field"), ErrorKind::ParseError, "document needs a 'field'");
  require(j.contains("dim_g") && j.contains("dim_h"), ErrorKind::ParseError,
          "document needs dim_g and dim_h");

  AlgebraDocument doc;
  doc.field = field_from_json(j.at("field"));
  doc.dim_g = j.at("dim_g").get<int>();
  doc.dim_h = j.at("dim_h").get<int>();
  require(doc.dim_g >= 0 && doc.dim_h >= 0 && doc.dim_g + doc.dim_h >= 1, ErrorKind::ShapeError,
          "dimensions must be nonnegative with dim_g + dim_h >= 1");
  if (j.contains("name")) doc.name = j.at("name").get<std::string>();
  if (j.contains("metadata")) doc.metadata = j.at("metadata");

  const int g = doc.dim_g, h = doc.dim_h;
  const Field& f = doc.field;
  require(j.contains("maps") && j.at("maps").is_object(), ErrorKind::ParseError,
          "document needs a 'maps' object");
  const json& maps = j.at("maps");
  auto need = [&](const char* key) -> const json& {
    require(maps.contains(key), ErrorKind::ParseError,
            std::string("maps is missing '") + key + "'");
    return maps.at(key);
  };

  MultiMap bg = read_multimap(need("bracket_g"), 2, g, g, f, "maps.bracket_g");
  MultiMap bh = read_multimap(need("bracket_h"), 2, h, h, f, "maps.bracket_h");
  MultiMap th = read_multimap(need("theta"), 2, g, h, f, "maps.theta");
  MultiMap et = read_multimap(need("eta"), 2, h, g, f, "maps.eta");
  Bilinear rl = read_bilinear(need("rho_l"), g, h, h, f, "maps.rho_l");
  Bilinear rr = read_bilinear(need("rho_r"), h, g, h, f, "maps.rho_r");
  Bilinear pl = read_bilinear(need("psi_l"), h, g, g, f, "maps.psi_l");
  Bilinear pr = read_bilinear(need("psi_r"), g, h, g, f, "maps.psi_r");
  doc.omega = OmegaStructure::assemble(SplitSpace{g, h, f}, std::move(bg), std::move(bh),
                                       std::move(rl), std::move(rr), std::move(pl), std::move(pr),
                                       std::move(th), std::move(et));

  if (j.contains("linear_maps")) {
    require(j.at("linear_maps").is_object(), ErrorKind::ParseError,
            "'linear_maps' must be an object");
    for (const auto& [name, mj] : j.at("linear_maps").items()) {
      std::vector<FieldScalar> flat;
      read_tensor(mj, {g, h}, 0, "linear_maps." + name, f, flat);
      Matrix m(g, h, f);
      std::size_t pos = 0;
      for (int a = 0; a < g; ++a)
        for (int b = 0; b < h; ++b) m.set(a, b, flat[pos++]);
      doc.linear_maps.emplace(name, std::move(m));
    }
  }
  return doc;
}

AlgebraDocument load_document(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::ParseError, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, "invalid JSON in '" + path + "': " + e.what());
  }
  return parse_document(j);
}

json document_to_json(const AlgebraDocument& doc) {
  json j;
  j["schema"] = 1;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["field"] = field_to_json(doc.field);
  j["dim_g"] = doc.dim_g;
  j["dim_h"] = doc.dim_h;
  json maps;
  maps["bracket_g"] = multimap_to_json(doc.omega.bracket_g);
  maps["bracket_h"] = multimap_to_json(doc.omega.bracket_h);
  maps["theta"] = multimap_to_json(doc.omega.theta);
  maps["eta"] = multimap_to_json(doc.omega.eta);
  maps["rho_l"] = bilinear_to_json(doc.omega.rho_l);
  maps["rho_r"] = bilinear_to_json(doc.omega.rho_r);
  maps["psi_l"] = bilinear_to_json(doc.omega.psi_l);
  maps["psi_r"] = bilinear_to_json(doc.omega.psi_r);
  j["maps"] = std::move(maps);
  if (!doc.linear_maps.empty()) {
    json lm;
    for (const auto& [name, m] : doc.linear_maps) lm[name] = matrix_to_json(m);
    j["linear_maps"] = std::move(lm);
  }
  if (!doc.metadata.is_null()) j["metadata"] = doc.metadata;
  return j;
}

void save_document(const AlgebraDocument& doc, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), ErrorKind::ParseError, "cannot open '" + path + "' for writing");
  out << document_to_json(doc).dump(2) << "\n";
}

}  // namespace ptl
