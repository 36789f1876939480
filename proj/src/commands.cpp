#include "ptl/commands.hpp"

#include <sstream>

namespace ptl {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- presets

MultiMap bracket_from_entries(int dim, const Field& f,
                              const std::vector<std::tuple<int, int, int, long long>>& entries) {
  MultiMap b(2, dim, dim, f);
  for (auto& [out, i, j, v] : entries) {
    std::array<int, 2> idx{i, j};
    b.set_coeff(out, idx, FieldScalar::of(f, v));
  }
  return b;
}

// dim-2 nilpotent: [e1,e1] = e2
LeibnizAlgebra leib2(const Field& f) { return {2, bracket_from_entries(2, f, {{1, 0, 0, 1}})}; }

LeibnizAlgebra abelian(int dim, const Field& f) { return LeibnizAlgebra::abelian(dim, f); }

Bilinear bilinear_of(int da, int db, int dout, const Field& f,
                     const std::vector<std::tuple<int, int, int, long long>>& entries) {
  Bilinear b = Bilinear::zero(da, db, dout, f);
  for (auto& [out, a, bb, v] : entries) b.at(out, a, bb) = FieldScalar::of(f, v);
  return b;
}

Bilinear bilinear_from_bracket(const MultiMap& br) {
  Bilinear b = Bilinear::zero(br.domain_dim(), br.domain_dim(), br.codomain_dim(), br.field());
  for (int j = 0; j < br.codomain_dim(); ++j)
    for (int a = 0; a < br.domain_dim(); ++a)
      for (int c = 0; c < br.domain_dim(); ++c) {
        std::array<int, 2> idx{a, c};
        b.at(j, a, c) = br.coeff(j, idx);
      }
  return b;
}

Matrix matrix_of(int rows, int cols, const Field& f,
                 const std::vector<std::tuple<int, int, long long>>& entries) {
  Matrix m(rows, cols, f);
  for (auto& [i, j, v] : entries) m.set(i, j, FieldScalar::of(f, v));
  return m;
}

ExampleInputs preset_inputs(ExampleKind kind, const Field& f) {
  ExampleInputs in{leib2(f)};
  switch (kind) {
    case ExampleKind::DirectProduct:
      in.h = leib2(f);
      break;
    case ExampleKind::Semidirect:
      in.rep = Representation::zero(2, 1, f);
      break;
    case ExampleKind::DerivationHost:
      in.rep = adjoint_rep(in.g);
      break;
    case ExampleKind::Weight1Semidirect:
    case ExampleKind::CrossedHomHost: {
      // g one-dimensional abelian acting on h = leib2 by
      //   rho^L(x, u1) = u1, rho^L(x, u2) = 2 u2, rho^R(u1, x) = -u1
      in.g = abelian(1, f);
      in.h = leib2(f);
      Representation rep = Representation::zero(1, 2, f);
      rep.rho_l = bilinear_of(1, 2, 2, f, {{0, 0, 0, 1}, {1, 0, 1, 2}});
      rep.rho_r = bilinear_of(2, 1, 2, f, {{0, 0, 0, -1}});
      in.rep = rep;
      break;
    }
    case ExampleKind::Modified:
    case ExampleKind::Reynolds:
      break;
    case ExampleKind::ThetaTwisted: {
      in.rep = Representation::zero(2, 1, f);
      MultiMap th(2, 2, 1, f);
      std::array<int, 2> idx{0, 0};
      th.set_coeff(0, idx, FieldScalar::one(f));  // theta(e1,e1) = v
      in.theta = th;
      break;
    }
    case ExampleKind::HemiSemidirect:
      in.g = abelian(2, f);
      in.lie_action = bilinear_of(2, 1, 1, f, {{0, 0, 0, 1}});  // rho(e1) v = v
      break;
    case ExampleKind::MatchedPair: {
      // the 2-dim Lie algebra [a,b] = b split as g = span(b), h = span(a)
      in.g = abelian(1, f);
      in.h = abelian(1, f);
      in.rho_l = Bilinear::zero(1, 1, 1, f);
      in.rho_r = Bilinear::zero(1, 1, 1, f);
      in.psi_l = bilinear_of(1, 1, 1, f, {{0, 0, 0, 1}});   // psi^L(a, b) = b
      in.psi_r = bilinear_of(1, 1, 1, f, {{0, 0, 0, -1}});  // psi^R(b, a) = -b
      break;
    }
    case ExampleKind::RMatrixHost:
      in.sym = matrix_of(2, 2, f, {{1, 1, 1}});  // s = e2 (x) e2
      break;
  }
  return in;
}

std::map<std::string, Matrix> preset_maps(ExampleKind kind, const Field& f) {
  std::map<std::string, Matrix> maps;
  switch (kind) {
    case ExampleKind::DirectProduct:
      maps.emplace("id", Matrix::identity(2, f));
      maps.emplace("r2", matrix_of(2, 2, f, {{0, 1, 1}, {1, 0, 1}}));
      break;
    case ExampleKind::Semidirect:
      maps.emplace("r0", Matrix(2, 1, f));
      maps.emplace("r1", matrix_of(2, 1, f, {{1, 0, 1}}));
      maps.emplace("r2", matrix_of(2, 1, f, {{0, 0, 1}}));
      break;
    case ExampleKind::DerivationHost:
      maps.emplace("d1", matrix_of(2, 2, f, {{0, 0, 1}, {1, 1, 2}}));
      maps.emplace("d2", matrix_of(2, 2, f, {{0, 1, 1}}));
      break;
    case ExampleKind::Weight1Semidirect:
      maps.emplace("r1", matrix_of(1, 2, f, {{0, 0, 1}}));
      maps.emplace("r2", matrix_of(1, 2, f, {{0, 1, 1}}));
      break;
    case ExampleKind::CrossedHomHost:
      maps.emplace("r1", Matrix(2, 1, f));
      maps.emplace("r2", matrix_of(2, 1, f, {{0, 0, 1}}));
      if (f.is_rational()) maps.emplace("r3", matrix_of(2, 1, f, {{0, 0, 2}, {1, 0, -2}}));
      break;
    case ExampleKind::Modified:
      maps.emplace("id", Matrix::identity(2, f));
      maps.emplace("zero", Matrix(2, 2, f));
      break;
    case ExampleKind::ThetaTwisted:
      maps.emplace("r1", matrix_of(2, 1, f, {{1, 0, 1}}));
      maps.emplace("r2", matrix_of(2, 1, f, {{0, 0, 1}}));
      break;
    case ExampleKind::Reynolds:
      maps.emplace("id", Matrix::identity(2, f));
      maps.emplace("r2", matrix_of(2, 2, f, {{0, 0, 1}}));
      break;
    case ExampleKind::HemiSemidirect:
      maps.emplace("r1", matrix_of(2, 1, f, {{1, 0, 1}}));
      maps.emplace("r2", matrix_of(2, 1, f, {{0, 0, 1}}));
      break;
    case ExampleKind::MatchedPair:
      maps.emplace("r0", Matrix(1, 1, f));
      maps.emplace("r1", matrix_of(1, 1, f, {{0, 0, 1}}));
      break;
    case ExampleKind::RMatrixHost:
      maps.emplace("s_sharp", matrix_of(2, 2, f, {{1, 1, 1}}));
      maps.emplace("s_bad", matrix_of(2, 2, f, {{0, 0, 1}}));
      break;
  }
  return maps;
}

// ------------------------------------------------------- report helpers

json triple_violations_json(const std::vector<TripleViolation>& violations) {
  json arr = json::array();
  for (const auto& v : violations)
    arr.push_back(json{{"triple", {v.triple[0], v.triple[1], v.triple[2]}},
                       {"residual", vec_to_json(v.residual)}});
  return arr;
}

json leibniz_report_json(const LeibnizCheckReport& rep) {
  json j;
  j["ok"] = rep.ok;
  j["mc_bracket_zero"] = rep.mc_zero;
  if (!rep.ok) j["violations"] = triple_violations_json(rep.violations);
  if (!rep.mc_zero) j["mc_bracket"] = multimap_to_json(rep.mc_tensor);
  return j;
}

json proto_report_json(const ProtoCheckReport& rep) {
  json j;
  j["ok"] = rep.leibniz_ok;
  j["quasi_twilled"] = rep.quasi_twilled;
  j["twilled"] = rep.twilled;
  json eqs = json::array();
  for (const auto& eq : rep.equations) {
    json e{{"name", eq.name}, {"ok", eq.ok}};
    if (!eq.ok) e["residual"] = multimap_to_json(eq.residual);
    eqs.push_back(std::move(e));
  }
  j["equations"] = std::move(eqs);
  if (!rep.leibniz_ok) j["omega_bracket"] = multimap_to_json(rep.omega_square);
  return j;
}

json deformation_report_json(const DeformationCheckReport& rep) {
  json j;
  j["ok"] = rep.is_deformation;
  j["identity_ok"] = rep.identity_ok;
  j["graph_closed"] = rep.graph_ok;
  if (!rep.identity_ok) j["residual"] = multimap_to_json(rep.residual);
  return j;
}

json cohomology_table_json(const std::vector<CohomologyRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back(json{{"n", r.n},
                       {"cochain_dim", r.cochain_dim},
                       {"cocycles", r.cocycles},
                       {"coboundaries", r.coboundaries},
                       {"cohomology", r.cohomology}});
  return arr;
}

json defect_json(const GradedElement& defect) {
  json j;
  j["zero"] = defect.is_zero();
  if (defect.suspended && !defect.suspended->is_zero())
    j["suspended_part"] = multimap_to_json(*defect.suspended);
  if (defect.direct && !defect.direct->is_zero())
    j["direct_part"] = multimap_to_json(*defect.direct);
  return j;
}

json base_report(const std::string& command, const CommandOptions& opts,
                 const AlgebraDocument* doc) {
  json j;
  j["command"] = command;
  if (!opts.doc_path.empty()) j["input"] = opts.doc_path;
  if (doc && !doc->name.empty()) j["document"] = doc->name;
  return j;
}

const std::string& required_map(const CommandOptions& opts) {
  require(!opts.map_name.empty(), ErrorKind::UnknownCommand, "this command needs --map NAME");
  return opts.map_name;
}

Field parse_field_spec(const std::string& spec) {
  if (spec.empty() || spec == "rational" || spec == "q" || spec == "Q") return Field::rationals();
  try {
    return Field::prime(std::stoll(spec));
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "bad --field value '" + spec + "' (use 'rational' or a prime)");
  }
}

// deterministic small pseudo-random matrices over Q for sampling checks
std::vector<Matrix> sample_rational_maps(int rows, int cols, int count) {
  std::vector<Matrix> out;
  unsigned long state = 0x5eed5eedUL;
  auto next = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % 5) - 2;  // -2..2
  };
  const Field f = Field::rationals();
  for (int t = 0; t < count; ++t) {
    Matrix m(rows, cols, f);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.set(i, j, FieldScalar::of(f, next()));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

PairSubalgebra parse_subalgebra(const std::string& name) {
  if (name == "full") return PairSubalgebra::Full;
  if (name == "b-prime") return PairSubalgebra::BPrime;
  if (name == "b-double-prime") return PairSubalgebra::BDoublePrime;
  if (name == "m") return PairSubalgebra::M;
  fail(ErrorKind::UnknownCommand,
       "unknown subalgebra '" + name + "' (use full, b-prime, b-double-prime or m)");
}

AlgebraDocument zoo_preset_document(ExampleKind kind, const Field& f) {
  ExampleInputs in = preset_inputs(kind, f);
  OmegaStructure om = build(kind, in);
  AlgebraDocument doc;
  doc.field = f;
  doc.dim_g = om.space.dim_g;
  doc.dim_h = om.space.dim_h;
  doc.omega = om;
  doc.linear_maps = preset_maps(kind, f);
  doc.name = std::string("zoo-") + example_kind_name(kind) + "-" + f.str();
  doc.metadata = json{{"kind", example_kind_name(kind)}};
  return doc;
}

ExampleInputs extract_example_inputs(ExampleKind kind, const AlgebraDocument& doc) {
  const OmegaStructure& om = doc.omega;
  const Field& f = doc.field;
  const int g = doc.dim_g, h = doc.dim_h;
  ExampleInputs in{LeibnizAlgebra{g, om.bracket_g}};

  switch (kind) {
    case ExampleKind::DirectProduct:
      in.h = LeibnizAlgebra{h, om.bracket_h};
      break;
    case ExampleKind::Semidirect:
      in.rep = Representation{h, om.rho_l, om.rho_r};
      break;
    case ExampleKind::DerivationHost:
      in.g = LeibnizAlgebra{h, om.bracket_h};
      in.rep = Representation{g, om.psi_l, om.psi_r};
      break;
    case ExampleKind::Weight1Semidirect:
      in.h = LeibnizAlgebra{h, om.bracket_h};
      in.rep = Representation{h, om.rho_l, om.rho_r};
      break;
    case ExampleKind::CrossedHomHost:
      in.g = LeibnizAlgebra{h, om.bracket_h};
      in.h = LeibnizAlgebra{g, om.bracket_g};
      in.rep = Representation{g, om.psi_l, om.psi_r};
      break;
    case ExampleKind::Modified:
      require(g == h, ErrorKind::InvalidExampleInput, "modified host needs dim_g == dim_h");
      break;
    case ExampleKind::ThetaTwisted:
      in.rep = Representation{h, om.rho_l, om.rho_r};
      in.theta = om.theta;
      break;
    case ExampleKind::Reynolds:
      require(g == h, ErrorKind::InvalidExampleInput, "Reynolds host needs dim_g == dim_h");
      break;
    case ExampleKind::HemiSemidirect:
      in.lie_action = om.rho_l;
      break;
    case ExampleKind::MatchedPair:
      in.h = LeibnizAlgebra{h, om.bracket_h};
      in.rho_l = om.rho_l;
      in.rho_r = om.rho_r;
      in.psi_l = om.psi_l;
      in.psi_r = om.psi_r;
      break;
    case ExampleKind::RMatrixHost:
      in.sym = Matrix(g, g, f);  // any symmetric tensor rebuilds the same host
      require(g == h, ErrorKind::InvalidExampleInput,
              "r-matrix host needs dim_h == dim_g (h is the dual space)");
      break;
  }
  OmegaStructure rebuilt = build(kind, in);
  require(rebuilt.omega == om.omega, ErrorKind::InvalidExampleInput,
          std::string("document does not have the shape of a ") + example_kind_name(kind) +
              " structure");
  return in;
}

CommandResult run_command(const std::string& command, const CommandOptions& opts) {
  CommandResult res;

  if (command == "check-leibniz") {
    AlgebraDocument doc = load_document(opts.doc_path);
    const MultiMap* target = &doc.omega.omega;
    if (opts.on == "g")
      target = &doc.omega.bracket_g;
    else if (opts.on == "h")
      target = &doc.omega.bracket_h;
    else
      require(opts.on == "total", ErrorKind::UnknownCommand,
              "--on must be one of total, g, h");
    LeibnizCheckReport rep = check_leibniz(*target);
    res.report = base_report(command, opts, &doc);
    res.report["on"] = opts.on;
    res.report["verdict"] = rep.ok;
    res.report["evidence"] = leibniz_report_json(rep);
    res.exit_code = rep.ok ? 0 : 1;
    return res;
  }

  if (command == "check-proto") {
    AlgebraDocument doc = load_document(opts.doc_path);
    ProtoCheckReport rep = check_proto_twilled(doc.omega);
    res.report = base_report(command, opts, &doc);
    res.report["verdict"] = rep.leibniz_ok;
    res.report["evidence"] = proto_report_json(rep);
    res.exit_code = rep.leibniz_ok ? 0 : 1;
    return res;
  }

  if (command == "is-deformation-map") {
    AlgebraDocument doc = load_document(opts.doc_path);
    DeformationCheckReport rep = is_deformation_map(doc.map_by_name(required_map(opts)), doc.omega);
    res.report = base_report(command, opts, &doc);
    res.report["map"] = opts.map_name;
    res.report["verdict"] = rep.is_deformation;
    res.report["evidence"] = deformation_report_json(rep);
    res.exit_code = rep.is_deformation ? 0 : 1;
    return res;
  }

  if (command == "induced") {
    AlgebraDocument doc = load_document(opts.doc_path);
    const Matrix& r = doc.map_by_name(required_map(opts));
    LeibnizAlgebra hr = induced_bracket(r, doc.omega);
    Representation rep = induced_representation(r, doc.omega);
    LeibnizCheckReport chk = check_leibniz(hr.bracket);
    RepresentationCheckReport rchk = check_representation(hr, rep);
    res.report = base_report(command, opts, &doc);
    res.report["map"] = opts.map_name;
    res.report["verdict"] = chk.ok && rchk.ok;
    res.report["evidence"] =
        json{{"induced_bracket", multimap_to_json(hr.bracket)},
             {"psi_l_r", bilinear_to_json(rep.rho_l)},
             {"psi_r_r", bilinear_to_json(rep.rho_r)},
             {"bracket_is_leibniz", chk.ok},
             {"representation_ok", rchk.ok}};
    res.exit_code = (chk.ok && rchk.ok) ? 0 : 1;
    return res;
  }

  if (command == "twist") {
    AlgebraDocument doc = load_document(opts.doc_path);
    const Matrix& r = doc.map_by_name(required_map(opts));
    OmegaStructure om_r = twist_omega(r, doc.omega);
    ProtoCheckReport chk = check_proto_twilled(om_r);
    AlgebraDocument out;
    out.field = doc.field;
    out.dim_g = doc.dim_g;
    out.dim_h = doc.dim_h;
    out.omega = om_r;
    out.linear_maps = doc.linear_maps;
    out.name = doc.name.empty() ? "twisted" : doc.name + "-twisted-" + opts.map_name;
    if (!opts.out_path.empty()) save_document(out, opts.out_path);
    res.report = base_report(command, opts, &doc);
    res.report["map"] = opts.map_name;
    res.report["verdict"] = chk.leibniz_ok;
    res.report["evidence"] = json{{"proto_twilled", chk.leibniz_ok},
                                  {"quasi_twilled", chk.quasi_twilled},
                                  {"twilled", chk.twilled},
                                  {"eta_r_zero", om_r.eta_tilde.is_zero()}};
    res.report["twisted_document"] = document_to_json(out);
    res.exit_code = chk.leibniz_ok ? 0 : 1;
    return res;
  }

  if (command == "cohomology") {
    AlgebraDocument doc = load_document(opts.doc_path);
    const Matrix& r = doc.map_by_name(required_map(opts));
    auto rows = deformation_cohomology(r, doc.omega, opts.max_degree);
    res.report = base_report(command, opts, &doc);
    res.report["map"] = opts.map_name;
    res.report["max_degree"] = opts.max_degree;
    res.report["verdict"] = true;
    res.report["evidence"] = json{{"table", cohomology_table_json(rows)}};
    res.exit_code = 0;
    return res;
  }

  if (command == "mc-check") {
    AlgebraDocument doc = load_document(opts.doc_path);
    const Matrix& r = doc.map_by_name(required_map(opts));
    CurvedLInfty L = controlling_algebra(doc.omega);
    MultiMap rmap(1, doc.dim_h, doc.dim_g, doc.field);
    for (int i = 0; i < doc.dim_g; ++i)
      for (int j = 0; j < doc.dim_h; ++j) {
        std::array<int, 1> idx{j};
        rmap.set_coeff(i, idx, r.at(i, j));
      }
    GradedElement defect = mc_defect(L, GradedElement::a_element(rmap));
    res.report = base_report(command, opts, &doc);
    res.report["map"] = opts.map_name;
    res.report["verdict"] = defect.is_zero();
    res.report["evidence"] = json{{"defect", defect_json(defect)}};
    res.exit_code = defect.is_zero() ? 0 : 1;
    return res;
  }

  if (command == "governing-check") {
    AlgebraDocument doc = load_document(opts.doc_path);
    const Matrix& r = doc.map_by_name(required_map(opts));
    require(!opts.candidate_name.empty(), ErrorKind::UnknownCommand,
            "governing-check needs --candidate NAME");
    const Matrix& rp = doc.map_by_name(opts.candidate_name);
    CurvedLInfty gov = governing_algebra(doc.omega, r);
    MultiMap rpmap(1, doc.dim_h, doc.dim_g, doc.field);
    for (int i = 0; i < doc.dim_g; ++i)
      for (int j = 0; j < doc.dim_h; ++j) {
        std::array<int, 1> idx{j};
        rpmap.set_coeff(i, idx, rp.at(i, j));
      }
    GradedElement defect = mc_defect(gov, GradedElement::a_element(rpmap));
    bool sum_is_deformation = is_deformation_map(r + rp, doc.omega).is_deformation;
    res.report = base_report(command, opts, &doc);
    res.report["map"] = opts.map_name;
    res.report["candidate"] = opts.candidate_name;
    res.report["verdict"] = defect.is_zero();
    res.report["evidence"] = json{{"defect", defect_json(defect)},
                                  {"sum_is_deformation_map", sum_is_deformation},
                                  {"consistent", defect.is_zero() == sum_is_deformation}};
    res.exit_code = defect.is_zero() ? 0 : 1;
    return res;
  }

  if (command == "pair-mc-check") {
    AlgebraDocument doc = load_document(opts.doc_path);
    const Matrix& r = doc.map_by_name(required_map(opts));
    CurvedLInfty pair = pair_algebra(doc.omega.space, parse_subalgebra(opts.subalgebra), 4);
    MultiMap rmap(1, doc.dim_h, doc.dim_g, doc.field);
    for (int i = 0; i < doc.dim_g; ++i)
      for (int j = 0; j < doc.dim_h; ++j) {
        std::array<int, 1> idx{j};
        rmap.set_coeff(i, idx, r.at(i, j));
      }
    GradedElement alpha = GradedElement::pair(doc.omega.omega, rmap);
    GradedElement defect = mc_defect(pair, alpha);
    res.report = base_report(command, opts, &doc);
    res.report["map"] = opts.map_name;
    res.report["subalgebra"] = opts.subalgebra;
    res.report["verdict"] = defect.is_zero();
    res.report["evidence"] = json{{"defect", defect_json(defect)}};
    res.exit_code = defect.is_zero() ? 0 : 1;
    return res;
  }

  if (command == "enumerate") {
    AlgebraDocument doc = load_document(opts.doc_path);
    long total = deformation_scan_size(doc.omega, opts.budget);
    auto maps = enumerate_deformation_maps(doc.omega, opts.budget);
    res.report = base_report(command, opts, &doc);
    res.report["verdict"] = true;
    json list = json::array();
    for (const auto& m : maps) list.push_back(matrix_to_json(m));
    res.report["evidence"] =
        json{{"candidates", total}, {"count", static_cast<long>(maps.size())}, {"maps", list}};
    res.exit_code = 0;
    return res;
  }

  if (command == "zoo-build") {
    auto kind = example_kind_from_name(opts.kind);
    require(kind.has_value(), ErrorKind::UnknownCommand,
            "unknown --kind '" + opts.kind + "'");
    AlgebraDocument doc = zoo_preset_document(*kind, parse_field_spec(opts.field_spec));
    ProtoCheckReport chk = check_proto_twilled(doc.omega);
    if (!opts.out_path.empty()) save_document(doc, opts.out_path);
    res.report = base_report(command, opts, nullptr);
    res.report["kind"] = opts.kind;
    res.report["verdict"] = chk.leibniz_ok;
    res.report["evidence"] = json{{"proto_twilled", chk.leibniz_ok},
                                  {"quasi_twilled", chk.quasi_twilled},
                                  {"twilled", chk.twilled}};
    res.report["built_document"] = document_to_json(doc);
    res.exit_code = chk.leibniz_ok ? 0 : 1;
    return res;
  }

  if (command == "zoo-verify") {
    AlgebraDocument doc = load_document(opts.doc_path);
    auto kind = example_kind_from_name(opts.kind);
    require(kind.has_value(), ErrorKind::UnknownCommand,
            "unknown --kind '" + opts.kind + "'");
    ExampleInputs in = extract_example_inputs(*kind, doc);
    EquivalenceReport rep;
    std::string mode;
    if (doc.field.is_rational()) {
      std::vector<Matrix> samples;
      for (const auto& [name, m] : doc.linear_maps) samples.push_back(m);
      auto extra = sample_rational_maps(doc.dim_g, doc.dim_h, 25);
      samples.insert(samples.end(), extra.begin(), extra.end());
      rep = equivalence_check(*kind, in, samples);
      mode = "sampled";
    } else {
      rep = equivalence_check_exhaustive(*kind, in, opts.budget);
      mode = "exhaustive";
    }
    res.report = base_report(command, opts, &doc);
    res.report["kind"] = opts.kind;
    res.report["verdict"] = rep.ok;
    res.report["evidence"] = json{{"mode", mode},
                                  {"tested", rep.tested},
                                  {"deformation_maps", rep.deformation_maps},
                                  {"divergences", rep.divergences}};
    res.exit_code = rep.ok ? 0 : 1;
    return res;
  }

  fail(ErrorKind::UnknownCommand, "unknown command '" + command + "'");
}

std::string render_text(const json& report) {
  std::ostringstream os;
  os << "command:  " << report.value("command", std::string("?")) << "\n";
  if (report.contains("input")) os << "input:    " << report["input"].get<std::string>() << "\n";
  if (report.contains("document"))
    os << "document: " << report["document"].get<std::string>() << "\n";
  for (const char* key : {"on", "map", "candidate", "subalgebra", "kind"})
    if (report.contains(key)) os << key << ": " << report[key].get<std::string>() << "\n";
  if (report.contains("verdict"))
    os << "verdict:  " << (report["verdict"].get<bool>() ? "pass" : "FAIL") << "\n";
  if (report.contains("evidence")) {
    const json& ev = report["evidence"];
    if (ev.contains("table")) {
      os << "  n  dim C^n  dim Z^n  dim B^n  dim H^n\n";
      for (const auto& row : ev["table"])
        os << "  " << row["n"].get<int>() << "  " << row["cochain_dim"].get<int>() << "  "
           << row["cocycles"].get<int>() << "  " << row["coboundaries"].get<int>() << "  "
           << row["cohomology"].get<int>() << "\n";
    } else {
      os << "evidence: " << ev.dump(2) << "\n";
    }
  }
  if (report.contains("error")) os << "error: " << report["error"].dump(2) << "\n";
  return os.str();
}

}  // namespace ptl
