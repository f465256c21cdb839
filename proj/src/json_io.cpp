#include "degenkit/json_io.hpp"

#include <fstream>

#include "degenkit/error.hpp"

namespace degenkit {

namespace {

Symmetry detect_symmetry(const Algebra& a) {
  if (a.is_commutative()) return Symmetry::Commutative;
  if (a.is_anticommutative()) return Symmetry::Anticommutative;
  return Symmetry::None;
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("field '") + key + "': " + e.what());
  }
}

Scalar scalar_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (v.is_string()) return Scalar::parse(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw Error(ErrorCode::Parse, std::string("field '") + key + "' must be a string or integer");
}

}  // namespace

Json algebra_to_json(const Algebra& a) {
  const Symmetry s = detect_symmetry(a);
  Json products = Json::array();
  for (const auto& p : a.products(s))
    products.push_back({{"i", p.i}, {"j", p.j}, {"k", p.k}, {"c", p.coeff.str()}});
  return {{"dim", a.dim()},
          {"field", a.is_real() ? "Q" : "Qi"},
          {"symmetry", std::string(to_string(s))},
          {"products", products}};
}

Algebra algebra_from_json(const Json& j) {
  const long n = field<long>(j, "dim");
  if (n < 1) throw Error(ErrorCode::Parse, "dim must be positive");
  const Symmetry s = j.contains("symmetry") ? parse_symmetry(field<std::string>(j, "symmetry")) : Symmetry::None;
  std::string fld = j.contains("field") ? field<std::string>(j, "field") : "Q";
  if (fld != "Q" && fld != "Qi") throw Error(ErrorCode::Parse, "field must be Q or Qi");
  std::vector<Product> products;
  if (j.contains("products")) {
    const Json& ps = j.at("products");
    if (!ps.is_array()) throw Error(ErrorCode::Parse, "products must be an array");
    for (const auto& p : ps) {
      if (!p.contains("c")) throw Error(ErrorCode::Parse, "product without 'c'");
      Scalar c = scalar_field(p, "c");
      if (fld == "Q" && !c.is_real()) throw Error(ErrorCode::Parse, "complex coefficient in a field Q file");
      products.push_back({field<int>(p, "i"), field<int>(p, "j"), field<int>(p, "k"), c});
    }
  }
  return make_algebra(static_cast<std::size_t>(n), products, s);
}

Json witness_to_json(const Witness& w) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < w.matrix.rows(); ++r)
    for (std::size_t c = 0; c < w.matrix.cols(); ++c)
      if (!w.matrix(r, c).is_zero())
        entries.push_back({{"row", r + 1}, {"col", c + 1}, {"value", w.matrix(r, c).str()}});
  Json out{{"dim", w.dim}, {"kind", std::string(to_string(w.kind))}, {"entries", entries}};
  if (w.post_iso) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < w.post_iso->rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < w.post_iso->cols(); ++c) row.push_back((*w.post_iso)(r, c).str());
      rows.push_back(row);
    }
    out["post_iso"] = rows;
  }
  if (!w.source.empty()) out["source"] = w.source;
  if (!w.target.empty()) out["target"] = w.target;
  if (!w.anchor.empty()) out["anchor"] = w.anchor;
  return out;
}

Witness witness_from_json(const Json& j) {
  Witness w;
  const long n = field<long>(j, "dim");
  if (n < 1) throw Error(ErrorCode::Parse, "dim must be positive");
  w.dim = static_cast<std::size_t>(n);
  w.kind = j.contains("kind") ? parse_witness_kind(field<std::string>(j, "kind")) : WitnessKind::G;
  w.matrix = TMatrix(w.dim, w.dim);
  if (j.contains("entries")) {
    for (const auto& e : j.at("entries")) {
      const int r = field<int>(e, "row"), c = field<int>(e, "col");
      if (r < 1 || c < 1 || r > n || c > n)
        throw Error(ErrorCode::IndexOutOfRange, "witness entry out of range", {r, c});
      const Json& v = e.at("value");
      w.matrix(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)) =
          v.is_string() ? TPoly::parse(v.get<std::string>()) : TPoly(Scalar(v.get<long>()));
    }
  }
  if (j.contains("post_iso") && !j.at("post_iso").is_null()) {
    const Json& rows = j.at("post_iso");
    if (!rows.is_array() || rows.size() != w.dim) throw Error(ErrorCode::Parse, "post_iso must have dim rows");
    ScalarMatrix m(w.dim, w.dim);
    for (std::size_t r = 0; r < w.dim; ++r) {
      if (!rows[r].is_array() || rows[r].size() != w.dim)
        throw Error(ErrorCode::Parse, "post_iso row " + std::to_string(r + 1) + " must have dim entries");
      for (std::size_t c = 0; c < w.dim; ++c) {
        const Json& v = rows[r][c];
        m(r, c) = v.is_string() ? Scalar::parse(v.get<std::string>()) : Scalar(v.get<long>());
      }
    }
    w.post_iso = std::move(m);
  }
  if (j.contains("source")) w.source = field<std::string>(j, "source");
  if (j.contains("target")) w.target = field<std::string>(j, "target");
  if (j.contains("anchor")) w.anchor = field<std::string>(j, "anchor");
  return w;
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

namespace {

Json opt(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json subspace_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis_vectors()) basis.push_back(vec_to_json(v));
  return {{"dim", s.dim()}, {"basis", basis}};
}

}  // namespace

Json profile_to_json(const InvariantProfile& p) {
  return {{"dim", p.dim},
          {"associative", p.associative},
          {"lie", p.lie},
          {"jordan", p.jordan},
          {"commutative", p.commutative},
          {"anticommutative", p.anticommutative},
          {"nilpotent", p.nilpotent},
          {"nilpotency_class", opt(p.nilpotency_class)},
          {"solvable", p.solvable},
          {"solvability_index", opt(p.solvability_index)},
          {"lower_central_dims", p.lower_central_dims},
          {"derived_dims", p.derived_dims},
          {"plenary_dims", p.plenary_dims},
          {"dim_der", p.dim_der},
          {"dim_ann", p.dim_ann},
          {"coord_ab_dim", p.coord_ab_dim}};
}

Json verdict_to_json(const WitnessVerdict& v) {
  Json residuals = Json::array();
  for (const auto& r : v.residuals)
    residuals.push_back({{"i", r.i}, {"j", r.j}, {"k", r.k}, {"got", r.got.str()}, {"expected", r.expected.str()}});
  Json out{{"pass", v.pass()},
           {"limit_exists", v.limit_exists},
           {"limit_equals_target", v.limit_equals_target},
           {"proper", v.proper},
           {"residuals", residuals},
           {"source_dim_der", v.source_dim_der},
           {"target_dim_der", v.target_dim_der}};
  out["pole"] = v.pole ? Json(*v.pole) : Json(nullptr);
  out["limit"] = v.limit ? algebra_to_json(*v.limit) : Json(nullptr);
  return out;
}

Json pierce_to_json(const PierceSplit& s) {
  Json comps = Json::object();
  for (const auto& c : s.components) comps[c.name] = subspace_json(c.space);
  Json rules = Json::array();
  for (const auto& r : s.rules) {
    Json item{{"rule", r.rule}, {"holds", r.holds}};
    if (r.offending)
      item["offending"] = {{"left", vec_to_json(r.offending->left)},
                           {"right", vec_to_json(r.offending->right)},
                           {"product", vec_to_json(r.offending->product)}};
    else
      item["offending"] = nullptr;
    rules.push_back(item);
  }
  return {{"idempotent", vec_to_json(s.idempotent)}, {"components", comps}, {"rules", rules}};
}

Json obstructions_to_json(const std::vector<Obstruction>& obs) {
  Json out = Json::array();
  for (const auto& o : obs)
    out.push_back({{"kind", std::string(to_string(o.kind))},
                   {"source_value", o.source_value},
                   {"target_value", o.target_value},
                   {"detail", o.detail}});
  return out;
}

Json variety_report_to_json(const VarietyReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations)
    vs.push_back({{"identity", v.identity}, {"indices", v.indices}, {"residual", vec_to_json(v.residual)}});
  return {{"variety", std::string(to_string(r.variety))}, {"pass", r.pass}, {"violations", vs}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace degenkit
