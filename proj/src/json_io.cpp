#include "kirwan/json_io.hpp"

#include <set>

#include "kirwan/error.hpp"

namespace kirwan {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::Schema, what); }

void expect_keys(const Json& obj, const std::set<std::string>& required,
                 const std::set<std::string>& optional, const std::string& where) {
  if (!obj.is_object()) schema(where + " must be an object");
  for (const auto& key : required)
    if (!obj.contains(key)) schema(where + " is missing field '" + key + "'");
  for (const auto& [key, _] : obj.items())
    if (!required.count(key) && !optional.count(key))
      schema(where + " has unexpected field '" + key + "'");
}

RestrictionTable table_from_json(const Json& j, const std::vector<FixedPoint>& points,
                                 const std::string& field) {
  if (!j.is_object()) schema(field + " must be an object");
  const std::size_t count = points.size();
  auto index = [&](const std::string& name) {
    for (std::size_t i = 0; i < count; ++i)
      if (points[i].name == name) return i;
    throw Error(ErrorKind::Validation, field + " names unknown fixed point '" + name + "'");
  };
  RestrictionTable t(count, count);
  for (const auto& [f, row] : j.items()) {
    const std::size_t i = index(f);
    if (!row.is_object()) schema(field + "[" + f + "] must be an object");
    for (const auto& [g, value] : row.items())
      t.at(i, index(g)) = rational_from_json(value, field + "[" + f + "][" + g + "]");
  }
  return t;
}

Json table_to_json(const ManifoldData& m, const RestrictionTable& t) {
  Json out = Json::object();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::object();
    for (std::size_t k = 0; k < m.size(); ++k)
      if (!t.at(i, k).is_zero()) row[m.point(k).name] = t.at(i, k).str();
    out[m.point(i).name] = std::move(row);
  }
  return out;
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where + " must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

ManifoldData load_manifold_unchecked(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
  expect_keys(doc, {"name", "n", "orientation_direction", "fixed_points", "alpha_minus"},
              {"alpha_plus"}, "manifold document");
  if (!doc["name"].is_string()) schema("name must be a string");
  if (!doc["n"].is_number_integer()) schema("n must be an integer");
  if (!doc["orientation_direction"].is_number_integer())
    schema("orientation_direction must be 1 or -1");
  if (!doc["fixed_points"].is_array()) schema("fixed_points must be an array");

  std::vector<FixedPoint> points;
  for (const auto& entry : doc["fixed_points"]) {
    expect_keys(entry, {"name", "moment", "weights"}, {}, "fixed point");
    if (!entry["name"].is_string()) schema("fixed point name must be a string");
    FixedPoint fp;
    fp.name = entry["name"].get<std::string>();
    fp.moment = rational_from_json(entry["moment"], "moment of '" + fp.name + "'");
    if (!entry["weights"].is_array()) schema("weights of '" + fp.name + "' must be an array");
    for (const auto& w : entry["weights"]) {
      if (!w.is_number_integer()) schema("weights of '" + fp.name + "' must be integers");
      fp.weights.push_back(w.get<std::int64_t>());
    }
    for (auto w : fp.weights)
      if (w == 0) throw Error(ErrorKind::Validation, "weights must be nonzero (at '" + fp.name + "')");
    points.push_back(std::move(fp));
  }
  const long n = doc["n"].get<long>();
  if (n <= 0) throw Error(ErrorKind::Validation, "n must be positive");
  for (const auto& fp : points)
    if (fp.weights.size() != static_cast<std::size_t>(n))
      throw Error(ErrorKind::Validation,
                  "fixed point '" + fp.name + "' has " + std::to_string(fp.weights.size()) +
                      " weights, expected n = " + std::to_string(n));

  RestrictionTable minus = table_from_json(doc["alpha_minus"], points, "alpha_minus");
  std::optional<RestrictionTable> plus;
  if (doc.contains("alpha_plus")) plus = table_from_json(doc["alpha_plus"], points, "alpha_plus");
  return ManifoldData::create(doc["name"].get<std::string>(), doc["orientation_direction"].get<int>(),
                              std::move(points), std::move(minus), std::move(plus));
}

ManifoldData load_manifold(std::string_view document) {
  ManifoldData m = load_manifold_unchecked(document);
  const ValidationReport report = validate_alpha_basis(m);
  if (!report.ok())
    throw Error(ErrorKind::Validation, std::string(to_string(report.violations.front().kind)) +
                                           ": " + report.violations.front().message);
  return m;
}

Json manifold_to_json(const ManifoldData& m) {
  Json doc;
  doc["name"] = m.name();
  doc["n"] = m.n();
  doc["orientation_direction"] = m.orientation_direction();
  Json points = Json::array();
  for (const auto& fp : m.fixed_points())
    points.push_back({{"name", fp.name}, {"moment", fp.moment.str()}, {"weights", fp.weights}});
  doc["fixed_points"] = std::move(points);
  doc["alpha_minus"] = table_to_json(m, m.alpha_minus());
  if (m.alpha_plus()) doc["alpha_plus"] = table_to_json(m, *m.alpha_plus());
  return doc;
}

std::string dump_manifold(const ManifoldData& m) { return manifold_to_json(m).dump(2) + "\n"; }

Json class_to_json(const ManifoldData& m, const EquivariantClass& eta) {
  Json r = Json::object();
  for (std::size_t k = 0; k < m.size(); ++k) r[m.point(k).name] = eta.scalars[k].str();
  return {{"degree", eta.degree}, {"restrictions", r}};
}

EquivariantClass class_from_json(const ManifoldData& m, const Json& j) {
  expect_keys(j, {"degree", "restrictions"}, {}, "class");
  if (!j["degree"].is_number_integer()) schema("class degree must be an integer");
  if (!j["restrictions"].is_object()) schema("class restrictions must be an object");
  EquivariantClass eta = zero_class(m, j["degree"].get<int>());
  for (const auto& [name, value] : j["restrictions"].items())
    eta.scalars[m.index_of(name)] = rational_from_json(value, "restriction at '" + name + "'");
  return eta;
}

}  // namespace kirwan
