#include "betticert/io.hpp"

#include "betticert/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace betticert::io {

namespace {

const Json& field(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string(where) + ": missing field '" + key + "'");
  return j.at(key);
}

long integer_field(const Json& j, const char* where) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(where) + ": expected an integer");
  return j.get<long>();
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw InvalidInput("rational must be a string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

Json to_json(const BettiProfile& b) { return Json(b.values); }

Json dataset_to_json(const FixedPointData& d) {
  Json points = Json::array();
  for (const auto& p : d.points()) {
    Json jp;
    jp["id"] = p.id;
    jp["weights"] = p.weights;
    jp["moment"] = to_json(p.moment);
    points.push_back(std::move(jp));
  }
  Json j;
  j["half_dim"] = d.half_dim();
  j["fixed_points"] = std::move(points);
  return j;
}

FixedPointData dataset_from_json(const Json& j) {
  const long n = integer_field(field(j, "half_dim", "dataset"), "half_dim");
  const Json& list = field(j, "fixed_points", "dataset");
  if (!list.is_array()) throw InvalidInput("dataset: 'fixed_points' must be an array");
  std::vector<FixedPoint> points;
  for (const auto& jp : list) {
    const Json& id = field(jp, "id", "fixed point");
    if (!id.is_string()) throw InvalidInput("fixed point: 'id' must be a string");
    FixedPoint p{id.get<std::string>(), {}, rational_from_json(field(jp, "moment", "fixed point"))};
    const Json& weights = field(jp, "weights", "fixed point");
    if (!weights.is_array()) throw InvalidInput("fixed point '" + p.id + "': 'weights' must be an array");
    for (const auto& w : weights) p.weights.push_back(integer_field(w, "weight"));
    points.push_back(std::move(p));
  }
  return FixedPointData(static_cast<int>(n), std::move(points));
}

Json class_to_json(const EquivariantClass& c, const FixedPointData& d) {
  Json restrictions = Json::object();
  for (std::size_t z = 0; z < d.size(); ++z)
    restrictions[d[z].id] = to_json(c.restrictions(static_cast<Eigen::Index>(z)));
  Json j;
  j["degree"] = c.degree;
  j["restrictions"] = std::move(restrictions);
  return j;
}

EquivariantClass class_from_json(const Json& j, const FixedPointData& d) {
  const long degree = integer_field(field(j, "degree", "class"), "degree");
  if (degree < 0 || degree % 2 != 0) throw InvalidInput("class degree must be even and nonnegative");
  const Json& restrictions = field(j, "restrictions", "class");
  if (!restrictions.is_object()) throw InvalidInput("class: 'restrictions' must be an object keyed by point id");
  if (restrictions.size() != d.size())
    throw InvalidInput("class has " + std::to_string(restrictions.size()) + " restrictions, dataset has " +
                       std::to_string(d.size()) + " points");
  EquivariantClass c{static_cast<int>(degree), RationalVector(static_cast<Eigen::Index>(d.size()))};
  for (const auto& [id, value] : restrictions.items())
    c.restrictions(static_cast<Eigen::Index>(d.position(id))) = rational_from_json(value);
  return c;
}

Json model_to_json(const CohomologyModel& model, const FixedPointData& d) {
  Json bases = Json::object();
  for (const auto& [k, basis] : model.bases) {
    Json list = Json::array();
    for (const auto& c : basis) list.push_back(class_to_json(c, d));
    bases[std::to_string(2 * k)] = std::move(list);
  }
  Json j;
  j["bases"] = std::move(bases);
  return j;
}

CohomologyModel model_from_json(const Json& j, const FixedPointData& d) {
  const Json& bases = field(j, "bases", "model");
  if (!bases.is_object()) throw InvalidInput("model: 'bases' must be an object keyed by degree");
  CohomologyModel model;
  for (const auto& [key, list] : bases.items()) {
    int degree = 0;
    try {
      std::size_t used = 0;
      degree = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InvalidInput("model: degree key '" + key + "' is not an integer");
    }
    if (degree < 0 || degree % 2 != 0) throw InvalidInput("model: degree key '" + key + "' must be even");
    if (!list.is_array()) throw InvalidInput("model: basis for degree " + key + " must be an array");
    auto& basis = model.bases[degree / 2];
    for (const auto& jc : list) {
      EquivariantClass c = class_from_json(jc, d);
      if (c.degree != degree) throw InvalidInput("model: class of degree " + std::to_string(c.degree) +
                                                 " listed under degree " + key);
      basis.push_back(std::move(c));
    }
  }
  return model;
}

Json certificate_to_json(const Certificate& cert, const FixedPointData& d) {
  Json j;
  j["verdict"] = to_string(cert.verdict);
  j["profile"] = to_json(cert.profile);
  if (cert.k) j["k"] = *cert.k;
  if (cert.alpha) j["alpha"] = class_to_json(*cert.alpha, d);
  if (cert.target) {
    Json t;
    t["P1"] = cert.target->p1;
    t["P2"] = cert.target->p2;
    t["P3"] = cert.target->p3;
    j["target"] = std::move(t);
  }
  if (cert.partition) {
    j["groups"] = cert.partition->groups;
    Json seps = Json::array();
    for (const auto& r : cert.partition->separators) seps.push_back(to_json(r));
    j["separators"] = std::move(seps);
  }
  if (cert.ledger) {
    const SignLedger& ledger = *cert.ledger;
    Json beta = Json::object();
    for (std::size_t z = 0; z < d.size(); ++z) beta[d[z].id] = to_json(ledger.beta(static_cast<Eigen::Index>(z)));
    j["beta"] = std::move(beta);
    Json subtotals = Json::array();
    for (const auto& s : ledger.subtotals) subtotals.push_back(to_json(s));
    j["subtotals"] = std::move(subtotals);
    j["normalized_signs"] = ledger.normalized_signs;
    j["total"] = to_json(ledger.total);
  }
  j["explanation"] = cert.explanation;
  return j;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  out << dump(j);
}

}  // namespace betticert::io
