#ifndef BETTICERT_IO_HPP
#define BETTICERT_IO_HPP

// JSON file formats.
//
//   dataset:  {"half_dim": n, "fixed_points": [{"id": "e0", "weights": [1, 2], "moment": "0"}, ...]}
//   class:    {"degree": 2, "restrictions": {"e0": "1", "e1": "0", "e2": "-1"}}
//   model:    {"bases": {"0": [class, ...], "2": [class, ...], ...}}
//
// Rationals are written as strings "p/q" (or "p"); on input bare JSON
// integers are accepted too. Objects are written with a fixed key order so
// identical inputs give byte-identical output.

#include "betticert/certify.hpp"
#include "betticert/eqcalc.hpp"
#include "betticert/fixdata.hpp"

#include <json.hpp>

#include <filesystem>

namespace betticert::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const BettiProfile& b);

Json dataset_to_json(const FixedPointData& d);
FixedPointData dataset_from_json(const Json& j);

Json class_to_json(const EquivariantClass& c, const FixedPointData& d);
EquivariantClass class_from_json(const Json& j, const FixedPointData& d);

Json model_to_json(const CohomologyModel& model, const FixedPointData& d);
CohomologyModel model_from_json(const Json& j, const FixedPointData& d);

Json certificate_to_json(const Certificate& cert, const FixedPointData& d);

/// Throws InvalidInput when the file is missing or not valid JSON.
Json read_json(const std::filesystem::path& path);

/// Two-space indented, trailing newline.
std::string dump(const Json& j);
void write_json(const std::filesystem::path& path, const Json& j);

}  // namespace betticert::io

#endif  // BETTICERT_IO_HPP
