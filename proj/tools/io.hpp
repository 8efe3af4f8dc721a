#pragma once

#include "hyptmp/measure.hpp"
#include "hyptmp/oracle.hpp"
#include "hyptmp/report.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace hyptmp::io {

using Json = nlohmann::ordered_json;

// Carries the offending field, e.g. "moments[3].value".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& field, const std::string& msg)
      : std::runtime_error(field + ": " + msg), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct Instance {
  CurveType curve;
  BivSeq moments;
};

Instance parse_instance(const Json& j);
Json to_json(const Instance& inst);

Json to_json(const SolveReport& r);
Json to_json(const PlaneMeasure& mu, unsigned digits);
// Exact ground-truth measure with rational strings.
Json to_json(const GroundTruth& g);

// Reads either an exact measure (rational strings) or a decimal one.
PlaneMeasure parse_measure(const Json& j, unsigned bits);

Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

}  // namespace hyptmp::io
