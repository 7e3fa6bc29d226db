#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

#include "jetres/catalog.hpp"
#include "jetres/fan.hpp"
#include "jetres/jets.hpp"
#include "jetres/newton.hpp"
#include "jetres/poly.hpp"
#include "jetres/toric.hpp"

namespace jetres::io {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"vars": [...], "terms": [{"c": "<int>", "e": [...]}, ...]}
json to_json(const poly::Polynomial& p);
poly::Polynomial polynomial_from_json(const json& j);

json to_json(const lattice::Vec3& v);

// {"rays": [[a,b,c],...], "cones": [[i,j,k],...]}
json to_json(const fan::Fan& f);
fan::Fan fan_from_json(const json& j);

json to_json(const jets::JetGraph& g);
json to_json(const fan::SubdivisionReport& r);
json to_json(const newton::NondegeneracyReport& r);
json to_json(const toric::ChartReport& r);
json to_json(const toric::ResolutionReport& r);

// parses text, reporting the byte offset of a syntax error
json parse_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// pretty printed with a trailing newline
std::string dump(const json& j);

}  // namespace jetres::io
