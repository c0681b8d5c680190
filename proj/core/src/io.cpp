#include "upsilon/io.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace upsilon::io {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& what) {
  throw DocumentError(DocumentError::Kind::Schema, what);
}

const json& field(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) schema_error(where + ": missing field '" + key + "'");
  return *it;
}

int integer_field(const json& object, const char* key, const std::string& where) {
  const json& value = field(object, key, where);
  if (!value.is_number_integer()) {
    schema_error(where + ": field '" + key + "' must be an integer");
  }
  const auto wide = value.get<std::int64_t>();
  if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max()) {
    schema_error(where + ": field '" + key + "' is out of range");
  }
  return static_cast<int>(wide);
}

std::string string_field(const json& object, const char* key, const std::string& where) {
  const json& value = field(object, key, where);
  if (!value.is_string()) schema_error(where + ": field '" + key + "' must be a string");
  return value.get<std::string>();
}

}  // namespace

ComplexDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw DocumentError(DocumentError::Kind::Syntax,
                        "syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) schema_error("document must be a JSON object");

  ComplexDocument out;
  out.name = string_field(doc, "name", "document");

  const json& gens = field(doc, "generators", "document");
  if (!gens.is_array()) schema_error("'generators' must be an array");
  std::vector<Generator> generators;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string where = "generators[" + std::to_string(k) + "]";
    if (!gens[k].is_object()) schema_error(where + " must be an object");
    generators.push_back({string_field(gens[k], "id", where), integer_field(gens[k], "maslov", where),
                          integer_field(gens[k], "alg", where), integer_field(gens[k], "alex", where)});
  }

  Complex::Arrows arrows;
  if (doc.contains("differential")) {
    const json& diff = doc["differential"];
    if (!diff.is_array()) schema_error("'differential' must be an array");
    for (std::size_t k = 0; k < diff.size(); ++k) {
      const std::string where = "differential[" + std::to_string(k) + "]";
      if (!diff[k].is_object()) schema_error(where + " must be an object");
      const std::string from = string_field(diff[k], "from", where);
      const json& to = field(diff[k], "to", where);
      if (!to.is_array()) schema_error(where + ": 'to' must be an array");
      std::vector<std::string> targets;
      for (const auto& id : to) {
        if (!id.is_string()) schema_error(where + ": 'to' entries must be strings");
        targets.push_back(id.get<std::string>());
      }
      arrows.emplace_back(from, std::move(targets));
    }
  }

  try {
    out.complex = Complex::from_ids(std::move(generators), arrows);
  } catch (const ComplexError& e) {
    const std::string what = e.what();
    const auto kind = what.rfind("unknown generator id", 0) == 0 ? DocumentError::Kind::UnknownId
                                                                 : DocumentError::Kind::Schema;
    throw DocumentError(kind, what);
  }
  return out;
}

Complex parse_complex(std::string_view text) {
  ComplexDocument doc = parse_document(text);
  const ValidationReport report = validate(doc.complex);
  if (!report.admissible()) {
    throw DocumentError(DocumentError::Kind::Validation,
                        "complex '" + doc.name + "' is not admissible:\n" + report.summary());
  }
  return std::move(doc.complex);
}

std::string emit_complex(const Complex& c, std::string_view name) {
  ordered_json doc;
  doc["name"] = std::string(name);
  doc["generators"] = ordered_json::array();
  doc["differential"] = ordered_json::array();
  for (const auto& g : c.generators()) {
    doc["generators"].push_back({{"id", g.id}, {"maslov", g.maslov}, {"alg", g.alg}, {"alex", g.alex}});
  }
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c.boundary(k).empty()) continue;
    ordered_json to = ordered_json::array();
    for (std::size_t y : c.boundary(k)) to.push_back(c.generator(y).id);
    doc["differential"].push_back({{"from", c.generator(k).id}, {"to", std::move(to)}});
  }
  return doc.dump(2) + "\n";
}

std::string emit_pl(const PLFunction& f, PLFormat format) {
  if (format == PLFormat::Json) {
    ordered_json vertices = ordered_json::array();
    for (const auto& v : f.vertices()) vertices.push_back({{"t", v.t.str()}, {"value", v.value.str()}});
    ordered_json doc;
    doc["vertices"] = std::move(vertices);
    return doc.dump();
  }
  std::ostringstream os;
  os << "t,value,approx\n";
  for (const auto& v : f.vertices()) {
    os << v.t.str() << ',' << v.value.str() << ',' << std::setprecision(std::numeric_limits<double>::max_digits10) << v.value.to_double()
       << '\n';
  }
  return os.str();
}

std::string emit_result(std::string_view invariant, std::string_view input,
                        std::string_view payload_json) {
  ordered_json doc;
  doc["invariant"] = std::string(invariant);
  doc["input"] = std::string(input);
  doc["payload"] = ordered_json::parse(payload_json.begin(), payload_json.end());
  doc["engine_version"] = std::string(kEngineVersion);
  return doc.dump(2) + "\n";
}

std::string emit_bounds(const BoundsReport& bounds) {
  ordered_json doc;
  doc["g3"] = bounds.g3;
  doc["g4"] = bounds.g4;
  doc["gc"] = bounds.gc;
  return doc.dump();
}

}  // namespace upsilon::io
