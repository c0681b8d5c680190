#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "upsilon/complex.hpp"
#include "upsilon/pl_function.hpp"
#include "upsilon/upsilon.hpp"

namespace upsilon::io {

inline constexpr std::string_view kEngineVersion = "1.0.0";

// Rejected complex document. kind() distinguishes malformed text from a
// well-formed document describing an inadmissible complex.
class DocumentError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Schema, UnknownId, Validation };

  DocumentError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct ComplexDocument {
  std::string name;
  Complex complex;
};

// Parses the JSON complex format without checking admissibility.
ComplexDocument parse_document(std::string_view text);
// Parses and validates; inadmissible complexes throw DocumentError(Validation).
Complex parse_complex(std::string_view text);

std::string emit_complex(const Complex& c, std::string_view name);

enum class PLFormat { Json, Csv };

// Json: {"vertices": [{"t": "p/q", "value": "p/q"}, ...]}.
// Csv: header "t,value,approx", one row per vertex.
std::string emit_pl(const PLFunction& f, PLFormat format);

// Result envelope: {"invariant", "input", "payload", "engine_version"}.
// `payload_json` must itself be a JSON value.
std::string emit_result(std::string_view invariant, std::string_view input,
                        std::string_view payload_json);

std::string emit_bounds(const BoundsReport& bounds);

}  // namespace upsilon::io
