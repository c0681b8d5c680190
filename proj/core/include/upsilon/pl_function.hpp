#pragma once

#include <vector>

#include "upsilon/rational.hpp"

namespace upsilon {

struct Vertex {
  Rational t;
  Rational value;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Segment {
  Rational from;
  Rational to;
  Rational slope;
};

// Continuous piecewise-linear function on [0, 2] with exact rational vertices.
// Stored in normal form: t strictly increasing from 0 to 2, no collinear
// interior vertices, so two functions are equal iff their vertex lists are.
class PLFunction {
 public:
  // Throws std::invalid_argument unless the vertices are strictly increasing in
  // t and span exactly [0, 2].
  explicit PLFunction(std::vector<Vertex> vertices);

  static PLFunction constant(Rational value);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  // t in [0, 2]; throws std::out_of_range otherwise.
  Rational evaluate(const Rational& t) const;
  std::vector<Segment> segments() const;

  PLFunction operator-() const;
  friend PLFunction operator+(const PLFunction& a, const PLFunction& b);
  friend PLFunction operator-(const PLFunction& a, const PLFunction& b) { return a + (-b); }
  friend bool operator==(const PLFunction&, const PLFunction&) = default;

 private:
  std::vector<Vertex> vertices_;
};

}  // namespace upsilon
