#include "upsilon/pl_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace upsilon {

namespace {

Rational slope_between(const Vertex& a, const Vertex& b) { return (b.value - a.value) / (b.t - a.t); }

}  // namespace

PLFunction::PLFunction(std::vector<Vertex> vertices) {
  if (vertices.size() < 2) throw std::invalid_argument("PL function needs at least two vertices");
  if (vertices.front().t != Rational(0) || vertices.back().t != Rational(2)) {
    throw std::invalid_argument("PL function must be defined on exactly [0, 2]");
  }
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    if (!(vertices[k - 1].t < vertices[k].t)) {
      throw std::invalid_argument("PL vertices must be strictly increasing in t");
    }
  }
  vertices_.push_back(vertices.front());
  for (std::size_t k = 1; k + 1 < vertices.size(); ++k) {
    if (slope_between(vertices_.back(), vertices[k]) != slope_between(vertices[k], vertices[k + 1])) {
      vertices_.push_back(vertices[k]);
    }
  }
  vertices_.push_back(vertices.back());
}

PLFunction PLFunction::constant(Rational value) { return PLFunction({{0, value}, {2, value}}); }

Rational PLFunction::evaluate(const Rational& t) const {
  if (t < Rational(0) || t > Rational(2)) {
    throw std::out_of_range("PL function evaluated outside [0, 2] at t = " + t.str());
  }
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), t,
                             [](const Vertex& v, const Rational& x) { return v.t < x; });
  if (it->t == t) return it->value;
  const Vertex& right = *it;
  const Vertex& left = *(it - 1);
  return left.value + slope_between(left, right) * (t - left.t);
}

std::vector<Segment> PLFunction::segments() const {
  std::vector<Segment> out;
  for (std::size_t k = 1; k < vertices_.size(); ++k) {
    out.push_back({vertices_[k - 1].t, vertices_[k].t, slope_between(vertices_[k - 1], vertices_[k])});
  }
  return out;
}

PLFunction PLFunction::operator-() const {
  std::vector<Vertex> negated;
  for (const auto& v : vertices_) negated.push_back({v.t, -v.value});
  return PLFunction(std::move(negated));
}

PLFunction operator+(const PLFunction& a, const PLFunction& b) {
  std::vector<Rational> ts;
  for (const auto& v : a.vertices_) ts.push_back(v.t);
  for (const auto& v : b.vertices_) ts.push_back(v.t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Vertex> sum;
  for (const auto& t : ts) sum.push_back({t, a.evaluate(t) + b.evaluate(t)});
  return PLFunction(std::move(sum));
}

}  // namespace upsilon
