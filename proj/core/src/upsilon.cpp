#include "upsilon/upsilon.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace upsilon {

namespace {

void sort_unique(std::vector<Rational>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

// Least candidate m for which `region(element, m)` carries the generator.
template <typename Region>
int least_region_level(const GradingZeroHomology& homology, std::vector<int> candidates,
                       Region region, const char* what) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  const auto& elements = homology.elements();
  for (int m : candidates) {
    std::vector<bool> support(elements.size());
    for (std::size_t k = 0; k < elements.size(); ++k) support[k] = region(elements[k], m);
    if (homology.carries_generator(support)) return m;
  }
  throw std::logic_error(std::string(what) + ": no region level carries the grading-0 generator");
}

}  // namespace

Rational ft_level(int alg, int alex, const Rational& t) {
  if (t < Rational(0) || t > Rational(2)) {
    throw std::out_of_range("t = " + t.str() + " is outside [0, 2]");
  }
  const Rational half_t = t / Rational(2);
  return half_t * Rational(alex) + (Rational(1) - half_t) * Rational(alg);
}

UpsilonEvaluator::UpsilonEvaluator(const Complex& c) : homology_(c) {
  std::set<std::pair<int, int>> points;
  for (const auto& e : homology_.elements()) points.emplace(e.alg, e.alex);
  lattice_.assign(points.begin(), points.end());
}

Rational UpsilonEvaluator::nu(const Rational& t) const {
  std::vector<Rational> levels;
  levels.reserve(homology_.elements().size());
  for (const auto& e : homology_.elements()) levels.push_back(ft_level(e.alg, e.alex, t));
  const auto level = homology_.least_generating_level(levels);
  if (!level) throw std::logic_error("complex carries no grading-0 homology generator");
  return *level;
}

std::vector<Rational> UpsilonEvaluator::breakpoint_candidates() const {
  std::vector<Rational> ts;
  for (std::size_t a = 0; a < lattice_.size(); ++a) {
    for (std::size_t b = a + 1; b < lattice_.size(); ++b) {
      const int di = lattice_[a].first - lattice_[b].first;
      const int dj = lattice_[a].second - lattice_[b].second;
      if (di == dj) continue;
      const Rational t(2 * di, di - dj);
      if (Rational(0) < t && t < Rational(2)) ts.push_back(t);
    }
  }
  sort_unique(ts);
  return ts;
}

PLFunction UpsilonEvaluator::upsilon_pl() const {
  std::vector<Rational> ts = breakpoint_candidates();
  ts.push_back(0);
  ts.push_back(2);
  sort_unique(ts);

  std::vector<Vertex> vertices;
  vertices.reserve(ts.size());
  for (const auto& t : ts) vertices.push_back({t, upsilon(t)});

  // Between consecutive candidates Υ is affine; the midpoint must interpolate.
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    const Vertex& left = vertices[k - 1];
    const Vertex& right = vertices[k];
    const Rational mid = (left.t + right.t) / Rational(2);
    const Rational expected = (left.value + right.value) / Rational(2);
    if (upsilon(mid) != expected) {
      throw InconsistencyError("Υ is not affine on [" + left.t.str() + ", " + right.t.str() + "]");
    }
  }
  return PLFunction(std::move(vertices));
}

Rational nu_at(const Complex& c, const Rational& t) { return UpsilonEvaluator(c).nu(t); }

Rational upsilon_at(const Complex& c, const Rational& t) { return UpsilonEvaluator(c).upsilon(t); }

PLFunction upsilon_pl(const Complex& c) { return UpsilonEvaluator(c).upsilon_pl(); }

std::vector<JumpRecord> jump_spectrum(const PLFunction& f) {
  std::vector<JumpRecord> jumps;
  const auto segments = f.segments();
  for (std::size_t k = 1; k < segments.size(); ++k) {
    const Rational delta = segments[k].slope - segments[k - 1].slope;
    if (delta != Rational(0)) jumps.push_back({segments[k].from, delta});
  }
  return jumps;
}

bool satisfies_jump_divisibility(const JumpRecord& jump) {
  const std::int64_t p = jump.t.num();
  if (p == 0) return false;
  const Rational scaled = jump.t / Rational(2) * jump.delta;
  const Rational k = (p % 2 != 0) ? scaled / Rational(p) : scaled / Rational(p, 2);
  return k.is_integer();
}

int tau_from_slope(const PLFunction& f) {
  const Rational slope = f.segments().front().slope;
  if (!slope.is_integer()) {
    throw InconsistencyError("initial slope " + slope.str() + " of Υ is not an integer");
  }
  return static_cast<int>(-slope.num());
}

int tau_from_region(const Complex& c) {
  const GradingZeroHomology homology(c);
  std::vector<int> candidates;
  std::vector<bool> negative_only;
  for (const auto& e : homology.elements()) {
    if (e.alg <= 0) candidates.push_back(e.alex);
    negative_only.push_back(e.alg < 0);
  }
  if (homology.carries_generator(negative_only)) {
    throw std::logic_error("tau: the region {alg < 0} already carries the generator");
  }
  return least_region_level(
      homology, std::move(candidates),
      [](const SliceElement& e, int m) { return e.alg < 0 || (e.alg <= 0 && e.alex <= m); }, "tau");
}

int tau(const Complex& c) {
  const int by_slope = tau_from_slope(upsilon_pl(c));
  const int by_region = tau_from_region(c);
  if (by_slope != by_region) {
    throw InconsistencyError("tau disagreement: slope gives " + std::to_string(by_slope) +
                             ", region gives " + std::to_string(by_region));
  }
  return by_slope;
}

int nu_minus(const Complex& c) {
  const GradingZeroHomology homology(c);
  std::vector<int> candidates;
  for (const auto& e : homology.elements()) {
    if (e.alg <= 0) candidates.push_back(e.alex);
  }
  return least_region_level(
      homology, std::move(candidates),
      [](const SliceElement& e, int m) { return e.alg <= 0 && e.alex <= m; }, "nu_minus");
}

Rational small_t_regime_end(const PLFunction& f) { return f.segments().front().to; }

BoundsReport genus_bounds(const PLFunction& f, const std::vector<JumpRecord>& jumps) {
  std::int64_t g3 = 0;
  for (const auto& s : f.segments()) g3 = std::max(g3, s.slope.abs().ceil());
  for (const auto& jump : jumps) {
    const std::int64_t p = jump.t.num();
    const std::int64_t q = jump.t.den();
    g3 = std::max(g3, (p % 2 != 0) ? q : Rational(q, 2).ceil());
  }
  std::int64_t g4 = 0;
  for (const auto& v : f.vertices()) {
    if (v.t > Rational(0)) g4 = std::max(g4, (v.value.abs() / v.t).ceil());
  }
  return {static_cast<int>(g3), static_cast<int>(g4), static_cast<int>(g3)};
}

bool check_crossing_change(const PLFunction& f_minus, const PLFunction& f_plus) {
  std::vector<Rational> ts{0, 1};
  for (const auto* f : {&f_minus, &f_plus}) {
    for (const auto& v : f->vertices()) {
      if (v.t <= Rational(1)) ts.push_back(v.t);
    }
  }
  sort_unique(ts);
  return std::all_of(ts.begin(), ts.end(), [&](const Rational& t) {
    const Rational minus = f_minus.evaluate(t);
    const Rational plus = f_plus.evaluate(t);
    return plus <= minus && minus <= plus + t;
  });
}

}  // namespace upsilon
