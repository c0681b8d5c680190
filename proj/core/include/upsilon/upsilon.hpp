#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "upsilon/complex.hpp"
#include "upsilon/pl_function.hpp"
#include "upsilon/rational.hpp"

namespace upsilon {

// Two independent computations of the same invariant disagreed.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// (t/2) alex + (1 - t/2) alg. Throws std::out_of_range for t outside [0, 2].
Rational ft_level(int alg, int alex, const Rational& t);

// Reusable evaluator for one admissible complex: the grading-0 slice and its
// cycle/boundary data are built once and shared across t values.
class UpsilonEvaluator {
 public:
  explicit UpsilonEvaluator(const Complex& c);

  // Least s such that the F_t sublevel set at s carries the grading-0 generator.
  Rational nu(const Rational& t) const;
  Rational upsilon(const Rational& t) const { return Rational(-2) * nu(t); }
  PLFunction upsilon_pl() const;

  // Distinct effective bifiltrations (alg, alex) of the grading-0 slice.
  const std::vector<std::pair<int, int>>& lattice_points() const { return lattice_; }
  // Every t in (0, 2) at which two distinct lattice points share an F_t level.
  std::vector<Rational> breakpoint_candidates() const;

  const GradingZeroHomology& homology() const { return homology_; }

 private:
  GradingZeroHomology homology_;
  std::vector<std::pair<int, int>> lattice_;
};

Rational nu_at(const Complex& c, const Rational& t);
Rational upsilon_at(const Complex& c, const Rational& t);
PLFunction upsilon_pl(const Complex& c);

struct JumpRecord {
  Rational t;
  Rational delta;  // right slope minus left slope

  friend bool operator==(const JumpRecord&, const JumpRecord&) = default;
};

std::vector<JumpRecord> jump_spectrum(const PLFunction& f);

// For t = p/q reduced: (t/2)·delta is an integer multiple of p when p is odd,
// and of p/2 when p is even.
bool satisfies_jump_divisibility(const JumpRecord& jump);

// τ as the negated initial slope of Υ. Throws InconsistencyError if that slope
// is not an integer.
int tau_from_slope(const PLFunction& f);
// τ as the least m for which the region {alg <= 0, alex <= m} ∪ {alg < 0}
// carries the grading-0 generator.
int tau_from_region(const Complex& c);
// Both of the above; throws InconsistencyError when they disagree.
int tau(const Complex& c);

// Least m for which {alg <= 0, alex <= m} carries the grading-0 generator.
int nu_minus(const Complex& c);

// End of the first linear piece of Υ, i.e. the extent of the Υ = -τt regime.
Rational small_t_regime_end(const PLFunction& f);

struct BoundsReport {
  int g3 = 0;  // three-genus lower bound
  int g4 = 0;  // four-genus lower bound
  int gc = 0;  // concordance-genus lower bound

  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

BoundsReport genus_bounds(const PLFunction& f, const std::vector<JumpRecord>& jumps);

// Υ_{K+}(t) <= Υ_{K-}(t) <= Υ_{K+}(t) + t for all t in [0, 1].
bool check_crossing_change(const PLFunction& f_minus, const PLFunction& f_plus);

}  // namespace upsilon
