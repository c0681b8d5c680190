#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "upsilon/gf2.hpp"
#include "upsilon/rational.hpp"

namespace upsilon {

// A bifiltered, graded basis element: Maslov grading M and filtration levels
// (alg, alex) = (i, j). Every U-translate U^k x sits at (i - k, j - k) with M - 2k.
struct Generator {
  std::string id;
  int maslov = 0;
  int alg = 0;
  int alex = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Structural input problems: duplicate or unknown ids, bad indices.
class ComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A free F2[U, U^-1] complex stored as one generator per U-orbit. The
// differential maps a generator to the set of generators in its boundary;
// U-translates are implicit.
class Complex {
 public:
  using Arrows = std::vector<std::pair<std::string, std::vector<std::string>>>;

  Complex() = default;
  // differential[k] lists the generator indices in the boundary of generator k.
  Complex(std::vector<Generator> generators, std::vector<std::vector<std::size_t>> differential);
  // Arrows keyed by id. Unlisted generators are cycles.
  static Complex from_ids(std::vector<Generator> generators, const Arrows& arrows);

  std::size_t size() const { return generators_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }
  const Generator& generator(std::size_t k) const { return generators_.at(k); }
  const std::vector<std::size_t>& boundary(std::size_t k) const { return differential_.at(k); }
  std::optional<std::size_t> index_of(const std::string& id) const;

  // max over generators of |alex - alg|; bounds genus-type quantities from below.
  int width() const;

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.generators_ == b.generators_ && a.differential_ == b.differential_;
  }

 private:
  std::vector<Generator> generators_;
  std::vector<std::vector<std::size_t>> differential_;  // sorted, no duplicates
  std::unordered_map<std::string, std::size_t> index_;
};

// U^upower * generator, with its effective bifiltration already shifted.
struct SliceElement {
  std::size_t gen = 0;
  int upower = 0;
  int alg = 0;
  int alex = 0;

  friend bool operator==(const SliceElement&, const SliceElement&) = default;
};

// The finite F2 basis of the grading-g part: one element per generator whose
// Maslov grading has the parity of g, in generator order.
std::vector<SliceElement> grading_slice(const Complex& c, int grading);

// Matrix of the differential from grading_slice(c, g) (columns) to
// grading_slice(c, g - 1) (rows). Throws std::logic_error if an arrow does not
// lower the Maslov grading by one.
gf2::Matrix boundary_matrix(const Complex& c, int grading);

struct Violation {
  enum class Kind {
    MaslovDrop,         // an arrow does not lower M by exactly one
    NotFiltered,        // an arrow raises alg or alex
    BoundarySquared,    // ∂∘∂ ≠ 0
    Homology,           // homology is not F[U, U^-1] with 1 in grading 0
    AlgNormalization,   // generating cycle minimal alg level is not 0
    AlexNormalization,  // generating cycle minimal alex level is not 0
  };
  Kind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool admissible() const { return violations.empty(); }
  bool has(Violation::Kind kind) const;
  std::string summary() const;
};

ValidationReport validate(const Complex& c);

// Grading-0 cycles and boundaries of an admissible complex, for deciding which
// sublevel sets carry the grading-0 homology generator. Build once, query per
// filtration.
class GradingZeroHomology {
 public:
  explicit GradingZeroHomology(const Complex& c);

  const std::vector<SliceElement>& elements() const { return elements_; }

  // Whether the cycles supported on the flagged elements include a non-boundary.
  bool carries_generator(const std::vector<bool>& support) const;

  // For per-element levels (parallel to elements()), the least s such that the
  // cycles supported on {level <= s} include a non-boundary. Empty when no
  // sublevel does (the complex has no grading-0 homology).
  std::optional<Rational> least_generating_level(std::span<const Rational> levels) const;

 private:
  std::vector<SliceElement> elements_;
  gf2::Matrix outgoing_;                  // grading 0 -> grading -1
  std::vector<gf2::Vector> boundaries_;   // columns of grading 1 -> grading 0
  gf2::EchelonBasis boundary_basis_{0};
};

Complex unknot();

// Staircase complex from alternating right/down step lengths read from the top
// vertex, which is placed at (0, total downward drop). Corners reached after a
// downward step (and the start) carry M = 0; those after a rightward step carry
// M = 1 with arrows to both neighbours. Throws std::invalid_argument for empty
// or odd-length step lists or non-positive steps.
Complex staircase(std::span<const int> steps);

}  // namespace upsilon
