#pragma once

#include <vector>

#include "upsilon/complex.hpp"
#include "upsilon/gf2.hpp"
#include "upsilon/rational.hpp"

namespace upsilon {

// A generator of C' = CFK∞ ⊗ F[v^{1/n}] with its t-modified grading
// gr_t = M - t(alex - alg) and its algebraic filtration level.
struct TGenerator {
  std::size_t base = 0;  // index into the source complex
  Rational grt;
  Rational alg_prime;
};

// One term v^alpha · y of ∂_t x, with alpha = t((j - j') - (i - i')).
struct TArrow {
  std::size_t target = 0;
  Rational alpha;
};

// The t-modified complex for t = m/n. v lowers gradings by 1 and slides half a
// unit down the diagonal, so v^e·x sits at algebraic level alg_prime - e/2.
struct TComplex {
  Rational t;
  std::vector<TGenerator> generators;
  std::vector<std::vector<TArrow>> differential;

  // v-exponent of the basis element of generator k in the given grading.
  Rational exponent(std::size_t k, int grading) const;
  // Algebraic level of that basis element.
  Rational level(std::size_t k, int grading) const;
  // ∂_t from grading g to grading g - 1, both indexed by generator.
  gf2::Matrix boundary(int grading) const;
};

// Throws std::out_of_range unless 0 < t <= 2, and std::logic_error if any
// structural identity of C' fails (grading drop, exponent formula, filtration,
// ∂_t∘∂_t = 0).
TComplex build_tcomplex(const Complex& c, const Rational& t);

// Υ(t) as -2s for the least s at which C'_{alg <= s} carries a grading-0 class
// that survives in the homology of C'.
Rational upsilon_alt(const Complex& c, const Rational& t);

// Checks that (i, j) -> ((1 - t/2)i + (t/2)j, -(t/2)i + (1 + t/2)j) carries the
// F_t sublevel structure of the grading-0 lattice points onto the algebraic
// sublevel structure of C'.
bool transform_check(const Complex& c, const Rational& t);

}  // namespace upsilon
