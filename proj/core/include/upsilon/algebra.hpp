#pragma once

#include "upsilon/complex.hpp"

namespace upsilon {

// Tensor product over F2[U, U^-1] (connected sum). Generator "x⊗y" has
// M = M(x) + M(y) and bifiltration (i + i', j + j'); ∂(x⊗y) = ∂x⊗y + x⊗∂y.
// Generators are ordered with the first factor outermost.
Complex tensor(const Complex& a, const Complex& b);

// Dual complex (mirror). Generator "x*" has negated grading and filtrations;
// x* -> y* exactly when y -> x.
Complex dual(const Complex& c);

}  // namespace upsilon
