#pragma once

#include <optional>
#include <vector>

#include "extgraph/matrix.hpp"
#include "extgraph/rational.hpp"

namespace extgraph {

// Fraction-free Gaussian elimination (Bareiss) with row pivoting. Every
// intermediate entry is a minor of the input, so growth stays polynomial.
BigInt bareiss_determinant(DenseMatrix<BigInt> a);

// Clears row denominators and delegates to bareiss_determinant.
Rational determinant(const DenseMatrix<Rational>& a);

// Some solution of a x = b (free variables set to 0), or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_any(DenseMatrix<Rational> a, std::vector<Rational> b);

}  // namespace extgraph
