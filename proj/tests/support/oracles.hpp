#pragma once

// Reference computations used only by the tests. They share the library's
// number types but none of its elimination, enumeration or group code.

#include "lgkit/polynomial.hpp"
#include "lgkit/rational.hpp"

#include <string>
#include <vector>

namespace oracle {

using lgkit::Exponents;
using lgkit::Integer;
using lgkit::Polynomial;
using lgkit::Rational;

// Weights solving E q = 1 by Cramer's rule with cofactor determinants.
std::vector<Rational> cramer_weights(const std::vector<std::vector<long>>& e);

// |det E| by permutation expansion (fine for N <= 6).
Integer permutation_determinant(const std::vector<std::vector<long>>& e);

// Coefficients of prod_j (1 - t^(L - w_j)) / (1 - t^(w_j)) for scaled integer
// weights w_j and scale L, expanded up to degree `up_to`.
std::vector<Integer> poincare_series(const std::vector<long>& w, long scale, long up_to);

// Graded dimensions of C[x]/(df) for degrees 0..up_to (scaled), computed by
// dense Gaussian elimination over every monomial in a bounding box.
std::vector<long> dense_graded_dimensions(const Polynomial& f, const std::vector<long>& w, long scale,
                                          long up_to);

// Scaled integer weights and scale L from rational weights.
struct Scaled {
    std::vector<long> w;
    long scale = 1;
};
Scaled scale_weights(const std::vector<Rational>& q);

// Grothendieck residue of x^i dx / (a x^(a-1)) for one Fermat variable.
Rational fermat_residue(long a, long i);

std::vector<std::vector<long>> rows_of(const Polynomial& p);

} // namespace oracle
