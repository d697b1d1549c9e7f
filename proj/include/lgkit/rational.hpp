#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lgkit {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms (mpq_class's two-argument constructor does not reduce).
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical text form: "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Representative of r modulo 1 in [0, 1).
Rational mod_one(const Rational& r);

bool is_integer(const Rational& r);

// Least common multiple of all denominators (1 for an empty range).
Integer common_denominator(const std::vector<Rational>& values);

std::vector<std::string> to_strings(const std::vector<Rational>& values);

} // namespace lgkit
