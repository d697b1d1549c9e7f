#pragma once

#include "lgkit/linalg.hpp"
#include "lgkit/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lgkit {

using Exponents = std::vector<int>;

struct Monomial {
    Exponents exponents;
    Rational coefficient{1};

    bool operator==(const Monomial&) const = default;
};

// Sparse polynomial in a fixed number of variables with exact rational
// coefficients. Terms are kept sorted by exponent vector, lexicographically
// descending (so x1^2*x2 precedes x2^3), with distinct exponents and nonzero
// coefficients.
//
// The type is a general ring element: constants and the zero polynomial are
// representable (hessians and products need them). The stricter input model
// (nonzero, no constant term) is enforced by parse_polynomial.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

    // Merges repeated exponent vectors and drops zero coefficients.
    static Polynomial from_terms(std::size_t num_vars, std::vector<Monomial> terms);
    static Polynomial monomial(Exponents exponents, Rational coefficient = 1);
    static Polynomial constant(std::size_t num_vars, const Rational& value);

    std::size_t num_vars() const { return num_vars_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool has_constant_term() const;

    // Coefficient of x^e (zero when absent).
    Rational coefficient(const Exponents& e) const;

    Polynomial derivative(std::size_t var) const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& scalar) const;
    Polynomial shifted(const Exponents& e) const; // multiply by x^e

    // Terms supported on `vars` only, kept in the same ambient variables.
    Polynomial restricted_to(const std::vector<std::size_t>& vars) const;
    // Re-expresses a polynomial supported on `vars` in |vars| variables.
    Polynomial compressed(const std::vector<std::size_t>& vars) const;

    bool operator==(const Polynomial&) const = default;

private:
    std::size_t num_vars_ = 0;
    std::vector<Monomial> terms_;
};

using ExponentMatrix = Matrix<long>;

// Row i is the exponent vector of term i (canonical order).
ExponentMatrix exponent_matrix(const Polynomial& p);

// Grammar (whitespace insignificant):
//   poly   := term ("+" term)*
//   term   := (coeff "*")? factor ("*" factor)* | coeff
//   factor := var ("^" uint)?
//   var    := "x" uint | "x" | "y" | "z" | "w"
//   coeff  := int | int "/" uint
// A binary "-" between terms and a leading "-" before a term are accepted
// as negation. Repeated exponent vectors are merged.
Polynomial parse_polynomial(std::string_view text,
                            std::optional<std::size_t> num_vars = std::nullopt);

// Canonical text, e.g. "x1^2*x2 + -3/2*x2^3". Always uses indexed names.
std::string format_polynomial(const Polynomial& p);
std::string format_monomial(const Exponents& e);

// Weighted degree sum_j e_j q_j.
Rational weighted_degree(const Exponents& e, const std::vector<Rational>& q);

} // namespace lgkit
