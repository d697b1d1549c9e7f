#pragma once

#include "lgkit/polynomial.hpp"
#include "lgkit/sparse_echelon.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace lgkit {

struct GradedMonomial {
    Exponents exponents;
    Rational degree;

    bool operator==(const GradedMonomial&) const = default;
};

// Monomial representatives of a basis of Jac(f) = C[x]/(df), ordered by
// degree and then lexicographically descending (canonical term order).
struct GradedBasis {
    std::vector<GradedMonomial> elements;
    Rational socle_degree;

    std::size_t size() const { return elements.size(); }
};

struct ResiduePairing {
    RationalMatrix matrix;
};

// Exponent vectors m with sum_j m_j q_j = d, in lexicographic order.
std::vector<Exponents> graded_monomials(const std::vector<Rational>& q, const Rational& d);

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : e) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

// The Jacobian ideal of a quasihomogeneous f, sliced by weighted degree.
// Degrees are scaled by the common denominator L of the weights so every
// slice is addressed by an integer; f itself has scaled degree L.
class GradedJacobian {
public:
    using MonomialFilter = std::function<bool(const Exponents&)>;

    struct Slice {
        std::vector<Exponents> monomials; // column order: lexicographically descending
        std::unordered_map<Exponents, std::size_t, ExponentsHash> column;
        SparseEchelon echelon{0};

        std::size_t quotient_dimension() const { return monomials.size() - echelon.rank(); }
        // Standard (non-pivot) monomials, lexicographically descending.
        std::vector<Exponents> standard_monomials() const;
        // Coordinates of a polynomial whose terms all live in this slice.
        SparseVector coordinates(const Polynomial& p) const;
    };

    // Throws Error(InvalidArgument) unless every term of f has q-degree 1.
    GradedJacobian(Polynomial f, std::vector<Rational> q);

    // Slice of scaled degree `degree`. With a filter, only monomials passing
    // it are columns and only ideal elements x^m * df/dx_j supported on them
    // are rows; the filter must be compatible with the ideal generators.
    Slice slice(long degree, const MonomialFilter& keep = nullptr) const;

    // Standard monomials of a slice, same choice and order as
    // slice(degree, keep).standard_monomials(). When every partial derivative
    // has at most two terms (always the case for invertible f) the slice is a
    // binomial system and is solved by union-find with rational ratios.
    std::vector<Exponents> standard_monomials(long degree, const MonomialFilter& keep = nullptr) const;
    bool binomial() const { return binomial_; }

    const Polynomial& polynomial() const { return f_; }
    const std::vector<Rational>& weights() const { return q_; }
    const std::vector<long>& integer_weights() const { return w_; }
    long scale() const { return scale_; }
    long top_degree() const { return top_; } // scaled central charge
    long max_weight() const { return max_w_; }
    Rational unscaled(long degree) const { return make_rational(degree, scale_); }
    long scaled_degree(const Exponents& e) const;

    // Scaled degrees in [0, bound] that contain at least one monomial.
    std::vector<long> occupied_degrees(long bound) const;

private:
    // Monomials of one scaled degree, in lexicographic order. Served from a
    // per-degree cache (flat, num_vars ints per monomial) that is filled up to
    // the largest bound seen so far, so a GradedJacobian must not be shared
    // between threads.
    std::vector<Exponents> monomials_of_degree(long degree) const;
    const std::vector<int>& bucket(long degree) const;
    void enumerate_up_to(long bound) const;

    Polynomial f_;
    std::vector<Rational> q_;
    std::vector<long> w_;
    long scale_ = 1;
    long top_ = 0;
    long max_w_ = 0;
    std::vector<Polynomial> partials_;
    bool binomial_ = true;
    mutable long enumerated_ = -1;
    mutable std::vector<std::vector<int>> by_degree_; // indexed by scaled degree
    mutable std::vector<std::uint64_t> stride_; // mixed-radix packing of exponent vectors
    mutable bool packable_ = false;
};

// Graded elimination, cross-checked against prod(1/q_j - 1).
// Throws Error(Consistency) on a count mismatch or a nonzero quotient just
// above the socle degree (non-isolated input).
GradedBasis jacobian_basis(const Polynomial& f, const std::vector<Rational>& q);

// c with p = c * socle modulo the Jacobian ideal; p must be homogeneous of
// degree c_hat.
Rational reduce_top_degree(const Polynomial& p, const Polynomial& f, const std::vector<Rational>& q);

// det(d^2 f / dx_i dx_j).
Polynomial hessian(const Polynomial& f);

// Grothendieck residue pairing at the origin, normalized by Res(hess f) = mu.
ResiduePairing residue_pairing(const Polynomial& f, const std::vector<Rational>& q,
                               const GradedBasis& basis);

struct IsolatednessReport {
    bool isolated = false;
    std::optional<Rational> offending_degree;
    std::string diagnostic;
};

// Count equality with prod(1/q_j - 1) plus vanishing of the quotient on the
// degree window (c_hat, c_hat + max q_j].
IsolatednessReport isolatedness_check(const Polynomial& f, const std::vector<Rational>& q);

} // namespace lgkit
