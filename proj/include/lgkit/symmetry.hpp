#pragma once

#include "lgkit/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lgkit {

inline constexpr std::uint64_t kDefaultElementBound = 1'000'000;

// Diagonal symmetry (exp(2 pi i theta_1), ..., exp(2 pi i theta_N)) stored as
// its phase vector, every phase reduced to [0, 1).
struct GroupElement {
    std::vector<Rational> phases;

    static GroupElement identity(std::size_t n) { return {std::vector<Rational>(n, 0)}; }
    GroupElement compose(const GroupElement& other) const;
    GroupElement power(long k) const;
    bool is_identity() const;

    bool operator==(const GroupElement&) const = default;
};

bool operator<(const GroupElement& a, const GroupElement& b);

// E * theta is an integer vector.
bool is_member(const ExponentMatrix& e, const GroupElement& g);

struct SymmetryGroup {
    std::size_t num_vars = 0;
    // generators[i] has order invariant_factors[i]; only factors > 1 are kept
    std::vector<GroupElement> generators;
    std::vector<Integer> invariant_factors;
    Integer order;
};

// {theta : E theta in Z^N} / Z^N, presented through the Smith form of E.
SymmetryGroup max_symmetry_group(const ExponentMatrix& e);

// All elements sum_i c_i g_i, with (c_1, ..., c_r) in lexicographic order,
// so the identity comes first. Throws Error(BoundExceeded) past `bound`.
std::vector<GroupElement> enumerate_elements(const SymmetryGroup& g,
                                             std::uint64_t bound = kDefaultElementBound);

// J = q mod 1; membership in G_max is checked against e.
GroupElement exponential_grading_element(const ExponentMatrix& e, const std::vector<Rational>& q);

std::vector<std::size_t> fixed_locus(const GroupElement& g);

// sum_{j in fixed} (m_j + [twist]) theta_j mod 1. The twist accounts for the
// volume form dx_{j1} ^ ... ^ dx_{jk} on the fixed locus.
Rational monomial_character(const GroupElement& g, const Exponents& m,
                            const std::vector<std::size_t>& fixed, bool twist);

} // namespace lgkit
