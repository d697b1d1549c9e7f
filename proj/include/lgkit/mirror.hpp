#pragma once

#include "lgkit/classify.hpp"
#include "lgkit/symmetry.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lgkit {

// Polynomial whose exponent matrix is E^T, all coefficients 1, with E
// arranged so that row j is the monomial owned by x_j.
Polynomial transpose(const InvertibleStructure& w);

// Monomial good basis, blockwise over the atomic types and tensored:
//   Fermat x^a:  x^r, 0 <= r <= a-2
//   loop:        the full box 0 <= r_i < a_i
//   chain:       box r_i <= a_i - 1 (head-power-first frame) minus the tail
//                patterns (.., k, a_{N-2l}-1, 0, .., 0, a_N - 1), k >= 1, and the
//                pattern with no k slot when it covers every coordinate
// Sorted by degree, then in canonical term order. Throws Error(Consistency) if the count is not mu.
std::vector<Monomial> standard_good_basis(const InvertibleStructure& f);

// Exponent tuples (in the block's head-power-first frame) of one chain block.
std::vector<Exponents> chain_good_basis(const std::vector<long>& exponents);
bool chain_pattern_excluded(const Exponents& r, const std::vector<long>& exponents);

struct Sector {
    GroupElement element;
    std::vector<std::size_t> fixed;
    std::optional<Polynomial> restricted; // W on Fix(g) in ambient variables; empty when narrow
    std::size_t dimension = 0;
};

struct StateSpace {
    std::vector<Sector> sectors; // enumeration order of G_max
    std::size_t total_dimension = 0;
};

// Narrow sectors count 1. A broad sector counts the G_max-invariant part of
// Jac(W_g) * dx_fixed, with characters from monomial_character(twist on).
StateSpace fjrw_state_space(const InvertibleStructure& w, std::uint64_t bound = kDefaultElementBound);

// Dimension of the invariant broad-sector space for a given fixed locus.
std::size_t invariant_sector_dimension(const InvertibleStructure& w, const SymmetryGroup& g,
                                       const std::vector<std::size_t>& fixed);

struct MirrorReport {
    std::size_t state_dim = 0;
    Integer mirror_milnor;
    std::size_t good_basis_size = 0;
    bool equal = false;
    bool weight_half_chain = false;
};

MirrorReport mirror_check(const InvertibleStructure& w, std::uint64_t bound = kDefaultElementBound);
// Same, reusing an already computed state space of w.
MirrorReport mirror_check(const InvertibleStructure& w, const StateSpace& space);

// Some chain block of w has a variable of weight exactly 1/2.
bool has_half_weight_chain_variable(const InvertibleStructure& w, const std::vector<Rational>& q);

} // namespace lgkit
