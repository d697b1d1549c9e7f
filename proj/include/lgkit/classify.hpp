#pragma once

#include "lgkit/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lgkit {

enum class BlockKind { Fermat, Chain, Loop };

// Chain frames:
//   TailPowerLast:  x1^a1*x2 + x2^a2*x3 + ... + xk^ak
//   HeadPowerFirst: x1^a1 + x1*x2^a2 + ... + x(k-1)*xk^ak
// The transpose of one is the other.
enum class ChainOrientation { None, TailPowerLast, HeadPowerFirst };

const char* to_string(BlockKind kind);
const char* to_string(ChainOrientation orientation);

// One atomic summand. `variables` (0-based) and `exponents` are listed in the
// frame given by `orientation` for chains; loops start at their smallest
// variable and follow the links x_i^a_i * x_next.
struct AtomicBlock {
    BlockKind kind = BlockKind::Fermat;
    std::vector<std::size_t> variables;
    std::vector<long> exponents;
    ChainOrientation orientation = ChainOrientation::None;

    bool operator==(const AtomicBlock&) const = default;
};

struct AtomicDecomposition {
    std::vector<AtomicBlock> blocks;   // ordered by smallest contained variable
    std::vector<std::size_t> owner_row; // variable -> row of E whose dominant power it carries
};

struct InvertibleStructure {
    Polynomial polynomial;
    ExponentMatrix matrix;
    std::vector<AtomicBlock> blocks;
    std::vector<std::size_t> owner_row;
};

// Square, nonsingular, and a disjoint sum of Fermat/chain/loop blocks.
// Throws Error(NotInvertible) otherwise.
InvertibleStructure check_invertible(const Polynomial& p);

AtomicDecomposition atomic_decompose(const ExponentMatrix& e);

// Rebuilds the exponent matrix from blocks and row ownership.
ExponentMatrix reassemble(const std::vector<AtomicBlock>& blocks,
                          const std::vector<std::size_t>& owner_row, std::size_t n);

// Block variables in the head-power-first frame: position 0 carries the pure
// power, each later variable is linked to its predecessor. Loops are
// returned unchanged.
AtomicBlock head_power_first(const AtomicBlock& block);

struct Weights {
    std::vector<Rational> q;
    // variables whose weight sits on the admissible boundary 1/2
    std::vector<std::size_t> half_weight_variables;
};

// Unique solution of E q = (1,...,1) with 0 < q_j <= 1/2.
Weights weights(const ExponentMatrix& e);

Rational central_charge(const std::vector<Rational>& q);

// prod_j (1/q_j - 1); throws Error(NotInvertible) unless a positive integer.
Integer milnor_number(const std::vector<Rational>& q);

struct WeightSystem {
    std::vector<Rational> weights;
    std::vector<std::size_t> half_weight_variables;
    Rational central_charge;
    Integer milnor_number;
};

WeightSystem weight_system(const ExponentMatrix& e);

// Informational Arnold label ("A4", "D5", "E7", ...) for single-block ADE
// shapes; empty otherwise.
std::string ade_label(const InvertibleStructure& s);

} // namespace lgkit
