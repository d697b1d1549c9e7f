#include "lgkit/classify.hpp"

#include "lgkit/error.hpp"

#include <algorithm>
#include <optional>

namespace lgkit {

const char* to_string(BlockKind kind) {
    switch (kind) {
    case BlockKind::Fermat: return "fermat";
    case BlockKind::Chain: return "chain";
    case BlockKind::Loop: return "loop";
    }
    return "?";
}

const char* to_string(ChainOrientation orientation) {
    switch (orientation) {
    case ChainOrientation::None: return "none";
    case ChainOrientation::TailPowerLast: return "tail-power-last";
    case ChainOrientation::HeadPowerFirst: return "head-power-first";
    }
    return "?";
}

namespace {

[[noreturn]] void not_invertible(const std::string& why) {
    throw Error(ErrorKind::NotInvertible, why);
}

std::string var_name(std::size_t v) { return "x" + std::to_string(v + 1); }

} // namespace

AtomicDecomposition atomic_decompose(const ExponentMatrix& e) {
    if (!e.is_square()) {
        not_invertible("term count " + std::to_string(e.rows()) + " differs from variable count " +
                       std::to_string(e.cols()));
    }
    const std::size_t n = e.rows();
    constexpr std::size_t none = static_cast<std::size_t>(-1);

    std::vector<std::size_t> owner_row(n, none);
    std::vector<std::size_t> next(n, none);

    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < n; ++j)
            if (e(i, j) != 0) support.push_back(j);
        const std::string row_name = "term " + std::to_string(i + 1);

        std::size_t owner = none;
        std::size_t link = none;
        if (support.empty()) {
            not_invertible(row_name + " is constant");
        } else if (support.size() == 1) {
            owner = support[0];
            if (e(i, owner) < 2) not_invertible(row_name + " has exponent 1 in an atomic slot");
        } else if (support.size() == 2) {
            const std::size_t a = support[0], b = support[1];
            const long ea = e(i, a), eb = e(i, b);
            if (ea == 1 && eb == 1) {
                not_invertible(row_name + " has exponent 1 in an atomic slot");
            } else if (ea >= 2 && eb == 1) {
                owner = a;
                link = b;
            } else if (eb >= 2 && ea == 1) {
                owner = b;
                link = a;
            } else {
                not_invertible(row_name + " is not of the form x^a*y (both exponents >= 2)");
            }
        } else {
            not_invertible(row_name + " involves more than two variables");
        }

        if (owner_row[owner] != none) {
            not_invertible("no consistent monomial-to-variable matching: " + var_name(owner) +
                           " carries the dominant power of two terms");
        }
        owner_row[owner] = i;
        next[owner] = link;
    }

    std::vector<int> indegree(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (next[v] == none) continue;
        if (++indegree[next[v]] > 1) {
            not_invertible("no atomic decomposition: " + var_name(next[v]) +
                           " links two terms");
        }
    }

    AtomicDecomposition out;
    out.owner_row = owner_row;
    std::vector<bool> seen(n, false);

    for (std::size_t start = 0; start < n; ++start) {
        if (indegree[start] != 0) continue;
        std::vector<std::size_t> path;
        for (std::size_t v = start; v != none; v = next[v]) {
            seen[v] = true;
            path.push_back(v);
        }
        AtomicBlock block;
        if (path.size() == 1) {
            block.kind = BlockKind::Fermat;
        } else {
            block.kind = BlockKind::Chain;
            if (path.back() > path.front()) {
                block.orientation = ChainOrientation::TailPowerLast;
            } else {
                block.orientation = ChainOrientation::HeadPowerFirst;
                std::reverse(path.begin(), path.end());
            }
        }
        block.variables = path;
        for (auto v : path) block.exponents.push_back(e(owner_row[v], v));
        out.blocks.push_back(std::move(block));
    }

    // everything left lies on a cycle
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        AtomicBlock block;
        block.kind = BlockKind::Loop;
        std::size_t v = start;
        do {
            seen[v] = true;
            block.variables.push_back(v);
            block.exponents.push_back(e(owner_row[v], v));
            v = next[v];
        } while (v != start);
        out.blocks.push_back(std::move(block));
    }

    std::sort(out.blocks.begin(), out.blocks.end(), [](const AtomicBlock& a, const AtomicBlock& b) {
        return *std::min_element(a.variables.begin(), a.variables.end()) <
               *std::min_element(b.variables.begin(), b.variables.end());
    });
    return out;
}

ExponentMatrix reassemble(const std::vector<AtomicBlock>& blocks,
                          const std::vector<std::size_t>& owner_row, std::size_t n) {
    ExponentMatrix m(n, n, 0);
    for (const auto& b : blocks) {
        const std::size_t k = b.variables.size();
        for (std::size_t p = 0; p < k; ++p) {
            const std::size_t v = b.variables[p];
            const std::size_t r = owner_row[v];
            m(r, v) = b.exponents[p];
            std::optional<std::size_t> link;
            if (b.kind == BlockKind::Loop) {
                link = b.variables[(p + 1) % k];
            } else if (b.kind == BlockKind::Chain) {
                if (b.orientation == ChainOrientation::TailPowerLast && p + 1 < k) link = b.variables[p + 1];
                if (b.orientation == ChainOrientation::HeadPowerFirst && p > 0) link = b.variables[p - 1];
            }
            if (link) m(r, *link) = 1;
        }
    }
    return m;
}

AtomicBlock head_power_first(const AtomicBlock& block) {
    if (block.kind != BlockKind::Chain || block.orientation == ChainOrientation::HeadPowerFirst) {
        return block;
    }
    AtomicBlock out = block;
    std::reverse(out.variables.begin(), out.variables.end());
    std::reverse(out.exponents.begin(), out.exponents.end());
    out.orientation = ChainOrientation::HeadPowerFirst;
    return out;
}

InvertibleStructure check_invertible(const Polynomial& p) {
    if (p.size() != p.num_vars()) {
        not_invertible("term count " + std::to_string(p.size()) + " differs from variable count " +
                       std::to_string(p.num_vars()));
    }
    InvertibleStructure s;
    s.polynomial = p;
    s.matrix = exponent_matrix(p);
    if (determinant(s.matrix.cast<Integer>()) == 0) not_invertible("exponent matrix is singular");

    auto dec = atomic_decompose(s.matrix);
    s.blocks = std::move(dec.blocks);
    s.owner_row = std::move(dec.owner_row);
    if (reassemble(s.blocks, s.owner_row, p.num_vars()) != s.matrix) {
        throw Error(ErrorKind::Consistency, "atomic blocks do not reassemble the exponent matrix");
    }
    return s;
}

Weights weights(const ExponentMatrix& e) {
    if (!e.is_square()) not_invertible("weights need a square exponent matrix");
    const std::size_t n = e.rows();
    auto sol = solve_exact(e.cast<Rational>(), RationalVector(n, 1));
    if (!sol || !sol->unique()) not_invertible("weight equation E q = 1 has no unique solution");
    Weights w;
    w.q = std::move(sol->particular);
    const Rational half(1, 2);
    for (std::size_t j = 0; j < n; ++j) {
        if (w.q[j] <= 0 || w.q[j] > half) {
            not_invertible("weight q" + std::to_string(j + 1) + " = " + to_string(w.q[j]) +
                           " outside (0, 1/2]");
        }
        if (w.q[j] == half) w.half_weight_variables.push_back(j);
    }
    return w;
}

Rational central_charge(const std::vector<Rational>& q) {
    Rational c = 0;
    for (const auto& qj : q) c += 1 - 2 * qj;
    return c;
}

Integer milnor_number(const std::vector<Rational>& q) {
    Rational mu = 1;
    for (const auto& qj : q) {
        if (qj <= 0) not_invertible("nonpositive weight");
        mu *= 1 / qj - 1;
    }
    if (!is_integer(mu) || mu <= 0) {
        not_invertible("prod(1/q_j - 1) = " + to_string(mu) +
                       " is not a positive integer (critical point not isolated)");
    }
    return mu.get_num();
}

WeightSystem weight_system(const ExponentMatrix& e) {
    auto w = weights(e);
    WeightSystem ws;
    ws.central_charge = central_charge(w.q);
    ws.milnor_number = milnor_number(w.q);
    ws.weights = std::move(w.q);
    ws.half_weight_variables = std::move(w.half_weight_variables);
    return ws;
}

std::string ade_label(const InvertibleStructure& s) {
    const auto& b = s.blocks;
    if (b.size() == 1 && b[0].kind == BlockKind::Fermat) {
        return "A" + std::to_string(b[0].exponents[0] - 1);
    }
    if (b.size() == 1 && b[0].kind == BlockKind::Chain && b[0].variables.size() == 2) {
        const auto h = head_power_first(b[0]);
        if (h.exponents[1] == 2 && h.exponents[0] >= 3) return "D" + std::to_string(h.exponents[0] + 1);
        if (h.exponents[0] == 3 && h.exponents[1] == 3) return "E7";
    }
    if (b.size() == 1 && b[0].kind == BlockKind::Loop && b[0].exponents == std::vector<long>{2, 2}) {
        return "D4";
    }
    if (b.size() == 2 && b[0].kind == BlockKind::Fermat && b[1].kind == BlockKind::Fermat) {
        auto lo = std::min(b[0].exponents[0], b[1].exponents[0]);
        auto hi = std::max(b[0].exponents[0], b[1].exponents[0]);
        if (lo == 3 && hi == 4) return "E6";
        if (lo == 3 && hi == 5) return "E8";
    }
    return {};
}

} // namespace lgkit
