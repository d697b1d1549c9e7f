#include "lgkit/mirror.hpp"

#include "lgkit/error.hpp"
#include "lgkit/jacobian.hpp"

#include <algorithm>
#include <map>

namespace lgkit {

Polynomial transpose(const InvertibleStructure& w) {
    // Rows are taken in owner order (row j carries x_j's dominant power) so
    // that E^T pairs each variable with the monomial it owns.
    const std::size_t n = w.matrix.cols();
    std::vector<Monomial> terms;
    for (std::size_t i = 0; i < n; ++i) {
        Exponents e;
        for (std::size_t j = 0; j < n; ++j) e.push_back(static_cast<int>(w.matrix(w.owner_row[j], i)));
        terms.push_back({std::move(e), 1});
    }
    return Polynomial::from_terms(n, std::move(terms));
}

bool chain_pattern_excluded(const Exponents& r, const std::vector<long>& a) {
    // 0-based: the tail pattern occupies indices n-1, n-2, ..., n-1-2l and k
    // sits at n-2-2l. When the pattern reaches index 0 there is no k slot and
    // the tuple is excluded outright (for n = 1 this is the Fermat rule).
    const long n = static_cast<long>(a.size());
    for (long l = 0; n - 2 * l - 1 >= 0; ++l) {
        bool tail = true;
        for (long j = 0; j <= l && tail; ++j) {
            const long full = n - 1 - 2 * j;
            tail = r[full] == a[full] - 1;
            if (tail && j > 0) tail = r[full + 1] == 0;
        }
        if (!tail) continue;
        const long k = n - 2 - 2 * l;
        if (k < 0 || r[k] >= 1) return true;
    }
    return false;
}

std::vector<Exponents> chain_good_basis(const std::vector<long>& a) {
    const std::size_t n = a.size();
    std::vector<Exponents> out;
    Exponents r(n, 0);
    for (;;) {
        if (!chain_pattern_excluded(r, a)) out.push_back(r);
        std::size_t i = n;
        for (; i > 0; --i) {
            if (++r[i - 1] <= a[i - 1] - 1) break;
            r[i - 1] = 0;
        }
        if (i == 0) break;
    }
    return out;
}

namespace {

std::vector<Exponents> box(const std::vector<long>& upper) {
    std::vector<Exponents> out;
    Exponents r(upper.size(), 0);
    for (;;) {
        out.push_back(r);
        std::size_t i = upper.size();
        for (; i > 0; --i) {
            if (++r[i - 1] <= upper[i - 1]) break;
            r[i - 1] = 0;
        }
        if (i == 0) break;
    }
    return out;
}

} // namespace

std::vector<Monomial> standard_good_basis(const InvertibleStructure& f) {
    const std::size_t n = f.polynomial.num_vars();
    std::vector<Exponents> acc{Exponents(n, 0)};
    for (const auto& raw : f.blocks) {
        const AtomicBlock block = head_power_first(raw);
        std::vector<Exponents> local;
        switch (block.kind) {
        case BlockKind::Fermat:
            local = box({block.exponents[0] - 2});
            break;
        case BlockKind::Loop: {
            std::vector<long> upper;
            for (auto a : block.exponents) upper.push_back(a - 1);
            local = box(upper);
            break;
        }
        case BlockKind::Chain:
            local = chain_good_basis(block.exponents);
            break;
        }
        std::vector<Exponents> next;
        next.reserve(acc.size() * local.size());
        for (const auto& base : acc) {
            for (const auto& r : local) {
                Exponents e = base;
                for (std::size_t p = 0; p < block.variables.size(); ++p) e[block.variables[p]] = r[p];
                next.push_back(std::move(e));
            }
        }
        acc = std::move(next);
    }
    const auto q = weights(f.matrix).q;
    // integer degrees scaled by the common denominator of the weights
    const Integer scale = common_denominator(q);
    std::vector<long> w;
    for (const auto& qj : q) w.push_back(Rational(qj * scale).get_num().get_si());
    std::vector<std::pair<long, Exponents>> keyed;
    keyed.reserve(acc.size());
    for (auto& e : acc) {
        long d = 0;
        for (std::size_t j = 0; j < n; ++j) d += e[j] * w[j];
        keyed.emplace_back(d, std::move(e));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second > b.second;
    });

    const Integer mu = milnor_number(q);
    if (Integer(static_cast<unsigned long>(keyed.size())) != mu) {
        throw Error(ErrorKind::Consistency, "standard good basis has " + std::to_string(keyed.size()) +
                                                " elements, expected mu = " + to_string(mu));
    }
    std::vector<Monomial> out;
    out.reserve(keyed.size());
    for (auto& [d, e] : keyed) out.push_back({std::move(e), 1});
    return out;
}

std::size_t invariant_sector_dimension(const InvertibleStructure& w, const SymmetryGroup& g,
                                       const std::vector<std::size_t>& fixed) {
    const auto q = weights(w.matrix).q;
    const Polynomial restricted = w.polynomial.restricted_to(fixed).compressed(fixed);
    std::vector<Rational> q_fixed;
    for (auto j : fixed) q_fixed.push_back(q[j]);

    auto iso = isolatedness_check(restricted, q_fixed);
    if (!iso.isolated) {
        throw Error(ErrorKind::Consistency, "restriction to a fixed locus is not isolated: " + iso.diagnostic);
    }

    // phases of every generator on the fixed coordinates
    std::vector<std::vector<Rational>> phases;
    for (const auto& gen : g.generators) {
        std::vector<Rational> row;
        for (auto j : fixed) row.push_back(gen.phases[j]);
        phases.push_back(std::move(row));
    }
    // m * dx_fixed is invariant iff sum_t (m_t + 1) theta_t is an integer for
    // every generator theta
    auto invariant = [&phases](const Exponents& m) {
        for (const auto& theta : phases) {
            Rational s = 0;
            for (std::size_t t = 0; t < m.size(); ++t) s += theta[t] * (m[t] + 1);
            if (!is_integer(s)) return false;
        }
        return true;
    };

    GradedJacobian jac(restricted, q_fixed);
    std::size_t dim = 0;
    for (long d : jac.occupied_degrees(jac.top_degree())) dim += jac.standard_monomials(d, invariant).size();
    return dim;
}

StateSpace fjrw_state_space(const InvertibleStructure& w, std::uint64_t bound) {
    const auto g = max_symmetry_group(w.matrix);
    const auto elements = enumerate_elements(g, bound);

    std::map<std::vector<std::size_t>, std::size_t> by_fixed;
    StateSpace space;
    space.sectors.reserve(elements.size());
    for (const auto& el : elements) {
        Sector s;
        s.element = el;
        s.fixed = fixed_locus(el);
        if (s.fixed.empty()) {
            s.dimension = 1;
        } else {
            s.restricted = w.polynomial.restricted_to(s.fixed);
            auto it = by_fixed.find(s.fixed);
            if (it == by_fixed.end()) {
                it = by_fixed.emplace(s.fixed, invariant_sector_dimension(w, g, s.fixed)).first;
            }
            s.dimension = it->second;
        }
        space.total_dimension += s.dimension;
        space.sectors.push_back(std::move(s));
    }
    return space;
}

bool has_half_weight_chain_variable(const InvertibleStructure& w, const std::vector<Rational>& q) {
    const Rational half(1, 2);
    for (const auto& b : w.blocks) {
        if (b.kind != BlockKind::Chain) continue;
        for (auto v : b.variables)
            if (q[v] == half) return true;
    }
    return false;
}

MirrorReport mirror_check(const InvertibleStructure& w, std::uint64_t bound) {
    return mirror_check(w, fjrw_state_space(w, bound));
}

MirrorReport mirror_check(const InvertibleStructure& w, const StateSpace& space) {
    MirrorReport r;
    r.state_dim = space.total_dimension;

    const auto wt = check_invertible(transpose(w));
    const auto qt = weights(wt.matrix).q;
    r.mirror_milnor = milnor_number(qt);
    r.good_basis_size = standard_good_basis(wt).size();
    r.equal = Integer(static_cast<unsigned long>(r.state_dim)) == r.mirror_milnor;
    r.weight_half_chain =
        has_half_weight_chain_variable(w, weights(w.matrix).q) || has_half_weight_chain_variable(wt, qt);
    return r;
}

} // namespace lgkit
