#include "lgkit/symmetry.hpp"

#include "lgkit/error.hpp"

#include <algorithm>

namespace lgkit {

GroupElement GroupElement::compose(const GroupElement& other) const {
    GroupElement out;
    out.phases.reserve(phases.size());
    for (std::size_t j = 0; j < phases.size(); ++j) out.phases.push_back(mod_one(phases[j] + other.phases[j]));
    return out;
}

GroupElement GroupElement::power(long k) const {
    GroupElement out;
    out.phases.reserve(phases.size());
    for (const auto& t : phases) out.phases.push_back(mod_one(t * k));
    return out;
}

bool GroupElement::is_identity() const {
    return std::all_of(phases.begin(), phases.end(), [](const Rational& t) { return t == 0; });
}

bool operator<(const GroupElement& a, const GroupElement& b) {
    return std::lexicographical_compare(a.phases.begin(), a.phases.end(), b.phases.begin(), b.phases.end());
}

bool is_member(const ExponentMatrix& e, const GroupElement& g) {
    for (std::size_t i = 0; i < e.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < e.cols(); ++j)
            if (e(i, j) != 0) s += g.phases[j] * e(i, j);
        if (!is_integer(s)) return false;
    }
    return true;
}

SymmetryGroup max_symmetry_group(const ExponentMatrix& e) {
    if (!e.is_square()) throw Error(ErrorKind::NotInvertible, "symmetry group needs a square exponent matrix");
    const std::size_t n = e.rows();
    SmithDecomposition snf;
    try {
        snf = smith_normal_form(e.cast<Integer>());
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::InvalidArgument) throw Error(ErrorKind::NotInvertible, err.what());
        throw;
    }

    // E^{-1} = V D^{-1} U, and U permutes Z^N, so the group is generated by
    // the columns of V scaled by 1/d_i.
    SymmetryGroup g;
    g.num_vars = n;
    g.order = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const Integer& d = snf.d(i, i);
        g.order *= d;
        if (d == 1) continue;
        GroupElement gen;
        gen.phases.reserve(n);
        for (std::size_t j = 0; j < n; ++j) gen.phases.push_back(mod_one(make_rational(snf.v(j, i), d)));
        if (!is_member(e, gen)) throw Error(ErrorKind::Consistency, "symmetry generator fails membership");
        g.generators.push_back(std::move(gen));
        g.invariant_factors.push_back(d);
    }
    if (g.order != abs(determinant(e.cast<Integer>()))) {
        throw Error(ErrorKind::Consistency, "group order differs from |det E|");
    }
    return g;
}

std::vector<GroupElement> enumerate_elements(const SymmetryGroup& g, std::uint64_t bound) {
    if (g.order > Integer(std::to_string(bound))) {
        throw Error(ErrorKind::BoundExceeded, "group order " + to_string(g.order) +
                                                  " exceeds enumeration bound " + std::to_string(bound));
    }
    const std::size_t r = g.generators.size();
    std::vector<long> factors;
    for (const auto& d : g.invariant_factors) factors.push_back(d.get_si());

    std::vector<GroupElement> out;
    out.reserve(g.order.get_ui());
    // odometer over coefficient vectors, last coordinate fastest
    std::vector<long> c(r, 0);
    for (;;) {
        GroupElement el = GroupElement::identity(g.num_vars);
        for (std::size_t i = 0; i < r; ++i)
            if (c[i] != 0) el = el.compose(g.generators[i].power(c[i]));
        out.push_back(std::move(el));
        std::size_t i = r;
        for (; i > 0; --i) {
            if (++c[i - 1] < factors[i - 1]) break;
            c[i - 1] = 0;
        }
        if (i == 0) break;
    }
    return out;
}

GroupElement exponential_grading_element(const ExponentMatrix& e, const std::vector<Rational>& q) {
    GroupElement j;
    for (const auto& qj : q) j.phases.push_back(mod_one(qj));
    if (!is_member(e, j)) {
        throw Error(ErrorKind::Consistency, "exponential grading element is not a diagonal symmetry");
    }
    return j;
}

std::vector<std::size_t> fixed_locus(const GroupElement& g) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < g.phases.size(); ++j)
        if (g.phases[j] == 0) out.push_back(j);
    return out;
}

Rational monomial_character(const GroupElement& g, const Exponents& m,
                            const std::vector<std::size_t>& fixed, bool twist) {
    std::vector<bool> in_fixed(g.phases.size(), false);
    for (auto j : fixed) in_fixed[j] = true;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] != 0 && !in_fixed[j]) {
            throw Error(ErrorKind::InvalidArgument, "monomial is not supported on the fixed locus");
        }
    }
    Rational s = 0;
    for (auto j : fixed) s += g.phases[j] * (m[j] + (twist ? 1 : 0));
    return mod_one(s);
}

} // namespace lgkit
