#include "lgkit/jacobian.hpp"

#include "lgkit/classify.hpp"
#include "lgkit/error.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>

namespace lgkit {

namespace {

void enumerate(const std::vector<long>& w, std::size_t j, long remaining, Exponents& cur,
               std::vector<Exponents>& out) {
    if (j == w.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (long m = 0; m * w[j] <= remaining; ++m) {
        cur[j] = static_cast<int>(m);
        enumerate(w, j + 1, remaining - m * w[j], cur, out);
    }
    cur[j] = 0;
}

std::vector<Exponents> enumerate_scaled(const std::vector<long>& w, long degree) {
    std::vector<Exponents> out;
    if (degree < 0) return out;
    Exponents cur(w.size(), 0);
    enumerate(w, 0, degree, cur, out);
    return out;
}

long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "weight denominators too large");
    return z.get_si();
}

} // namespace

std::vector<Exponents> graded_monomials(const std::vector<Rational>& q, const Rational& d) {
    if (d < 0) return {};
    std::vector<Rational> all = q;
    all.push_back(d);
    const Integer scale = common_denominator(all);
    std::vector<long> w;
    for (const auto& qj : q) {
        if (qj <= 0) throw Error(ErrorKind::InvalidArgument, "graded_monomials needs positive weights");
        w.push_back(to_long(Rational(qj * scale).get_num()));
    }
    return enumerate_scaled(w, to_long(Rational(d * scale).get_num()));
}

GradedJacobian::GradedJacobian(Polynomial f, std::vector<Rational> q) : f_(std::move(f)), q_(std::move(q)) {
    if (q_.size() != f_.num_vars()) throw Error(ErrorKind::InvalidArgument, "weight vector length mismatch");
    for (const auto& qj : q_)
        if (qj <= 0) throw Error(ErrorKind::InvalidArgument, "weights must be positive");
    scale_ = to_long(common_denominator(q_));
    for (const auto& qj : q_) {
        w_.push_back(to_long(Rational(qj * scale_).get_num()));
        max_w_ = std::max(max_w_, w_.back());
        top_ += scale_ - 2 * w_.back();
    }
    for (const auto& t : f_.terms()) {
        if (scaled_degree(t.exponents) != scale_) {
            throw Error(ErrorKind::InvalidArgument,
                        "polynomial is not quasihomogeneous of degree 1: term " + format_monomial(t.exponents));
        }
    }
    for (std::size_t j = 0; j < f_.num_vars(); ++j) {
        partials_.push_back(f_.derivative(j));
        binomial_ = binomial_ && partials_.back().size() <= 2;
    }
}

long GradedJacobian::scaled_degree(const Exponents& e) const {
    long d = 0;
    for (std::size_t j = 0; j < e.size(); ++j) d += e[j] * w_[j];
    return d;
}

void GradedJacobian::enumerate_up_to(long bound) const {
    if (bound <= enumerated_) return;
    by_degree_.assign(static_cast<std::size_t>(bound) + 1, {});
    // depth-first over exponent vectors with total scaled degree <= bound;
    // lexicographic visiting order keeps each bucket sorted
    const std::size_t n = w_.size();
    Exponents cur(n, 0);
    auto walk = [&](auto&& self, std::size_t j, long used) -> void {
        if (j == n) {
            auto& slot = by_degree_[static_cast<std::size_t>(used)];
            slot.insert(slot.end(), cur.begin(), cur.end());
            return;
        }
        for (long m = 0; used + m * w_[j] <= bound; ++m) {
            cur[j] = static_cast<int>(m);
            self(self, j + 1, used + m * w_[j]);
        }
        cur[j] = 0;
    };
    walk(walk, 0, 0);
    enumerated_ = bound;

    // mixed-radix packing of every exponent vector reachable from this range,
    // including the terms of shifted partials (exponents at most bound / w_j + 1)
    stride_.assign(n, 0);
    packable_ = true;
    unsigned __int128 total = 1;
    for (std::size_t j = 0; j < n && packable_; ++j) {
        stride_[j] = static_cast<std::uint64_t>(total);
        total *= static_cast<unsigned __int128>(bound / w_[j] + 2);
        packable_ = total <= std::numeric_limits<std::uint64_t>::max();
    }
}

const std::vector<int>& GradedJacobian::bucket(long degree) const {
    static const std::vector<int> none;
    if (degree < 0) return none;
    enumerate_up_to(std::max(degree, top_ + max_w_));
    return by_degree_[static_cast<std::size_t>(degree)];
}

std::vector<Exponents> GradedJacobian::monomials_of_degree(long degree) const {
    const auto& flat = bucket(degree);
    const std::size_t n = w_.size();
    std::vector<Exponents> out;
    if (n == 0) return out;
    out.reserve(flat.size() / n);
    for (std::size_t i = 0; i < flat.size(); i += n) out.emplace_back(flat.begin() + i, flat.begin() + i + n);
    return out;
}

std::vector<long> GradedJacobian::occupied_degrees(long bound) const {
    std::vector<long> out;
    if (bound < 0) return out;
    enumerate_up_to(std::max(bound, top_ + max_w_));
    for (long d = 0; d <= bound; ++d)
        if (!by_degree_[static_cast<std::size_t>(d)].empty()) out.push_back(d);
    return out;
}

GradedJacobian::Slice GradedJacobian::slice(long degree, const MonomialFilter& keep) const {
    Slice s;
    auto mons = monomials_of_degree(degree);
    std::reverse(mons.begin(), mons.end());
    for (auto& m : mons) {
        if (keep && !keep(m)) continue;
        s.column.emplace(m, s.monomials.size());
        s.monomials.push_back(std::move(m));
    }
    s.echelon = SparseEchelon(s.monomials.size());
    if (s.monomials.empty()) return s;

    for (std::size_t j = 0; j < partials_.size(); ++j) {
        const Polynomial& p = partials_[j];
        if (p.is_zero()) continue;
        const long shift = degree - (scale_ - w_[j]);
        for (const auto& m : monomials_of_degree(shift)) {
            Polynomial g = p.shifted(m);
            if (keep) {
                std::size_t kept = 0;
                for (const auto& t : g.terms()) kept += keep(t.exponents) ? 1 : 0;
                if (kept == 0) continue;
                if (kept != g.size()) {
                    throw Error(ErrorKind::Consistency, "monomial filter splits a Jacobian ideal generator");
                }
            }
            s.echelon.insert(s.coordinates(g));
        }
    }
    return s;
}

std::vector<Exponents> GradedJacobian::standard_monomials(long degree, const MonomialFilter& keep) const {
    const auto& flat = bucket(degree);
    if (!binomial_ || !packable_) return slice(degree, keep).standard_monomials();
    const std::size_t nv = w_.size();
    auto pack = [this, nv](const int* e) {
        std::uint64_t k = 0;
        for (std::size_t j = 0; j < nv; ++j) k += static_cast<std::uint64_t>(e[j]) * stride_[j];
        return k;
    };

    // columns in lexicographically descending order, as in slice()
    std::vector<const int*> cols;
    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(flat.size() / std::max<std::size_t>(nv, 1));
    Exponents scratch(nv);
    for (std::size_t i = flat.size(); i >= nv && i > 0; i -= nv) {
        const int* e = flat.data() + i - nv;
        if (keep) {
            scratch.assign(e, e + nv);
            if (!keep(scratch)) continue;
        }
        index.emplace(pack(e), cols.size());
        cols.push_back(e);
    }
    const std::size_t n = cols.size();
    if (n == 0) return {};

    // Each shifted partial is either a monomial (kills its column) or a
    // binomial c0 x^a + c1 x^b, i.e. x^a = f_j x^b with f_j = -c1/c0.
    // Connectivity first; values are only propagated through components that
    // contain a cycle.
    struct Edge {
        std::size_t a, b, partial;
    };
    std::vector<Edge> edges;
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&parent](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<bool> killed(n, false);

    for (std::size_t j = 0; j < partials_.size(); ++j) {
        const Polynomial& p = partials_[j];
        if (p.is_zero()) continue;
        std::uint64_t term_key[2] = {0, 0};
        for (std::size_t t = 0; t < p.size(); ++t) term_key[t] = pack(p.terms()[t].exponents.data());
        const auto& shifts = bucket(degree - (scale_ - w_[j]));
        for (std::size_t i = 0; i < shifts.size(); i += nv) {
            const std::uint64_t base = pack(shifts.data() + i);
            std::size_t at[2];
            std::size_t found = 0;
            for (std::size_t t = 0; t < p.size(); ++t) {
                auto it = index.find(base + term_key[t]);
                if (it != index.end()) at[found++] = it->second;
            }
            if (found == 0) continue;
            if (found != p.size()) {
                throw Error(ErrorKind::Consistency, "monomial filter splits a Jacobian ideal generator");
            }
            if (found == 1) {
                killed[at[0]] = true;
            } else {
                edges.push_back({at[0], at[1], j});
                parent[find(at[0])] = find(at[1]);
            }
        }
    }

    std::vector<std::size_t> vertices(n, 0), edge_count(n, 0);
    std::vector<bool> dead(n, false);
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t r = find(c);
        ++vertices[r];
        if (killed[c]) dead[r] = true;
    }
    for (const auto& ed : edges) ++edge_count[find(ed.a)];

    // A node's value relative to its component's start is prod_j f_j^k_j,
    // tracked as the integer vector k. Equal vectors agree; unequal ones are
    // settled by evaluating the rational quotient once.
    std::vector<std::size_t> cyclic;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::size_t r = find(edges[i].a);
        if (!dead[r] && edge_count[r] >= vertices[r]) cyclic.push_back(i);
    }
    if (!cyclic.empty()) {
        // adjacency in compressed rows: offset[v] .. offset[v+1] into `incident`
        std::vector<std::size_t> offset(n + 1, 0), incident(2 * cyclic.size());
        for (auto i : cyclic) {
            ++offset[edges[i].a + 1];
            ++offset[edges[i].b + 1];
        }
        for (std::size_t v = 0; v < n; ++v) offset[v + 1] += offset[v];
        std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
        for (auto i : cyclic) {
            incident[fill[edges[i].a]++] = i;
            incident[fill[edges[i].b]++] = i;
        }

        const std::size_t np = partials_.size();
        std::vector<Rational> factor(np, 1);
        for (std::size_t j = 0; j < np; ++j) {
            const auto& t = partials_[j].terms();
            if (t.size() == 2) factor[j] = -t[1].coefficient / t[0].coefficient;
        }
        std::map<std::vector<long>, bool> trivial; // prod_j f_j^diff_j == 1, memoized
        auto is_one = [&](const std::vector<long>& diff) {
            auto it = trivial.find(diff);
            if (it != trivial.end()) return it->second;
            Rational prod = 1;
            for (std::size_t j = 0; j < np; ++j) {
                for (long k = 0; k < diff[j]; ++k) prod *= factor[j];
                for (long k = 0; k > diff[j]; --k) prod /= factor[j];
            }
            return trivial[diff] = prod == 1;
        };
        std::vector<long> value(n * np, 0);
        std::vector<bool> seen(n, false);
        std::vector<long> want(np), diff(np);
        std::vector<std::size_t> stack;
        for (std::size_t s0 = 0; s0 < n; ++s0) {
            if (offset[s0] == offset[s0 + 1] || seen[s0] || dead[find(s0)]) continue;
            seen[s0] = true;
            stack.assign(1, s0);
            while (!stack.empty() && !dead[find(s0)]) {
                const std::size_t v = stack.back();
                stack.pop_back();
                for (std::size_t k = offset[v]; k < offset[v + 1]; ++k) {
                    const Edge& ed = edges[incident[k]];
                    const std::size_t u = ed.a == v ? ed.b : ed.a;
                    // value[a] = f * value[b]
                    std::copy(value.begin() + v * np, value.begin() + (v + 1) * np, want.begin());
                    want[ed.partial] += ed.a == v ? -1 : 1;
                    if (!seen[u]) {
                        seen[u] = true;
                        std::copy(want.begin(), want.end(), value.begin() + u * np);
                        stack.push_back(u);
                        continue;
                    }
                    bool same = true;
                    for (std::size_t j = 0; j < np; ++j) {
                        diff[j] = value[u * np + j] - want[j];
                        same = same && diff[j] == 0;
                    }
                    if (!same && !is_one(diff)) {
                        dead[find(s0)] = true;
                        break;
                    }
                }
            }
        }
    }

    // one survivor per live component: its lexicographically smallest monomial
    std::vector<std::size_t> last(n, n);
    for (std::size_t c = 0; c < n; ++c) last[find(c)] = c;
    std::vector<Exponents> out;
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t r = find(c);
        if (last[r] == c && !dead[r]) out.emplace_back(cols[c], cols[c] + nv);
    }
    return out;
}

std::vector<Exponents> GradedJacobian::Slice::standard_monomials() const {
    std::vector<Exponents> out;
    for (auto c : echelon.free_columns()) out.push_back(monomials[c]);
    return out;
}

SparseVector GradedJacobian::Slice::coordinates(const Polynomial& p) const {
    SparseVector v;
    v.reserve(p.size());
    for (const auto& t : p.terms()) {
        auto it = column.find(t.exponents);
        if (it == column.end()) {
            throw Error(ErrorKind::InvalidArgument, "term " + format_monomial(t.exponents) + " outside slice");
        }
        v.emplace_back(it->second, t.coefficient);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

GradedBasis jacobian_basis(const Polynomial& f, const std::vector<Rational>& q) {
    GradedJacobian jac(f, q);
    const Integer mu = milnor_number(q);

    GradedBasis basis;
    basis.socle_degree = jac.unscaled(jac.top_degree());
    for (long d : jac.occupied_degrees(jac.top_degree())) {
        for (auto& m : jac.standard_monomials(d)) basis.elements.push_back({std::move(m), jac.unscaled(d)});
    }
    if (Integer(static_cast<unsigned long>(basis.size())) != mu) {
        throw Error(ErrorKind::Consistency, "Jacobian basis has " + std::to_string(basis.size()) +
                                                " elements but prod(1/q_j - 1) = " + to_string(mu));
    }
    for (long d : jac.occupied_degrees(jac.top_degree() + jac.max_weight())) {
        if (d <= jac.top_degree()) continue;
        if (!jac.standard_monomials(d).empty()) {
            throw Error(ErrorKind::Consistency,
                        "nonzero Jacobian quotient in degree " + to_string(jac.unscaled(d)));
        }
    }
    return basis;
}

Rational reduce_top_degree(const Polynomial& p, const Polynomial& f, const std::vector<Rational>& q) {
    GradedJacobian jac(f, q);
    for (const auto& t : p.terms()) {
        if (jac.scaled_degree(t.exponents) != jac.top_degree()) {
            throw Error(ErrorKind::InvalidArgument,
                        "reduce_top_degree: term " + format_monomial(t.exponents) + " has degree " +
                            to_string(jac.unscaled(jac.scaled_degree(t.exponents))) + ", expected " +
                            to_string(jac.unscaled(jac.top_degree())));
        }
    }
    auto s = jac.slice(jac.top_degree());
    if (s.quotient_dimension() != 1) {
        throw Error(ErrorKind::Consistency, "top-degree quotient is not one-dimensional");
    }
    auto rem = s.echelon.reduce(s.coordinates(p));
    if (rem.size() > 1) throw Error(ErrorKind::Consistency, "top-degree reduction left several terms");
    return rem.empty() ? Rational(0) : rem.front().second;
}

Polynomial hessian(const Polynomial& f) {
    const std::size_t n = f.num_vars();
    std::vector<std::vector<Polynomial>> h(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i) {
        auto fi = f.derivative(i);
        for (std::size_t j = 0; j < n; ++j) h[i][j] = fi.derivative(j);
    }
    // Laplace expansion along rows, memoized over column subsets:
    // minor[S] = det of rows (n - |S|) .. n-1 restricted to the columns in S.
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<Polynomial> minor(full + 1, Polynomial(n));
    minor[0] = Polynomial::constant(n, 1);
    for (std::size_t set = 1; set <= full; ++set) {
        const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(set));
        const std::size_t row = n - k;
        Polynomial acc(n);
        int position = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(set >> c & 1)) continue;
            const auto& entry = h[row][c];
            const auto& sub = minor[set & ~(std::size_t{1} << c)];
            if (!entry.is_zero() && !sub.is_zero()) {
                auto term = entry * sub;
                acc = (position % 2 == 0) ? acc + term : acc - term;
            }
            ++position;
        }
        minor[set] = std::move(acc);
    }
    return minor[full];
}

ResiduePairing residue_pairing(const Polynomial& f, const std::vector<Rational>& q,
                               const GradedBasis& basis) {
    GradedJacobian jac(f, q);
    const std::size_t mu = basis.size();
    auto top = jac.slice(jac.top_degree());
    if (top.quotient_dimension() != 1) {
        throw Error(ErrorKind::Consistency, "top-degree quotient is not one-dimensional");
    }
    auto socle_coefficient = [&](const Polynomial& p) -> Rational {
        auto rem = top.echelon.reduce(top.coordinates(p));
        return rem.empty() ? Rational(0) : rem.front().second;
    };

    const Rational h = socle_coefficient(hessian(f));
    if (h == 0) throw Error(ErrorKind::Consistency, "hessian vanishes in the socle");

    ResiduePairing out{RationalMatrix(mu, mu, 0)};
    const Rational c_hat = jac.unscaled(jac.top_degree());
    for (std::size_t a = 0; a < mu; ++a) {
        for (std::size_t b = a; b < mu; ++b) {
            const auto& ea = basis.elements[a];
            const auto& eb = basis.elements[b];
            if (ea.degree + eb.degree != c_hat) continue;
            Exponents prod = ea.exponents;
            for (std::size_t j = 0; j < prod.size(); ++j) prod[j] += eb.exponents[j];
            const Rational c = socle_coefficient(Polynomial::monomial(prod));
            const Rational g = c * static_cast<unsigned long>(mu) / h;
            out.matrix(a, b) = g;
            out.matrix(b, a) = g;
        }
    }
    return out;
}

IsolatednessReport isolatedness_check(const Polynomial& f, const std::vector<Rational>& q) {
    IsolatednessReport r;
    std::optional<GradedJacobian> jac;
    try {
        jac.emplace(f, q);
    } catch (const Error& e) {
        r.diagnostic = e.what();
        return r;
    }
    Rational expected = 1;
    for (const auto& qj : q) expected *= 1 / qj - 1;

    std::size_t count = 0;
    for (long d : jac->occupied_degrees(jac->top_degree())) count += jac->standard_monomials(d).size();

    for (long d : jac->occupied_degrees(jac->top_degree() + jac->max_weight())) {
        if (d <= jac->top_degree()) continue;
        const auto dim = jac->standard_monomials(d).size();
        if (dim != 0) {
            r.offending_degree = jac->unscaled(d);
            r.diagnostic = "Jacobian quotient has dimension " + std::to_string(dim) + " in degree " +
                           to_string(*r.offending_degree) + " above c_hat";
            return r;
        }
    }
    if (Rational(static_cast<unsigned long>(count)) != expected) {
        r.diagnostic = "quotient dimension up to c_hat is " + std::to_string(count) +
                       " but prod(1/q_j - 1) = " + to_string(expected);
        return r;
    }
    r.isolated = true;
    return r;
}

} // namespace lgkit
