#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

Integer det_perm(const std::vector<std::vector<long>>& e) {
    const std::size_t n = e.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Integer prod = 1;
        for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= e[i][perm[i]];
        total += inversions % 2 ? -prod : prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace

Integer permutation_determinant(const std::vector<std::vector<long>>& e) {
    Integer d = det_perm(e);
    return d < 0 ? Integer(-d) : d;
}

std::vector<Rational> cramer_weights(const std::vector<std::vector<long>>& e) {
    const Integer d = det_perm(e);
    if (d == 0) throw std::runtime_error("singular exponent matrix");
    std::vector<Rational> q;
    for (std::size_t j = 0; j < e.size(); ++j) {
        auto m = e;
        for (auto& row : m) row[j] = 1;
        Rational r(det_perm(m), d);
        r.canonicalize();
        q.push_back(r);
    }
    return q;
}

Scaled scale_weights(const std::vector<Rational>& q) {
    Scaled s;
    Integer l = 1;
    for (const auto& x : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    s.scale = l.get_si();
    for (const auto& x : q) s.w.push_back(Rational(x * l).get_num().get_si());
    return s;
}

std::vector<Integer> poincare_series(const std::vector<long>& w, long scale, long up_to) {
    std::vector<Integer> series(up_to + 1, 0);
    series[0] = 1;
    for (long wj : w) {
        // multiply by 1 - t^(L - w_j)
        const long shift = scale - wj;
        for (long d = up_to; d >= shift; --d) series[d] -= series[d - shift];
        // divide by 1 - t^(w_j): running sums with stride w_j
        for (long d = wj; d <= up_to; ++d) series[d] += series[d - wj];
    }
    return series;
}

std::vector<long> dense_graded_dimensions(const Polynomial& f, const std::vector<long>& w, long scale,
                                          long up_to) {
    const std::size_t n = w.size();
    // every monomial of scaled degree <= up_to, by walking a box
    std::vector<Exponents> all;
    Exponents cur(n, 0);
    for (;;) {
        long deg = 0;
        for (std::size_t j = 0; j < n; ++j) deg += cur[j] * w[j];
        if (deg <= up_to) all.push_back(cur);
        std::size_t i = 0;
        for (; i < n; ++i) {
            ++cur[i];
            long d2 = 0;
            for (std::size_t j = 0; j < n; ++j) d2 += cur[j] * w[j];
            if (d2 <= up_to) break;
            cur[i] = 0;
        }
        if (i == n) break;
    }
    auto degree = [&](const Exponents& e) {
        long d = 0;
        for (std::size_t j = 0; j < n; ++j) d += e[j] * w[j];
        return d;
    };

    std::vector<long> dims(up_to + 1, 0);
    for (long d = 0; d <= up_to; ++d) {
        std::map<Exponents, std::size_t> col;
        for (const auto& e : all)
            if (degree(e) == d) col.emplace(e, col.size());
        if (col.empty()) continue;

        std::vector<std::vector<Rational>> rows;
        for (std::size_t j = 0; j < n; ++j) {
            const Polynomial p = f.derivative(j);
            if (p.is_zero()) continue;
            for (const auto& e : all) {
                if (degree(e) + scale - w[j] != d) continue;
                std::vector<Rational> row(col.size(), 0);
                for (const auto& t : p.terms()) {
                    Exponents x = t.exponents;
                    for (std::size_t k = 0; k < n; ++k) x[k] += e[k];
                    row[col.at(x)] += t.coefficient;
                }
                rows.push_back(std::move(row));
            }
        }
        // plain Gaussian elimination for the rank
        std::size_t rank = 0;
        for (std::size_t c = 0; c < col.size() && rank < rows.size(); ++c) {
            std::size_t p = rank;
            while (p < rows.size() && rows[p][c] == 0) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[p], rows[rank]);
            for (std::size_t r = rank + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                const Rational factor = rows[r][c] / rows[rank][c];
                for (std::size_t k = c; k < col.size(); ++k) rows[r][k] -= factor * rows[rank][k];
            }
            ++rank;
        }
        dims[d] = static_cast<long>(col.size() - rank);
    }
    return dims;
}

Rational fermat_residue(long a, long i) {
    return i == a - 2 ? Rational(1, a) : Rational(0);
}

std::vector<std::vector<long>> rows_of(const Polynomial& p) {
    std::vector<std::vector<long>> out;
    for (const auto& t : p.terms()) out.emplace_back(t.exponents.begin(), t.exponents.end());
    return out;
}

} // namespace oracle
