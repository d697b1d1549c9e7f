#include "lgkit/linalg.hpp"

#include "lgkit/error.hpp"

namespace lgkit {

RationalVector multiply(const RationalMatrix& a, const RationalVector& x) {
    assert(a.cols() == x.size());
    RationalVector y(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0) y[i] += a(i, j) * x[j];
    return y;
}

std::vector<std::size_t> row_reduce(RationalMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (a(r, j) != 0) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

namespace {

std::vector<RationalVector> kernel_from_rref(const RationalMatrix& rref,
                                             const std::vector<std::size_t>& pivots,
                                             std::size_t num_cols) {
    std::vector<bool> is_pivot(num_cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> kernel;
    for (std::size_t f = 0; f < num_cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(num_cols, 0);
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rref(k, f);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

} // namespace

std::optional<AffineSolution> solve_exact(const RationalMatrix& a, const RationalVector& b) {
    if (b.size() != a.rows()) throw Error(ErrorKind::InvalidArgument, "solve_exact: size mismatch");
    const std::size_t n = a.cols();
    RationalMatrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;

    AffineSolution sol;
    sol.particular.assign(n, 0);
    for (std::size_t k = 0; k < pivots.size(); ++k) sol.particular[pivots[k]] = aug(k, n);

    RationalMatrix rref_a(pivots.size(), n);
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t j = 0; j < n; ++j) rref_a(k, j) = aug(k, j);
    sol.kernel = kernel_from_rref(rref_a, pivots, n);

    if (multiply(a, sol.particular) != b) {
        throw Error(ErrorKind::Consistency, "solve_exact: solution failed verification");
    }
    return sol;
}

RankKernel rank_and_kernel(const RationalMatrix& a) {
    RationalMatrix r = a;
    auto pivots = row_reduce(r);
    return {pivots.size(), kernel_from_rref(r, pivots, a.cols())};
}

std::size_t rank(const RationalMatrix& a) {
    RationalMatrix r = a;
    return row_reduce(r).size();
}

Rational determinant(const RationalMatrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
    RationalMatrix m = a;
    Rational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

Integer determinant(const IntegerMatrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntegerMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

RationalMatrix inverse(const RationalMatrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::InvalidArgument, "inverse of non-square matrix");
    const std::size_t n = a.rows();
    RationalMatrix aug(n, 2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) {
        throw Error(ErrorKind::InvalidArgument, "matrix is singular");
    }
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

} // namespace lgkit
