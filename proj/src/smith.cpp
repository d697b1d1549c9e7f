#include "lgkit/error.hpp"
#include "lgkit/linalg.hpp"

namespace lgkit {

namespace {

void add_row_multiple(IntegerMatrix& m, std::size_t target, std::size_t source, const Integer& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += f * m(source, j);
}

void add_col_multiple(IntegerMatrix& m, std::size_t target, std::size_t source, const Integer& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += f * m(i, source);
}

} // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i) out.push_back(d(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::InvalidArgument, "smith_normal_form: matrix not square");
    const std::size_t n = a.rows();
    IntegerMatrix d = a;
    IntegerMatrix u = IntegerMatrix::identity(n);
    IntegerMatrix v = IntegerMatrix::identity(n);

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero |entry| in the trailing block, first in row-major order
            std::size_t pi = n, pj = n;
            Integer best;
            for (std::size_t i = t; i < n; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    if (d(i, j) == 0) continue;
                    Integer mag = abs(d(i, j));
                    if (pi == n || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == n) throw Error(ErrorKind::InvalidArgument, "smith_normal_form: matrix is singular");
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (d(i, t) == 0) continue;
                Integer q = d(i, t) / d(t, t); // truncating
                add_row_multiple(d, i, t, -q);
                add_row_multiple(u, i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                Integer q = d(t, j) / d(t, t);
                add_col_multiple(d, j, t, -q);
                add_col_multiple(v, j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: fold an offending row into row t and go again
            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == n) break;
            add_row_multiple(d, t, bad, 1);
            add_row_multiple(u, t, bad, 1);
        }
        if (d(t, t) < 0) {
            for (std::size_t i = 0; i < n; ++i) {
                d(i, t) = -d(i, t);
                v(i, t) = -v(i, t);
            }
        }
    }

    if (u * a * v != d) {
        throw Error(ErrorKind::Consistency, "smith_normal_form: reconstruction U*A*V != D");
    }
    return {std::move(u), std::move(d), std::move(v)};
}

} // namespace lgkit
