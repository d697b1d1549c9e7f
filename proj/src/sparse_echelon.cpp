#include "lgkit/sparse_echelon.hpp"

#include <algorithm>

namespace lgkit {

SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b) {
    SparseVector out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, -factor * ib->second);
            ++ib;
        } else {
            Rational v = ia->second - factor * ib->second;
            if (v != 0) out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    return out;
}

bool SparseEchelon::insert(SparseVector row) {
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            const Rational lead = row.front().second;
            if (lead != 1) {
                for (auto& [c, v] : row) v /= lead;
            }
            const std::size_t col = row.front().first;
            pivots_.emplace(col, std::move(row));
            return true;
        }
        const Rational f = row.front().second;
        row = axpy(row, f, it->second);
    }
    return false;
}

SparseVector SparseEchelon::reduce(SparseVector row) const {
    SparseVector remainder;
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            remainder.push_back(std::move(row.front()));
            row.erase(row.begin());
            continue;
        }
        const Rational f = row.front().second;
        row = axpy(row, f, it->second);
    }
    return remainder;
}

std::vector<std::size_t> SparseEchelon::free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < num_cols_; ++c)
        if (!pivots_.count(c)) out.push_back(c);
    return out;
}

} // namespace lgkit
