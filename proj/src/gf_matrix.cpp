#include "fibperm/gf_matrix.hpp"

#include <stdexcept>

namespace fibperm {

GFMatrix::GFMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("GFMatrix: dimension must be >= 1");
    a_.assign(static_cast<size_t>(dim) * static_cast<size_t>(dim), RationalGF{});
}

RationalGF& GFMatrix::at(int i, int j) {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw std::out_of_range("GFMatrix::at");
    return a_[static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j)];
}

const RationalGF& GFMatrix::at(int i, int j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw std::out_of_range("GFMatrix::at");
    return a_[static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j)];
}

namespace {

RationalGF det_rec(const GFMatrix& m, std::vector<int>& rows, std::vector<int>& cols) {
    const size_t k = rows.size();
    if (k == 1) return m.at(rows[0], cols[0]);
    RationalGF acc;
    const int col = cols[0];
    std::vector<int> sub_cols(cols.begin() + 1, cols.end());
    for (size_t ri = 0; ri < k; ++ri) {
        const RationalGF& entry = m.at(rows[ri], col);
        if (entry.is_zero()) continue;
        std::vector<int> sub_rows;
        sub_rows.reserve(k - 1);
        for (size_t t = 0; t < k; ++t)
            if (t != ri) sub_rows.push_back(rows[t]);
        RationalGF minor = det_rec(m, sub_rows, sub_cols);
        RationalGF term = entry * minor;
        if (ri % 2 == 1) term = -term;
        acc = acc + term;
    }
    return acc;
}

} // namespace

RationalGF GFMatrix::det() const {
    std::vector<int> rows(static_cast<size_t>(dim_)), cols(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) rows[static_cast<size_t>(i)] = cols[static_cast<size_t>(i)] = i;
    return det_rec(*this, rows, cols);
}

} // namespace fibperm
