#include "riskstrat/models/dataset.hpp"

#include <algorithm>

#include "riskstrat/util/errors.hpp"

namespace riskstrat {

CsrMatrix CsrMatrix::from_bow(const std::vector<SparseCountVector>& rows, int dimension) {
    CsrMatrix m;
    m.n_cols = dimension;
    for (const auto& row : rows) {
        if (row.dimension != dimension) {
            throw DataError("feature dimension mismatch: row has " + std::to_string(row.dimension) +
                            ", matrix expects " + std::to_string(dimension));
        }
        for (const auto& [col, count] : row.entries) {
            m.cols.push_back(col);
            m.vals.push_back(static_cast<double>(count));
        }
        m.row_ptr.push_back(static_cast<std::int64_t>(m.cols.size()));
        ++m.n_rows;
    }
    return m;
}

CsrMatrix CsrMatrix::from_dense(const std::vector<std::vector<double>>& rows) {
    CsrMatrix m;
    m.n_cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m.n_cols) {
            throw DataError("dense rows have inconsistent dimensions");
        }
        for (int c = 0; c < m.n_cols; ++c) {
            m.cols.push_back(c);
            m.vals.push_back(row[static_cast<std::size_t>(c)]);
        }
        m.row_ptr.push_back(static_cast<std::int64_t>(m.cols.size()));
        ++m.n_rows;
    }
    return m;
}

void CsrMatrix::add_row(std::span<const int> row_cols, std::span<const double> row_vals) {
    cols.insert(cols.end(), row_cols.begin(), row_cols.end());
    vals.insert(vals.end(), row_vals.begin(), row_vals.end());
    row_ptr.push_back(static_cast<std::int64_t>(cols.size()));
    ++n_rows;
}

double CsrMatrix::row_dot(int r, const double* w) const {
    const auto rc = row_cols(r);
    const auto rv = row_vals(r);
    double acc = 0.0;
    for (std::size_t i = 0; i < rc.size(); ++i) {
        acc += rv[i] * w[rc[i]];
    }
    return acc;
}

void CsrMatrix::row_axpy(int r, double alpha, double* out) const {
    const auto rc = row_cols(r);
    const auto rv = row_vals(r);
    for (std::size_t i = 0; i < rc.size(); ++i) {
        out[rc[i]] += alpha * rv[i];
    }
}

double CsrMatrix::row_feature(int r, int col) const {
    const auto rc = row_cols(r);
    const auto it = std::lower_bound(rc.begin(), rc.end(), col);
    if (it == rc.end() || *it != col) return 0.0;
    return row_vals(r)[static_cast<std::size_t>(it - rc.begin())];
}

double CsrMatrix::row_sum(int r) const {
    const auto rv = row_vals(r);
    double acc = 0.0;
    for (double v : rv) acc += v;
    return acc;
}

}  // namespace riskstrat
