#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "riskstrat/features/features.hpp"

namespace riskstrat {

/// Compressed sparse rows over double values. Bag-of-words features are
/// genuinely sparse; dense embedding rows are stored with every column
/// present, so the trainers share one access path.
struct CsrMatrix {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<std::int64_t> row_ptr{0};
    std::vector<int> cols;
    std::vector<double> vals;

    static CsrMatrix from_bow(const std::vector<SparseCountVector>& rows, int dimension);
    static CsrMatrix from_dense(const std::vector<std::vector<double>>& rows);

    void add_row(std::span<const int> row_cols, std::span<const double> row_vals);

    std::span<const int> row_cols(int r) const {
        const auto b = static_cast<std::size_t>(row_ptr[static_cast<std::size_t>(r)]);
        const auto e = static_cast<std::size_t>(row_ptr[static_cast<std::size_t>(r) + 1]);
        return {cols.data() + b, e - b};
    }
    std::span<const double> row_vals(int r) const {
        const auto b = static_cast<std::size_t>(row_ptr[static_cast<std::size_t>(r)]);
        const auto e = static_cast<std::size_t>(row_ptr[static_cast<std::size_t>(r) + 1]);
        return {vals.data() + b, e - b};
    }
    int row_nnz(int r) const {
        return static_cast<int>(row_ptr[static_cast<std::size_t>(r) + 1] - row_ptr[static_cast<std::size_t>(r)]);
    }

    /// w must have n_cols entries.
    double row_dot(int r, const double* w) const;

    /// out[col] += alpha * value for every stored entry of the row.
    void row_axpy(int r, double alpha, double* out) const;

    /// Stored value at (r, col), 0 when absent. Binary search over the row.
    double row_feature(int r, int col) const;

    double row_sum(int r) const;
};

}  // namespace riskstrat
