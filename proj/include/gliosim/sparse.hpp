#ifndef GLIOSIM_SPARSE_HPP
#define GLIOSIM_SPARSE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gliosim {

// Compressed sparse row operator. Column indices are sorted and unique within
// each row; the exact 1-norm (max absolute column sum) is computed once on
// construction and cached.
class SparseOperator {
public:
    SparseOperator() = default;
    SparseOperator(std::int64_t dim, std::vector<std::int64_t> row_offsets,
                   std::vector<std::int32_t> column_indices, std::vector<double> coefficients);

    std::int64_t dim() const { return dim_; }
    std::int64_t nnz() const { return static_cast<std::int64_t>(vals_.size()); }
    double one_norm() const { return norm1_; }

    const std::vector<std::int64_t>& row_offsets() const { return offs_; }
    const std::vector<std::int32_t>& column_indices() const { return cols_; }
    const std::vector<double>& coefficients() const { return vals_; }

    // y = A x. Rows are independent, so worker partitioning cannot change the
    // result; reductions stay serial elsewhere.
    void apply(const std::vector<double>& x, std::vector<double>& y, int workers = 1) const;
    std::vector<double> apply(const std::vector<double>& x, int workers = 1) const;

private:
    std::int64_t dim_ = 0;
    std::vector<std::int64_t> offs_{0};
    std::vector<std::int32_t> cols_;
    std::vector<double> vals_;
    double norm1_ = 0.0;
};

// Incremental row-by-row builder; rows must be pushed in order.
class CsrBuilder {
public:
    explicit CsrBuilder(std::int64_t dim);
    // Entries of one row as (column, value) pairs, any order, no duplicates.
    void push_row(const std::vector<std::pair<std::int32_t, double>>& entries);
    SparseOperator finish();

private:
    std::int64_t dim_;
    std::int64_t row_ = 0;
    std::vector<std::int64_t> offs_;
    std::vector<std::int32_t> cols_;
    std::vector<double> vals_;
};

// Coordinate-format text dump (row col value per line), for cross-checking.
void write_coo(const SparseOperator& a, const std::string& path);

}  // namespace gliosim

#endif
