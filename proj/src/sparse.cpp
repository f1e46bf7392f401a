#include "gliosim/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "gliosim/errors.hpp"

namespace gliosim {

SparseOperator::SparseOperator(std::int64_t dim, std::vector<std::int64_t> row_offsets,
                               std::vector<std::int32_t> column_indices,
                               std::vector<double> coefficients)
    : dim_(dim), offs_(std::move(row_offsets)), cols_(std::move(column_indices)),
      vals_(std::move(coefficients)) {
    if (dim_ < 0) throw std::invalid_argument("SparseOperator: negative dimension");
    if (offs_.size() != static_cast<std::size_t>(dim_) + 1)
        throw std::invalid_argument("SparseOperator: row_offsets must have dim+1 entries");
    if (offs_.front() != 0 || offs_.back() != static_cast<std::int64_t>(vals_.size()) ||
        cols_.size() != vals_.size())
        throw std::invalid_argument("SparseOperator: offsets/entries size mismatch");
    for (std::int64_t r = 0; r < dim_; ++r) {
        if (offs_[r] > offs_[r + 1])
            throw std::invalid_argument("SparseOperator: row offsets not monotone");
        for (std::int64_t p = offs_[r]; p < offs_[r + 1]; ++p) {
            if (cols_[p] < 0 || cols_[p] >= dim_)
                throw std::invalid_argument("SparseOperator: column index out of range");
            if (p > offs_[r] && cols_[p] <= cols_[p - 1])
                throw std::invalid_argument("SparseOperator: columns not sorted unique in row " +
                                            std::to_string(r));
        }
    }
    std::vector<double> colsum(static_cast<std::size_t>(dim_), 0.0);
    for (std::size_t p = 0; p < vals_.size(); ++p)
        colsum[static_cast<std::size_t>(cols_[p])] += std::abs(vals_[p]);
    norm1_ = 0.0;
    for (double c : colsum) norm1_ = std::max(norm1_, c);
}

void SparseOperator::apply(const std::vector<double>& x, std::vector<double>& y, int workers) const {
    if (static_cast<std::int64_t>(x.size()) != dim_)
        throw std::invalid_argument("SparseOperator::apply: vector length " +
                                    std::to_string(x.size()) + " != dim " + std::to_string(dim_));
    y.resize(x.size());
    auto rows = [&](std::int64_t lo, std::int64_t hi) {
        const std::int64_t* off = offs_.data();
        const std::int32_t* col = cols_.data();
        const double* val = vals_.data();
        const double* xp = x.data();
        double* yp = y.data();
        for (std::int64_t r = lo; r < hi; ++r) {
            double acc = 0.0;
            for (std::int64_t p = off[r]; p < off[r + 1]; ++p) acc += val[p] * xp[col[p]];
            yp[r] = acc;
        }
    };
    // Thread spawn only pays off for large operators.
    if (workers > 1 && dim_ >= 65536) {
        int w = std::min<std::int64_t>(workers, dim_);
        std::vector<std::thread> pool;
        pool.reserve(w);
        std::int64_t chunk = (dim_ + w - 1) / w;
        for (int t = 0; t < w; ++t) {
            std::int64_t lo = t * chunk;
            std::int64_t hi = std::min(dim_, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    } else {
        rows(0, dim_);
    }
}

std::vector<double> SparseOperator::apply(const std::vector<double>& x, int workers) const {
    std::vector<double> y;
    apply(x, y, workers);
    return y;
}

CsrBuilder::CsrBuilder(std::int64_t dim) : dim_(dim), offs_{0} {
    offs_.reserve(static_cast<std::size_t>(dim) + 1);
}

void CsrBuilder::push_row(const std::vector<std::pair<std::int32_t, double>>& entries) {
    if (row_ >= dim_) throw std::invalid_argument("CsrBuilder: too many rows");
    std::vector<std::pair<std::int32_t, double>> sorted(entries);
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [c, v] : sorted) {
        cols_.push_back(c);
        vals_.push_back(v);
    }
    offs_.push_back(static_cast<std::int64_t>(vals_.size()));
    ++row_;
}

SparseOperator CsrBuilder::finish() {
    if (row_ != dim_)
        throw std::invalid_argument("CsrBuilder: pushed " + std::to_string(row_) + " of " +
                                    std::to_string(dim_) + " rows");
    return SparseOperator(dim_, std::move(offs_), std::move(cols_), std::move(vals_));
}

void write_coo(const SparseOperator& a, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("write_coo: cannot open '" + path + "'");
    char buf[64];
    for (std::int64_t r = 0; r < a.dim(); ++r) {
        for (std::int64_t p = a.row_offsets()[r]; p < a.row_offsets()[r + 1]; ++p) {
            std::snprintf(buf, sizeof buf, "%.17g", a.coefficients()[p]);
            out << r << ' ' << a.column_indices()[p] << ' ' << buf << '\n';
        }
    }
    if (!out) throw data_error("write_coo: write failure on '" + path + "'");
}

}  // namespace gliosim
