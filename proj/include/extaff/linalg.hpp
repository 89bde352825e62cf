#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "extaff/rational.hpp"

namespace extaff {

// Dense matrix over the rationals. Sized for the desk-scale systems this
// library produces (tens of unknowns, hundreds of equations); everything is
// exact Gauss-Jordan elimination.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    // In-place reduced row echelon form; returns the pivot column of each
    // pivot row in order.
    std::vector<std::size_t> rref()
    {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t pivot = row;
            while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != row) swap_rows(pivot, row);
            const Rational inv = Rational(1) / at(row, col);
            for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || at(r, col) == 0) continue;
                const Rational factor = at(r, col);
                for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const
    {
        QMatrix copy = *this;
        return copy.rref().size();
    }

private:
    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Canonical nullspace basis of M (one vector per free column, with entry 1 in
// the free slot). Deterministic: free columns are visited in increasing order.
inline std::vector<std::vector<Rational>> kernel_basis(QMatrix m)
{
    const std::size_t cols = m.cols();
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols);
        v[free_col] = 1;
        for (std::size_t prow = 0; prow < pivots.size(); ++prow)
            v[pivots[prow]] = -m.at(prow, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves A x = b exactly. Returns nullopt when inconsistent. When the system
// is underdetermined the free variables are set to zero, so the result is
// still deterministic.
inline std::optional<std::vector<Rational>> solve_linear(const QMatrix& a,
                                                         const std::vector<Rational>& b)
{
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    const auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt; // 0 = 1 row
    std::vector<Rational> x(a.cols());
    for (std::size_t prow = 0; prow < pivots.size(); ++prow)
        x[pivots[prow]] = aug.at(prow, a.cols());
    return x;
}

} // namespace extaff
