#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace vircat {

/// Exact Gaussian-elimination helpers for Eigen matrices over a field
/// scalar with exact equality (no pivot thresholds).  Instantiated with
/// Rat in this project, but any exact field works.

/// Determinant; the matrix is taken by value and destroyed.
template <typename Scalar>
Scalar exact_determinant(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
    const auto n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("exact_determinant: non-square matrix");
    Scalar det(1);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index row = col; row < n; ++row)
            if (!(m(row, col) == Scalar(0))) { piv = row; break; }
        if (piv < 0) return Scalar(0);
        if (piv != col) {
            m.row(piv).swap(m.row(col));
            det = Scalar(0) - det;
        }
        det = det * m(col, col);
        for (Eigen::Index row = col + 1; row < n; ++row) {
            if (m(row, col) == Scalar(0)) continue;
            Scalar f = m(row, col) / m(col, col);
            for (Eigen::Index j = col; j < n; ++j) m(row, j) = m(row, j) - f * m(col, j);
        }
    }
    return det;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> exact_rref(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r)
            if (!(m(r, col) == Scalar(0))) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row) m.row(piv).swap(m.row(row));
        Scalar inv = Scalar(1) / m(row, col);
        for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == Scalar(0)) continue;
            Scalar f = m(r, col);
            for (Eigen::Index j = col; j < m.cols(); ++j) m(r, j) = m(r, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Columns of the returned matrix form a basis of the kernel of m.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> exact_kernel(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index ncols = m.cols();
    std::vector<Eigen::Index> pivots = exact_rref(m);

    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index c = 0; c < ncols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Mat ker(ncols, static_cast<Eigen::Index>(free_cols.size()));
    for (Eigen::Index i = 0; i < ker.rows(); ++i)
        for (Eigen::Index j = 0; j < ker.cols(); ++j) ker(i, j) = Scalar(0);

    for (size_t k = 0; k < free_cols.size(); ++k) {
        Eigen::Index fc = free_cols[k];
        ker(fc, static_cast<Eigen::Index>(k)) = Scalar(1);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            ker(pivots[pi], static_cast<Eigen::Index>(k)) =
                Scalar(0) - m(static_cast<Eigen::Index>(pi), fc);
    }
    return ker;
}

}  // namespace vircat
