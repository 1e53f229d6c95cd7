#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "symforge/poly.hpp"

namespace Eigen {

/// Poly as an Eigen scalar: an exact integral domain, no precision notion.
template <>
struct NumTraits<symforge::Poly> : GenericNumTraits<symforge::Poly> {
    using Real = symforge::Poly;
    using NonInteger = symforge::Poly;
    using Literal = symforge::Poly;
    using Nested = symforge::Poly;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 50,
        MulCost = 200
    };
};

}  // namespace Eigen

namespace symforge {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using PolyMatrix = DenseMatrix<Poly>;

namespace detail {

template <typename Scalar>
bool is_zero_scalar(const Scalar& s)
{
    if constexpr (std::is_same_v<Scalar, Poly>) {
        return s.is_zero();
    } else {
        return s == Scalar(0);
    }
}

}  // namespace detail

template <std::integral T>
T exact_quotient(T a, T b)
{
    return a / b;
}

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact, so `exact_quotient(a, b)` must be reachable for the scalar type.
/// The 0x0 determinant is 1.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input)
{
    using Scalar = typename Derived::Scalar;
    using Index = Eigen::Index;
    eigen_assert(input.rows() == input.cols());
    DenseMatrix<Scalar> m = input;
    const Index n = m.rows();
    if (n == 0) {
        return Scalar(1);
    }
    bool negate = false;
    Scalar previous(1);
    for (Index k = 0; k + 1 < n; ++k) {
        if (detail::is_zero_scalar(m(k, k))) {
            Index pivot = k + 1;
            while (pivot < n && detail::is_zero_scalar(m(pivot, k))) {
                ++pivot;
            }
            if (pivot == n) {
                return Scalar(0);
            }
            m.row(k).swap(m.row(pivot));
            negate = !negate;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                Scalar cross = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_quotient(cross, previous);
            }
            m(i, k) = Scalar(0);
        }
        previous = m(k, k);
    }
    Scalar det = m(n - 1, n - 1);
    return negate ? Scalar(0) - det : det;
}

/// Determinant by Laplace expansion along the first row. Exponential; kept
/// as an independent oracle for small matrices.
template <typename Derived>
typename Derived::Scalar cofactor_determinant(const Eigen::MatrixBase<Derived>& input)
{
    using Scalar = typename Derived::Scalar;
    using Index = Eigen::Index;
    eigen_assert(input.rows() == input.cols());
    const Index n = input.rows();
    if (n == 0) {
        return Scalar(1);
    }
    if (n == 1) {
        return input(0, 0);
    }
    Scalar det(0);
    DenseMatrix<Scalar> sub(n - 1, n - 1);
    for (Index c = 0; c < n; ++c) {
        if (detail::is_zero_scalar(input(0, c))) {
            continue;
        }
        for (Index i = 1; i < n; ++i) {
            for (Index j = 0, t = 0; j < n; ++j) {
                if (j != c) {
                    sub(i - 1, t++) = input(i, j);
                }
            }
        }
        Scalar term = input(0, c) * cofactor_determinant(sub);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// The submatrix left after deleting the listed rows and columns.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> minor_matrix(const Eigen::MatrixBase<Derived>& m,
                                                   std::span<const std::size_t> removed_rows,
                                                   std::span<const std::size_t> removed_cols)
{
    auto kept = [](Eigen::Index size, std::span<const std::size_t> removed) {
        std::vector<Eigen::Index> keep;
        for (Eigen::Index k = 0; k < size; ++k) {
            bool drop = false;
            for (const auto r : removed) {
                drop = drop || static_cast<Eigen::Index>(r) == k;
            }
            if (!drop) {
                keep.push_back(k);
            }
        }
        return keep;
    };
    for (const auto r : removed_rows) {
        if (static_cast<Eigen::Index>(r) >= m.rows()) {
            throw IndexError("row index " + std::to_string(r) + " out of range");
        }
    }
    for (const auto c : removed_cols) {
        if (static_cast<Eigen::Index>(c) >= m.cols()) {
            throw IndexError("column index " + std::to_string(c) + " out of range");
        }
    }
    const auto rows = kept(m.rows(), removed_rows);
    const auto cols = kept(m.cols(), removed_cols);
    return m(rows, cols);
}

}  // namespace symforge
