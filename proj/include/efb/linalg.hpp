#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "efb/scalar.hpp"

namespace efb {

using Vector = std::vector<Scalar>;

// Dense row-major matrix over Q or Q(i).
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static ExactMatrix identity(std::size_t n);
    // Matrix whose columns are the given vectors (all of equal length).
    static ExactMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
    static ExactMatrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Scalar>& entries() const { return data_; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    Vector operator*(const Vector& v) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix scaled(const Scalar& s) const;
    bool is_zero() const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

struct RowEchelon {
    ExactMatrix reduced;             // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

RowEchelon rref(ExactMatrix m);

std::size_t rank(const ExactMatrix& m);

// Throws DimensionError on non-square input.
Scalar det(const ExactMatrix& m);

// Throws DimensionError on non-square input and SingularTransformError
// when the matrix is not invertible.
ExactMatrix inverse(const ExactMatrix& m);

// Basis of {v : M v = 0}. The vectors are returned in canonical form: they
// are the rows of the reduced row echelon form of the kernel, so two calls on
// matrices with equal kernels return identical output.
std::vector<Vector> kernel_basis(const ExactMatrix& m);

// Canonical basis of span(vs), as the nonzero rows of the reduced echelon
// form of the matrix with rows vs. All vectors must share one length.
std::vector<Vector> canonical_basis(std::size_t len, const std::vector<Vector>& vs);

std::size_t span_dimension(std::size_t len, const std::vector<Vector>& vs);

// dim(span(a) ∩ span(b)).
std::size_t intersection_dimension(std::size_t len, const std::vector<Vector>& a,
                                   const std::vector<Vector>& b);

bool is_zero_vector(const Vector& v);

// Kernel of a sparse homogeneous system, one row per equation, each row a
// list of (column, coefficient). Rows are folded one at a time into an
// echelon set of sparse pivot rows, so short equations stay short.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;
std::vector<Vector> sparse_kernel_basis(std::size_t cols, const std::vector<SparseRow>& rows);

}  // namespace efb
