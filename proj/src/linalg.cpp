#include "efb/linalg.hpp"

#include <algorithm>
#include <map>

#include "efb/errors.hpp"

namespace efb {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw DimensionError("entry count does not match shape");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
    ExactMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw DimensionError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

ExactMatrix ExactMatrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
    ExactMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector ExactMatrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector ExactMatrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    ExactMatrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                const Scalar& b = o(k, c);
                if (!b.is_zero()) p(r, c).add_product(a, b);
            }
        }
    }
    return p;
}

Vector ExactMatrix::operator*(const Vector& v) const {
    if (cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) out[r].add_product(a, v[c]);
        }
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
    ExactMatrix s(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
    return s;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
    ExactMatrix s(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
    return s;
}

ExactMatrix ExactMatrix::scaled(const Scalar& f) const {
    ExactMatrix s(*this);
    for (auto& x : s.data_) x *= f;
    return s;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
        }
    return k;
}

RowEchelon rref(ExactMatrix m) {
    RowEchelon out;
    std::size_t lead_row = 0;
    Scalar factor;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != lead_row)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
        Scalar inv = m(lead_row, c).inverse();
        for (std::size_t k = c; k < m.cols(); ++k)
            if (!m(lead_row, k).is_zero()) m(lead_row, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, c).is_zero()) continue;
            factor = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!m(lead_row, k).is_zero()) m(r, k).sub_product(factor, m(lead_row, k));
        }
        out.pivots.push_back(c);
        ++lead_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).pivots.size(); }

Scalar det(const ExactMatrix& m0) {
    if (!m0.is_square()) throw DimensionError("determinant of non-square matrix");
    ExactMatrix m(m0);
    const std::size_t n = m.rows();
    Scalar d(1);
    Scalar factor;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            d.negate();
        }
        d *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            factor = m(r, c) * inv;
            for (std::size_t k = c; k < n; ++k)
                if (!m(c, k).is_zero()) m(r, k).sub_product(factor, m(c, k));
        }
    }
    return d;
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    ExactMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    RowEchelon e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        throw SingularTransformError("matrix is singular");
    ExactMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
    RowEchelon e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (!e.reduced(r, f).is_zero()) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return canonical_basis(n, basis);
}

std::vector<Vector> canonical_basis(std::size_t len, const std::vector<Vector>& vs) {
    if (vs.empty()) return {};
    RowEchelon e = rref(ExactMatrix::from_rows(len, vs));
    std::vector<Vector> out;
    out.reserve(e.pivots.size());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
    return out;
}

std::size_t span_dimension(std::size_t len, const std::vector<Vector>& vs) {
    if (vs.empty()) return 0;
    return rank(ExactMatrix::from_rows(len, vs));
}

std::size_t intersection_dimension(std::size_t len, const std::vector<Vector>& a,
                                   const std::vector<Vector>& b) {
    std::vector<Vector> both(a);
    both.insert(both.end(), b.begin(), b.end());
    return span_dimension(len, a) + span_dimension(len, b) - span_dimension(len, both);
}

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::vector<Vector> sparse_kernel_basis(std::size_t cols, const std::vector<SparseRow>& rows) {
    // pivot column -> row with leading coefficient 1 at that column, sorted by column
    std::map<std::size_t, SparseRow> pivots;
    auto combine = [](const SparseRow& a, const Scalar& f, const SparseRow& b) {
        // a - f * b, both sorted by column
        SparseRow out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, -(f * b[j].second));
                ++j;
            } else {
                Scalar v = a[i].second;
                v.sub_product(f, b[j].second);
                if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    };
    for (const auto& raw : rows) {
        std::map<std::size_t, Scalar> acc;
        for (const auto& [c, v] : raw) {
            if (c >= cols) throw DimensionError("sparse row column out of range");
            acc[c] += v;
        }
        SparseRow row;
        for (auto& [c, v] : acc)
            if (!v.is_zero()) row.emplace_back(c, std::move(v));
        // reduce leading entries against existing pivots until a new pivot appears
        std::size_t pos = 0;
        while (pos < row.size()) {
            auto it = pivots.find(row[pos].first);
            if (it == pivots.end()) {
                ++pos;
                continue;
            }
            Scalar f = row[pos].second;
            row = combine(row, f, it->second);
            pos = 0;
        }
        if (row.empty()) continue;
        Scalar inv = row.front().second.inverse();
        for (auto& e : row) e.second *= inv;
        pivots.emplace(row.front().first, std::move(row));
    }
    // back-substitute to reach reduced form
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        SparseRow& r = it->second;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t k = 1; k < r.size(); ++k) {
                auto p = pivots.find(r[k].first);
                if (p == pivots.end() || p->first == it->first) continue;
                Scalar f = r[k].second;
                r = combine(r, f, p->second);
                changed = true;
                break;
            }
        }
    }
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (pivots.count(f)) continue;
        Vector v(cols);
        v[f] = 1;
        for (const auto& [pc, r] : pivots)
            for (const auto& [c, val] : r)
                if (c == f) v[pc] = -val;
        basis.push_back(std::move(v));
    }
    return canonical_basis(cols, basis);
}

}  // namespace efb
