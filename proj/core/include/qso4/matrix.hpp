/// @file matrix.hpp
/// @brief Dense matrices over an exact field, with fraction-exact elimination.
///
/// The element type F must be a field: default-constructible to 0,
/// constructible from int, with +, -, *, / and a free is_zero(F). Used with
/// Scalar (rational functions) and GaussRat (their values at a rational
/// point). Products skip zero entries, which matters a lot here: generator
/// matrices are diagonal or have only a handful of nonzeros per column.
#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "qso4/errors.hpp"

namespace qso4 {

/// Dispatch to the element type's free is_zero via ADL; the Matrix member of
/// the same name would otherwise hide it inside the class body.
template <class F>
bool element_is_zero(const F& x) {
    return is_zero(x);
}

template <class F>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const F& x : data_)
            if (!is_zero_elt(x)) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    /// True if the matrix is c * Identity; returns the scalar through `out`.
    bool is_scalar(F* out = nullptr) const {
        if (!is_square() || rows_ == 0) return false;
        const F& d = (*this)(0, 0);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) {
                const F& x = (*this)(r, c);
                if (r == c ? !is_zero_elt(x - d) : !is_zero_elt(x)) return false;
            }
        if (out) *out = d;
        return true;
    }

    bool is_diagonal() const {
        if (!is_square()) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (r != c && !is_zero_elt((*this)(r, c))) return false;
        return true;
    }

    Matrix operator-() const {
        Matrix out = *this;
        for (F& x : out.data_) x = -x;
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix out = a;
        for (std::size_t t = 0; t < out.data_.size(); ++t) out.data_[t] = out.data_[t] + b.data_[t];
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix out = a;
        for (std::size_t t = 0; t < out.data_.size(); ++t) out.data_[t] = out.data_[t] - b.data_[t];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeMismatch("matrix product " + shape_str(a) + " x " + shape_str(b));
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (is_zero_elt(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const F& bkj = b(k, j);
                    if (is_zero_elt(bkj)) continue;
                    out(i, j) = out(i, j) + aik * bkj;
                }
            }
        }
        return out;
    }

    friend Matrix operator*(const F& c, const Matrix& m) {
        Matrix out = m;
        for (F& x : out.data_) x = c * x;
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t t = 0; t < a.data_.size(); ++t)
            if (!is_zero_elt(a.data_[t] - b.data_[t])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    F trace() const {
        if (!is_square()) throw ShapeMismatch("trace of a non-square matrix");
        F t(0);
        for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

    /// Kronecker product; index convention (i1, i2) -> i1 * b.rows + i2, i.e.
    /// the left factor is the outer (slower-varying) axis.
    friend Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const F& aij = a(i, j);
                if (is_zero_elt(aij)) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l) {
                        const F& bkl = b(k, l);
                        if (is_zero_elt(bkl)) continue;
                        out(i * b.rows_ + k, j * b.cols_ + l) = aij * bkl;
                    }
            }
        return out;
    }

    friend Matrix direct_sum(const Matrix& a, const Matrix& b) {
        Matrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c) out(a.rows_ + r, a.cols_ + c) = b(r, c);
        return out;
    }

    /// Columns with the given indices.
    Matrix select_columns(const std::vector<std::size_t>& idx) const {
        Matrix out(rows_, idx.size());
        for (std::size_t c = 0; c < idx.size(); ++c)
            for (std::size_t r = 0; r < rows_; ++r) out(r, c) = (*this)(r, idx[c]);
        return out;
    }

    Matrix select_rows(const std::vector<std::size_t>& idx) const {
        Matrix out(idx.size(), cols_);
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(idx[r], c);
        return out;
    }

    /// Horizontal concatenation.
    friend Matrix hconcat(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw ShapeMismatch("hconcat row mismatch");
        Matrix out(a.rows_, a.cols_ + b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
            for (std::size_t c = 0; c < b.cols_; ++c) out(r, a.cols_ + c) = b(r, c);
        }
        return out;
    }

    friend Matrix vconcat(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw ShapeMismatch("vconcat column mismatch");
        Matrix out(a.rows_ + b.rows_, a.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c) out(a.rows_ + r, c) = b(r, c);
        return out;
    }

    /// In-place Gauss-Jordan to reduced row echelon form.
    /// Returns the pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = rows_;
            for (std::size_t r = row; r < rows_; ++r)
                if (!is_zero_elt((*this)(r, col))) {
                    sel = r;
                    break;
                }
            if (sel == rows_) continue;
            if (sel != row)
                for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(sel, c), (*this)(row, c));
            const F inv = F(1) / (*this)(row, col);
            for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) = inv * (*this)(row, c);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row) continue;
                const F f = (*this)(r, col);
                if (is_zero_elt(f)) continue;
                for (std::size_t c = col; c < cols_; ++c)
                    (*this)(r, c) = (*this)(r, c) - f * (*this)(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix tmp = *this;
        return tmp.rref().size();
    }

    /// Basis of the right null space, one kernel vector per column.
    Matrix nullspace() const {
        Matrix tmp = *this;
        const std::vector<std::size_t> pivots = tmp.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t p : pivots) is_pivot[p] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        Matrix out(cols_, free_cols.size());
        for (std::size_t t = 0; t < free_cols.size(); ++t) {
            const std::size_t fc = free_cols[t];
            out(fc, t) = F(1);
            for (std::size_t p = 0; p < pivots.size(); ++p) out(pivots[p], t) = -tmp(p, fc);
        }
        return out;
    }

    /// Solve A X = B exactly; throws SingularSystem unless a unique solution
    /// exists (A must have full column rank and the system must be consistent).
    friend Matrix solve(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw ShapeMismatch("solve: row mismatch");
        Matrix aug = hconcat(a, b);
        const std::vector<std::size_t> pivots = aug.rref();
        // All pivots must land inside A's columns, and every A-column must be a pivot.
        if (pivots.size() != a.cols_ || (!pivots.empty() && pivots.back() >= a.cols_))
            throw SingularSystem("solve: system is singular or inconsistent");
        // Rows beyond the pivot count must have zero right-hand side.
        for (std::size_t r = pivots.size(); r < aug.rows_; ++r)
            for (std::size_t c = a.cols_; c < aug.cols_; ++c)
                if (!is_zero_elt(aug(r, c))) throw SingularSystem("solve: inconsistent system");
        Matrix x(a.cols_, b.cols_);
        for (std::size_t r = 0; r < a.cols_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c) x(r, c) = aug(r, a.cols_ + c);
        return x;
    }

    Matrix inverse() const {
        if (!is_square()) throw ShapeMismatch("inverse of a non-square matrix");
        return solve(*this, identity(rows_));
    }

    /// Exact determinant by elimination (tracks row-swap signs).
    F det() const {
        if (!is_square()) throw ShapeMismatch("determinant of a non-square matrix");
        Matrix tmp = *this;
        F out(1);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t sel = rows_;
            for (std::size_t r = col; r < rows_; ++r)
                if (!is_zero_elt(tmp(r, col))) {
                    sel = r;
                    break;
                }
            if (sel == rows_) return F(0);
            if (sel != col) {
                for (std::size_t c = 0; c < cols_; ++c) std::swap(tmp(sel, c), tmp(col, c));
                out = -out;
            }
            const F& pivot = tmp(col, col);
            out = out * pivot;
            const F inv = F(1) / pivot;
            for (std::size_t r = col + 1; r < rows_; ++r) {
                const F f = tmp(r, col);
                if (is_zero_elt(f)) continue;
                const F scale = f * inv;
                for (std::size_t c = col; c < cols_; ++c)
                    tmp(r, c) = tmp(r, c) - scale * tmp(col, c);
            }
        }
        return out;
    }

    /// Apply an elementwise map into another field.
    template <class G>
    Matrix<G> map(const std::function<G(const F&)>& f) const {
        Matrix<G> out(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
        return out;
    }

   private:
    static bool is_zero_elt(const F& x) { return element_is_zero(x); }
    static std::string shape_str(const Matrix& m) {
        return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
    }
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ShapeMismatch("matrix shapes differ: " + shape_str(*this) + " vs " + shape_str(o));
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> data_;
};

}  // namespace qso4
