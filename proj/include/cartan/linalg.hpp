#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartan/errors.hpp"
#include "cartan/scalar.hpp"

namespace cartan {

template <class S>
class Vector {
public:
    Vector() = default;
    explicit Vector(int n) : c_(static_cast<size_t>(n), S(0)) {}
    Vector(std::initializer_list<S> xs) : c_(xs) {}
    explicit Vector(std::vector<S> xs) : c_(std::move(xs)) {}

    static Vector unit(int n, int i) {
        Vector v(n);
        v[i] = S(1);
        return v;
    }

    int size() const { return static_cast<int>(c_.size()); }
    S& operator[](int i) { return c_[static_cast<size_t>(i)]; }
    const S& operator[](int i) const { return c_[static_cast<size_t>(i)]; }

    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }
    auto begin() { return c_.begin(); }
    auto end() { return c_.end(); }

    bool is_zero() const {
        for (const S& x : c_)
            if (!cartan::is_zero(x))
                return false;
        return true;
    }

    Vector& operator+=(const Vector& o) {
        check_size(o);
        for (int i = 0; i < size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        check_size(o);
        for (int i = 0; i < size(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }
    Vector& operator*=(const S& k) {
        for (S& x : c_)
            x *= k;
        return *this;
    }

    friend Vector operator+(Vector a, const Vector& b) { a += b; return a; }
    friend Vector operator-(Vector a, const Vector& b) { a -= b; return a; }
    friend Vector operator*(const S& k, Vector v) { v *= k; return v; }
    friend Vector operator*(Vector v, const S& k) { v *= k; return v; }
    Vector operator-() const {
        Vector r = *this;
        for (S& x : r.c_)
            x = -x;
        return r;
    }

    friend bool operator==(const Vector& a, const Vector& b) {
        if (a.size() != b.size())
            return false;
        for (int i = 0; i < a.size(); ++i)
            if (a.c_[i] != b.c_[i])
                return false;
        return true;
    }
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

    std::string str() const {
        std::string out = "(";
        for (int i = 0; i < size(); ++i) {
            if (i)
                out += ", ";
            out += to_display(c_[i]);
        }
        return out + ")";
    }

private:
    void check_size(const Vector& o) const {
        if (size() != o.size())
            throw dimension_error("vector size mismatch");
    }
    std::vector<S> c_;
};

// Dense row-major matrix; columns are images of basis vectors throughout
// the library.
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, S(0)) {}
    Matrix(std::initializer_list<std::initializer_list<S>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        a_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_)
                throw dimension_error("ragged matrix initializer");
            for (const S& x : r)
                a_.push_back(x);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = S(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Vector<S> column(int j) const {
        Vector<S> v(rows_);
        for (int i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }
    void set_column(int j, const Vector<S>& v) {
        if (v.size() != rows_)
            throw dimension_error("column size mismatch");
        for (int i = 0; i < rows_; ++i)
            (*this)(i, j) = v[i];
    }
    Vector<S> row(int i) const {
        Vector<S> v(cols_);
        for (int j = 0; j < cols_; ++j)
            v[j] = (*this)(i, j);
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw dimension_error("matrix product size mismatch");
        Matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if constexpr (is_exact_v<S>) {
                    if (cartan::is_zero(aik))
                        continue;
                }
                for (int j = 0; j < b.cols_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    Vector<S> operator*(const Vector<S>& x) const {
        if (x.size() != cols_)
            throw dimension_error("matrix-vector size mismatch");
        Vector<S> out(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                out[i] += (*this)(i, j) * x[j];
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        a.check_same(b);
        for (size_t i = 0; i < a.a_.size(); ++i)
            a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        a.check_same(b);
        for (size_t i = 0; i < a.a_.size(); ++i)
            a.a_[i] -= b.a_[i];
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            return false;
        for (size_t i = 0; i < a.a_.size(); ++i)
            if (a.a_[i] != b.a_[i])
                return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_identity() const {
        if (rows_ != cols_)
            return false;
        return *this == identity(rows_);
    }

    std::string str() const {
        std::string out;
        for (int i = 0; i < rows_; ++i) {
            out += i ? "\n[" : "[";
            for (int j = 0; j < cols_; ++j) {
                if (j)
                    out += ", ";
                out += to_display((*this)(i, j));
            }
            out += "]";
        }
        return out;
    }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw dimension_error("matrix size mismatch");
    }
    int rows_ = 0, cols_ = 0;
    std::vector<S> a_;
};

namespace detail {

// Pivot row at or below `from` in column c: the first nonzero entry for
// exact scalars, the largest by magnitude for floating ones. -1 when the
// column is exhausted.
template <class S>
int pivot_row(const Matrix<S>& m, int from, int c) {
    int piv = -1;
    if constexpr (is_exact_v<S>) {
        for (int i = from; i < m.rows(); ++i)
            if (!is_zero(m(i, c)))
                return i;
    } else {
        S best = S(0);
        for (int i = from; i < m.rows(); ++i) {
            S mag = abs_value(m(i, c));
            if (!is_zero(m(i, c)) && (piv < 0 || best < mag)) {
                best = mag;
                piv = i;
            }
        }
    }
    return piv;
}

// Row reduction to reduced echelon form, in place. Returns the pivot columns.
template <class S>
std::vector<int> reduced_echelon(Matrix<S>& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = pivot_row(m, r, c);
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j)
                std::swap(m(piv, j), m(r, j));
        S inv = S(1) / m(r, c);
        for (int j = 0; j < cols; ++j)
            m(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c)))
                continue;
            S f = m(i, c);
            for (int j = 0; j < cols; ++j)
                m(i, j) -= f * m(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

} // namespace detail

template <class S>
int rank(Matrix<S> m) {
    return static_cast<int>(detail::reduced_echelon(m).size());
}

template <class S>
S determinant(Matrix<S> m) {
    if (m.rows() != m.cols())
        throw dimension_error("determinant of non-square matrix");
    const int n = m.rows();
    S det = S(1);
    for (int c = 0; c < n; ++c) {
        int piv = detail::pivot_row(m, c, c);
        if (piv < 0)
            return S(0);
        if (piv != c) {
            for (int j = 0; j < n; ++j)
                std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c)))
                continue;
            S f = m(i, c) / m(c, c);
            for (int j = c; j < n; ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

// Basis of the right nullspace. Deterministic: one generator per free
// column, ascending, with a 1 in the free position.
template <class S>
std::vector<Vector<S>> nullspace(Matrix<S> m) {
    const int cols = m.cols();
    std::vector<int> pivots = detail::reduced_echelon(m);
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivots)
        is_pivot[static_cast<size_t>(c)] = true;
    std::vector<Vector<S>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)])
            continue;
        Vector<S> v(cols);
        v[free] = S(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
    if (m.rows() != m.cols())
        throw dimension_error("inverse of non-square matrix");
    const int n = m.rows();
    Matrix<S> work(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            work(i, j) = m(i, j);
        work(i, n + i) = S(1);
    }
    auto pivots = detail::reduced_echelon(work);
    if (static_cast<int>(pivots.size()) != n)
        return std::nullopt;
    Matrix<S> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv(i, j) = work(i, n + j);
    return inv;
}

} // namespace cartan
