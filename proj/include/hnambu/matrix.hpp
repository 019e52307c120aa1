#ifndef HNAMBU_MATRIX_HPP
#define HNAMBU_MATRIX_HPP

#include <hnambu/errors.hpp>
#include <hnambu/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hnambu {

/// Coordinate vector over the rationals.
using Vector = std::vector<Rational>;

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

inline bool is_zero(std::span<const Rational> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// y += s * x
inline void axpy(Vector& y, const Rational& s, std::span<const Rational> x) {
    if (y.size() != x.size()) throw DimMismatch("axpy: vector lengths differ");
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i) y[i].add_product(s, x[i]);
}

inline Vector operator+(Vector a, const Vector& b) {
    axpy(a, 1, b);
    return a;
}

inline Vector operator-(Vector a, const Vector& b) {
    axpy(a, -1, b);
    return a;
}

inline Vector scaled(Vector v, const Rational& s) {
    for (auto& x : v) x *= s;
    return v;
}

/// Tensor product of coordinate vectors; the first factor is most significant.
inline Vector kron(std::span<const Vector> factors) {
    Vector out{Rational(1)};
    for (const auto& f : factors) {
        Vector next(out.size() * f.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (out[i].is_zero()) continue;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (!f[j].is_zero()) next[i * f.size() + j] = out[i] * f[j];
        }
        out = std::move(next);
    }
    return out;
}

/// Dense row-major rational matrix. Linear maps act on column vectors:
/// entry (i, j) is the e_i coordinate of the image of e_j.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimMismatch("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix diagonal(std::span<const Rational> entries) {
        Matrix m(entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
        return m;
    }

    /// Reshapes a row-major coordinate vector.
    static Matrix from_flat(std::size_t rows, std::size_t cols, std::span<const Rational> flat) {
        if (flat.size() != rows * cols) throw DimMismatch("from_flat: wrong length");
        Matrix m(rows, cols);
        std::copy(flat.begin(), flat.end(), m.data_.begin());
        return m;
    }

    static Matrix from_columns(std::size_t rows, std::span<const Vector> columns) {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) throw DimMismatch("from_columns: wrong column length");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    static Matrix from_rows(std::size_t cols, std::span<const Vector> rows) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimMismatch("from_rows: wrong row length");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] std::span<const Rational> flat() const { return data_; }
    [[nodiscard]] Vector flattened() const { return data_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::span<const Rational> row(std::size_t i) const {
        return std::span<const Rational>(data_).subspan(i * cols_, cols_);
    }

    [[nodiscard]] Vector column(std::size_t j) const {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    [[nodiscard]] bool is_zero() const { return hnambu::is_zero(data_); }

    [[nodiscard]] bool is_identity() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
        return true;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] Vector apply(std::span<const Rational> v) const {
        if (v.size() != cols_) throw DimMismatch("matrix-vector product: " + std::to_string(rows_) + "x" +
                                                 std::to_string(cols_) + " applied to length " +
                                                 std::to_string(v.size()));
        Vector out(rows_);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < rows_; ++i) out[i].add_product((*this)(i, j), v[j]);
        }
        return out;
    }

    [[nodiscard]] Matrix pow(std::size_t k) const {
        if (!is_square()) throw DimMismatch("power of a non-square matrix");
        Matrix r = identity(rows_);
        for (std::size_t i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const Rational& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimMismatch("matrix product: inner dimensions differ");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t t = 0; t < a.cols_; ++t) {
                const Rational& x = a(i, t);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j).add_product(x, b(t, j));
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Kronecker product, first factor most significant.
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s)
                    k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
        }
    return k;
}

/// a (x) a (x) ... (x) a, n factors; the empty power is the 1x1 identity.
inline Matrix kron_power(const Matrix& a, std::size_t n) {
    Matrix r = Matrix::identity(1);
    for (std::size_t i = 0; i < n; ++i) r = kron(r, a);
    return r;
}

inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

/// Matrix commutator a*b - b*a.
inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace hnambu

#endif  // HNAMBU_MATRIX_HPP
