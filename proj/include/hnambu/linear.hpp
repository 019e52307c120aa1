#ifndef HNAMBU_LINEAR_HPP
#define HNAMBU_LINEAR_HPP

#include <hnambu/errors.hpp>
#include <hnambu/matrix.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hnambu {

struct RowEchelon {
    Matrix reduced;                   // reduced row echelon form, pivots normalized to 1
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row, ascending
};

/// Gauss-Jordan elimination over the rationals. The first nonzero entry at or
/// below the current row is taken as pivot, so the result depends only on M.
inline RowEchelon rref(Matrix m) {
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (m(r, j).is_zero()) continue;
                m(i, j) -= f * m(r, j);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Basis of {v : M v = 0}: one vector per free column in ascending order, with
/// a 1 in that column, zeros in the other free columns and the negated reduced
/// entries in the pivot columns.
inline std::vector<Vector> nullspace(const Matrix& m) {
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct RankImage {
    std::size_t rank = 0;
    std::vector<Vector> basis;  // pivot columns of the original matrix, in order
};

inline RankImage rank_and_image(const Matrix& m) {
    const RowEchelon e = rref(m);
    RankImage out;
    out.rank = e.pivots.size();
    for (auto c : e.pivots) out.basis.push_back(m.column(c));
    return out;
}

/// Maximal linearly independent subset of the given vectors, preserving order.
inline std::vector<Vector> independent_subset(std::span<const Vector> vectors, std::size_t length) {
    if (vectors.empty()) return {};
    return rank_and_image(Matrix::from_columns(length, vectors)).basis;
}

/// Dimension of the span of the given vectors.
inline std::size_t span_dimension(std::span<const Vector> vectors, std::size_t length) {
    if (vectors.empty()) return 0;
    return rank(Matrix::from_columns(length, vectors));
}

/// True iff v is a rational linear combination of the basis vectors.
inline bool in_span(std::span<const Rational> v, std::span<const Vector> basis) {
    if (is_zero(v)) return true;
    if (basis.empty()) return false;
    for (const auto& b : basis)
        if (b.size() != v.size()) throw DimMismatch("subspace membership: vector lengths differ");
    std::vector<Vector> with_v(basis.begin(), basis.end());
    const std::size_t before = span_dimension(with_v, v.size());
    with_v.emplace_back(v.begin(), v.end());
    return span_dimension(with_v, v.size()) == before;
}

/// dim span(Z) - dim span(B), after checking span(B) is inside span(Z).
inline std::size_t quotient_dimension(std::span<const Vector> z_basis, std::span<const Vector> b_basis) {
    for (std::size_t i = 0; i < b_basis.size(); ++i)
        if (!in_span(b_basis[i], z_basis))
            throw NotASubspace("vector " + std::to_string(i) + " of the subspace basis lies outside the ambient span");
    const std::size_t len = !z_basis.empty() ? z_basis[0].size() : (!b_basis.empty() ? b_basis[0].size() : 0);
    return span_dimension(z_basis, len) - span_dimension(b_basis, len);
}

/// Solves A x = b. Returns the solution with every free variable set to zero,
/// or nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& a, std::span<const Rational> b) {
    if (b.size() != a.rows()) throw DimMismatch("solve: right-hand side length differs from row count");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const RowEchelon e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    Vector x(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
    return x;
}

/// Coordinates with respect to a fixed linearly independent family, with the
/// elimination done once up front.
class Coordinates {
public:
    Coordinates(std::span<const Vector> basis, std::size_t length) : length_(length), size_(basis.size()) {
        // Reduce [B | I]; the rows of the identity block record the transform T with T B = R.
        Matrix aug(length, basis.size() + length);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (basis[j].size() != length) throw DimMismatch("coordinates: basis vector length");
            for (std::size_t i = 0; i < length; ++i) aug(i, j) = basis[j][i];
        }
        for (std::size_t i = 0; i < length; ++i) aug(i, basis.size() + i) = 1;
        RowEchelon e = rref(std::move(aug));
        std::size_t r = 0;
        while (r < e.pivots.size() && e.pivots[r] < basis.size()) ++r;
        if (r != basis.size()) throw DomainError("coordinates: basis vectors are linearly dependent");
        transform_ = Matrix(length, length);
        for (std::size_t i = 0; i < length; ++i)
            for (std::size_t j = 0; j < length; ++j) transform_(i, j) = e.reduced(i, basis.size() + j);
    }

    [[nodiscard]] std::size_t size() const { return size_; }

    /// Coefficients c with sum c_i b_i = v, or nullopt if v is outside the span.
    [[nodiscard]] std::optional<Vector> of(std::span<const Rational> v) const {
        if (v.size() != length_) throw DimMismatch("coordinates: vector length");
        Vector t = transform_.apply(v);
        for (std::size_t i = size_; i < length_; ++i)
            if (!t[i].is_zero()) return std::nullopt;
        t.resize(size_);
        return t;
    }

    [[nodiscard]] bool contains(std::span<const Rational> v) const { return of(v).has_value(); }

private:
    std::size_t length_;
    std::size_t size_;
    Matrix transform_;
};

}  // namespace hnambu

#endif  // HNAMBU_LINEAR_HPP
