#ifndef HNAMBU_CONSTRUCTIONS_HPP
#define HNAMBU_CONSTRUCTIONS_HPP

#include <hnambu/algebra.hpp>
#include <hnambu/identities.hpp>
#include <hnambu/multi_index.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hnambu {

/// Basis e_{i1} (x) ... (x) e_{in} of a tensor power, linearized row-major with
/// the first factor most significant.
struct TensorPowerSpace {
    std::size_t base_dim;
    std::size_t power;

    TensorPowerSpace(std::size_t d, std::size_t n) : base_dim(d), power(n), radix_(uniform_radix(n, d)) {}

    [[nodiscard]] std::size_t total_dim() const { return radix_.size(); }
    [[nodiscard]] std::size_t encode(std::span<const std::size_t> digits) const { return radix_.linearize(digits); }
    [[nodiscard]] std::vector<std::size_t> decode(std::size_t l) const { return radix_.delinearize(l); }
    [[nodiscard]] const MixedRadix& radix() const { return radix_; }

private:
    MixedRadix radix_;
};

/// An algebra built by a construction whose conclusion is checked rather than
/// assumed, together with the verifier's verdict on it.
struct Constructed {
    HomNambuAlgebra algebra;
    IdentityReport verdict;
};

/// (g, rho o [..], rho) from a Leibniz n-algebra and an endomorphism rho.
inline HomNambuAlgebra twist_by_endomorphism(const HomNambuAlgebra& leib, const Matrix& rho) {
    if (!leib.has_identity_twists()) throw NotLeibniz("'" + leib.name() + "' has non-identity twists");
    if (!verify_hom_nambu(leib, {1}).holds) throw NotLeibniz("'" + leib.name() + "' fails the Leibniz identity");
    if (rho.rows() != leib.dim() || rho.cols() != leib.dim()) throw DimMismatch("rho must be dim x dim");
    if (!verify_morphism(rho, leib, leib, {1}).holds) throw NotAMorphism("rho is not an endomorphism of '" + leib.name() + "'");
    return HomNambuAlgebra::with_twist(leib.name() + "_rho", leib.bracket().composed_with(rho), rho);
}

/// (g, beta o [..], beta o alpha) from a multiplicative algebra and an endomorphism beta.
inline HomNambuAlgebra compose_twist(const HomNambuAlgebra& alg, const Matrix& beta) {
    if (!alg.is_multiplicative()) throw NotMultiplicative("'" + alg.name() + "' is not multiplicative");
    if (beta.rows() != alg.dim() || beta.cols() != alg.dim()) throw DimMismatch("beta must be dim x dim");
    if (!verify_morphism(beta, alg, alg, {1}).holds) throw NotAMorphism("beta is not an endomorphism of '" + alg.name() + "'");
    return HomNambuAlgebra::with_twist(alg.name() + "_beta", alg.bracket().composed_with(beta), beta * alg.alpha());
}

/// Adjoins a generator for D to a binary algebra: on g (+) K D the bracket is
/// [x + mD, y + nD] = [x, y] + m D(y) - n D(x) and the twist is diag(alpha, 1).
/// The new basis vector is the last one. Whether the result is Hom-Leibniz is
/// left to the caller.
inline HomNambuAlgebra derivation_extension(const HomNambuAlgebra& alg, const Matrix& d_map) {
    if (alg.arity() != 2) throw ArityMismatch("derivation extension needs a binary bracket");
    const std::size_t d = alg.dim();
    if (d_map.rows() != d || d_map.cols() != d) throw DimMismatch("D must be dim x dim");
    const Matrix& alpha = alg.alpha();
    if (d_map * alpha != alpha * d_map) throw TwistCommutationFailure("D does not commute with alpha");

    BracketTensor br = BracketTensor::uniform(d + 1, 2);
    auto put = [&](std::size_t i, std::size_t j, const Vector& img) {
        Vector ext(d + 1);
        std::copy(img.begin(), img.end(), ext.begin());
        const std::size_t tuple[] = {i, j};
        br.set_column(br.radix().linearize(tuple), ext);
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t ij[] = {i, j};
            put(i, j, alg.bracket().evaluate_basis(ij));
        }
    for (std::size_t j = 0; j < d; ++j) {
        put(d, j, d_map.column(j));
        put(j, d, scaled(d_map.column(j), -1));
    }
    return HomNambuAlgebra::with_twist(alg.name() + "_ext", std::move(br), block_diagonal(alpha, Matrix::identity(1)));
}

/// sigma(a_1..a_n) = omega(part_1(a_1..a_{n_1}), ..., part_k(.., a_n)).
inline MultiLinearMap compose_omega(const MultiLinearMap& omega, std::span<const MultiLinearMap> parts) {
    if (parts.size() != omega.arity())
        throw ArityMismatch("compose: omega has arity " + std::to_string(omega.arity()) + " but " +
                            std::to_string(parts.size()) + " parts were given");
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].target_dim() != omega.source_dims()[i])
            throw DimMismatch("compose: part " + std::to_string(i + 1) + " lands in the wrong space");
        dims.insert(dims.end(), parts[i].source_dims().begin(), parts[i].source_dims().end());
    }
    MultiLinearMap sigma(dims, omega.target_dim());
    if (sigma.tuple_count() == 0) return sigma;
    std::vector<std::size_t> digits(dims.size(), 0);
    std::vector<Vector> inner(parts.size());
    std::size_t l = 0;
    do {
        std::size_t offset = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const std::size_t a = parts[i].arity();
            inner[i] = parts[i].evaluate_basis(std::span<const std::size_t>(digits.data() + offset, a));
            offset += a;
        }
        sigma.set_column(l++, omega.evaluate(inner));
    } while (sigma.radix().next(digits));
    return sigma;
}

/// mu_i(a_1 (x) .. (x) a_n, b_1 (x) .. (x) b_n)
///   = alpha^k(a_1) (x) .. (x) omega(a_i, b_1, .., b_n) (x) .. (x) alpha^k(a_n)
/// for an (n+1)-linear omega on A; position i is 1-based.
inline MultiLinearMap mu_map(const MultiLinearMap& omega, std::size_t i, std::size_t k, const Matrix& alpha) {
    if (!omega.is_uniform() || omega.arity() < 2) throw DimMismatch("mu_map needs an (n+1)-linear map A^(n+1) -> A");
    const std::size_t n = omega.arity() - 1;
    const std::size_t d = omega.target_dim();
    if (i < 1 || i > n) throw IndexOutOfRange("mu_map position " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
    if (alpha.rows() != d || alpha.cols() != d) throw DimMismatch("alpha must be dim x dim");
    const Matrix ak = alpha.pow(k);
    const TensorPowerSpace space(d, n);
    const std::size_t dn = space.total_dim();
    MultiLinearMap mu({dn, dn}, dn);
    std::vector<std::size_t> inner(n + 1);
    std::vector<Vector> factors(n);
    for (std::size_t la = 0; la < dn; ++la) {
        const auto a = space.decode(la);
        for (std::size_t lb = 0; lb < dn; ++lb) {
            const auto b = space.decode(lb);
            inner[0] = a[i - 1];
            std::copy(b.begin(), b.end(), inner.begin() + 1);
            for (std::size_t p = 0; p < n; ++p) factors[p] = p == i - 1 ? omega.evaluate_basis(inner) : ak.column(a[p]);
            mu.set_column(la * dn + lb, kron(factors));
        }
    }
    return mu;
}

/// phi = sum_p id (x) .. (x) f (x) .. (x) id on A^(x)n.
inline Matrix lift_phi(const Matrix& f, std::size_t n) {
    if (!f.is_square()) throw DimMismatch("lift_phi needs a square matrix");
    const Matrix id = Matrix::identity(f.rows());
    Matrix sum(checked_pow(f.rows(), n), checked_pow(f.rows(), n));
    for (std::size_t p = 0; p < n; ++p) {
        Matrix term = Matrix::identity(1);
        for (std::size_t q = 0; q < n; ++q) term = kron(term, q == p ? f : id);
        sum += term;
    }
    return sum;
}

namespace detail {

// sum_i t(a_1) (x) .. (x) [a_i, b_1..b_n] (x) .. (x) t(a_n) on g^(x)n for an
// (n+1)-ary bracket; t is the identity when twist is null.
inline BracketTensor tensor_square_bracket(const HomNambuAlgebra& alg, const Matrix* twist) {
    const std::size_t n = alg.arity() - 1;
    const std::size_t d = alg.dim();
    const TensorPowerSpace space(d, n);
    const std::size_t dn = space.total_dim();
    BracketTensor br = BracketTensor::uniform(dn, 2);
    std::vector<std::size_t> inner(n + 1);
    std::vector<Vector> factors(n);
    for (std::size_t la = 0; la < dn; ++la) {
        const auto a = space.decode(la);
        for (std::size_t lb = 0; lb < dn; ++lb) {
            const auto b = space.decode(lb);
            std::copy(b.begin(), b.end(), inner.begin() + 1);
            Vector sum(dn);
            for (std::size_t i = 0; i < n; ++i) {
                inner[0] = a[i];
                const Vector v = alg.bracket().evaluate_basis(inner);
                if (is_zero(v)) continue;
                for (std::size_t p = 0; p < n; ++p)
                    factors[p] = p == i ? v : (twist ? twist->column(a[p]) : unit_vector(d, a[p]));
                axpy(sum, 1, kron(factors));
            }
            br.set_column(la * dn + lb, sum);
        }
    }
    return br;
}

}  // namespace detail

/// The untwisted bracket on g^(x)n from an (n+1)-ary algebra, identity twist,
/// with the Leibniz verdict of the result.
inline Constructed tensor_leibniz(const HomNambuAlgebra& alg, const VerifyOptions& opt = {}) {
    HomNambuAlgebra out = HomNambuAlgebra::untwisted(alg.name() + "_D" + std::to_string(alg.arity() - 1),
                                                     detail::tensor_square_bracket(alg, nullptr));
    IdentityReport verdict = verify_hom_nambu(out, opt);
    return {std::move(out), std::move(verdict)};
}

/// The alpha-twisted bracket on g^(x)n with twist alpha^(x)n. Multiplicative
/// input is required and the Hom-Leibniz and multiplicativity of the output
/// are checked; failure raises TheoremViolation.
inline HomNambuAlgebra tensor_hom_leibniz(const HomNambuAlgebra& alg) {
    if (!alg.is_multiplicative()) throw NotMultiplicative("'" + alg.name() + "' is not multiplicative");
    const std::size_t n = alg.arity() - 1;
    HomNambuAlgebra out = HomNambuAlgebra::with_twist(alg.name() + "_HD" + std::to_string(n),
                                                      detail::tensor_square_bracket(alg, &alg.alpha()),
                                                      kron_power(alg.alpha(), n));
    if (!out.is_multiplicative()) throw TheoremViolation("tensor Hom-Leibniz algebra is not multiplicative");
    if (!verify_hom_nambu(out, {1}).holds) throw TheoremViolation("tensor Hom-Leibniz algebra fails its identity");
    return out;
}

/// (n+1)-ary bracket on g^(x)k from a (kn+1)-ary multiplicative algebra:
///   [X_0, .., X_n] = sum_j a(x_01) (x) .. (x) [x_0j, x_11, .., x_1k, .., x_n1, .., x_nk] (x) .. (x) a(x_0k)
/// with the trailing kn arguments taken in lexicographic order, twist alpha^(x)k.
inline Constructed tensor_power_nary(const HomNambuAlgebra& alg, std::size_t k, std::size_t n,
                                     const VerifyOptions& opt = {}) {
    if (k == 0 || n == 0 || alg.arity() != k * n + 1)
        throw ArityMismatch("tensor power needs arity k*n+1 = " + std::to_string(k * n + 1) + ", algebra has " +
                            std::to_string(alg.arity()));
    if (!alg.is_multiplicative()) throw NotMultiplicative("'" + alg.name() + "' is not multiplicative");
    const std::size_t d = alg.dim();
    const Matrix& alpha = alg.alpha();
    const TensorPowerSpace space(d, k);
    const std::size_t dk = space.total_dim();
    BracketTensor br = BracketTensor::uniform(dk, n + 1);
    std::vector<std::size_t> digits(n + 1, 0);
    std::vector<std::size_t> inner(k * n + 1);
    std::vector<Vector> factors(k);
    std::size_t l = 0;
    do {
        const auto x0 = space.decode(digits[0]);
        for (std::size_t s = 1; s <= n; ++s) {
            const auto xs = space.decode(digits[s]);
            std::copy(xs.begin(), xs.end(), inner.begin() + 1 + (s - 1) * k);
        }
        Vector sum(dk);
        for (std::size_t j = 0; j < k; ++j) {
            inner[0] = x0[j];
            const Vector v = alg.bracket().evaluate_basis(inner);
            if (is_zero(v)) continue;
            for (std::size_t p = 0; p < k; ++p) factors[p] = p == j ? v : alpha.column(x0[p]);
            axpy(sum, 1, kron(factors));
        }
        br.set_column(l++, sum);
    } while (br.radix().next(digits));
    HomNambuAlgebra out = HomNambuAlgebra::with_twist(
        alg.name() + "_T" + std::to_string(k) + "x" + std::to_string(n), std::move(br), kron_power(alpha, k));
    IdentityReport verdict = verify_hom_nambu(out, opt);
    return {std::move(out), std::move(verdict)};
}

}  // namespace hnambu

#endif  // HNAMBU_CONSTRUCTIONS_HPP
