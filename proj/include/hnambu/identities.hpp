#ifndef HNAMBU_IDENTITIES_HPP
#define HNAMBU_IDENTITIES_HPP

#include <hnambu/algebra.hpp>
#include <hnambu/linear.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace hnambu {

/// A failing instance: the 0-based basis indices that were plugged in and the
/// two sides that should have agreed.
struct Witness {
    std::vector<std::size_t> tuple;
    Vector lhs;
    Vector rhs;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct IdentityReport {
    bool holds = true;
    std::size_t instances = 0;           // instances evaluated
    std::size_t failures = 0;            // instances that did not balance
    std::size_t out_of_truncation = 0;   // instances skipped because they leave a truncation
    std::vector<Witness> witnesses;      // first failures, ascending instance order

    /// Records one evaluated instance.
    void check(std::vector<std::size_t> tuple, Vector lhs, Vector rhs, std::size_t cap) {
        ++instances;
        if (lhs == rhs) return;
        ++failures;
        holds = false;
        if (witnesses.size() < cap) witnesses.push_back(Witness{std::move(tuple), std::move(lhs), std::move(rhs)});
    }

    /// Folds another report in, keeping the witness cap.
    void merge(const IdentityReport& other, std::size_t cap) {
        instances += other.instances;
        failures += other.failures;
        out_of_truncation += other.out_of_truncation;
        holds = holds && other.holds;
        for (const auto& w : other.witnesses)
            if (witnesses.size() < cap) witnesses.push_back(w);
    }
};

struct VerifyOptions {
    std::size_t witness_cap = 10;
};

namespace detail {

// Images alpha_j(e_c) for every twist j and basis index c.
inline std::vector<std::vector<Vector>> twisted_basis(const TwistFamily& twists) {
    std::vector<std::vector<Vector>> out;
    for (const auto& t : twists) {
        std::vector<Vector> cols;
        for (std::size_t c = 0; c < t.cols(); ++c) cols.push_back(t.column(c));
        out.push_back(std::move(cols));
    }
    return out;
}

inline std::vector<Vector> flat_pair(const Matrix& a, const Matrix& b) { return {a.flattened(), b.flattened()}; }

}  // namespace detail

/// The twisted fundamental identity
///   [[x_1..x_n], a_1(y_1), .., a_{n-1}(y_{n-1})]
///     = sum_i [a_1(x_1), .., a_{i-1}(x_{i-1}), [x_i, y_1..y_{n-1}], a_i(x_{i+1}), .., a_{n-1}(x_n)]
/// on every basis (2n-1)-tuple (x_1..x_n, y_1..y_{n-1}).
inline IdentityReport verify_hom_nambu(const HomNambuAlgebra& alg, const VerifyOptions& opt = {}) {
    const std::size_t n = alg.arity();
    const std::size_t d = alg.dim();
    const auto& br = alg.bracket();
    const auto tw = detail::twisted_basis(alg.twists());
    const MixedRadix radix = uniform_radix(2 * n - 1, d);
    IdentityReport rep;
    if (radix.size() == 0) return rep;

    std::vector<std::size_t> digits(2 * n - 1, 0);
    std::vector<Vector> args(n);
    std::vector<std::size_t> inner(n);
    do {
        const std::span<const std::size_t> xs(digits.data(), n);
        const std::span<const std::size_t> ys(digits.data() + n, n - 1);

        args[0] = br.evaluate_basis(xs);
        for (std::size_t j = 0; j + 1 < n; ++j) args[j + 1] = tw[j][ys[j]];
        Vector lhs = br.evaluate(args);

        Vector rhs(d);
        for (std::size_t i = 0; i < n; ++i) {
            inner[0] = xs[i];
            for (std::size_t j = 0; j + 1 < n; ++j) inner[j + 1] = ys[j];
            for (std::size_t p = 0; p < n; ++p) {
                if (p < i)
                    args[p] = tw[p][xs[p]];
                else if (p == i)
                    args[p] = br.evaluate_basis(inner);
                else
                    args[p] = tw[p - 1][xs[p]];
            }
            axpy(rhs, 1, br.evaluate(args));
        }
        rep.check(digits, std::move(lhs), std::move(rhs), opt.witness_cap);
    } while (radix.next(digits));
    return rep;
}

/// The multiplicative form of the identity, with the single twist alpha in
/// every twisted slot. Requires a multiplicative algebra.
inline IdentityReport verify_hom_nambu_multiplicative(const HomNambuAlgebra& alg, const VerifyOptions& opt = {}) {
    if (!alg.is_multiplicative()) throw NotMultiplicative("algebra '" + alg.name() + "' is not multiplicative");
    const std::size_t n = alg.arity();
    const std::size_t d = alg.dim();
    const auto& br = alg.bracket();
    const Matrix& alpha = alg.alpha();
    IdentityReport rep;
    const MixedRadix radix = uniform_radix(2 * n - 1, d);
    if (radix.size() == 0) return rep;
    std::vector<std::size_t> digits(2 * n - 1, 0);
    do {
        std::vector<Vector> x(n), y(n - 1);
        for (std::size_t p = 0; p < n; ++p) x[p] = unit_vector(d, digits[p]);
        for (std::size_t q = 0; q + 1 < n; ++q) y[q] = unit_vector(d, digits[n + q]);

        std::vector<Vector> outer{br.evaluate(x)};
        for (const auto& v : y) outer.push_back(alpha.apply(v));
        Vector lhs = br.evaluate(outer);

        Vector rhs(d);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Vector> in{x[i]};
            in.insert(in.end(), y.begin(), y.end());
            std::vector<Vector> terms;
            for (std::size_t p = 0; p < n; ++p) terms.push_back(p == i ? br.evaluate(in) : alpha.apply(x[p]));
            rhs = rhs + br.evaluate(terms);
        }
        rep.check(digits, std::move(lhs), std::move(rhs), opt.witness_cap);
    } while (radix.next(digits));
    return rep;
}

/// The untwisted Leibniz n-algebra identity; twists are ignored.
inline IdentityReport verify_leibniz(const HomNambuAlgebra& alg, const VerifyOptions& opt = {}) {
    return verify_hom_nambu(HomNambuAlgebra::untwisted(alg.name(), alg.bracket()), opt);
}

/// All twists coincide and alpha is a bracket homomorphism. Twist mismatches are
/// reported as 1-tuples (0-based twist position) carrying flattened matrices.
inline IdentityReport verify_multiplicative(const HomNambuAlgebra& alg, const VerifyOptions& opt = {}) {
    IdentityReport rep;
    const Matrix& alpha = alg.alpha();
    for (std::size_t i = 1; i < alg.twists().size(); ++i)
        rep.check({i}, alg.twist(i).flattened(), alpha.flattened(), opt.witness_cap);
    const auto& br = alg.bracket();
    const MixedRadix& radix = br.radix();
    std::vector<std::size_t> digits(alg.arity(), 0);
    std::vector<Vector> args(alg.arity());
    if (radix.size() == 0) return rep;
    do {
        for (std::size_t p = 0; p < digits.size(); ++p) args[p] = alpha.column(digits[p]);
        rep.check(digits, alpha.apply(br.evaluate_basis(digits)), br.evaluate(args), opt.witness_cap);
    } while (radix.next(digits));
    return rep;
}

/// Antisymmetry on basis pairs (2-tuples) and
/// [a(x),[y,z]] + [a(y),[z,x]] + [a(z),[x,y]] = 0 on basis triples (3-tuples).
inline IdentityReport verify_hom_lie(const HomNambuAlgebra& alg, const VerifyOptions& opt = {}) {
    if (alg.arity() != 2) throw ArityMismatch("Hom-Lie check needs a binary bracket");
    const std::size_t d = alg.dim();
    const auto& br = alg.bracket();
    const Matrix& alpha = alg.alpha();
    IdentityReport rep;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t ij[] = {i, j}, ji[] = {j, i};
            rep.check({i, j}, br.evaluate_basis(ij), scaled(br.evaluate_basis(ji), -1), opt.witness_cap);
        }
    auto br2 = [&](const Vector& a, const Vector& b) {
        const Vector args[] = {a, b};
        return br.evaluate(args);
    };
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z) {
                const Vector ex = unit_vector(d, x), ey = unit_vector(d, y), ez = unit_vector(d, z);
                Vector sum = br2(alpha.apply(ex), br2(ey, ez));
                sum = sum + br2(alpha.apply(ey), br2(ez, ex));
                sum = sum + br2(alpha.apply(ez), br2(ex, ey));
                rep.check({x, y, z}, std::move(sum), Vector(d), opt.witness_cap);
            }
    return rep;
}

/// [I, g] in I and alpha(I) in I, for I spanned by the given vectors.
inline bool verify_hom_ideal(std::span<const Vector> subspace, const HomNambuAlgebra& alg) {
    if (alg.arity() != 2) throw ArityMismatch("Hom-ideal check needs a binary bracket");
    const std::size_t d = alg.dim();
    for (const auto& b : subspace)
        if (b.size() != d) throw DimMismatch("subspace vector has wrong length");
    for (const auto& b : subspace) {
        if (!in_span(alg.alpha().apply(b), subspace)) return false;
        for (std::size_t j = 0; j < d; ++j) {
            const Vector args[] = {b, unit_vector(d, j)};
            if (!in_span(alg.bracket().evaluate(args), subspace)) return false;
        }
    }
    return true;
}

/// f[x_1..x_n] = [f x_1 .. f x_n]' on basis tuples and f a_i = a'_i f for all i.
/// Twist failures are 1-tuples (0-based twist position) with flattened matrices.
inline IdentityReport verify_morphism(const Matrix& f, const HomNambuAlgebra& source, const HomNambuAlgebra& target,
                                      const VerifyOptions& opt = {}) {
    if (source.arity() != target.arity()) throw ArityMismatch("morphism between algebras of different arity");
    if (f.cols() != source.dim() || f.rows() != target.dim())
        throw DimMismatch("morphism matrix must be target_dim x source_dim");
    IdentityReport rep;
    const auto& radix = source.bracket().radix();
    std::vector<std::size_t> digits(source.arity(), 0);
    std::vector<Vector> args(source.arity());
    if (radix.size() != 0) {
        do {
            for (std::size_t p = 0; p < digits.size(); ++p) args[p] = f.column(digits[p]);
            rep.check(digits, f.apply(source.bracket().evaluate_basis(digits)), target.bracket().evaluate(args),
                      opt.witness_cap);
        } while (radix.next(digits));
    }
    for (std::size_t i = 0; i < source.twists().size(); ++i)
        rep.check({i}, (f * source.twist(i)).flattened(), (target.twist(i) * f).flattened(), opt.witness_cap);
    return rep;
}

}  // namespace hnambu

#endif  // HNAMBU_IDENTITIES_HPP
