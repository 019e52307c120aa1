#ifndef HNAMBU_DERIVATIONS_HPP
#define HNAMBU_DERIVATIONS_HPP

#include <hnambu/algebra.hpp>
#include <hnambu/identities.hpp>
#include <hnambu/linear.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hnambu {

/// Basis of Der_{alpha^k} (or Der^omega_{alpha^k}) as dim x dim matrices.
struct DerivationBasis {
    std::size_t degree = 0;
    std::size_t dim = 0;
    std::vector<Matrix> basis;

    [[nodiscard]] std::size_t size() const { return basis.size(); }

    [[nodiscard]] std::vector<Vector> flattened() const {
        std::vector<Vector> out;
        for (const auto& m : basis) out.push_back(m.flattened());
        return out;
    }
};

/// A linear map tagged with its derivation degree.
struct GradedMap {
    Matrix map;
    std::size_t degree = 0;
};

/// [D, E] = D E - E D, of degree k + s.
inline GradedMap commutator(const GradedMap& d, const GradedMap& e) {
    if (!d.map.is_square() || d.map.rows() != e.map.rows() || !e.map.is_square())
        throw DimMismatch("commutator of maps on different spaces");
    return {commutator(d.map, e.map), d.degree + e.degree};
}

/// Linear constraints on the d^2 entries of D (unknown t*d + c is D(t, c)) for
///   D alpha = alpha D  and  D omega(e_I) = sum_p omega(alpha^k e_{i1}, .., D e_{ip}, .., alpha^k e_{in}).
/// Identically zero rows are dropped.
inline Matrix derivation_constraints(const MultiLinearMap& omega, const Matrix& alpha, std::size_t k) {
    const std::size_t d = omega.target_dim();
    if (!omega.is_uniform()) throw DimMismatch("omega must map A x ... x A -> A");
    if (alpha.rows() != d || alpha.cols() != d) throw DimMismatch("alpha must be dim x dim");
    const std::size_t n = omega.arity();
    const std::size_t unknowns = d * d;
    const Matrix ak = alpha.pow(k);
    std::vector<Vector> rows;
    auto emit = [&](Vector row) {
        if (!is_zero(row)) rows.push_back(std::move(row));
    };

    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            Vector row(unknowns);
            for (std::size_t t = 0; t < d; ++t) {
                row[r * d + t] += alpha(t, c);
                row[t * d + c] -= alpha(r, t);
            }
            emit(std::move(row));
        }

    if (omega.tuple_count() == 0) return Matrix::from_rows(unknowns, rows);
    std::vector<std::size_t> digits(n, 0);
    std::vector<Vector> args(n);
    do {
        const Vector image = omega.evaluate_basis(digits);
        // slot_images[p][t] = omega(alpha^k e_{i1}, .., e_t at p, .., alpha^k e_{in})
        std::vector<std::vector<Vector>> slot_images(n, std::vector<Vector>(d));
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q < n; ++q)
                if (q != p) args[q] = ak.column(digits[q]);
            for (std::size_t t = 0; t < d; ++t) {
                args[p] = unit_vector(d, t);
                slot_images[p][t] = omega.evaluate(args);
            }
        }
        for (std::size_t r = 0; r < d; ++r) {
            Vector row(unknowns);
            for (std::size_t t = 0; t < d; ++t) row[r * d + t] += image[t];
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t t = 0; t < d; ++t) row[t * d + digits[p]] -= slot_images[p][t][r];
            emit(std::move(row));
        }
    } while (omega.radix().next(digits));
    return Matrix::from_rows(unknowns, rows);
}

/// Der^omega_{alpha^k}(A): nullspace of derivation_constraints, reshaped.
inline DerivationBasis omega_derivation_space(std::size_t dim, const MultiLinearMap& omega, const Matrix& alpha,
                                              std::size_t k) {
    if (!omega.is_uniform() || omega.target_dim() != dim) throw DimMismatch("omega must act on a space of dimension dim");
    DerivationBasis out{k, dim, {}};
    for (const auto& v : nullspace(derivation_constraints(omega, alpha, k)))
        out.basis.push_back(Matrix::from_flat(dim, dim, v));
    return out;
}

/// Der_{alpha^k}(g) of a multiplicative algebra.
inline DerivationBasis derivation_space(const HomNambuAlgebra& alg, std::size_t k) {
    if (!alg.is_multiplicative()) throw NotMultiplicative("'" + alg.name() + "' is not multiplicative");
    return omega_derivation_space(alg.dim(), alg.bracket(), alg.alpha(), k);
}

/// Direct test of the omega-alpha^k-derivation conditions by evaluation on basis tuples.
inline bool is_omega_derivation(const Matrix& f, const MultiLinearMap& omega, const Matrix& alpha, std::size_t k) {
    const std::size_t d = omega.target_dim();
    if (!omega.is_uniform() || f.rows() != d || f.cols() != d || alpha.rows() != d || alpha.cols() != d)
        throw DimMismatch("derivation test: dimensions disagree");
    if (f * alpha != alpha * f) return false;
    const Matrix ak = alpha.pow(k);
    const std::size_t n = omega.arity();
    if (omega.tuple_count() == 0) return true;
    std::vector<std::size_t> digits(n, 0);
    std::vector<Vector> args(n);
    do {
        Vector rhs(d);
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q < n; ++q) args[q] = q == p ? f.column(digits[q]) : ak.column(digits[q]);
            axpy(rhs, 1, omega.evaluate(args));
        }
        if (f.apply(omega.evaluate_basis(digits)) != rhs) return false;
    } while (omega.radix().next(digits));
    return true;
}

inline bool is_derivation(const HomNambuAlgebra& alg, const Matrix& d_map, std::size_t k) {
    return is_omega_derivation(d_map, alg.bracket(), alg.alpha(), k);
}

/// Lemma-style closure: is f an alpha^k-derivation of omega + sigma?
inline bool sum_closure_check(const Matrix& f, const MultiLinearMap& omega, const MultiLinearMap& sigma,
                              const Matrix& alpha, std::size_t k) {
    if (omega.source_dims() != sigma.source_dims() || omega.target_dim() != sigma.target_dim())
        throw DimMismatch("omega and sigma have different shapes");
    return is_omega_derivation(f, omega + sigma, alpha, k);
}

/// Der(g) truncated to degrees 0..max_degree, in concatenated coordinates.
struct GradedDerivationAlgebra {
    std::size_t max_degree = 0;
    std::size_t space_dim = 0;
    std::vector<DerivationBasis> degrees;
    std::vector<std::size_t> offsets;  // first concatenated index of each degree
    std::size_t total_dim = 0;
    // [e_a, e_b] for deg a + deg b <= max_degree, row-major a * total_dim + b.
    std::vector<std::optional<Vector>> bracket_table;
    // alpha'(e_a) = e_a o alpha, in degree deg a + 1 when that is in range.
    std::vector<std::optional<Vector>> twist_images;
    IdentityReport closure;        // commutators and twists land in the predicted degree
    IdentityReport hom_lie;        // antisymmetry (2-tuples) and Hom-Jacobi (3-tuples)

    [[nodiscard]] std::size_t degree_of(std::size_t a) const {
        std::size_t k = 0;
        while (k + 1 < offsets.size() && offsets[k + 1] <= a) ++k;
        return k;
    }

    [[nodiscard]] const Matrix& element(std::size_t a) const {
        const std::size_t k = degree_of(a);
        return degrees[k].basis[a - offsets[k]];
    }

    /// Bilinear extension of the table; nullopt if some needed entry is missing.
    [[nodiscard]] std::optional<Vector> bracket(const Vector& u, const Vector& v) const {
        Vector out(total_dim);
        for (std::size_t i = 0; i < total_dim; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < total_dim; ++j) {
                if (v[j].is_zero()) continue;
                const auto& e = bracket_table[i * total_dim + j];
                if (!e) return std::nullopt;
                axpy(out, u[i] * v[j], *e);
            }
        }
        return out;
    }
};

inline GradedDerivationAlgebra assemble_der_algebra(const HomNambuAlgebra& alg, std::size_t max_degree,
                                                    const VerifyOptions& opt = {}) {
    if (!alg.is_multiplicative()) throw NotMultiplicative("'" + alg.name() + "' is not multiplicative");
    GradedDerivationAlgebra g;
    g.max_degree = max_degree;
    g.space_dim = alg.dim();
    const std::size_t len = alg.dim() * alg.dim();
    std::vector<Coordinates> coords;
    for (std::size_t k = 0; k <= max_degree; ++k) {
        g.offsets.push_back(g.total_dim);
        g.degrees.push_back(derivation_space(alg, k));
        coords.emplace_back(g.degrees.back().flattened(), len);
        g.total_dim += g.degrees.back().size();
    }
    const std::size_t total = g.total_dim;
    auto embed = [&](std::size_t k, const Vector& local) {
        Vector v(total);
        std::copy(local.begin(), local.end(), v.begin() + static_cast<std::ptrdiff_t>(g.offsets[k]));
        return v;
    };

    g.bracket_table.assign(total * total, std::nullopt);
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = 0; b < total; ++b) {
            const std::size_t ka = g.degree_of(a), kb = g.degree_of(b);
            if (ka + kb > max_degree) {
                ++g.closure.out_of_truncation;
                continue;
            }
            const GradedMap c = commutator(GradedMap{g.element(a), ka}, GradedMap{g.element(b), kb});
            const Vector flat = c.map.flattened();
            if (auto x = coords[c.degree].of(flat)) {
                g.closure.check({a, b}, flat, flat, opt.witness_cap);
                g.bracket_table[a * total + b] = embed(c.degree, *x);
            } else {
                g.closure.check({a, b}, flat, {}, opt.witness_cap);
            }
        }

    g.twist_images.assign(total, std::nullopt);
    for (std::size_t a = 0; a < total; ++a) {
        const std::size_t ka = g.degree_of(a);
        if (ka + 1 > max_degree) {
            ++g.closure.out_of_truncation;
            continue;
        }
        const Vector flat = (g.element(a) * alg.alpha()).flattened();
        if (auto x = coords[ka + 1].of(flat)) {
            g.closure.check({a}, flat, flat, opt.witness_cap);
            g.twist_images[a] = embed(ka + 1, *x);
        } else {
            g.closure.check({a}, flat, {}, opt.witness_cap);
        }
    }

    // Antisymmetry on in-range pairs.
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = 0; b < total; ++b) {
            const auto& ab = g.bracket_table[a * total + b];
            const auto& ba = g.bracket_table[b * total + a];
            if (g.degree_of(a) + g.degree_of(b) > max_degree) {
                ++g.hom_lie.out_of_truncation;
                continue;
            }
            g.hom_lie.check({a, b}, ab.value_or(Vector{}), ba ? scaled(*ba, -1) : Vector{}, opt.witness_cap);
        }

    // [a'(x),[y,z]] + [a'(y),[z,x]] + [a'(z),[x,y]] = 0 where every term is in range.
    for (std::size_t x = 0; x < total; ++x)
        for (std::size_t y = 0; y < total; ++y)
            for (std::size_t z = 0; z < total; ++z) {
                if (g.degree_of(x) + g.degree_of(y) + g.degree_of(z) + 1 > max_degree) {
                    ++g.hom_lie.out_of_truncation;
                    continue;
                }
                const std::size_t cyc[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
                Vector sum(total);
                bool complete = true;
                for (const auto& t : cyc) {
                    const auto& tw = g.twist_images[t[0]];
                    const auto& inner = g.bracket_table[t[1] * total + t[2]];
                    if (!tw || !inner) {
                        complete = false;
                        break;
                    }
                    auto term = g.bracket(*tw, *inner);
                    if (!term) {
                        complete = false;
                        break;
                    }
                    axpy(sum, 1, *term);
                }
                g.hom_lie.check({x, y, z}, complete ? sum : Vector{}, Vector(total), opt.witness_cap);
            }
    return g;
}

/// ad_k(x)(y) = [alpha^k(y), x_1, .., x_{n-1}] for alpha-fixed arguments.
/// On multiplicative algebras the result is checked to be an alpha^{k+1}-derivation.
inline Matrix inner_derivation(const HomNambuAlgebra& alg, std::size_t k, std::span<const Vector> args) {
    const std::size_t n = alg.arity();
    const std::size_t d = alg.dim();
    if (args.size() + 1 != n)
        throw ArityMismatch("inner derivation takes " + std::to_string(n - 1) + " arguments");
    const Matrix& alpha = alg.alpha();
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].size() != d) throw DimMismatch("inner derivation argument has wrong length");
        if (alpha.apply(args[i]) != args[i])
            throw NotFixedPoint("argument " + std::to_string(i + 1) + " is not fixed by alpha");
    }
    const Matrix ak = alpha.pow(k);
    Matrix ad(d, d);
    std::vector<Vector> call(n);
    for (std::size_t i = 0; i + 1 < n; ++i) call[i + 1] = args[i];
    for (std::size_t c = 0; c < d; ++c) {
        call[0] = ak.column(c);
        const Vector img = alg.bracket().evaluate(call);
        for (std::size_t r = 0; r < d; ++r) ad(r, c) = img[r];
    }
    if (alg.is_multiplicative() && !is_derivation(alg, ad, k + 1))
        throw TheoremViolation("inner derivation is not an alpha^" + std::to_string(k + 1) + "-derivation");
    return ad;
}

/// Generators ad_k(x) over all (n-1)-tuples drawn from a basis of the
/// alpha-fixed subspace, and a basis of their span.
struct InnerBasis {
    std::size_t degree = 0;
    std::vector<Vector> fixed_basis;
    std::vector<std::vector<std::size_t>> generator_args;  // indices into fixed_basis
    std::vector<Matrix> generators;
    std::vector<Vector> span;  // flattened, linearly independent
};

inline InnerBasis inner_space(const HomNambuAlgebra& alg, std::size_t k) {
    if (!alg.is_multiplicative()) throw NotMultiplicative("'" + alg.name() + "' is not multiplicative");
    const std::size_t d = alg.dim();
    InnerBasis out;
    out.degree = k;
    out.fixed_basis = nullspace(alg.alpha() - Matrix::identity(d));
    const std::size_t slots = alg.arity() - 1;
    const MixedRadix radix = uniform_radix(slots, out.fixed_basis.size());
    std::vector<Vector> flat;
    if (radix.size() != 0) {
        std::vector<std::size_t> digits(slots, 0);
        std::vector<Vector> args(slots);
        do {
            for (std::size_t s = 0; s < slots; ++s) args[s] = out.fixed_basis[digits[s]];
            out.generator_args.push_back(digits);
            out.generators.push_back(inner_derivation(alg, k, args));
            flat.push_back(out.generators.back().flattened());
        } while (radix.next(digits));
    }
    out.span = independent_subset(flat, d * d);
    return out;
}

/// For D in Der_{alpha^k'} and a generator ad_k(x): [D, ad_k(x)] lies in the
/// inner span of index k + k' (derivation degree k + k' + 1). Also
/// ad_k(x) o alpha == ad_{k+1}(x). Witness tuples are (k', D index, k,
/// generator index) and (k, generator index) respectively.
inline IdentityReport check_inn_ideal(const HomNambuAlgebra& alg, std::size_t max_degree, const VerifyOptions& opt = {}) {
    if (!alg.is_multiplicative()) throw NotMultiplicative("'" + alg.name() + "' is not multiplicative");
    const std::size_t len = alg.dim() * alg.dim();
    std::vector<DerivationBasis> der;
    std::vector<InnerBasis> inn;
    std::vector<Coordinates> inn_coords;
    for (std::size_t k = 0; k <= max_degree; ++k) {
        der.push_back(derivation_space(alg, k));
        inn.push_back(inner_space(alg, k));
        inn_coords.emplace_back(inn.back().span, len);
    }
    IdentityReport rep;
    for (std::size_t kd = 0; kd <= max_degree; ++kd)
        for (std::size_t di = 0; di < der[kd].size(); ++di)
            for (std::size_t k = 0; k <= max_degree; ++k)
                for (std::size_t gi = 0; gi < inn[k].generators.size(); ++gi) {
                    if (k + kd > max_degree) {
                        ++rep.out_of_truncation;
                        continue;
                    }
                    const Vector c = commutator(der[kd].basis[di], inn[k].generators[gi]).flattened();
                    rep.check({kd, di, k, gi}, c, inn_coords[k + kd].contains(c) ? c : Vector{}, opt.witness_cap);
                }
    for (std::size_t k = 0; k <= max_degree; ++k)
        for (std::size_t gi = 0; gi < inn[k].generators.size(); ++gi) {
            if (k + 1 > max_degree) {
                ++rep.out_of_truncation;
                continue;
            }
            const Vector twisted = (inn[k].generators[gi] * alg.alpha()).flattened();
            rep.check({k, gi}, twisted, inn[k + 1].generators[gi].flattened(), opt.witness_cap);
        }
    return rep;
}

}  // namespace hnambu

#endif  // HNAMBU_DERIVATIONS_HPP
