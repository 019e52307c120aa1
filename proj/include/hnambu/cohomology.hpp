#ifndef HNAMBU_COHOMOLOGY_HPP
#define HNAMBU_COHOMOLOGY_HPP

#include <hnambu/algebra.hpp>
#include <hnambu/constructions.hpp>
#include <hnambu/identities.hpp>
#include <hnambu/linear.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hnambu {

/// A module M over an n-ary algebra: for each position p an action
/// rho_p : g x .. x M (slot p) x .. x g -> M. The twist acts as the identity on M.
struct Representation {
    std::string name;
    std::size_t algebra_dim = 0;
    std::size_t module_dim = 0;
    std::vector<MultiLinearMap> actions;

    [[nodiscard]] std::size_t arity() const { return actions.size(); }

    /// Source dimensions of the action at position p.
    static std::vector<std::size_t> action_dims(std::size_t d, std::size_t m, std::size_t n, std::size_t p) {
        std::vector<std::size_t> dims(n, d);
        dims[p] = m;
        return dims;
    }

    /// All actions zero.
    static Representation zero(std::string name, std::size_t d, std::size_t m, std::size_t n) {
        Representation r{std::move(name), d, m, {}};
        for (std::size_t p = 0; p < n; ++p) r.actions.emplace_back(action_dims(d, m, n, p), m);
        return r;
    }

    friend bool operator==(const Representation& a, const Representation& b) {
        return a.algebra_dim == b.algebra_dim && a.module_dim == b.module_dim && a.actions == b.actions;
    }
};

inline Representation trivial_representation(const HomNambuAlgebra& alg, std::size_t module_dim) {
    return Representation::zero("trivial" + std::to_string(module_dim), alg.dim(), module_dim, alg.arity());
}

/// M = g with every action equal to the bracket.
inline Representation adjoint_representation(const HomNambuAlgebra& alg) {
    Representation r{"adjoint", alg.dim(), alg.dim(), std::vector<MultiLinearMap>(alg.arity(), alg.bracket())};
    return r;
}

inline void check_shape(const HomNambuAlgebra& alg, const Representation& rep) {
    if (rep.algebra_dim != alg.dim()) throw DimMismatch("representation is for an algebra of another dimension");
    if (rep.arity() != alg.arity()) throw ArityMismatch("representation has the wrong number of actions");
    for (std::size_t p = 0; p < rep.arity(); ++p)
        if (rep.actions[p].source_dims() != Representation::action_dims(alg.dim(), rep.module_dim, alg.arity(), p) ||
            rep.actions[p].target_dim() != rep.module_dim)
            throw DimMismatch("action " + std::to_string(p + 1) + " has the wrong shape");
}

/// An n-linear map g x .. x g -> M, with coordinates indexed by
/// r * d^n + (linearized argument tuple).
struct Cochain {
    MultiLinearMap map;

    static Cochain zero(std::size_t d, std::size_t n, std::size_t m) {
        return {MultiLinearMap(std::vector<std::size_t>(n, d), m)};
    }

    static Cochain from_coordinates(std::size_t d, std::size_t n, std::size_t m, std::span<const Rational> coords) {
        Cochain c = zero(d, n, m);
        const std::size_t tuples = c.map.tuple_count();
        if (coords.size() != m * tuples) throw DimMismatch("cochain coordinate vector has wrong length");
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t l = 0; l < tuples; ++l)
                if (!coords[r * tuples + l].is_zero()) c.map.set_linear(l, r, coords[r * tuples + l]);
        return c;
    }

    [[nodiscard]] std::size_t module_dim() const { return map.target_dim(); }

    [[nodiscard]] Vector coordinates() const {
        const std::size_t tuples = map.tuple_count();
        Vector v(map.target_dim() * tuples);
        for (std::size_t l = 0; l < tuples; ++l)
            for (const auto& t : map.terms(l)) v[t.out * tuples + l] = t.value;
        return v;
    }

    friend bool operator==(const Cochain&, const Cochain&) = default;
};

namespace detail {

// A vector of either g (module == false) or M.
struct Mixed {
    bool module = false;
    Vector v;
};

struct MixedContext {
    const HomNambuAlgebra& alg;
    const Representation& rep;

    [[nodiscard]] Mixed bracket(std::span<const Mixed> args) const {
        std::size_t count = 0, pos = 0;
        std::vector<Vector> plain(args.size());
        for (std::size_t p = 0; p < args.size(); ++p) {
            plain[p] = args[p].v;
            if (args[p].module) {
                ++count;
                pos = p;
            }
        }
        if (count == 0) return {false, alg.bracket().evaluate(plain)};
        if (count > 1) return {true, Vector(rep.module_dim)};
        return {true, rep.actions[pos].evaluate(plain)};
    }

    [[nodiscard]] Mixed twist(std::size_t j, const Mixed& a) const {
        return a.module ? a : Mixed{false, alg.twist(j).apply(a.v)};
    }
};

// Both sides of the twisted identity on (x_1..x_n, y_1..y_{n-1}).
inline std::pair<Mixed, Mixed> identity_sides(const MixedContext& ctx, std::span<const Mixed> xs,
                                              std::span<const Mixed> ys) {
    const std::size_t n = xs.size();
    std::vector<Mixed> args(n);
    args[0] = ctx.bracket(xs);
    for (std::size_t j = 0; j + 1 < n; ++j) args[j + 1] = ctx.twist(j, ys[j]);
    Mixed lhs = ctx.bracket(args);

    Mixed rhs{lhs.module, Vector(lhs.v.size())};
    std::vector<Mixed> inner(n);
    for (std::size_t i = 0; i < n; ++i) {
        inner[0] = xs[i];
        for (std::size_t j = 0; j + 1 < n; ++j) inner[j + 1] = ys[j];
        for (std::size_t p = 0; p < n; ++p) {
            if (p < i)
                args[p] = ctx.twist(p, xs[p]);
            else if (p == i)
                args[p] = ctx.bracket(inner);
            else
                args[p] = ctx.twist(p - 1, xs[p]);
        }
        axpy(rhs.v, 1, ctx.bracket(args).v);
    }
    return {std::move(lhs), std::move(rhs)};
}

}  // namespace detail

/// The twisted identity with exactly one argument in M, for each of the 2n-1
/// placements. Witness tuples are (placement, digits of x_1..x_n, y_1..y_{n-1}),
/// where the digit at the placement indexes the module basis.
inline IdentityReport verify_representation(const HomNambuAlgebra& alg, const Representation& rep,
                                            const VerifyOptions& opt = {}) {
    check_shape(alg, rep);
    const std::size_t n = alg.arity(), d = alg.dim(), m = rep.module_dim;
    const detail::MixedContext ctx{alg, rep};
    IdentityReport out;
    for (std::size_t s = 0; s < 2 * n - 1; ++s) {
        std::vector<std::size_t> dims(2 * n - 1, d);
        dims[s] = m;
        const MixedRadix radix(dims);
        if (radix.size() == 0) continue;
        std::vector<std::size_t> digits(2 * n - 1, 0);
        std::vector<detail::Mixed> xs(n), ys(n - 1);
        do {
            for (std::size_t q = 0; q < 2 * n - 1; ++q) {
                detail::Mixed e{q == s, unit_vector(dims[q], digits[q])};
                if (q < n)
                    xs[q] = std::move(e);
                else
                    ys[q - n] = std::move(e);
            }
            auto [lhs, rhs] = detail::identity_sides(ctx, xs, ys);
            std::vector<std::size_t> tuple{s};
            tuple.insert(tuple.end(), digits.begin(), digits.end());
            out.check(std::move(tuple), std::move(lhs.v), std::move(rhs.v), opt.witness_cap);
        } while (radix.next(digits));
    }
    return out;
}

inline void require_representation(const HomNambuAlgebra& alg, const Representation& rep) {
    if (!verify_representation(alg, rep, {0}).holds)
        throw NotARepresentation("'" + rep.name + "' is not a representation of '" + alg.name() + "'");
}

/// H = M + g (M coordinates first) with bracket
/// (sum_i [x_1..m_i..x_n] + f(x_1..x_n), [x_1..x_n]) and twists diag(id_M, alpha_j).
inline HomNambuAlgebra semidirect_algebra(const HomNambuAlgebra& alg, const Representation& rep, const Cochain& f) {
    check_shape(alg, rep);
    const std::size_t n = alg.arity(), d = alg.dim(), m = rep.module_dim;
    if (f.map.source_dims() != std::vector<std::size_t>(n, d) || f.module_dim() != m)
        throw DimMismatch("cochain has the wrong shape");
    require_representation(alg, rep);
    BracketTensor br = BracketTensor::uniform(m + d, n);
    if (br.tuple_count() != 0) {
        std::vector<std::size_t> digits(n, 0), local(n);
        do {
            std::size_t count = 0, pos = 0;
            for (std::size_t p = 0; p < n; ++p) {
                const bool in_m = digits[p] < m;
                local[p] = in_m ? digits[p] : digits[p] - m;
                if (in_m) {
                    ++count;
                    pos = p;
                }
            }
            if (count == 0) {
                for (const auto& t : alg.bracket().terms(alg.bracket().radix().linearize(local)))
                    br.set(digits, m + t.out, t.value);
                for (const auto& t : f.map.terms(f.map.radix().linearize(local))) br.set(digits, t.out, t.value);
            } else if (count == 1) {
                const auto& act = rep.actions[pos];
                for (const auto& t : act.terms(act.radix().linearize(local))) br.set(digits, t.out, t.value);
            }
        } while (br.radix().next(digits));
    }
    TwistFamily tw;
    for (const auto& a : alg.twists()) tw.push_back(block_diagonal(Matrix::identity(m), a));
    return HomNambuAlgebra(alg.name() + "_semi", std::move(br), std::move(tw));
}

namespace detail {

// M-valued operator mu -> rho_p(args with mu at p), as an m x m matrix.
inline Matrix action_matrix(const Representation& rep, std::size_t p, std::vector<Vector> args) {
    const std::size_t m = rep.module_dim;
    Matrix a(m, m);
    for (std::size_t c = 0; c < m; ++c) {
        args[p] = unit_vector(m, c);
        const Vector col = rep.actions[p].evaluate(args);
        for (std::size_t r = 0; r < m; ++r) a(r, c) = col[r];
    }
    return a;
}

}  // namespace detail

/// Both sides of the cocycle condition
///   f([x], a_1(y_1)..) + rho_0(f(x), a_1(y_1)..)
///     = sum_i f(a_1(x_1)..[x_i,y]..a_{n-1}(x_n)) + rho_i(a_1(x_1)..f(x_i,y)..a_{n-1}(x_n))
/// for every basis (2n-1)-tuple.
inline IdentityReport cocycle_residual(const HomNambuAlgebra& alg, const Representation& rep, const Cochain& f,
                                       const VerifyOptions& opt = {}) {
    check_shape(alg, rep);
    require_representation(alg, rep);
    const std::size_t n = alg.arity(), d = alg.dim();
    const auto& br = alg.bracket();
    const auto tw = detail::twisted_basis(alg.twists());
    IdentityReport out;
    const MixedRadix radix = uniform_radix(2 * n - 1, d);
    if (radix.size() == 0) return out;
    std::vector<std::size_t> digits(2 * n - 1, 0), inner(n);
    std::vector<Vector> args(n);
    do {
        const std::span<const std::size_t> xs(digits.data(), n), ys(digits.data() + n, n - 1);
        args[0] = br.evaluate_basis(xs);
        for (std::size_t j = 0; j + 1 < n; ++j) args[j + 1] = tw[j][ys[j]];
        Vector lhs = f.map.evaluate(args);
        args[0] = f.map.evaluate_basis(xs);
        axpy(lhs, 1, rep.actions[0].evaluate(args));

        Vector rhs(rep.module_dim);
        for (std::size_t i = 0; i < n; ++i) {
            inner[0] = xs[i];
            for (std::size_t j = 0; j + 1 < n; ++j) inner[j + 1] = ys[j];
            for (std::size_t p = 0; p < n; ++p)
                if (p != i) args[p] = p < i ? tw[p][xs[p]] : tw[p - 1][xs[p]];
            args[i] = br.evaluate_basis(inner);
            axpy(rhs, 1, f.map.evaluate(args));
            args[i] = f.map.evaluate_basis(inner);
            axpy(rhs, 1, rep.actions[i].evaluate(args));
        }
        out.check(digits, std::move(lhs), std::move(rhs), opt.witness_cap);
    } while (radix.next(digits));
    return out;
}

/// The cocycle condition as a linear system over the m * d^n cochain
/// coordinates. Row (l, r) is output coordinate r of LHS - RHS on the l-th
/// basis (2n-1)-tuple; rows are ordered l * m + r.
inline Matrix cocycle_constraint_matrix(const HomNambuAlgebra& alg, const Representation& rep) {
    check_shape(alg, rep);
    const std::size_t n = alg.arity(), d = alg.dim(), m = rep.module_dim;
    const std::size_t tuples = checked_pow(d, n);
    const std::size_t unknowns = m * tuples;
    const auto& br = alg.bracket();
    const auto tw = detail::twisted_basis(alg.twists());
    const MixedRadix radix = uniform_radix(2 * n - 1, d);
    const MixedRadix g_radix = uniform_radix(n, d);
    Matrix out(radix.size() * m, unknowns);
    if (radix.size() == 0) return out;

    std::vector<std::size_t> digits(2 * n - 1, 0), inner(n);
    std::vector<Vector> args(n);
    std::size_t row = 0;
    // f(args) contributes kron(args)[l] at unknown r * tuples + l of output r.
    auto add_f = [&](const std::vector<Vector>& a, const Rational& sign) {
        const Vector k = kron(a);
        for (std::size_t l = 0; l < tuples; ++l) {
            if (k[l].is_zero()) continue;
            for (std::size_t r = 0; r < m; ++r) out(row + r, r * tuples + l) += sign * k[l];
        }
    };
    // rho_p(.., f(e_T), ..) contributes A(r, r') at unknown r' * tuples + L(T).
    auto add_action = [&](std::size_t p, const std::vector<Vector>& a, std::size_t tuple, const Rational& sign) {
        const Matrix act = detail::action_matrix(rep, p, a);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t rr = 0; rr < m; ++rr)
                if (!act(r, rr).is_zero()) out(row + r, rr * tuples + tuple) += sign * act(r, rr);
    };
    do {
        const std::span<const std::size_t> xs(digits.data(), n), ys(digits.data() + n, n - 1);
        args[0] = br.evaluate_basis(xs);
        for (std::size_t j = 0; j + 1 < n; ++j) args[j + 1] = tw[j][ys[j]];
        add_f(args, 1);
        add_action(0, args, g_radix.linearize(xs), 1);
        for (std::size_t i = 0; i < n; ++i) {
            inner[0] = xs[i];
            for (std::size_t j = 0; j + 1 < n; ++j) inner[j + 1] = ys[j];
            for (std::size_t p = 0; p < n; ++p)
                if (p != i) args[p] = p < i ? tw[p][xs[p]] : tw[p - 1][xs[p]];
            args[i] = br.evaluate_basis(inner);
            add_f(args, -1);
            add_action(i, args, g_radix.linearize(inner), -1);
        }
        row += m;
    } while (radix.next(digits));
    return out;
}

/// LHS - RHS of the cocycle condition, flattened in the row order of
/// cocycle_constraint_matrix.
inline Vector cocycle_defect(const HomNambuAlgebra& alg, const Representation& rep, const Cochain& f) {
    const IdentityReport full = cocycle_residual(alg, rep, f, {static_cast<std::size_t>(-1)});
    const std::size_t n = alg.arity(), m = rep.module_dim;
    const MixedRadix radix = uniform_radix(2 * n - 1, alg.dim());
    Vector out(radix.size() * m);
    for (const auto& w : full.witnesses) {
        const std::size_t l = radix.linearize(w.tuple);
        for (std::size_t r = 0; r < m; ++r) out[l * m + r] = w.lhs[r] - w.rhs[r];
    }
    return out;
}

/// Z(g, M): basis of the cocycle space in cochain coordinates.
inline std::vector<Vector> cocycle_space(const HomNambuAlgebra& alg, const Representation& rep) {
    require_representation(alg, rep);
    return nullspace(cocycle_constraint_matrix(alg, rep));
}

/// delta h (x_1..x_n) = sum_i rho_i(x_1..h(x_i)..x_n) - h([x_1..x_n]) for h : g -> M (m x d).
inline Cochain coboundary(const HomNambuAlgebra& alg, const Representation& rep, const Matrix& h) {
    check_shape(alg, rep);
    const std::size_t n = alg.arity(), d = alg.dim(), m = rep.module_dim;
    if (h.rows() != m || h.cols() != d) throw DimMismatch("h must be module_dim x algebra_dim");
    require_representation(alg, rep);
    Cochain out = Cochain::zero(d, n, m);
    const auto& radix = out.map.radix();
    if (radix.size() == 0) return out;
    std::vector<std::size_t> digits(n, 0);
    std::vector<Vector> args(n);
    do {
        Vector v = scaled(h.apply(alg.bracket().evaluate_basis(digits)), -1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t p = 0; p < n; ++p) args[p] = p == i ? h.column(digits[p]) : unit_vector(d, digits[p]);
            axpy(v, 1, rep.actions[i].evaluate(args));
        }
        out.map.set_column(radix.linearize(digits), v);
    } while (radix.next(digits));
    return out;
}

/// Matrix of h -> coordinates of delta h; h unknowns ordered r * d + c.
inline Matrix coboundary_matrix(const HomNambuAlgebra& alg, const Representation& rep) {
    const std::size_t d = alg.dim(), m = rep.module_dim;
    std::vector<Vector> cols;
    for (std::size_t u = 0; u < m * d; ++u) {
        Matrix h(m, d);
        h(u / d, u % d) = 1;
        cols.push_back(coboundary(alg, rep, h).coordinates());
    }
    return Matrix::from_columns(m * checked_pow(d, alg.arity()), cols);
}

/// B(g, M): basis of the coboundary space in cochain coordinates.
inline std::vector<Vector> coboundary_space(const HomNambuAlgebra& alg, const Representation& rep) {
    return rank_and_image(coboundary_matrix(alg, rep)).basis;
}

struct CochainSpaces {
    std::vector<Vector> z_basis;
    std::vector<Vector> b_basis;
    std::size_t ext_dim = 0;
};

inline CochainSpaces cochain_spaces(const HomNambuAlgebra& alg, const Representation& rep) {
    CochainSpaces s{cocycle_space(alg, rep), coboundary_space(alg, rep), 0};
    s.ext_dim = quotient_dimension(s.z_basis, s.b_basis);
    return s;
}

inline std::size_t ext_dimension(const HomNambuAlgebra& alg, const Representation& rep) {
    return cochain_spaces(alg, rep).ext_dim;
}

/// Looks for h : g -> M with delta h = f and h alpha_j = h for every twist.
/// Returns the solution with free unknowns set to zero, or nullopt.
inline std::optional<Matrix> split_check(const HomNambuAlgebra& alg, const Representation& rep, const Cochain& f) {
    if (!cocycle_residual(alg, rep, f, {0}).holds) throw NotACocycle("cochain does not satisfy the cocycle condition");
    const std::size_t d = alg.dim(), m = rep.module_dim;
    const Matrix delta = coboundary_matrix(alg, rep);
    std::vector<Vector> rows;
    Vector rhs = f.coordinates();
    for (std::size_t i = 0; i < delta.rows(); ++i) {
        const auto r = delta.row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    // (h alpha_j - h)(r, c) = sum_t h(r, t) alpha_j(t, c) - h(r, c)
    for (const auto& a : alg.twists())
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                Vector row(m * d);
                for (std::size_t t = 0; t < d; ++t) row[r * d + t] += a(t, c);
                row[r * d + c] -= 1;
                rows.push_back(std::move(row));
                rhs.emplace_back();
            }
    const auto x = solve(Matrix::from_rows(m * d, rows), rhs);
    if (!x) return std::nullopt;
    return Matrix::from_flat(m, d, *x);
}

enum class TensorVariant { plain, hom };

/// Hom(g, M) (m x d matrices, coordinate r * d + c) as a module over the binary
/// algebra on g^(x)n built from an (n+1)-ary algebra, with
///   [f, X](x) = [X, f](x) = -rho_0(f(x), X).
inline Representation hom_gm_representation(const HomNambuAlgebra& alg, const Representation& rep) {
    check_shape(alg, rep);
    require_representation(alg, rep);
    const std::size_t d = alg.dim(), m = rep.module_dim, n = alg.arity() - 1;
    const std::size_t big = checked_pow(d, n), hom_dim = m * d;
    Representation out = Representation::zero("hom_" + rep.name, big, hom_dim, 2);
    const MixedRadix xr = uniform_radix(n, d);
    std::vector<std::size_t> digits(n, 0);
    std::vector<Vector> args(n + 1);
    if (xr.size() == 0) return out;
    do {
        const std::size_t xl = xr.linearize(digits);
        for (std::size_t p = 0; p < n; ++p) args[p + 1] = unit_vector(d, digits[p]);
        for (std::size_t rr = 0; rr < m; ++rr) {
            args[0] = unit_vector(m, rr);
            const Vector img = rep.actions[0].evaluate(args);
            for (std::size_t c = 0; c < d; ++c) {
                const std::size_t f_index = rr * d + c;
                for (std::size_t r = 0; r < m; ++r) {
                    if (img[r].is_zero()) continue;
                    const std::size_t left[] = {f_index, xl}, right[] = {xl, f_index};
                    out.actions[0].set(left, r * d + c, -img[r]);
                    out.actions[1].set(right, r * d + c, -img[r]);
                }
            }
        }
    } while (xr.next(digits));
    return out;
}

/// The binary algebra on g^(x)n that hom_gm_representation acts on.
inline HomNambuAlgebra hom_gm_base(const HomNambuAlgebra& alg, TensorVariant variant = TensorVariant::plain) {
    return variant == TensorVariant::plain ? tensor_leibniz(alg).algebra : tensor_hom_leibniz(alg);
}

}  // namespace hnambu

#endif  // HNAMBU_COHOMOLOGY_HPP
