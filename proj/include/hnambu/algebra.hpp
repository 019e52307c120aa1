#ifndef HNAMBU_ALGEBRA_HPP
#define HNAMBU_ALGEBRA_HPP

#include <hnambu/errors.hpp>
#include <hnambu/matrix.hpp>
#include <hnambu/multilinear.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hnambu {

/// Twist maps alpha_1, ..., alpha_{n-1}, stored 0-based.
using TwistFamily = std::vector<Matrix>;

/// True iff alpha(bracket(e_I)) == bracket(alpha e_I) on every basis tuple I.
inline bool is_bracket_homomorphism(const BracketTensor& bracket, const Matrix& alpha) {
    const auto& radix = bracket.radix();
    const std::size_t n = bracket.arity();
    std::vector<std::size_t> digits(n, 0);
    std::vector<Vector> args(n);
    if (radix.size() == 0) return true;
    do {
        for (std::size_t p = 0; p < n; ++p) args[p] = alpha.column(digits[p]);
        if (alpha.apply(bracket.evaluate_basis(digits)) != bracket.evaluate(args)) return false;
    } while (radix.next(digits));
    return true;
}

/// An n-ary Hom-Nambu algebra candidate: a d-dimensional space, an n-linear
/// bracket and n-1 twist maps. Whether the defining identity holds is a
/// verdict computed by verify_hom_nambu, not an invariant of the type.
class HomNambuAlgebra {
public:
    HomNambuAlgebra(std::string name, BracketTensor bracket, TwistFamily twists)
        : name_(std::move(name)), bracket_(std::move(bracket)), twists_(std::move(twists)) {
        if (!bracket_.is_uniform()) throw DimMismatch("bracket must map g x ... x g -> g");
        if (bracket_.arity() < 2) throw ArityMismatch("arity must be at least 2");
        if (twists_.size() != bracket_.arity() - 1)
            throw ArityMismatch("expected " + std::to_string(bracket_.arity() - 1) + " twist maps, got " +
                                std::to_string(twists_.size()));
        for (const auto& t : twists_)
            if (t.rows() != dim() || t.cols() != dim()) throw DimMismatch("twist map must be dim x dim");
        multiplicative_ = compute_multiplicative();
    }

    /// All twists equal to one map.
    static HomNambuAlgebra with_twist(std::string name, BracketTensor bracket, const Matrix& alpha) {
        const std::size_t n = bracket.arity();
        return HomNambuAlgebra(std::move(name), std::move(bracket), TwistFamily(n == 0 ? 0 : n - 1, alpha));
    }

    /// Untwisted (Leibniz n-algebra) case: every alpha_i is the identity.
    static HomNambuAlgebra untwisted(std::string name, BracketTensor bracket) {
        const std::size_t d = bracket.target_dim();
        return with_twist(std::move(name), std::move(bracket), Matrix::identity(d));
    }

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] std::size_t dim() const { return bracket_.target_dim(); }
    [[nodiscard]] std::size_t arity() const { return bracket_.arity(); }
    [[nodiscard]] const BracketTensor& bracket() const { return bracket_; }
    [[nodiscard]] const TwistFamily& twists() const { return twists_; }
    /// alpha_{i+1} (0-based position i).
    [[nodiscard]] const Matrix& twist(std::size_t i) const { return twists_.at(i); }
    /// The common twist of a multiplicative algebra (alpha_1 otherwise).
    [[nodiscard]] const Matrix& alpha() const { return twists_.front(); }

    [[nodiscard]] bool is_multiplicative() const { return multiplicative_; }

    [[nodiscard]] bool has_identity_twists() const {
        for (const auto& t : twists_)
            if (!t.is_identity()) return false;
        return true;
    }

    [[nodiscard]] bool twists_coincide() const {
        for (const auto& t : twists_)
            if (t != twists_.front()) return false;
        return true;
    }

    [[nodiscard]] HomNambuAlgebra renamed(std::string name) const {
        HomNambuAlgebra r = *this;
        r.name_ = std::move(name);
        return r;
    }

    /// Structural equality; the name is not part of the value.
    friend bool operator==(const HomNambuAlgebra& a, const HomNambuAlgebra& b) {
        return a.bracket_ == b.bracket_ && a.twists_ == b.twists_;
    }

private:
    [[nodiscard]] bool compute_multiplicative() const {
        return twists_coincide() && is_bracket_homomorphism(bracket_, twists_.front());
    }

    std::string name_;
    BracketTensor bracket_;
    TwistFamily twists_;
    bool multiplicative_ = false;
};

/// Evaluates [x_1, ..., x_n].
inline Vector bracket_apply(const HomNambuAlgebra& alg, std::span<const Vector> args) {
    if (args.size() != alg.arity())
        throw ArityMismatch("bracket takes " + std::to_string(alg.arity()) + " arguments, got " +
                            std::to_string(args.size()));
    return alg.bracket().evaluate(args);
}

/// The abelian algebra (zero bracket) with identity twists.
inline HomNambuAlgebra abelian(std::size_t dim, std::size_t arity) {
    return HomNambuAlgebra::untwisted("abelian" + std::to_string(dim) + "_" + std::to_string(arity),
                                      BracketTensor::uniform(dim, arity));
}

}  // namespace hnambu

#endif  // HNAMBU_ALGEBRA_HPP
