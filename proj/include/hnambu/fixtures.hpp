#ifndef HNAMBU_FIXTURES_HPP
#define HNAMBU_FIXTURES_HPP

#include <hnambu/algebra.hpp>
#include <hnambu/cohomology.hpp>
#include <hnambu/constructions.hpp>

#include <array>
#include <string>
#include <utility>
#include <vector>

/// Small algebras and modules used by the tests, the CLI fixtures and the
/// acceptance driver.
namespace hnambu::fixtures {

/// d = 2, n = 2, [e2, e2] = e1, identity twist.
inline HomNambuAlgebra leib2() {
    BracketTensor br = BracketTensor::uniform(2, 2);
    const std::size_t t[] = {1, 1};
    br.set(t, 0, 1);
    return HomNambuAlgebra::untwisted("leib2", std::move(br));
}

/// [e1, e1] = e2, [e2, e2] = e1: fails the Leibniz identity.
inline HomNambuAlgebra leib2_corrupt() {
    BracketTensor br = BracketTensor::uniform(2, 2);
    const std::size_t a[] = {0, 0}, b[] = {1, 1};
    br.set(a, 1, 1);
    br.set(b, 0, 1);
    return HomNambuAlgebra::untwisted("leib2_corrupt", std::move(br));
}

/// d = 4, n = 3, [e_i, e_j, e_k] = sign(i j k l) e_l for distinct i, j, k.
inline HomNambuAlgebra nambu4() {
    BracketTensor br = BracketTensor::uniform(4, 3);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                if (i == j || j == k || i == k) continue;
                const std::array<std::size_t, 4> p{i, j, k, 6 - i - j - k};
                int inversions = 0;
                for (std::size_t s = 0; s < 4; ++s)
                    for (std::size_t t = s + 1; t < 4; ++t)
                        if (p[s] > p[t]) ++inversions;
                const std::size_t tuple[] = {i, j, k};
                br.set(tuple, p[3], inversions % 2 == 0 ? 1 : -1);
            }
    return HomNambuAlgebra::untwisted("nambu4", std::move(br));
}

inline Matrix rho() { return Matrix{{4, 0}, {0, 2}}; }

/// leib2 twisted by rho = diag(4, 2): [e2, e2] = 4 e1, twist rho.
inline HomNambuAlgebra leib2_twist() { return twist_by_endomorphism(leib2(), rho()).renamed("leib2_twist"); }

/// nambu4 twisted by -id.
inline HomNambuAlgebra nambu4_neg() {
    return twist_by_endomorphism(nambu4(), Matrix::identity(4) * Rational(-1)).renamed("nambu4_neg");
}

/// d = 2 Lie algebra [e1, e2] = e2 = -[e2, e1].
inline HomNambuAlgebra lie2() {
    BracketTensor br = BracketTensor::uniform(2, 2);
    const std::size_t a[] = {0, 1}, b[] = {1, 0};
    br.set(a, 1, 1);
    br.set(b, 1, -1);
    return HomNambuAlgebra::untwisted("lie2", std::move(br));
}

/// The valid algebras of the catalog.
inline std::vector<HomNambuAlgebra> catalog() {
    return {abelian(1, 2), abelian(2, 2), abelian(2, 3), leib2(), leib2_twist(), lie2(), nambu4(), nambu4_neg()};
}

/// Candidate endomorphisms of leib2; some are not morphisms.
inline std::vector<std::pair<std::string, Matrix>> leib2_endomorphisms() {
    return {
        {"id", Matrix::identity(2)},
        {"zero", Matrix(2, 2)},
        {"diag_4_2", rho()},
        {"diag_1_2", Matrix{{1, 0}, {0, 2}}},
        {"diag_1_-1", Matrix{{1, 0}, {0, -1}}},
        {"diag_9_3", Matrix{{9, 0}, {0, 3}}},
        {"shear", Matrix{{1, 1}, {0, 1}}},
    };
}

/// One-dimensional module of leib2 through lambda = e2^*:
/// rho_1(mu, x) = -mu lambda(x), rho_2(x, mu) = mu lambda(x).
inline Representation leib2_functional() {
    Representation r = Representation::zero("functional", 2, 1, 2);
    const std::size_t left[] = {0, 1}, right[] = {1, 0};
    r.actions[0].set(left, 0, -1);
    r.actions[1].set(right, 0, 1);
    return r;
}

/// The same functional acting only in the last slot; not a module of leib2.
inline Representation leib2_last_slot() {
    Representation r = Representation::zero("last_slot", 2, 1, 2);
    const std::size_t right[] = {1, 0};
    r.actions[1].set(right, 0, 1);
    return r;
}

}  // namespace hnambu::fixtures

#endif  // HNAMBU_FIXTURES_HPP
