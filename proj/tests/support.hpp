// Conversions between library values and the brute-force oracle's types.
#pragma once

#include "oracle/brute_force.hpp"

#include <hnambu/algebra.hpp>
#include <hnambu/matrix.hpp>

#include <random>
#include <string>

namespace support {

inline oracle::Q to_q(const hnambu::Rational& r) { return oracle::Q(r.str()); }

inline oracle::Vec to_vec(const hnambu::Vector& v) {
    oracle::Vec out;
    for (const auto& x : v) out.push_back(to_q(x));
    return out;
}

inline oracle::Mat to_mat(const hnambu::Matrix& m) {
    oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_q(m(i, j));
    return out;
}

/// The oracle reads a single twist; callers pass multiplicative algebras.
inline oracle::Alg to_alg(const hnambu::HomNambuAlgebra& a) {
    oracle::Alg o = oracle::make_alg(a.dim(), a.arity());
    const auto& br = a.bracket();
    for (std::size_t l = 0; l < br.tuple_count(); ++l)
        for (const auto& t : br.terms(l)) o.c[l * a.dim() + t.out] = to_q(t.value);
    o.alpha = to_mat(a.alpha());
    return o;
}

inline hnambu::Rational random_rational(std::mt19937& rng, int span = 5) {
    std::uniform_int_distribution<int> num(-span, span), den(1, span);
    return hnambu::Rational(num(rng), den(rng));
}

inline hnambu::Vector random_vector(std::mt19937& rng, std::size_t n, int span = 5) {
    hnambu::Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational(rng, span));
    return v;
}

inline hnambu::Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int span = 3) {
    hnambu::Matrix m(r, c);
    std::uniform_int_distribution<int> pick(-span, span);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = pick(rng);
    return m;
}

}  // namespace support
