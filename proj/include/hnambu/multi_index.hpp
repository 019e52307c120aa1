#ifndef HNAMBU_MULTI_INDEX_HPP
#define HNAMBU_MULTI_INDEX_HPP

#include <hnambu/errors.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hnambu {

inline std::size_t checked_pow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > static_cast<std::size_t>(-1) / base) throw DomainError("index space overflow");
        r *= base;
    }
    return r;
}

/// Row-major codec for tuples whose t-th digit ranges over [0, dims[t]).
/// The first digit is most significant.
class MixedRadix {
public:
    MixedRadix() = default;
    explicit MixedRadix(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
        size_ = 1;
        for (auto d : dims_) {
            if (d != 0 && size_ > static_cast<std::size_t>(-1) / d) throw DomainError("index space overflow");
            size_ *= d;
        }
    }

    [[nodiscard]] std::size_t arity() const { return dims_.size(); }
    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }

    [[nodiscard]] std::size_t linearize(std::span<const std::size_t> digits) const {
        if (digits.size() != dims_.size()) throw ArityMismatch("multi-index has wrong arity");
        std::size_t l = 0;
        for (std::size_t t = 0; t < digits.size(); ++t) {
            if (digits[t] >= dims_[t])
                throw IndexOutOfRange("digit " + std::to_string(digits[t]) + " out of range [0," +
                                      std::to_string(dims_[t]) + ")");
            l = l * dims_[t] + digits[t];
        }
        return l;
    }

    [[nodiscard]] std::vector<std::size_t> delinearize(std::size_t l) const {
        if (l >= size_) throw IndexOutOfRange("linear index out of range");
        std::vector<std::size_t> digits(dims_.size());
        for (std::size_t t = dims_.size(); t-- > 0;) {
            digits[t] = l % dims_[t];
            l /= dims_[t];
        }
        return digits;
    }

    /// Odometer step in linearization order; false after the last tuple.
    bool next(std::vector<std::size_t>& digits) const {
        for (std::size_t t = dims_.size(); t-- > 0;) {
            if (++digits[t] < dims_[t]) return true;
            digits[t] = 0;
        }
        return false;
    }

private:
    std::vector<std::size_t> dims_;
    std::size_t size_ = 1;
};

/// Basis tuple (e_{i1}, ..., e_{in}) of a tensor power of a dim-dimensional space.
struct MultiIndex {
    std::size_t arity = 0;
    std::size_t dim = 0;
    std::vector<std::size_t> digits;

    [[nodiscard]] std::size_t linearize() const {
        return MixedRadix(std::vector<std::size_t>(arity, dim)).linearize(digits);
    }

    static MultiIndex delinearize(std::size_t arity, std::size_t dim, std::size_t l) {
        return MultiIndex{arity, dim, MixedRadix(std::vector<std::size_t>(arity, dim)).delinearize(l)};
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

inline MixedRadix uniform_radix(std::size_t arity, std::size_t dim) {
    return MixedRadix(std::vector<std::size_t>(arity, dim));
}

}  // namespace hnambu

#endif  // HNAMBU_MULTI_INDEX_HPP
