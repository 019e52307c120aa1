#ifndef HNAMBU_MULTILINEAR_HPP
#define HNAMBU_MULTILINEAR_HPP

#include <hnambu/errors.hpp>
#include <hnambu/matrix.hpp>
#include <hnambu/multi_index.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hnambu {

/// Multilinear map V_1 x ... x V_n -> W given by structure constants on basis
/// tuples. Constants are stored sparsely (absent = 0) per linearized input tuple;
/// evaluation returns dense coordinates.
class MultiLinearMap {
public:
    struct Term {
        std::size_t out;
        Rational value;
        friend bool operator==(const Term&, const Term&) = default;
    };

    MultiLinearMap() = default;
    MultiLinearMap(std::vector<std::size_t> source_dims, std::size_t target_dim)
        : radix_(std::move(source_dims)), target_dim_(target_dim), columns_(radix_.size()) {}

    /// n-linear map on a single d-dimensional space (a bracket).
    static MultiLinearMap uniform(std::size_t dim, std::size_t arity) {
        return MultiLinearMap(std::vector<std::size_t>(arity, dim), dim);
    }

    [[nodiscard]] std::size_t arity() const { return radix_.arity(); }
    [[nodiscard]] const std::vector<std::size_t>& source_dims() const { return radix_.dims(); }
    [[nodiscard]] std::size_t target_dim() const { return target_dim_; }
    [[nodiscard]] const MixedRadix& radix() const { return radix_; }
    [[nodiscard]] std::size_t tuple_count() const { return radix_.size(); }

    /// True when every source space and the target share one dimension.
    [[nodiscard]] bool is_uniform() const {
        return std::all_of(source_dims().begin(), source_dims().end(),
                           [&](std::size_t d) { return d == target_dim_; });
    }

    [[nodiscard]] std::span<const Term> terms(std::size_t linear_tuple) const { return columns_.at(linear_tuple); }

    [[nodiscard]] Rational get(std::span<const std::size_t> tuple, std::size_t out) const {
        for (const auto& t : columns_[radix_.linearize(tuple)])
            if (t.out == out) return t.value;
        return {};
    }

    void set(std::span<const std::size_t> tuple, std::size_t out, const Rational& value) {
        set_linear(radix_.linearize(tuple), out, value);
    }

    void set_linear(std::size_t linear_tuple, std::size_t out, const Rational& value) {
        check_out(out);
        auto& col = columns_.at(linear_tuple);
        auto it = std::lower_bound(col.begin(), col.end(), out, [](const Term& t, std::size_t o) { return t.out < o; });
        if (it != col.end() && it->out == out) {
            if (value.is_zero())
                col.erase(it);
            else
                it->value = value;
        } else if (!value.is_zero()) {
            col.insert(it, Term{out, value});
        }
    }

    /// Replaces the image of one basis tuple by a dense coordinate vector.
    void set_column(std::size_t linear_tuple, std::span<const Rational> image) {
        if (image.size() != target_dim_) throw DimMismatch("image has wrong dimension");
        auto& col = columns_.at(linear_tuple);
        col.clear();
        for (std::size_t j = 0; j < image.size(); ++j)
            if (!image[j].is_zero()) col.push_back(Term{j, image[j]});
    }

    [[nodiscard]] Vector column(std::size_t linear_tuple) const {
        Vector v(target_dim_);
        for (const auto& t : columns_.at(linear_tuple)) v[t.out] = t.value;
        return v;
    }

    [[nodiscard]] Vector evaluate_basis(std::span<const std::size_t> tuple) const {
        return column(radix_.linearize(tuple));
    }

    /// Dense evaluation on arbitrary coordinate vectors, iterating only over
    /// tuples in the product of the argument supports.
    [[nodiscard]] Vector evaluate(std::span<const Vector> args) const {
        if (args.size() != arity())
            throw ArityMismatch("expected " + std::to_string(arity()) + " arguments, got " + std::to_string(args.size()));
        std::vector<std::vector<std::size_t>> support(args.size());
        for (std::size_t p = 0; p < args.size(); ++p) {
            if (args[p].size() != source_dims()[p])
                throw DimMismatch("argument " + std::to_string(p + 1) + " has length " +
                                  std::to_string(args[p].size()) + ", expected " + std::to_string(source_dims()[p]));
            for (std::size_t i = 0; i < args[p].size(); ++i)
                if (!args[p][i].is_zero()) support[p].push_back(i);
        }
        Vector out(target_dim_);
        for (const auto& s : support)
            if (s.empty()) return out;
        std::vector<std::size_t> pos(args.size(), 0), digits(args.size());
        while (true) {
            Rational coef(1);
            for (std::size_t p = 0; p < args.size(); ++p) {
                digits[p] = support[p][pos[p]];
                coef *= args[p][digits[p]];
            }
            for (const auto& t : columns_[radix_.linearize(digits)]) out[t.out].add_product(coef, t.value);
            bool advanced = false;
            for (std::size_t p = args.size(); p-- > 0;) {
                if (++pos[p] < support[p].size()) {
                    advanced = true;
                    break;
                }
                pos[p] = 0;
            }
            if (!advanced) break;
        }
        return out;
    }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
    }

    [[nodiscard]] std::size_t nonzero_count() const {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.size();
        return n;
    }

    [[nodiscard]] MultiLinearMap scaled(const Rational& s) const {
        MultiLinearMap r(source_dims(), target_dim_);
        if (s.is_zero()) return r;
        r.columns_ = columns_;
        for (auto& c : r.columns_)
            for (auto& t : c) t.value *= s;
        return r;
    }

    /// Post-composition with a linear map on the target.
    [[nodiscard]] MultiLinearMap composed_with(const Matrix& outer) const {
        if (outer.cols() != target_dim_) throw DimMismatch("composition: target dimension mismatch");
        MultiLinearMap r(source_dims(), outer.rows());
        for (std::size_t l = 0; l < columns_.size(); ++l)
            if (!columns_[l].empty()) r.set_column(l, outer.apply(column(l)));
        return r;
    }

    friend MultiLinearMap operator+(const MultiLinearMap& a, const MultiLinearMap& b) {
        if (a.source_dims() != b.source_dims() || a.target_dim_ != b.target_dim_)
            throw DimMismatch("sum of multilinear maps with different shapes");
        MultiLinearMap r(a.source_dims(), a.target_dim_);
        for (std::size_t l = 0; l < a.columns_.size(); ++l) {
            if (a.columns_[l].empty() && b.columns_[l].empty()) continue;
            r.set_column(l, a.column(l) + b.column(l));
        }
        return r;
    }

    friend bool operator==(const MultiLinearMap& a, const MultiLinearMap& b) {
        return a.source_dims() == b.source_dims() && a.target_dim_ == b.target_dim_ && a.columns_ == b.columns_;
    }

private:
    void check_out(std::size_t out) const {
        if (out >= target_dim_)
            throw IndexOutOfRange("output index " + std::to_string(out) + " out of range [0," +
                                  std::to_string(target_dim_) + ")");
    }

    MixedRadix radix_;
    std::size_t target_dim_ = 0;
    std::vector<std::vector<Term>> columns_;
};

/// Structure constants c^j_{i1..in} of an n-linear bracket on one space.
using BracketTensor = MultiLinearMap;

}  // namespace hnambu

#endif  // HNAMBU_MULTILINEAR_HPP
