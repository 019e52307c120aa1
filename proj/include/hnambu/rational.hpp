#ifndef HNAMBU_RATIONAL_HPP
#define HNAMBU_RATIONAL_HPP

#include <hnambu/errors.hpp>

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace hnambu {

/// Exact rational scalar in canonical lowest terms (denominator > 0, zero is 0/1).
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes, and
/// GMP keeps arithmetic results canonical, so equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw ParseError("zero denominator", 0, 0);
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses "[+-]digits[/digits]" with a strictly positive denominator.
    static Rational parse(std::string_view text) {
        std::size_t pos = 0;
        auto fail = [&](const char* what) -> Rational {
            throw ParseError(std::string(what) + " in rational '" + std::string(text) + "'", 0,
                             pos + 1);
        };
        std::string num;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') num.push_back('-');
            ++pos;
        }
        std::size_t digits_start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') num.push_back(text[pos++]);
        if (pos == digits_start) return fail("expected digits");
        std::string den = "1";
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            den.clear();
            std::size_t den_start = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') den.push_back(text[pos++]);
            if (pos == den_start) return fail("expected denominator digits");
        }
        if (pos != text.size()) return fail("unexpected character");
        mpz_class n(num, 10), d(den, 10);
        if (d == 0) {
            pos = text.size() - 1;
            return fail("zero denominator");
        }
        return Rational(mpq_class(n, d));
    }

    [[nodiscard]] std::string str() const { return value_.get_str(10); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        value_ /= o.value_;
        return *this;
    }

    /// this += a * b without a temporary Rational.
    void add_product(const Rational& a, const Rational& b) {
        if (a.is_zero() || b.is_zero()) return;
        value_ += a.value_ * b.value_;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

}  // namespace hnambu

#endif  // HNAMBU_RATIONAL_HPP
