#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace contentmax {

/// Exact nonnegative rational number. Every edge label, graph weight and
/// content value in the library is a Label; there is no floating point in
/// any decision path.
///
/// The value is always kept in lowest terms. Operations that would leave
/// the nonnegative rationals (subtraction going below zero, division by
/// zero) throw std::domain_error.
class Label {
public:
    Label() = default;
    Label(std::int64_t value);  // NOLINT(google-explicit-constructor)
    explicit Label(const mpq_class& value);
    explicit Label(const mpz_class& value);

    /// num/den, reduced. Throws std::domain_error on a zero denominator or
    /// a negative quotient.
    static Label fraction(std::int64_t num, std::int64_t den);

    /// Accepts `p`, `p/q` and finite decimal literals such as `0.125` or
    /// `1.5e-2`, converted exactly. Throws std::invalid_argument otherwise.
    static Label parse(std::string_view text);

    const mpq_class& value() const { return value_; }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Numerator when the label is an integer that fits in 64 bits.
    /// Throws std::domain_error otherwise.
    std::uint64_t to_uint64() const;

    /// `p` or `p/q`, lowest terms.
    std::string str() const;

    /// Approximate decimal rendering with `significant` digits. Display only.
    std::string decimal(int significant = 20) const;

    Label& operator+=(const Label& other);
    Label& operator*=(const Label& other);
    Label& operator-=(const Label& other);
    Label& operator/=(const Label& other);

    friend Label operator+(Label a, const Label& b) { return a += b; }
    friend Label operator*(Label a, const Label& b) { return a *= b; }
    friend Label operator-(Label a, const Label& b) { return a -= b; }
    friend Label operator/(Label a, const Label& b) { return a /= b; }

    friend bool operator==(const Label& a, const Label& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
        const int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

Label pow(const Label& base, std::uint64_t exponent);

/// Exact binomial coefficient C(n, k); 0 when k > n.
Label binomial(std::uint64_t n, std::uint64_t k);

Label factorial(std::uint64_t n);

std::ostream& operator<<(std::ostream& os, const Label& label);

}  // namespace contentmax
