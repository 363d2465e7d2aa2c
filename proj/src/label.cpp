#include "contentmax/label.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace contentmax {

namespace {

void require_nonnegative(const mpq_class& v, const char* what) {
    if (sgn(v) < 0) {
        throw std::domain_error(std::string(what) + ": result is negative");
    }
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_digits(std::string_view s) {
    return mpz_class(std::string(s), 10);
}

mpz_class pow10(unsigned long n) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
    return r;
}

}  // namespace

Label::Label(std::int64_t value) : value_(static_cast<long>(value)) {
    require_nonnegative(value_, "Label");
}

Label::Label(const mpq_class& value) : value_(value) {
    value_.canonicalize();
    require_nonnegative(value_, "Label");
}

Label::Label(const mpz_class& value) : value_(value) {
    require_nonnegative(value_, "Label");
}

Label Label::fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Label: zero denominator");
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return Label(q);
}

Label Label::parse(std::string_view text) {
    auto fail = [&] { return std::invalid_argument("not a nonnegative rational: '" + std::string(text) + "'"); };
    if (text.empty()) throw fail();
    if (text.front() == '+') text.remove_prefix(1);

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw fail();
        mpz_class d = parse_digits(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        mpq_class q(parse_digits(num), d);
        q.canonicalize();
        return Label(q);
    }

    // Decimal literal: digits[.digits][(e|E)[+-]digits]
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        auto exp_text = text.substr(e + 1);
        bool negative = false;
        if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
            negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) throw fail();
        exponent = std::stol(std::string(exp_text));
        if (negative) exponent = -exponent;
    }
    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        int_part = mantissa.substr(0, dot);
        frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw fail();
    if (!int_part.empty() && !all_digits(int_part)) throw fail();
    if (!frac_part.empty() && !all_digits(frac_part)) throw fail();

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class numerator = parse_digits(digits);
    long scale = static_cast<long>(frac_part.size()) - exponent;
    mpq_class q;
    if (scale >= 0) {
        q = mpq_class(numerator, pow10(static_cast<unsigned long>(scale)));
    } else {
        q = mpq_class(numerator * pow10(static_cast<unsigned long>(-scale)));
    }
    q.canonicalize();
    return Label(q);
}

std::uint64_t Label::to_uint64() const {
    if (!is_integer() || !value_.get_num().fits_ulong_p()) {
        throw std::domain_error("Label " + str() + " is not a 64-bit integer");
    }
    return value_.get_num().get_ui();
}

std::string Label::str() const {
    return value_.get_str(10);
}

std::string Label::decimal(int significant) const {
    if (is_zero()) return "0";
    mpf_class f(value_, 512);
    std::vector<char> buffer(static_cast<std::size_t>(significant) + 64);
    int n = gmp_snprintf(buffer.data(), buffer.size(), "%.*Fg", significant, f.get_mpf_t());
    if (n >= static_cast<int>(buffer.size())) {
        buffer.resize(static_cast<std::size_t>(n) + 1);
        gmp_snprintf(buffer.data(), buffer.size(), "%.*Fg", significant, f.get_mpf_t());
    }
    return std::string(buffer.data());
}

Label& Label::operator+=(const Label& other) {
    value_ += other.value_;
    return *this;
}

Label& Label::operator*=(const Label& other) {
    value_ *= other.value_;
    return *this;
}

Label& Label::operator-=(const Label& other) {
    value_ -= other.value_;
    require_nonnegative(value_, "Label subtraction");
    return *this;
}

Label& Label::operator/=(const Label& other) {
    if (other.is_zero()) throw std::domain_error("Label division by zero");
    value_ /= other.value_;
    return *this;
}

Label pow(const Label& base, std::uint64_t exponent) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
    return Label(mpq_class(num, den));
}

Label binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return Label{};
    if (k > n - k) k = n - k;
    // Multiplicative formula; each partial quotient C(n-k+i, i) is integral.
    mpz_class result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= mpz_class(static_cast<unsigned long>(n - k + i));
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return Label(result);
}

Label factorial(std::uint64_t n) {
    mpz_class result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return Label(result);
}

std::ostream& operator<<(std::ostream& os, const Label& label) {
    return os << label.str();
}

}  // namespace contentmax
