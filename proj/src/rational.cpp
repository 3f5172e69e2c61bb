#include "stabline/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace stabline {

namespace {

bool is_digit_run(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view text, bool allow_sign) {
    std::string_view digits = text;
    bool negative = false;
    if (allow_sign && !digits.empty() && digits.front() == '-') {
        negative = true;
        digits.remove_prefix(1);
    }
    if (!is_digit_run(digits)) {
        throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
    }
    mpz_class value(std::string(digits), 10);
    return negative ? mpz_class(-value) : value;
}

mpz_class from_int64(std::int64_t value) {
    if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
        return mpz_class(static_cast<long>(value));
    } else {
        return mpz_class(std::to_string(value), 10);
    }
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(from_int64(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(from_int64(numerator), from_int64(denominator));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(mpq_class(parse_integer(text, true)));
    }
    mpz_class num = parse_integer(text.substr(0, slash), true);
    mpz_class den = parse_integer(text.substr(slash + 1), false);
    if (den == 0) {
        throw std::invalid_argument("malformed rational: zero denominator in \"" + std::string(text) +
                                    "\"");
    }
    return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }

std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    return c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

std::size_t Rational::hash() const {
    const std::size_t h1 = std::hash<std::string>{}(value_.get_num().get_str(16));
    const std::size_t h2 = std::hash<std::string>{}(value_.get_den().get_str(16));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace stabline
