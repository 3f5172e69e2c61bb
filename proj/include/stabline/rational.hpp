#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar used for every quantity in the library.
 *
 * Values are kept in canonical form at all times: the denominator is
 * positive and coprime with the numerator, zero is 0/1. Arithmetic never
 * rounds. The textual form is "n" for integers and "n/d" otherwise.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stabline {

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);

    /// Parses "n" or "n/d" (optional leading '-', d > 0). Throws
    /// std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::string numerator_string() const;
    [[nodiscard]] std::string denominator_string() const;

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    [[nodiscard]] Rational abs() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs);
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    friend std::ostream& operator<<(std::ostream& os, const Rational& value);

    [[nodiscard]] std::size_t hash() const;

private:
    explicit Rational(mpq_class value);

    mpq_class value_{0};
};

/// Mean of two values.
Rational midpoint(const Rational& a, const Rational& b);

}  // namespace stabline

template <>
struct std::hash<stabline::Rational> {
    std::size_t operator()(const stabline::Rational& value) const noexcept { return value.hash(); }
};
