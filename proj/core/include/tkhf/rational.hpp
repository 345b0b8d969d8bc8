#pragma once

// Exact arbitrary-precision rational numbers.
//
// Thin value type over GMP's mpq_class. Values are always canonical: lowest
// terms, positive denominator, zero stored as 0/1. There is no floating-point
// conversion on purpose; every quantity in this library is an exact identity.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tkhf {

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(mpq_class value);

    /// Parses "n", "-n" or "n/d". Throws std::invalid_argument on bad input
    /// and std::domain_error on a zero denominator.
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_integer() const noexcept;
    int sign() const noexcept { return sgn(value_); }

    mpz_class floor() const;
    mpz_class ceil() const;

    /// Exact conversion; throws std::domain_error when the value is not an
    /// integer or does not fit in 64 bits.
    std::int64_t to_int64() const;

    /// Canonical "n/d" form, also for integers ("3/1", "0/1").
    std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

private:
    mpq_class value_{0};
};

Rational abs(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Converts an arbitrary-precision integer to int64, throwing
/// std::overflow_error if it does not fit.
std::int64_t to_int64(const mpz_class& x);

}  // namespace tkhf
