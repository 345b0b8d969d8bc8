#include "tkhf/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace tkhf {

namespace {

mpz_class mpz_from_int64(std::int64_t v) {
    static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");
    return mpz_class(static_cast<long>(v));
}

bool parse_integer(std::string_view text, mpz_class& out) {
    if (text.empty()) return false;
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') return false;
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(mpz_from_int64(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(mpz_from_int64(numerator), mpz_from_int64(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    mpz_class num;
    mpz_class den = 1;
    if (!parse_integer(text.substr(0, slash), num)) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    if (slash != std::string_view::npos) {
        const auto tail = text.substr(slash + 1);
        if (tail.empty() || tail[0] == '-' || tail[0] == '+' || !parse_integer(tail, den)) {
            throw std::invalid_argument("malformed rational: " + std::string(text));
        }
    }
    return Rational(num, den);
}

bool Rational::is_integer() const noexcept { return value_.get_den() == 1; }

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw std::domain_error("rational " + to_string() + " is not an integer");
    return tkhf::to_int64(value_.get_num());
}

std::string Rational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

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
    if (rhs.value_ == 0) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

bool operator==(const Rational& lhs, const Rational& rhs) noexcept {
    return lhs.value_ == rhs.value_;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

std::int64_t to_int64(const mpz_class& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer " + x.get_str() + " exceeds 64 bits");
    return static_cast<std::int64_t>(x.get_si());
}

}  // namespace tkhf
