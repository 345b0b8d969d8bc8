#include "tkhf/numtheory.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace tkhf {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

mpz_class mpz_from_i128(i128 v) {
    const bool negative = v < 0;
    u128 mag = negative ? -static_cast<u128>(v) : static_cast<u128>(v);
    mpz_class hi(static_cast<unsigned long>(mag >> 64));
    mpz_class lo(static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class out = (hi << 64) + lo;
    return negative ? mpz_class(-out) : out;
}

bool mul_ok(i128 a, i128 b, i128& out) { return !__builtin_mul_overflow(a, b, &out); }
bool add_ok(i128 a, i128 b, i128& out) { return !__builtin_add_overflow(a, b, &out); }
i128 abs128(i128 v) { return v < 0 ? -v : v; }

// Numerator of 2*D*((N/D)) for D > 0, i.e. 0 on multiples and 2r - D otherwise.
i128 doubled_sawtooth_numerator(i128 n, i128 d) {
    i128 r = n % d;
    if (r < 0) r += d;
    return r == 0 ? 0 : 2 * r - d;
}

// Direct summation over a common denominator in 128-bit integers. Returns
// nullopt when the bound check says the sum might not fit.
std::optional<Rational> dedekind_sum_fixed_width(std::int64_t p, std::int64_t q, const Rational& x,
                                                 const Rational& y) {
    const mpz_class& xn_z = x.value().get_num();
    const mpz_class& xd_z = x.value().get_den();
    const mpz_class& yn_z = y.value().get_num();
    const mpz_class& yd_z = y.value().get_den();
    if (!xn_z.fits_slong_p() || !xd_z.fits_slong_p() || !yn_z.fits_slong_p() || !yd_z.fits_slong_p()) {
        return std::nullopt;
    }
    const i128 xn = xn_z.get_si();
    const i128 xd = xd_z.get_si();
    const i128 yn = yn_z.get_si();
    const i128 yd = yd_z.get_si();
    const i128 n = q < 0 ? -static_cast<i128>(q) : q;

    // u_i = N1 / D1 with N1 = i*yd + yn, D1 = q*yd
    // v_i = N2 / D2 with N2 = (p*xd)*N1 + xn*q*yd, D2 = q*yd*xd
    i128 d1 = 0, d2 = 0, a = 0, b = 0, tmp = 0;
    if (!mul_ok(q, yd, d1) || !mul_ok(d1, xd, d2) || !mul_ok(p, xd, a) || !mul_ok(xn, d1, b)) {
        return std::nullopt;
    }
    i128 n1_bound = 0;
    if (!mul_ok(n, yd, n1_bound) || !add_ok(n1_bound, abs128(yn), n1_bound)) return std::nullopt;
    if (!mul_ok(abs128(a), n1_bound, tmp) || !add_ok(tmp, abs128(b), tmp)) return std::nullopt;
    i128 sum_bound = 0;
    if (!mul_ok(abs128(d1), abs128(d2), sum_bound) || !mul_ok(sum_bound, n, sum_bound)) {
        return std::nullopt;
    }

    const i128 sign = q < 0 ? -1 : 1;
    const i128 den1 = sign * d1;
    const i128 den2 = sign * d2;
    i128 acc = 0;
    for (i128 i = 0; i < n; ++i) {
        const i128 n1 = i * yd + yn;
        const i128 t1 = doubled_sawtooth_numerator(sign * n1, den1);
        if (t1 == 0) continue;
        const i128 t2 = doubled_sawtooth_numerator(sign * (a * n1 + b), den2);
        acc += t1 * t2;
    }
    const mpz_class denominator = 4 * mpz_from_i128(den1) * mpz_from_i128(den2);
    return Rational(mpz_from_i128(acc), denominator);
}

Rational dedekind_sum_rational(std::int64_t p, std::int64_t q, const Rational& x, const Rational& y) {
    const std::int64_t n = q < 0 ? -q : q;
    const Rational qr(q);
    const Rational pr(p);
    Rational acc;
    for (std::int64_t i = 0; i < n; ++i) {
        const Rational u = (Rational(i) + y) / qr;
        const Rational su = sawtooth(u);
        if (su.sign() == 0) continue;
        acc += su * sawtooth(pr * u + x);
    }
    return acc;
}

void require_coprime_modulus(std::int64_t a, std::int64_t b) {
    if (b <= 0) throw std::invalid_argument("modulus must be positive, got " + std::to_string(b));
    if (std::gcd(a, b) != 1) {
        throw std::invalid_argument(std::to_string(a) + " and " + std::to_string(b) + " are not coprime");
    }
}

}  // namespace

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    if (b == 0) throw std::domain_error("division by zero");
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    if (b == 0) throw std::domain_error("division by zero");
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t b) {
    const std::int64_t r = a % b;
    return r < 0 ? r + b : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t b) {
    require_coprime_modulus(a, b);
    if (b == 1) return 0;
    // Extended Euclid on (a mod b, b).
    i128 old_r = mod_floor(a, b), r = b;
    i128 old_s = 1, s = 0;
    while (r != 0) {
        const i128 quotient = old_r / r;
        i128 t = old_r - quotient * r;
        old_r = r;
        r = t;
        t = old_s - quotient * s;
        old_s = s;
        s = t;
    }
    i128 inv = old_s % b;
    if (inv < 0) inv += b;
    return static_cast<std::int64_t>(inv);
}

std::int64_t mod_inverse_neg(std::int64_t a, std::int64_t b) {
    const std::int64_t inv = mod_inverse(a, b);
    return inv == 0 ? 0 : b - inv;
}

Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational();
    return x - Rational(x.floor(), 1) - Rational(1, 2);
}

Rational dedekind_sum_general(std::int64_t p, std::int64_t q, const Rational& x, const Rational& y) {
    if (q == 0) throw std::invalid_argument("Dedekind sum with q = 0");
    if (auto fast = dedekind_sum_fixed_width(p, q, x, y)) return *fast;
    return dedekind_sum_rational(p, q, x, y);
}

Rational dedekind_sum(std::int64_t p, std::int64_t q) { return dedekind_sum_general(p, q, Rational(), Rational()); }

Rational sawtooth_partial_sum(std::int64_t a, std::int64_t b, std::int64_t m) {
    require_coprime_modulus(a, b);
    const std::int64_t a_star = mod_inverse_neg(a, b);
    const auto ma_mod_b = static_cast<std::int64_t>(static_cast<i128>(mod_floor(m, b)) * mod_floor(a, b) % b);
    const Rational ma_over_b(ma_mod_b, b);
    return -Rational(1, 2) * sawtooth(ma_over_b) - dedekind_sum_general(a_star, b, Rational(m, b), Rational()) +
           dedekind_sum(a_star, b);
}

int epsilon_divides(std::int64_t a, std::int64_t b) {
    if (a == 0) throw std::invalid_argument("divisibility indicator with a = 0");
    return b % a == 0 ? 1 : 0;
}

int epsilon_pq(std::int64_t p, std::int64_t q, std::int64_t b) { return epsilon_divides(p, b) + epsilon_divides(q, b); }

int epsilon_arms(std::span<const std::int64_t> alphas, std::int64_t b) {
    int total = 0;
    for (const std::int64_t a : alphas) total += epsilon_divides(a, b);
    return total;
}

}  // namespace tkhf
