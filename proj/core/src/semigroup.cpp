#include "tkhf/semigroup.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "tkhf/numtheory.hpp"

namespace tkhf {

CoprimePair::CoprimePair(std::int64_t a, std::int64_t b) : p_(a < b ? a : b), q_(a < b ? b : a) {
    if (p_ < 2) throw std::invalid_argument("p and q must be at least 2");
    if (p_ == q_ || std::gcd(p_, q_) != 1) throw std::invalid_argument("p and q must be coprime");
}

SemigroupData::SemigroupData(CoprimePair pair) : pair_(pair), delta_(pair.delta()) {
    const std::int64_t p = pair.p();
    const std::int64_t q = pair.q();
    const std::int64_t conductor = 2 * delta_;

    // Sieve of a*p + b*q below the conductor; everything from 2*delta on lies in S.
    in_semigroup_.assign(static_cast<std::size_t>(conductor), false);
    for (std::int64_t ap = 0; ap < conductor; ap += p) {
        for (std::int64_t s = ap; s < conductor; s += q) in_semigroup_[static_cast<std::size_t>(s)] = true;
    }

    gaps_.reserve(static_cast<std::size_t>(delta_));
    for (std::int64_t s = 0; s < conductor; ++s) {
        if (!in_semigroup_[static_cast<std::size_t>(s)]) gaps_.push_back(s);
    }
    if (static_cast<std::int64_t>(gaps_.size()) != delta_) {
        throw std::logic_error("semigroup sieve found " + std::to_string(gaps_.size()) + " gaps, expected " +
                               std::to_string(delta_));
    }

    // Suffix counts: alpha_i = #{gaps > i} for 0 <= i <= 2*delta - 2.
    alpha_.assign(static_cast<std::size_t>(conductor - 1), 0);
    std::int64_t above = 0;
    for (std::int64_t i = conductor - 2; i >= 0; --i) {
        if (!in_semigroup_[static_cast<std::size_t>(i + 1)]) ++above;
        alpha_[static_cast<std::size_t>(i)] = above;
    }
}

std::int64_t SemigroupData::alpha_at(std::int64_t i) const noexcept {
    if (i < 0) return delta_;
    if (i >= static_cast<std::int64_t>(alpha_.size())) return 0;
    return alpha_[static_cast<std::size_t>(i)];
}

bool SemigroupData::contains(std::int64_t s) const noexcept {
    if (s < 0) return false;
    if (s >= 2 * delta_) return true;
    return in_semigroup_[static_cast<std::size_t>(s)];
}

SemigroupData build_semigroup(CoprimePair pair) { return SemigroupData(pair); }

MembershipWitness membership(const SemigroupData& sd, std::int64_t a) {
    const std::int64_t p = sd.pair().p();
    const std::int64_t q = sd.pair().q();
    if (a < 0 || a >= p * q) {
        throw std::out_of_range("membership requires 0 <= a < pq, got " + std::to_string(a));
    }
    // Reducing mod p fixes coeff_q; coeff_p then follows by exact division.
    const std::int64_t coeff_q = mod_floor(mod_floor(a, p) * mod_inverse(q, p), p);
    std::int64_t rest = a - coeff_q * q;
    int carry = 0;
    if (rest < 0) {
        rest += p * q;
        carry = 1;
    }
    return MembershipWitness{rest / p, coeff_q, carry};
}

std::int64_t count_gaps_ge(const SemigroupData& sd, std::int64_t a) { return sd.alpha_at(a - 1); }

std::int64_t AlexanderData::q_at_1() const noexcept {
    return std::accumulate(q_coefficients.begin(), q_coefficients.end(), std::int64_t{0});
}

AlexanderData alexander(const SemigroupData& sd) {
    AlexanderData out;
    const std::int64_t delta = sd.delta();
    out.delta = delta;

    // Delta(t) = (1 - t) sum_{s in S} t^s: coefficient of t^k is [k in S] - [k-1 in S].
    out.coefficients.resize(static_cast<std::size_t>(2 * delta + 1));
    for (std::int64_t k = 0; k <= 2 * delta; ++k) {
        out.coefficients[static_cast<std::size_t>(k)] = (sd.contains(k) ? 1 : 0) - (sd.contains(k - 1) ? 1 : 0);
    }

    out.symmetric.resize(static_cast<std::size_t>(delta + 1));
    for (std::int64_t j = 0; j <= delta; ++j) {
        out.symmetric[static_cast<std::size_t>(j)] = out.coefficients[static_cast<std::size_t>(delta + j)];
    }
    for (std::int64_t k = 0; k <= 2 * delta; ++k) {
        const std::int64_t e = k - delta;
        out.second_derivative_at_1 += out.coefficients[static_cast<std::size_t>(k)] * e * (e - 1);
    }

    // R(t) = Delta(t) - 1 - delta (t - 1), then two synthetic divisions by (t - 1).
    std::vector<std::int64_t> r = out.coefficients;
    r[0] -= 1 - delta;
    if (r.size() > 1) r[1] -= delta;
    for (int pass = 0; pass < 2; ++pass) {
        // Divide by (t - 1): highest coefficient first.
        std::vector<std::int64_t> quotient(r.size() - 1);
        std::int64_t carry = 0;
        for (std::size_t k = r.size() - 1; k >= 1; --k) {
            carry += r[k];
            quotient[k - 1] = carry;
        }
        if (carry + r[0] != 0) throw std::logic_error("Alexander polynomial not divisible by (t - 1)^2");
        r = std::move(quotient);
    }
    out.q_coefficients = std::move(r);
    return out;
}

std::vector<CoprimePair> coprime_pairs(std::int64_t p_max, std::int64_t q_max) {
    std::vector<CoprimePair> pairs;
    for (std::int64_t p = 2; p <= p_max; ++p) {
        for (std::int64_t q = p + 1; q <= q_max; ++q) {
            if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
        }
    }
    return pairs;
}

}  // namespace tkhf
