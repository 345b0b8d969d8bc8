#include "tkhf/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tkhf/numtheory.hpp"

namespace tkhf {

namespace {

__extension__ typedef __int128 i128;

void require_homology_sphere(const SeifertData& sd, std::int64_t m) {
    if (!sd.is_homology_sphere()) {
        throw std::invalid_argument("compact tau formula needs an integral homology sphere");
    }
    if (m < 0) throw std::invalid_argument("tau argument must be non-negative");
}

// Terms shared by both closed forms:
//   sum_l ( 1/2 floor((m-1)/alpha_l) - s(alpha_hat_l, alpha_l; m/alpha_l, 0) + s(alpha_hat_l, alpha_l) ).
Rational arm_dedekind_terms(const SeifertData& sd, std::int64_t m) {
    Rational total;
    const auto& arms = sd.arms();
    for (std::size_t l = 0; l < arms.size(); ++l) {
        const std::int64_t a = arms[l].alpha;
        const std::int64_t hat = sd.alpha_hat()[l];
        total += Rational(floor_div(m - 1, a), 2);
        total -= dedekind_sum_general(hat, a, Rational(m, a), Rational());
        total += dedekind_sum(hat, a);
    }
    return total;
}

}  // namespace

SeifertData::SeifertData(std::int64_t e0, std::vector<SeifertArm> arms) : e0_(e0), arms_(std::move(arms)) {
    Rational inverse_sum;
    e_ = Rational(e0_);
    for (const auto& arm : arms_) {
        if (arm.alpha <= 1 || arm.omega <= 0 || arm.omega >= arm.alpha || std::gcd(arm.alpha, arm.omega) != 1) {
            throw std::invalid_argument("invalid Seifert arm (" + std::to_string(arm.alpha) + ", " +
                                        std::to_string(arm.omega) + ")");
        }
        if (__builtin_mul_overflow(alpha_product_, arm.alpha, &alpha_product_)) {
            throw std::overflow_error("product of Seifert multiplicities exceeds 64 bits");
        }
        e_ += Rational(arm.omega, arm.alpha);
        inverse_sum += Rational(1, arm.alpha);
    }
    if (e_.sign() >= 0) throw std::invalid_argument("Seifert data must have e < 0, got e = " + e_.to_string());
    epsilon_ = (Rational(2 - arm_count()) + inverse_sum) / e_;
    alpha_hat_.reserve(arms_.size());
    for (const auto& arm : arms_) alpha_hat_.push_back(alpha_product_ / arm.alpha);
}

std::vector<std::int64_t> SeifertData::alphas() const {
    std::vector<std::int64_t> out;
    out.reserve(arms_.size());
    for (const auto& arm : arms_) out.push_back(arm.alpha);
    return out;
}

bool SeifertData::is_homology_sphere() const noexcept {
    i128 total = static_cast<i128>(e0_) * alpha_product_;
    for (std::size_t l = 0; l < arms_.size(); ++l) total += static_cast<i128>(arms_[l].omega) * alpha_hat_[l];
    return total == -1;
}

SeifertData plus_one_surgery(const CoprimePair& pair) {
    const std::int64_t p = pair.p();
    const std::int64_t q = pair.q();
    const std::int64_t r = p * q - 1;
    SeifertData sd(-2, {{p, mod_inverse(q, p)}, {q, mod_inverse(p, q)}, {r, p * q - 2}});
    if (!sd.is_homology_sphere()) {
        throw std::logic_error("Seifert data of +1 surgery on T(" + std::to_string(p) + "," + std::to_string(q) +
                               ") is not a homology sphere");
    }
    return sd;
}

int epsilon_arms(const SeifertData& sd, std::int64_t b) {
    const auto alphas = sd.alphas();
    return epsilon_arms(std::span<const std::int64_t>(alphas), b);
}

Rational k2_plus_s(const SeifertData& sd) {
    Rational dedekind_total;
    for (const auto& arm : sd.arms()) dedekind_total += dedekind_sum(arm.omega, arm.alpha);
    return sd.epsilon() * sd.epsilon() * sd.e() + sd.e() + Rational(5) - Rational(12) * dedekind_total;
}

std::int64_t delta_j(const SeifertData& sd, std::int64_t j) {
    i128 value = 1 - static_cast<i128>(j) * sd.e0();
    for (const auto& arm : sd.arms()) {
        const i128 num = static_cast<i128>(j) * arm.omega;
        i128 ceil = num / arm.alpha;
        if (num % arm.alpha != 0 && num > 0) ++ceil;
        value -= ceil;
    }
    return static_cast<std::int64_t>(value);
}

Rational delta_j_sawtooth_form(const SeifertData& sd, std::int64_t j) {
    Rational value;
    for (const auto& arm : sd.arms()) {
        const auto residue = static_cast<std::int64_t>(static_cast<i128>(mod_floor(j, arm.alpha)) * arm.omega % arm.alpha);
        value += sawtooth(Rational(residue, arm.alpha));
    }
    value += Rational(1) - Rational(sd.arm_count(), 2) + Rational(j, sd.alpha_product());
    value += Rational(epsilon_arms(sd, j), 2);
    return value;
}

std::int64_t tau_bruteforce(const SeifertData& sd, std::int64_t m) {
    std::int64_t tau = 0;
    for (std::int64_t j = 0; j < m; ++j) tau += delta_j(sd, j);
    return tau;
}

std::vector<std::int64_t> tau_bruteforce_at(const SeifertData& sd, const std::vector<std::int64_t>& sorted_args) {
    std::vector<std::int64_t> out;
    out.reserve(sorted_args.size());
    std::int64_t j = 0;
    std::int64_t tau = 0;
    for (const std::int64_t m : sorted_args) {
        if (m < j) throw std::invalid_argument("tau_bruteforce_at needs non-decreasing arguments");
        for (; j < m; ++j) tau += delta_j(sd, j);
        out.push_back(tau);
    }
    return out;
}

std::int64_t tau_compact(const SeifertData& sd, std::int64_t m) {
    require_homology_sphere(sd, m);
    const auto& arms = sd.arms();
    const std::int64_t nu = sd.arm_count();

    // m = d(m) alpha + sum a_l alpha_hat_l with a_l = m * alpha_hat_l^{-1} mod alpha_l.
    i128 rest = m;
    for (std::size_t l = 0; l < arms.size(); ++l) {
        const std::int64_t a = arms[l].alpha;
        const std::int64_t hat = sd.alpha_hat()[l];
        const auto coeff = static_cast<std::int64_t>(static_cast<i128>(mod_floor(m, a)) * mod_inverse(hat, a) % a);
        rest -= static_cast<i128>(coeff) * hat;
    }
    if (rest % sd.alpha_product() != 0) throw std::logic_error("tau decomposition is not exact");
    const auto d_m = static_cast<std::int64_t>(rest / sd.alpha_product());

    const Rational mr(m);
    Rational tau = arm_dedekind_terms(sd, m);
    tau += mr * mr / Rational(2 * sd.alpha_product());
    tau += mr * (Rational(1) - Rational(nu, 2));
    tau -= Rational(d_m, 2);
    tau += Rational(nu, 4) + Rational(epsilon_arms(sd, m), 4);
    return tau.to_int64();
}

std::int64_t tau_compact_omega_form(const SeifertData& sd, std::int64_t m) {
    require_homology_sphere(sd, m);
    const std::int64_t nu = sd.arm_count();

    Rational tau = arm_dedekind_terms(sd, m);
    for (const auto& arm : sd.arms()) {
        const auto residue = static_cast<std::int64_t>(static_cast<i128>(mod_floor(m, arm.alpha)) * arm.omega % arm.alpha);
        tau -= Rational(1, 2) * sawtooth(Rational(residue, arm.alpha));
    }
    const Rational mr(m);
    tau += mr * (Rational(1) - Rational(nu, 2)) + Rational(nu, 2);
    tau += mr * (mr - Rational(1)) / Rational(2 * sd.alpha_product());
    return tau.to_int64();
}

std::vector<std::int64_t> TauProfile::corners() const {
    std::vector<std::int64_t> out;
    out.reserve(minima_values.size() + maxima_values.size());
    for (std::size_t n = 0; n < minima_values.size(); ++n) {
        out.push_back(minima_values[n]);
        if (n < maxima_values.size()) out.push_back(maxima_values[n]);
    }
    return out;
}

namespace {

void fill_positions(TauProfile& profile, const CoprimePair& pair) {
    const std::int64_t pq = pair.product();
    const std::int64_t delta = pair.delta();
    for (std::int64_t n = 0; n <= 2 * delta - 2; ++n) profile.minima_positions.push_back(n * (pq - 1));
    for (std::int64_t n = 0; n <= 2 * delta - 3; ++n) profile.maxima_positions.push_back(n * pq + 1);
}

void fill_global_min(TauProfile& profile) {
    profile.global_min_index = profile.delta - 1;
    profile.global_min = profile.minima_values[static_cast<std::size_t>(profile.global_min_index)];
    profile.global_min_position = profile.minima_positions.empty()
                                      ? -1
                                      : profile.minima_positions[static_cast<std::size_t>(profile.global_min_index)];
}

}  // namespace

TauProfile tau_profile(const SemigroupData& sd) {
    TauProfile profile;
    const std::int64_t delta = sd.delta();
    profile.delta = delta;
    fill_positions(profile, sd.pair());

    std::int64_t tau = 0;
    profile.minima_values.push_back(tau);
    for (std::int64_t n = 0; n <= 2 * delta - 3; ++n) {
        // tau(M_n) - tau(m_n) = #{s in S : s <= n};  tau(M_n) - tau(m_{n+1}) = #{gaps >= n+2}.
        const std::int64_t semigroup_up_to_n = (n + 1) - (delta - sd.alpha_at(n));
        tau += semigroup_up_to_n;
        profile.maxima_values.push_back(tau);
        tau -= count_gaps_ge(sd, n + 2);
        profile.minima_values.push_back(tau);
    }
    fill_global_min(profile);
    return profile;
}

TauProfile tau_profile(const CoprimePair& pair) { return tau_profile(build_semigroup(pair)); }

TauProfile tau_profile_bruteforce(const CoprimePair& pair) {
    TauProfile profile;
    profile.delta = pair.delta();
    fill_positions(profile, pair);

    std::vector<std::int64_t> args;
    for (std::size_t n = 0; n < profile.minima_positions.size(); ++n) {
        args.push_back(profile.minima_positions[n]);
        if (n < profile.maxima_positions.size()) args.push_back(profile.maxima_positions[n]);
    }
    const auto values = tau_bruteforce_at(plus_one_surgery(pair), args);
    for (std::size_t k = 0; k < values.size(); ++k) {
        (k % 2 == 0 ? profile.minima_values : profile.maxima_values).push_back(values[k]);
    }
    fill_global_min(profile);
    return profile;
}

std::int64_t d_via_tau(const CoprimePair& pair) {
    const SeifertData sd = plus_one_surgery(pair);
    const std::int64_t m_min = (pair.delta() - 1) * (pair.product() - 1);
    const Rational d_sigma = k2_plus_s(sd) / Rational(4) - Rational(2 * tau_compact(sd, m_min));
    // S^3_1(T(p,q)) is Sigma with reversed orientation.
    return (-d_sigma).to_int64();
}

Rational d_via_dedekind_exact(const CoprimePair& pair) {
    const std::int64_t p = pair.p();
    const std::int64_t q = pair.q();
    const std::int64_t pq = pair.product();
    const std::int64_t delta = pair.delta();
    const SemigroupData sd = build_semigroup(pair);
    const int c = membership(sd, delta - 1).carry;

    Rational d(-1);
    d -= Rational((delta - 1) * (delta - 2), pq);
    d -= Rational(p * p + q * q - 3 * p - 3 * q - 2, 6 * pq);
    d -= Rational(ceil_div(delta, p) + ceil_div(delta, q));
    d += Rational(c);
    d += Rational(epsilon_pq(p, q, delta - 1), 2);
    d += Rational(2) * dedekind_sum_general(p, q, Rational(delta - 1, q), Rational());
    d += Rational(2) * dedekind_sum_general(q, p, Rational(delta - 1, p), Rational());
    return d;
}

std::int64_t d_via_dedekind(const CoprimePair& pair) { return d_via_dedekind_exact(pair).to_int64(); }

}  // namespace tkhf
