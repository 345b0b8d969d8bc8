#pragma once

// Star-shaped Seifert invariants, the tau function of a negative definite
// Seifert homology sphere and the d-invariant of +1 surgery on T(p, q).

#include <cstdint>
#include <vector>

#include "tkhf/rational.hpp"
#include "tkhf/semigroup.hpp"

namespace tkhf {

struct SeifertArm {
    std::int64_t alpha;  // multiplicity, > 1
    std::int64_t omega;  // 0 < omega < alpha, coprime to alpha

    friend bool operator==(const SeifertArm&, const SeifertArm&) = default;
};

/// Sigma(e0, (alpha_1, omega_1), ..., (alpha_nu, omega_nu)) with e < 0.
class SeifertData {
public:
    /// Throws std::invalid_argument on malformed arms or e >= 0.
    SeifertData(std::int64_t e0, std::vector<SeifertArm> arms);

    std::int64_t e0() const noexcept { return e0_; }
    const std::vector<SeifertArm>& arms() const noexcept { return arms_; }
    std::int64_t arm_count() const noexcept { return static_cast<std::int64_t>(arms_.size()); }

    /// Orbifold Euler number e = e0 + sum omega_l / alpha_l.
    const Rational& e() const noexcept { return e_; }
    /// (2 - nu + sum 1/alpha_l) / e.
    const Rational& epsilon() const noexcept { return epsilon_; }
    /// alpha = prod alpha_l.
    std::int64_t alpha_product() const noexcept { return alpha_product_; }
    /// alpha / alpha_l, one per arm.
    const std::vector<std::int64_t>& alpha_hat() const noexcept { return alpha_hat_; }
    std::vector<std::int64_t> alphas() const;

    /// -1 = e0 * alpha + sum omega_l * alpha_hat_l.
    bool is_homology_sphere() const noexcept;

private:
    std::int64_t e0_;
    std::vector<SeifertArm> arms_;
    Rational e_;
    Rational epsilon_;
    std::int64_t alpha_product_ = 1;
    std::vector<std::int64_t> alpha_hat_;
};

/// Sigma with S^3_{+1}(T(p,q)) = -Sigma: e0 = -2 and arms (p, p'), (q, q'),
/// (pq - 1, pq - 2) where p' q = 1 mod p and p q' = 1 mod q.
SeifertData plus_one_surgery(const CoprimePair& pair);

int epsilon_arms(const SeifertData& sd, std::int64_t b);

/// K^2 + s = epsilon^2 e + e + 5 - 12 sum s(omega_l, alpha_l).
Rational k2_plus_s(const SeifertData& sd);

/// Delta_j = 1 - j e0 - sum ceil(j omega_l / alpha_l).
std::int64_t delta_j(const SeifertData& sd, std::int64_t j);

/// The same increment written with sawtooth functions:
///   sum ((j omega_l / alpha_l)) + 1 - nu/2 + j/alpha + epsilon_{alpha}(j)/2.
/// Only equal to delta_j for homology spheres.
Rational delta_j_sawtooth_form(const SeifertData& sd, std::int64_t j);

/// tau(m) = sum_{j<m} Delta_j by direct summation.
std::int64_t tau_bruteforce(const SeifertData& sd, std::int64_t m);

/// tau(values[k]) for a sorted list of arguments, in one pass of direct
/// summation up to the last one.
std::vector<std::int64_t> tau_bruteforce_at(const SeifertData& sd, const std::vector<std::int64_t>& sorted_args);

/// tau(m) from the closed form built on the decomposition
/// m = d(m) alpha + sum a_l alpha_hat_l with 0 <= a_l < alpha_l.
/// Throws std::invalid_argument if sd is not a homology sphere or m < 0.
std::int64_t tau_compact(const SeifertData& sd, std::int64_t m);

/// Variant of the closed form written with ((m omega_l / alpha_l)) instead
/// of d(m). Same preconditions.
std::int64_t tau_compact_omega_form(const SeifertData& sd, std::int64_t m);

/// Extrema of a tau function. Positions are empty when only values are
/// known (the -1 surgery profile).
struct TauProfile {
    std::int64_t delta = 0;
    std::vector<std::int64_t> minima_positions;
    std::vector<std::int64_t> minima_values;
    std::vector<std::int64_t> maxima_positions;
    std::vector<std::int64_t> maxima_values;
    std::int64_t global_min = 0;
    /// Always delta - 1: tau attains its global minimum at m_{delta-1} (it may
    /// attain it at other minima too).
    std::int64_t global_min_index = 0;
    /// m_{global_min_index}, or -1 when positions are unknown.
    std::int64_t global_min_position = -1;

    /// Corner values m_0, M_0, m_1, M_1, ..., m_last.
    std::vector<std::int64_t> corners() const;

    friend bool operator==(const TauProfile&, const TauProfile&) = default;
};

/// Extrema of tau for +1 surgery: minima at m_n = n(pq - 1), 0 <= n <= 2 delta - 2,
/// maxima at M_n = n pq + 1, 0 <= n <= 2 delta - 3. Values come from the
/// semigroup recurrences seeded with tau(0) = 0.
TauProfile tau_profile(const CoprimePair& pair);
TauProfile tau_profile(const SemigroupData& sd);

/// Same extrema positions, values by direct summation of Delta_j over the
/// Seifert data. O(delta * pq).
TauProfile tau_profile_bruteforce(const CoprimePair& pair);

/// d(S^3_1(T(p,q))) = -((K^2+s)/4 - 2 tau(m_{delta-1})) with K^2+s from the
/// Seifert data and tau from the compact formula.
std::int64_t d_via_tau(const CoprimePair& pair);

/// d(S^3_1(T(p,q))) from the closed expression in generalized Dedekind sums.
std::int64_t d_via_dedekind(const CoprimePair& pair);
/// The same expression before the integrality check.
Rational d_via_dedekind_exact(const CoprimePair& pair);

}  // namespace tkhf
