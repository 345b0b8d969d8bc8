#pragma once

// The numerical semigroup <p, q>, its gaps, the suffix gap counts alpha_i and
// the Alexander polynomial of the torus knot T(p, q) derived from it.

#include <cstdint>
#include <span>
#include <vector>

namespace tkhf {

/// Coprime integers 2 <= p < q. The constructor accepts either order.
class CoprimePair {
public:
    /// Throws std::invalid_argument if either entry is < 2, they are equal,
    /// or they are not coprime.
    CoprimePair(std::int64_t a, std::int64_t b);

    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }
    std::int64_t product() const noexcept { return p_ * q_; }
    /// (p-1)(q-1)/2, the number of gaps.
    std::int64_t delta() const noexcept { return (p_ - 1) * (q_ - 1) / 2; }

    friend bool operator==(const CoprimePair&, const CoprimePair&) = default;

private:
    std::int64_t p_;
    std::int64_t q_;
};

/// The semigroup S generated by p and q (with 0), materialized up to the
/// conductor 2*delta.
class SemigroupData {
public:
    explicit SemigroupData(CoprimePair pair);

    const CoprimePair& pair() const noexcept { return pair_; }
    std::int64_t delta() const noexcept { return delta_; }
    /// Sorted gaps, i.e. N \ S. Size delta, largest element 2*delta - 1.
    std::span<const std::int64_t> gaps() const noexcept { return gaps_; }
    /// alpha_0 .. alpha_{2 delta - 2}, alpha_i = #{gaps > i}.
    std::span<const std::int64_t> alpha() const noexcept { return alpha_; }

    /// alpha_i for any integer i: delta for i < 0 and 0 past 2*delta - 2.
    std::int64_t alpha_at(std::int64_t i) const noexcept;

    bool contains(std::int64_t s) const noexcept;

private:
    CoprimePair pair_;
    std::int64_t delta_;
    std::vector<bool> in_semigroup_;  // indices [0, 2*delta)
    std::vector<std::int64_t> gaps_;
    std::vector<std::int64_t> alpha_;
};

SemigroupData build_semigroup(CoprimePair pair);

/// Unique representation a = coeff_p * p + coeff_q * q - carry * p * q with
/// 0 <= coeff_p < q, 0 <= coeff_q < p. carry == 0 exactly when a is in S.
struct MembershipWitness {
    std::int64_t coeff_p;
    std::int64_t coeff_q;
    int carry;

    friend bool operator==(const MembershipWitness&, const MembershipWitness&) = default;
};

/// Throws std::out_of_range unless 0 <= a < pq.
MembershipWitness membership(const SemigroupData& sd, std::int64_t a);

/// #{s not in S : s >= a}.
std::int64_t count_gaps_ge(const SemigroupData& sd, std::int64_t a);

/// Alexander polynomial Delta(t) = (1 - t) * sum_{s in S} t^s and the data
/// read off from it.
struct AlexanderData {
    std::int64_t delta = 0;
    /// Coefficients of Delta(t), degree 0 .. 2*delta.
    std::vector<std::int64_t> coefficients;
    /// a_0 .. a_delta with Delta#(t) = a_0 + sum_j a_j (t^j + t^-j).
    std::vector<std::int64_t> symmetric;
    /// Q(t) from Delta(t) = 1 + delta (t - 1) + (t - 1)^2 Q(t), degree 2*delta - 2.
    std::vector<std::int64_t> q_coefficients;
    /// (Delta#)''(1), evaluated termwise on the symmetric polynomial.
    std::int64_t second_derivative_at_1 = 0;

    std::int64_t q_at_1() const noexcept;
};

/// Builds Delta(t) from the semigroup indicator and divides out (t - 1)^2 to
/// obtain Q(t). Throws std::logic_error if the division leaves a remainder.
AlexanderData alexander(const SemigroupData& sd);

/// All coprime 2 <= p < q with p <= p_max and q <= q_max, ordered by p then q.
std::vector<CoprimePair> coprime_pairs(std::int64_t p_max, std::int64_t q_max);

}  // namespace tkhf
