#pragma once

// Spectrum of x^p + y^q, Levine-Tristram signatures of T(p, q) at a/pq, the
// spectrum/semigroup gap identities, and the inequality suite relating d, the
// signature and the four-genus.

#include <cstdint>
#include <string>
#include <vector>

#include "tkhf/rational.hpp"
#include "tkhf/semigroup.hpp"

namespace tkhf {

/// Sp = { i/p + j/q : 1 <= i < p, 1 <= j < q }, stored as sorted numerators
/// over the common denominator pq (element = numerators[k] / pq).
class SpectrumData {
public:
    explicit SpectrumData(CoprimePair pair);

    const CoprimePair& pair() const noexcept { return pair_; }
    const std::vector<std::int64_t>& numerators() const noexcept { return numerators_; }
    std::size_t size() const noexcept { return numerators_.size(); }
    Rational element(std::size_t k) const;

    /// Whether numerator / pq belongs to Sp.
    bool contains_numerator(std::int64_t numerator) const;
    /// #{ x in Sp : lo/pq <= x < hi/pq }, i.e. count over numerators in [lo, hi).
    std::int64_t count_in(std::int64_t lo, std::int64_t hi) const;

private:
    CoprimePair pair_;
    std::vector<std::int64_t> numerators_;
};

SpectrumData spectrum(const CoprimePair& pair);

/// sigma(a/pq) together with the interval counts S_i = #(Sp cap I_i) for
/// I1 = (0, a/pq], I2 = (a/pq, 1), I3 = (1, 1 + a/pq), I4 = [1 + a/pq, 2).
struct SignatureReport {
    std::int64_t a = 0;
    std::int64_t sigma = 0;
    std::int64_t s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    /// #(Sp cap {a/pq, 1 + a/pq}).
    std::int64_t boundary_hits = 0;
    Rational tilde_c;
};

/// Throws std::out_of_range unless 0 <= a < pq.
SignatureReport levine_tristram(const SpectrumData& sp, std::int64_t a);
SignatureReport levine_tristram(const CoprimePair& pair, std::int64_t a);

/// 1/2 if 1 + a/pq is in Sp, -1/2 if a/pq is, else 0.
Rational tilde_c(const SpectrumData& sp, std::int64_t a);
Rational tilde_c(const CoprimePair& pair, std::int64_t a);

/// Three evaluations of #{s not in S : s >= a}.
struct GapCountIdentity {
    std::int64_t a = 0;
    std::int64_t gap_count = 0;          // from the semigroup
    std::int64_t spectrum_count = 0;     // #(Sp cap [1 + a/pq, 2))
    Rational signature_expression;       // delta + sigma/4 - (a - floor(a/p) - floor(a/q) - c~)/2
    bool holds = false;
};

GapCountIdentity gap_count_identity_check(const SemigroupData& sd, const SpectrumData& sp, std::int64_t a);
GapCountIdentity gap_count_identity_check(const CoprimePair& pair, std::int64_t a);

/// d(S^3_1(T(p,q))) = -delta - sigma(delta/pq)/2 - floor(delta/p) - floor(delta/q) - c~(delta).
std::int64_t d_via_signature(const CoprimePair& pair);
Rational d_via_signature_exact(const SpectrumData& sp);

/// mu_+ = 2 #(Sp cap [3/2, 2)).
std::int64_t mu_plus(const SpectrumData& sp);
std::int64_t mu_plus(const CoprimePair& pair);

/// Classical signature mu_+ - mu_-, with mu_- = 2 delta - mu_+.
std::int64_t classical_signature(const SpectrumData& sp);

struct InequalityCheck {
    std::string name;
    bool holds = false;
    std::string detail;
};

struct InequalityReport {
    CoprimePair pair{2, 3};
    std::int64_t delta = 0;
    std::int64_t minus_d = 0;
    std::int64_t sigma = 0;
    std::int64_t mu_plus = 0;
    std::int64_t gaps_from_delta = 0;  // #{s not in S : s >= delta}
    /// Inequalities that must hold for every pair.
    std::vector<InequalityCheck> checks;
    /// Equality cases and the alternating-knot comparison; informative only.
    std::vector<InequalityCheck> observations;

    bool all_hold() const noexcept;
    /// Looks up a check or observation by name; throws std::out_of_range.
    bool flag(const std::string& name) const;
};

InequalityReport inequality_suite(const CoprimePair& pair);

}  // namespace tkhf
