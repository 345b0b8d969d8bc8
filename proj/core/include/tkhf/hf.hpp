#pragma once

// HF^+ of the +1 and -1 surgeries on T(p, q) as direct sums of Z[U]-towers,
// the Casson invariant, and the sawtooth diagrams relating the tau functions
// of the two surgeries.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tkhf/rational.hpp"
#include "tkhf/semigroup.hpp"
#include "tkhf/seifert.hpp"

namespace tkhf {

/// Raised when two independent computations of the same invariant disagree.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Surgery { plus_one, minus_one };

std::string_view to_string(Surgery s);
/// Accepts "plus"/"+1" and "minus"/"-1". Throws std::invalid_argument.
Surgery parse_surgery(std::string_view text);

/// T^+_x (length == nullopt) or T_x(n), repeated `multiplicity` times.
/// `grading` is the degree of the bottom element.
struct HFTower {
    std::int64_t grading = 0;
    std::optional<std::int64_t> length;
    std::int64_t multiplicity = 1;

    bool is_infinite() const noexcept { return !length.has_value(); }

    friend bool operator==(const HFTower&, const HFTower&) = default;
};

/// Sorts by (grading, length) with T^+ after finite towers of equal grading
/// and merges entries that differ only in multiplicity.
std::vector<HFTower> canonicalize_towers(std::vector<HFTower> towers);

struct HFDecomposition {
    Surgery surgery = Surgery::plus_one;
    CoprimePair pair{2, 3};
    std::int64_t d = 0;
    std::vector<HFTower> towers;  // canonical order
    std::int64_t rank_reduced = 0;
    std::int64_t casson = 0;

    /// sum of length * multiplicity over finite towers.
    std::int64_t finite_rank() const noexcept;
    std::int64_t infinite_tower_count() const noexcept;

    friend bool operator==(const HFDecomposition&, const HFDecomposition&) = default;
};

/// HF^+(S^3_1(T(p,q))): T^+_d with d = -2 alpha_{delta-1} and, for
/// k = 0..delta-2, two copies of T_{k(k+1) - 2 alpha_{delta+k}}(alpha_{delta+k}).
HFDecomposition hf_plus_one(const CoprimePair& pair);
HFDecomposition hf_plus_one(const SemigroupData& sd, const AlexanderData& alex);

/// HF^+(-S^3_{-1}(T(p,q))): T^+_0, T_0(alpha_{delta-1}) and, for
/// k = 0..delta-2, two copies of T_{(k+1)(k+2)}(alpha_{delta+k}).
HFDecomposition hf_minus_one(const CoprimePair& pair);
HFDecomposition hf_minus_one(const SemigroupData& sd, const AlexanderData& alex);

/// K^2 + s of S^3_{-1}(T(p,q)), i.e. -4 delta (delta - 1).
std::int64_t minus_one_k2_plus_s(std::int64_t delta);

/// Extrema values of the tau function of S^3_{-1}(T(p,q)): minima
/// n(n - 2 delta + 1)/2 for 0 <= n <= 2 delta - 1 and maxima
/// tau(m_n) + alpha_{2 delta - 2 - n}. Positions are left empty.
TauProfile tau_minus_one_profile(const CoprimePair& pair);
TauProfile tau_minus_one_profile(const SemigroupData& sd);

/// Towers read off a sawtooth tau function given by its corner values
/// (minimum, maximum, ..., minimum). Each local minimum other than the
/// surviving global one is paired with the barrier at which its sublevel
/// component merges into an older (lower) one; it contributes
/// T_{2 tau(m) - (K^2+s)/4}(barrier - tau(m)). The survivor gives T^+.
std::vector<HFTower> towers_from_corners(std::span<const std::int64_t> corners, const Rational& k2_plus_s);

/// Rebuilds an HFDecomposition from a tau profile by towers_from_corners.
HFDecomposition hf_from_profile(Surgery surgery, const CoprimePair& pair, const TauProfile& profile,
                                const Rational& k2_plus_s);

struct SawtoothDiagram {
    std::vector<std::int64_t> betas;
    /// 2 * betas.size() + 1 corner values; {0} for an empty sequence.
    std::vector<std::int64_t> corners;
};

/// Starting at 0, step i rises by beta_{v-i} then falls by beta_i.
/// Throws std::invalid_argument unless betas is non-increasing and >= 1.
SawtoothDiagram sawtooth_from_sequence(std::span<const std::int64_t> betas);

enum class ProfileRoute {
    recurrence,  // semigroup recurrences, O(delta)
    bruteforce,  // direct summation over the Seifert data, O(delta * pq)
};

struct DualityReport {
    CoprimePair pair{2, 3};
    SawtoothDiagram plus_diagram;   // from alpha_1 .. alpha_{2 delta - 2}
    SawtoothDiagram minus_diagram;  // from alpha_0 .. alpha_{2 delta - 2}
    std::vector<std::int64_t> plus_tau_corners;
    std::vector<std::int64_t> minus_tau_corners;
};

/// Matches the tau extrema of both surgeries against the sawtooth diagrams
/// of the alpha sequence with and without alpha_0. Throws VerificationError
/// on any mismatch.
DualityReport duality_check(const CoprimePair& pair, ProfileRoute route = ProfileRoute::recurrence);

}  // namespace tkhf
