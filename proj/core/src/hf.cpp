#include "tkhf/hf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tkhf {

std::string_view to_string(Surgery s) { return s == Surgery::plus_one ? "plus" : "minus"; }

Surgery parse_surgery(std::string_view text) {
    if (text == "plus" || text == "+1") return Surgery::plus_one;
    if (text == "minus" || text == "-1") return Surgery::minus_one;
    throw std::invalid_argument("unknown surgery '" + std::string(text) + "'");
}

std::vector<HFTower> canonicalize_towers(std::vector<HFTower> towers) {
    const auto key_less = [](const HFTower& a, const HFTower& b) {
        if (a.grading != b.grading) return a.grading < b.grading;
        if (a.is_infinite() != b.is_infinite()) return b.is_infinite();
        return a.length.value_or(0) < b.length.value_or(0);
    };
    std::stable_sort(towers.begin(), towers.end(), key_less);
    std::vector<HFTower> merged;
    for (const auto& t : towers) {
        if (!merged.empty() && merged.back().grading == t.grading && merged.back().length == t.length) {
            merged.back().multiplicity += t.multiplicity;
        } else {
            merged.push_back(t);
        }
    }
    return merged;
}

std::int64_t HFDecomposition::finite_rank() const noexcept {
    std::int64_t rank = 0;
    for (const auto& t : towers) {
        if (!t.is_infinite()) rank += *t.length * t.multiplicity;
    }
    return rank;
}

std::int64_t HFDecomposition::infinite_tower_count() const noexcept {
    std::int64_t count = 0;
    for (const auto& t : towers) {
        if (t.is_infinite()) count += t.multiplicity;
    }
    return count;
}

namespace {

HFTower finite_tower(std::int64_t grading, std::int64_t length, std::int64_t multiplicity) {
    if (length <= 0) {
        throw std::logic_error("tower T_" + std::to_string(grading) + " with non-positive length " +
                               std::to_string(length));
    }
    return HFTower{grading, length, multiplicity};
}

}  // namespace

HFDecomposition hf_plus_one(const SemigroupData& sd, const AlexanderData& alex) {
    const std::int64_t delta = sd.delta();
    HFDecomposition out;
    out.surgery = Surgery::plus_one;
    out.pair = sd.pair();
    out.d = -2 * sd.alpha_at(delta - 1);

    std::vector<HFTower> towers{HFTower{out.d, std::nullopt, 1}};
    for (std::int64_t k = 0; k <= delta - 2; ++k) {
        const std::int64_t a = sd.alpha_at(delta + k);
        towers.push_back(finite_tower(k * (k + 1) - 2 * a, a, 2));
    }
    out.towers = canonicalize_towers(std::move(towers));
    out.casson = alex.second_derivative_at_1 / 2;
    out.rank_reduced = out.casson - sd.alpha_at(delta - 1);
    return out;
}

HFDecomposition hf_plus_one(const CoprimePair& pair) {
    const SemigroupData sd = build_semigroup(pair);
    return hf_plus_one(sd, alexander(sd));
}

HFDecomposition hf_minus_one(const SemigroupData& sd, const AlexanderData& alex) {
    const std::int64_t delta = sd.delta();
    HFDecomposition out;
    out.surgery = Surgery::minus_one;
    out.pair = sd.pair();
    out.d = 0;

    std::vector<HFTower> towers{HFTower{0, std::nullopt, 1}, finite_tower(0, sd.alpha_at(delta - 1), 1)};
    for (std::int64_t k = 0; k <= delta - 2; ++k) {
        towers.push_back(finite_tower((k + 1) * (k + 2), sd.alpha_at(delta + k), 2));
    }
    out.towers = canonicalize_towers(std::move(towers));
    out.rank_reduced = alex.q_at_1() - delta * (delta - 1) / 2;
    out.casson = alex.second_derivative_at_1 / 2;
    return out;
}

HFDecomposition hf_minus_one(const CoprimePair& pair) {
    const SemigroupData sd = build_semigroup(pair);
    return hf_minus_one(sd, alexander(sd));
}

std::int64_t minus_one_k2_plus_s(std::int64_t delta) { return -4 * delta * (delta - 1); }

TauProfile tau_minus_one_profile(const SemigroupData& sd) {
    const std::int64_t delta = sd.delta();
    TauProfile profile;
    profile.delta = delta;
    for (std::int64_t n = 0; n <= 2 * delta - 1; ++n) profile.minima_values.push_back(n * (n - 2 * delta + 1) / 2);
    for (std::int64_t n = 0; n <= 2 * delta - 2; ++n) {
        profile.maxima_values.push_back(profile.minima_values[static_cast<std::size_t>(n)] +
                                        sd.alpha_at(2 * delta - 2 - n));
    }
    profile.global_min_index = delta - 1;
    profile.global_min = profile.minima_values[static_cast<std::size_t>(delta - 1)];
    profile.global_min_position = -1;
    return profile;
}

TauProfile tau_minus_one_profile(const CoprimePair& pair) { return tau_minus_one_profile(build_semigroup(pair)); }

std::vector<HFTower> towers_from_corners(std::span<const std::int64_t> corners, const Rational& k2_plus_s) {
    if (corners.empty() || corners.size() % 2 == 0) {
        throw std::invalid_argument("corner sequence must alternate min, max, ..., min");
    }
    const std::size_t minima = corners.size() / 2 + 1;
    const auto min_value = [&](std::size_t n) { return corners[2 * n]; };
    const auto max_value = [&](std::size_t n) { return corners[2 * n + 1]; };
    for (std::size_t n = 0; n + 1 < minima; ++n) {
        if (max_value(n) < min_value(n) || max_value(n) < min_value(n + 1)) {
            throw std::invalid_argument("corner sequence is not a sawtooth");
        }
    }

    const Rational shift = k2_plus_s / Rational(4);
    const auto grading_of = [&](std::int64_t tau) { return (Rational(2 * tau) - shift).to_int64(); };

    // Sublevel-set merge tree: barriers are processed from lowest to highest,
    // and at each merge the younger component (higher minimum; rightmost on
    // ties) dies at the barrier height.
    std::vector<std::size_t> parent(minima);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::vector<std::size_t> root_min(minima);
    std::iota(root_min.begin(), root_min.end(), std::size_t{0});
    const auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    std::vector<std::size_t> barriers(minima - 1);
    std::iota(barriers.begin(), barriers.end(), std::size_t{0});
    std::stable_sort(barriers.begin(), barriers.end(),
                     [&](std::size_t a, std::size_t b) { return max_value(a) < max_value(b); });

    std::vector<HFTower> towers;
    for (const std::size_t b : barriers) {
        const std::size_t left = find(b);
        const std::size_t right = find(b + 1);
        const std::size_t left_min = root_min[left];
        const std::size_t right_min = root_min[right];
        const bool left_elder = min_value(left_min) <= min_value(right_min);
        const std::size_t young = left_elder ? right_min : left_min;
        const std::int64_t length = max_value(b) - min_value(young);
        if (length > 0) towers.push_back(HFTower{grading_of(min_value(young)), length, 1});
        const std::size_t elder_root = left_elder ? left : right;
        const std::size_t young_root = left_elder ? right : left;
        parent[young_root] = elder_root;
    }
    const std::size_t survivor = root_min[find(0)];
    towers.push_back(HFTower{grading_of(min_value(survivor)), std::nullopt, 1});
    return canonicalize_towers(std::move(towers));
}

HFDecomposition hf_from_profile(Surgery surgery, const CoprimePair& pair, const TauProfile& profile,
                                const Rational& k2_plus_s) {
    HFDecomposition out;
    out.surgery = surgery;
    out.pair = pair;
    const auto corners = profile.corners();
    out.towers = towers_from_corners(corners, k2_plus_s);
    for (const auto& t : out.towers) {
        if (t.is_infinite()) out.d = t.grading;
    }
    out.rank_reduced = out.finite_rank();
    out.casson = out.rank_reduced - out.d / 2;
    return out;
}

SawtoothDiagram sawtooth_from_sequence(std::span<const std::int64_t> betas) {
    for (std::size_t i = 0; i < betas.size(); ++i) {
        if (betas[i] < 1) throw std::invalid_argument("sawtooth sequence entries must be positive");
        if (i > 0 && betas[i] > betas[i - 1]) throw std::invalid_argument("sawtooth sequence must be non-increasing");
    }
    SawtoothDiagram diagram;
    diagram.betas.assign(betas.begin(), betas.end());
    diagram.corners.push_back(0);
    std::int64_t value = 0;
    const std::size_t count = betas.size();
    for (std::size_t i = 0; i < count; ++i) {
        value += betas[count - 1 - i];
        diagram.corners.push_back(value);
        value -= betas[i];
        diagram.corners.push_back(value);
    }
    return diagram;
}

namespace {

std::string format_sequence(const std::vector<std::int64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

DualityReport duality_check(const CoprimePair& pair, ProfileRoute route) {
    const SemigroupData sd = build_semigroup(pair);
    const auto alpha = sd.alpha();

    DualityReport report;
    report.pair = pair;
    report.minus_diagram = sawtooth_from_sequence(alpha);
    report.plus_diagram = sawtooth_from_sequence(alpha.subspan(1));
    report.minus_tau_corners = tau_minus_one_profile(sd).corners();
    report.plus_tau_corners =
        (route == ProfileRoute::recurrence ? tau_profile(sd) : tau_profile_bruteforce(pair)).corners();

    const auto label = "T(" + std::to_string(pair.p()) + "," + std::to_string(pair.q()) + ")";
    if (report.minus_diagram.corners != report.minus_tau_corners) {
        throw VerificationError("-1 surgery on " + label + ": tau extrema " +
                                format_sequence(report.minus_tau_corners) + " differ from sawtooth " +
                                format_sequence(report.minus_diagram.corners));
    }
    if (report.plus_diagram.corners != report.plus_tau_corners) {
        throw VerificationError("+1 surgery on " + label + ": tau extrema " + format_sequence(report.plus_tau_corners) +
                                " differ from sawtooth " + format_sequence(report.plus_diagram.corners));
    }
    return report;
}

}  // namespace tkhf
