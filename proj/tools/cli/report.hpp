#pragma once

// Per-pair invariant report assembled from every core module, with JSON
// serialization and the cross-checks the CLI turns into exit codes.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "tkhf/hf.hpp"
#include "tkhf/rational.hpp"
#include "tkhf/semigroup.hpp"
#include "tkhf/seifert.hpp"

namespace tkhf::cli {

struct InvariantReport {
    CoprimePair pair{2, 3};
    std::int64_t delta = 0;
    std::vector<std::int64_t> gaps;
    std::vector<std::int64_t> alpha;
    std::vector<std::int64_t> alexander;

    std::int64_t d = 0;
    /// Keyed by route: "dedekind", "gap_count", "signature", "tau".
    std::map<std::string, std::int64_t> d_routes;

    HFDecomposition hf_plus;
    HFDecomposition hf_minus;
    std::int64_t casson_plus = 0;
    std::int64_t casson_minus = 0;

    std::int64_t sigma_classical = 0;
    std::int64_t mu_plus = 0;
    std::int64_t mu_minus = 0;

    /// Orbifold Euler number and K^2+s of the +1 surgery Seifert data.
    Rational seifert_e;
    Rational k2_plus_s_plus;
    Rational k2_plus_s_minus;

    TauProfile tau_plus;
    TauProfile tau_minus;

    std::map<std::string, bool> inequality_checks;
    std::map<std::string, bool> inequality_observations;

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Runs every module on the pair. Does not throw on disagreement; see
/// cross_check.
InvariantReport build_report(const CoprimePair& pair);

/// Human-readable descriptions of every failed consistency check: the four
/// d routes, the tower decompositions rebuilt from the tau extrema, and the
/// inequality checks. Empty when the report is consistent.
std::vector<std::string> cross_check(const InvariantReport& report);

nlohmann::ordered_json to_json(const InvariantReport& report);
/// Throws nlohmann::json::exception or std::invalid_argument on malformed input.
InvariantReport report_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const HFTower& tower);
nlohmann::ordered_json to_json(const HFDecomposition& hf);
nlohmann::ordered_json to_json(const TauProfile& profile);

std::string tower_label(const HFTower& tower);

}  // namespace tkhf::cli
