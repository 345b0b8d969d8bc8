#include "report.hpp"

#include <stdexcept>

#include "tkhf/signature.hpp"

namespace tkhf::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::vector<std::int64_t> to_vector(std::span<const std::int64_t> s) { return {s.begin(), s.end()}; }

HFTower tower_from_json(const nlohmann::json& j) {
    HFTower t;
    t.grading = j.at("grading").get<std::int64_t>();
    const auto& length = j.at("length");
    if (length.is_string()) {
        if (length.get<std::string>() != "infinite") throw std::invalid_argument("tower length must be a number or \"infinite\"");
    } else {
        t.length = length.get<std::int64_t>();
    }
    t.multiplicity = j.at("multiplicity").get<std::int64_t>();
    return t;
}

HFDecomposition hf_from_json(const nlohmann::json& j, const CoprimePair& pair) {
    HFDecomposition hf;
    hf.surgery = parse_surgery(j.at("surgery").get<std::string>());
    hf.pair = pair;
    hf.d = j.at("d").get<std::int64_t>();
    for (const auto& t : j.at("towers")) hf.towers.push_back(tower_from_json(t));
    hf.rank_reduced = j.at("rank_reduced").get<std::int64_t>();
    hf.casson = j.at("casson").get<std::int64_t>();
    return hf;
}

TauProfile tau_from_json(const nlohmann::json& j) {
    TauProfile t;
    t.delta = j.at("delta").get<std::int64_t>();
    t.minima_positions = j.at("minima_positions").get<std::vector<std::int64_t>>();
    t.minima_values = j.at("minima_values").get<std::vector<std::int64_t>>();
    t.maxima_positions = j.at("maxima_positions").get<std::vector<std::int64_t>>();
    t.maxima_values = j.at("maxima_values").get<std::vector<std::int64_t>>();
    t.global_min = j.at("global_min").get<std::int64_t>();
    t.global_min_index = j.at("global_min_index").get<std::int64_t>();
    const auto& pos = j.at("global_min_position");
    t.global_min_position = pos.is_null() ? -1 : pos.get<std::int64_t>();
    return t;
}

std::map<std::string, bool> flags(const std::vector<InequalityCheck>& checks) {
    std::map<std::string, bool> out;
    for (const auto& c : checks) out[c.name] = c.holds;
    return out;
}

}  // namespace

InvariantReport build_report(const CoprimePair& pair) {
    const SemigroupData sd = build_semigroup(pair);
    const AlexanderData alex = alexander(sd);
    const SeifertData seifert = plus_one_surgery(pair);

    InvariantReport r;
    r.pair = pair;
    r.delta = pair.delta();
    r.gaps = to_vector(sd.gaps());
    r.alpha = to_vector(sd.alpha());
    r.alexander = alex.coefficients;

    r.d_routes["dedekind"] = d_via_dedekind(pair);
    r.d_routes["gap_count"] = -2 * count_gaps_ge(sd, pair.delta());
    r.d_routes["signature"] = d_via_signature(pair);
    r.d_routes["tau"] = d_via_tau(pair);
    r.d = r.d_routes["gap_count"];

    r.hf_plus = hf_plus_one(sd, alex);
    r.hf_minus = hf_minus_one(sd, alex);
    r.casson_plus = r.hf_plus.casson;
    r.casson_minus = r.hf_minus.casson;

    const SpectrumData sp = spectrum(pair);
    r.mu_plus = mu_plus(sp);
    r.mu_minus = 2 * pair.delta() - r.mu_plus;
    r.sigma_classical = classical_signature(sp);

    r.seifert_e = seifert.e();
    r.k2_plus_s_plus = k2_plus_s(seifert);
    r.k2_plus_s_minus = Rational(minus_one_k2_plus_s(pair.delta()));

    r.tau_plus = tau_profile(sd);
    r.tau_minus = tau_minus_one_profile(sd);

    const InequalityReport ineq = inequality_suite(pair);
    r.inequality_checks = flags(ineq.checks);
    r.inequality_observations = flags(ineq.observations);
    return r;
}

std::vector<std::string> cross_check(const InvariantReport& r) {
    std::vector<std::string> failures;
    for (const auto& [route, value] : r.d_routes) {
        if (value != r.d) {
            failures.push_back("d route " + route + " = " + std::to_string(value) + " differs from d = " + std::to_string(r.d));
        }
    }
    if (r.hf_plus.d != r.d) failures.push_back("HF+ of +1 surgery has d = " + std::to_string(r.hf_plus.d));

    const auto rebuilt_plus = hf_from_profile(Surgery::plus_one, r.pair, r.tau_plus, r.k2_plus_s_plus);
    if (rebuilt_plus != r.hf_plus) failures.push_back("+1 surgery towers differ from those read off tau");
    const auto rebuilt_minus = hf_from_profile(Surgery::minus_one, r.pair, r.tau_minus, r.k2_plus_s_minus);
    if (rebuilt_minus != r.hf_minus) failures.push_back("-1 surgery towers differ from those read off tau");

    if (r.casson_plus != r.hf_plus.casson || r.casson_minus != r.hf_minus.casson || r.casson_plus != r.casson_minus) {
        failures.push_back("Casson invariants disagree");
    }
    if (r.hf_minus.rank_reduced != r.casson_minus) failures.push_back("-1 surgery reduced rank differs from Casson invariant");

    if (!r.alpha.empty()) {
        const std::span<const std::int64_t> all(r.alpha);
        if (sawtooth_from_sequence(all).corners != r.tau_minus.corners()) {
            failures.push_back("-1 surgery tau extrema differ from the sawtooth of alpha_0..");
        }
        if (sawtooth_from_sequence(all.subspan(1)).corners != r.tau_plus.corners()) {
            failures.push_back("+1 surgery tau extrema differ from the sawtooth of alpha_1..");
        }
    }
    for (const auto& [name, holds] : r.inequality_checks) {
        if (!holds) failures.push_back("inequality " + name + " fails");
    }
    return failures;
}

std::string tower_label(const HFTower& tower) {
    const std::string grading = "{" + std::to_string(tower.grading) + "}";
    const std::string mult = "^" + std::to_string(tower.multiplicity);
    if (tower.is_infinite()) return "T+_" + grading + mult;
    return "T_" + grading + "(" + std::to_string(*tower.length) + ")" + mult;
}

ojson to_json(const HFTower& tower) {
    ojson j;
    j["grading"] = tower.grading;
    if (tower.length) {
        j["length"] = *tower.length;
    } else {
        j["length"] = "infinite";
    }
    j["multiplicity"] = tower.multiplicity;
    return j;
}

ojson to_json(const HFDecomposition& hf) {
    ojson j;
    j["surgery"] = std::string(to_string(hf.surgery));
    j["d"] = hf.d;
    j["rank_reduced"] = hf.rank_reduced;
    j["casson"] = hf.casson;
    j["towers"] = ojson::array();
    for (const auto& t : hf.towers) j["towers"].push_back(to_json(t));
    return j;
}

ojson to_json(const TauProfile& profile) {
    ojson j;
    j["delta"] = profile.delta;
    j["minima_positions"] = profile.minima_positions;
    j["minima_values"] = profile.minima_values;
    j["maxima_positions"] = profile.maxima_positions;
    j["maxima_values"] = profile.maxima_values;
    j["global_min"] = profile.global_min;
    j["global_min_index"] = profile.global_min_index;
    if (profile.global_min_position >= 0) {
        j["global_min_position"] = profile.global_min_position;
    } else {
        j["global_min_position"] = nullptr;
    }
    return j;
}

ojson to_json(const InvariantReport& r) {
    ojson j;
    j["pair"] = {{"p", r.pair.p()}, {"q", r.pair.q()}};

    ojson inv;
    inv["delta"] = r.delta;
    inv["gaps"] = r.gaps;
    inv["alpha"] = r.alpha;
    inv["alexander"] = r.alexander;
    inv["d"] = r.d;
    inv["casson_plus"] = r.casson_plus;
    inv["casson_minus"] = r.casson_minus;
    inv["sigma"] = r.sigma_classical;
    inv["mu_plus"] = r.mu_plus;
    inv["mu_minus"] = r.mu_minus;
    inv["seifert_e"] = r.seifert_e.to_string();
    inv["k2_plus_s_plus"] = r.k2_plus_s_plus.to_string();
    inv["k2_plus_s_minus"] = r.k2_plus_s_minus.to_string();
    j["invariants"] = inv;

    ojson routes;
    for (const auto& [route, value] : r.d_routes) routes[route] = value;
    j["d_routes"] = routes;

    j["hf"] = {{"plus", to_json(r.hf_plus)}, {"minus", to_json(r.hf_minus)}};
    j["tau"] = {{"plus", to_json(r.tau_plus)}, {"minus", to_json(r.tau_minus)}};

    ojson ineq;
    ineq["checks"] = ojson::object();
    for (const auto& [name, holds] : r.inequality_checks) ineq["checks"][name] = holds;
    ineq["observations"] = ojson::object();
    for (const auto& [name, holds] : r.inequality_observations) ineq["observations"][name] = holds;
    j["inequalities"] = ineq;
    return j;
}

InvariantReport report_from_json(const nlohmann::json& j) {
    InvariantReport r;
    r.pair = CoprimePair(j.at("pair").at("p").get<std::int64_t>(), j.at("pair").at("q").get<std::int64_t>());

    const auto& inv = j.at("invariants");
    r.delta = inv.at("delta").get<std::int64_t>();
    r.gaps = inv.at("gaps").get<std::vector<std::int64_t>>();
    r.alpha = inv.at("alpha").get<std::vector<std::int64_t>>();
    r.alexander = inv.at("alexander").get<std::vector<std::int64_t>>();
    r.d = inv.at("d").get<std::int64_t>();
    r.casson_plus = inv.at("casson_plus").get<std::int64_t>();
    r.casson_minus = inv.at("casson_minus").get<std::int64_t>();
    r.sigma_classical = inv.at("sigma").get<std::int64_t>();
    r.mu_plus = inv.at("mu_plus").get<std::int64_t>();
    r.mu_minus = inv.at("mu_minus").get<std::int64_t>();
    r.seifert_e = Rational::parse(inv.at("seifert_e").get<std::string>());
    r.k2_plus_s_plus = Rational::parse(inv.at("k2_plus_s_plus").get<std::string>());
    r.k2_plus_s_minus = Rational::parse(inv.at("k2_plus_s_minus").get<std::string>());

    for (const auto& [route, value] : j.at("d_routes").items()) r.d_routes[route] = value.get<std::int64_t>();

    r.hf_plus = hf_from_json(j.at("hf").at("plus"), r.pair);
    r.hf_minus = hf_from_json(j.at("hf").at("minus"), r.pair);
    r.tau_plus = tau_from_json(j.at("tau").at("plus"));
    r.tau_minus = tau_from_json(j.at("tau").at("minus"));

    const auto& ineq = j.at("inequalities");
    for (const auto& [name, holds] : ineq.at("checks").items()) r.inequality_checks[name] = holds.get<bool>();
    for (const auto& [name, holds] : ineq.at("observations").items()) r.inequality_observations[name] = holds.get<bool>();
    return r;
}

}  // namespace tkhf::cli
