#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tkhf/batch.hpp"
#include "tkhf/numtheory.hpp"
#include "tkhf/signature.hpp"

namespace tkhf::cli {

namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    std::string names;
    for (const char* name : allowed) {
        if (format == name) return;
        names += names.empty() ? name : std::string("|") + name;
    }
    throw UsageError("unknown format '" + format + "', expected " + names);
}

std::int64_t checked_product(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw UsageError("bounds too large");
    return out;
}

void require_ceiling(std::int64_t product, std::int64_t ceiling) {
    if (ceiling < 1) throw UsageError("--max-product must be positive");
    if (product > ceiling) {
        throw UsageError("product " + std::to_string(product) + " exceeds the ceiling " + std::to_string(ceiling) +
                         "; raise it with --max-product");
    }
}

CoprimePair checked_pair(std::int64_t p, std::int64_t q, const std::optional<std::int64_t>& max_product) {
    const CoprimePair pair(p, q);
    require_ceiling(checked_product(pair.p(), pair.q()), max_product.value_or(default_compute_max_product));
    return pair;
}

void require_bounds(std::int64_t p_max, std::int64_t q_max) {
    if (p_max < 2 || q_max < 2) throw UsageError("bounds must be at least 2");
}

// Maps the exceptions of a subcommand to exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return exit_verification_failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_verification_failure;
    }
}

std::string join(const std::vector<std::int64_t>& values, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string towers_text(const HFDecomposition& hf) {
    std::string out;
    for (const auto& t : hf.towers) {
        if (!out.empty()) out += " + ";
        out += tower_label(t);
    }
    return out;
}

void write_text(const InvariantReport& r, std::ostream& out) {
    out << "T(" << r.pair.p() << "," << r.pair.q() << ")  delta = " << r.delta << "\n";
    out << "gaps: " << join(r.gaps, " ") << "\n";
    out << "alpha: " << join(r.alpha, " ") << "\n";
    out << "d = " << r.d << " (";
    bool first = true;
    for (const auto& [route, value] : r.d_routes) {
        out << (first ? "" : ", ") << route << " " << value;
        first = false;
    }
    out << ")\n";
    out << "sigma = " << r.sigma_classical << "  mu+ = " << r.mu_plus << "  mu- = " << r.mu_minus << "\n";
    out << "casson = " << r.casson_plus << "\n";
    out << "e = " << r.seifert_e << "  K^2+s (+1) = " << r.k2_plus_s_plus << "  K^2+s (-1) = " << r.k2_plus_s_minus
        << "\n";
    out << "HF+ (+1): " << towers_text(r.hf_plus) << "  rank_red = " << r.hf_plus.rank_reduced << "\n";
    out << "HF+ (-1): " << towers_text(r.hf_minus) << "  rank_red = " << r.hf_minus.rank_reduced << "\n";
    out << "tau corners (+1): " << join(r.tau_plus.corners(), " ") << "\n";
    out << "tau corners (-1): " << join(r.tau_minus.corners(), " ") << "\n";
    std::vector<std::string> failed;
    for (const auto& [name, holds] : r.inequality_checks) {
        if (!holds) failed.push_back(name);
    }
    out << "inequalities: ";
    if (failed.empty()) {
        out << "all " << r.inequality_checks.size() << " hold";
    } else {
        for (std::size_t i = 0; i < failed.size(); ++i) out << (i ? ", " : "failed ") << failed[i];
    }
    out << "\n";
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

using ColumnFn = std::function<ojson(const InvariantReport&)>;

ojson tower_labels(const HFDecomposition& hf) {
    ojson out = ojson::array();
    for (const auto& t : hf.towers) out.push_back(tower_label(t));
    return out;
}

const std::vector<std::pair<std::string, ColumnFn>>& column_registry() {
    static const std::vector<std::pair<std::string, ColumnFn>> registry = {
        {"p", [](const InvariantReport& r) { return ojson(r.pair.p()); }},
        {"q", [](const InvariantReport& r) { return ojson(r.pair.q()); }},
        {"delta", [](const InvariantReport& r) { return ojson(r.delta); }},
        {"d", [](const InvariantReport& r) { return ojson(r.d); }},
        {"d_dedekind", [](const InvariantReport& r) { return ojson(r.d_routes.at("dedekind")); }},
        {"d_gap_count", [](const InvariantReport& r) { return ojson(r.d_routes.at("gap_count")); }},
        {"d_signature", [](const InvariantReport& r) { return ojson(r.d_routes.at("signature")); }},
        {"d_tau", [](const InvariantReport& r) { return ojson(r.d_routes.at("tau")); }},
        {"sigma", [](const InvariantReport& r) { return ojson(r.sigma_classical); }},
        {"mu_plus", [](const InvariantReport& r) { return ojson(r.mu_plus); }},
        {"mu_minus", [](const InvariantReport& r) { return ojson(r.mu_minus); }},
        {"casson_plus", [](const InvariantReport& r) { return ojson(r.casson_plus); }},
        {"casson_minus", [](const InvariantReport& r) { return ojson(r.casson_minus); }},
        {"rank_reduced_plus", [](const InvariantReport& r) { return ojson(r.hf_plus.rank_reduced); }},
        {"rank_reduced_minus", [](const InvariantReport& r) { return ojson(r.hf_minus.rank_reduced); }},
        {"seifert_e", [](const InvariantReport& r) { return ojson(r.seifert_e.to_string()); }},
        {"k2_plus_s_plus", [](const InvariantReport& r) { return ojson(r.k2_plus_s_plus.to_string()); }},
        {"k2_plus_s_minus", [](const InvariantReport& r) { return ojson(r.k2_plus_s_minus.to_string()); }},
        {"gaps", [](const InvariantReport& r) { return ojson(r.gaps); }},
        {"alpha", [](const InvariantReport& r) { return ojson(r.alpha); }},
        {"alexander", [](const InvariantReport& r) { return ojson(r.alexander); }},
        {"hf_plus", [](const InvariantReport& r) { return tower_labels(r.hf_plus); }},
        {"hf_minus", [](const InvariantReport& r) { return tower_labels(r.hf_minus); }},
        {"tau_plus_corners", [](const InvariantReport& r) { return ojson(r.tau_plus.corners()); }},
        {"tau_minus_corners", [](const InvariantReport& r) { return ojson(r.tau_minus.corners()); }},
        {"tau_plus_min", [](const InvariantReport& r) { return ojson(r.tau_plus.global_min); }},
        {"tau_minus_min", [](const InvariantReport& r) { return ojson(r.tau_minus.global_min); }},
        {"inequalities_hold",
         [](const InvariantReport& r) {
             return ojson(std::all_of(r.inequality_checks.begin(), r.inequality_checks.end(),
                                      [](const auto& kv) { return kv.second; }));
         }},
    };
    return registry;
}

const ColumnFn& find_column(const std::string& name) {
    for (const auto& [col, fn] : column_registry()) {
        if (col == name) return fn;
    }
    std::string known;
    for (const auto& [col, fn] : column_registry()) known += (known.empty() ? "" : ", ") + col;
    throw UsageError("unknown column '" + name + "' (known: " + known + ")");
}

std::string csv_cell(const ojson& value) {
    if (value.is_string()) return csv_field(value.get<std::string>());
    if (value.is_array()) {
        std::string joined;
        for (std::size_t i = 0; i < value.size(); ++i) {
            if (i) joined += ",";
            joined += value[i].is_string() ? value[i].get<std::string>() : value[i].dump();
        }
        return csv_field(joined);
    }
    return value.dump();
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct Tally {
    std::int64_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::function<std::string()>& message) {
        ++checks;
        if (!ok) failures.push_back(message());
    }
    void merge(const Tally& other) {
        checks += other.checks;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

std::string tag(const CoprimePair& pair) {
    return "(" + std::to_string(pair.p()) + "," + std::to_string(pair.q()) + ")";
}

Tally suite_d_agreement(const CoprimePair& pair) {
    Tally t;
    const std::int64_t gap = -2 * count_gaps_ge(build_semigroup(pair), pair.delta());
    const std::int64_t tau = d_via_tau(pair);
    const std::int64_t ded = d_via_dedekind(pair);
    const std::int64_t sig = d_via_signature(pair);
    t.expect(tau == gap, [&] { return tag(pair) + " d_via_tau " + std::to_string(tau) + " != " + std::to_string(gap); });
    t.expect(ded == gap,
             [&] { return tag(pair) + " d_via_dedekind " + std::to_string(ded) + " != " + std::to_string(gap); });
    t.expect(sig == gap,
             [&] { return tag(pair) + " d_via_signature " + std::to_string(sig) + " != " + std::to_string(gap); });
    return t;
}

Tally suite_tau_oracle(const CoprimePair& pair) {
    Tally t;
    const SeifertData sd = plus_one_surgery(pair);
    const std::int64_t m_max = 2 * pair.delta() * pair.product();
    std::int64_t tau = 0;
    for (std::int64_t m = 0; m <= m_max; ++m) {
        const std::int64_t compact = tau_compact(sd, m);
        t.expect(compact == tau, [&] {
            return tag(pair) + " tau(" + std::to_string(m) + "): compact " + std::to_string(compact) +
                   " != brute force " + std::to_string(tau);
        });
        tau += delta_j(sd, m);
    }
    return t;
}

Tally suite_extrema(const CoprimePair& pair) {
    Tally t;
    const TauProfile fast = tau_profile(pair);
    const TauProfile brute = tau_profile_bruteforce(pair);
    t.expect(fast == brute, [&] { return tag(pair) + " tau extrema recurrence != brute force"; });
    const std::int64_t delta = pair.delta();
    for (std::size_t n = 0; n < brute.maxima_values.size(); ++n) {
        const auto ni = static_cast<std::int64_t>(n);
        t.expect(brute.maxima_values[n] == ni * (ni - 2 * delta + 3) / 2 + 1,
                 [&] { return tag(pair) + " tau(M_" + std::to_string(n) + ") off closed form"; });
    }
    const auto lowest = std::min_element(brute.minima_values.begin(), brute.minima_values.end());
    t.expect(*lowest == brute.minima_values[static_cast<std::size_t>(delta - 1)],
             [&] { return tag(pair) + " global minimum not at m_{delta-1}"; });
    return t;
}

Tally suite_prop71(const CoprimePair& pair) {
    Tally t;
    const SemigroupData sd = build_semigroup(pair);
    const SpectrumData sp = spectrum(pair);
    for (std::int64_t a = 0; a < pair.product(); ++a) {
        const auto r = gap_count_identity_check(sd, sp, a);
        t.expect(r.holds, [&] { return tag(pair) + " gap count identity fails at a = " + std::to_string(a); });
    }
    return t;
}

Tally suite_duality(const CoprimePair& pair) {
    Tally t;
    try {
        duality_check(pair);
        t.expect(true, [] { return std::string(); });
    } catch (const VerificationError& e) {
        t.expect(false, [&] { return tag(pair) + " " + e.what(); });
    }
    return t;
}

Tally suite_hf(const CoprimePair& pair) {
    Tally t;
    const SemigroupData sd = build_semigroup(pair);
    const AlexanderData alex = alexander(sd);
    const std::int64_t delta = pair.delta();
    const HFDecomposition plus = hf_plus_one(sd, alex);
    const HFDecomposition minus = hf_minus_one(sd, alex);
    t.expect(hf_from_profile(Surgery::plus_one, pair, tau_profile(sd), k2_plus_s(plus_one_surgery(pair))) == plus,
             [&] { return tag(pair) + " +1 towers differ from tau extrema"; });
    t.expect(hf_from_profile(Surgery::minus_one, pair, tau_minus_one_profile(sd),
                             Rational(minus_one_k2_plus_s(delta))) == minus,
             [&] { return tag(pair) + " -1 towers differ from tau extrema"; });
    const std::int64_t half = alex.second_derivative_at_1 / 2;
    t.expect(plus.rank_reduced == half - sd.alpha_at(delta - 1) && plus.rank_reduced == plus.finite_rank(),
             [&] { return tag(pair) + " +1 reduced rank"; });
    t.expect(minus.casson == half && minus.rank_reduced == half && minus.finite_rank() == half,
             [&] { return tag(pair) + " -1 reduced rank / Casson"; });
    return t;
}

Tally suite_inequalities(const CoprimePair& pair) {
    Tally t;
    const InequalityReport r = inequality_suite(pair);
    for (const auto& c : r.checks) t.expect(c.holds, [&] { return tag(pair) + " " + c.name + ": " + c.detail; });
    const bool two_strand_odd = pair.p() == 2 && r.delta % 2 == 1;
    t.expect(r.flag("gaps_from_delta_sharp") == two_strand_odd,
             [&] { return tag(pair) + " unexpected sharpness of the gap bound"; });
    t.expect(r.flag("genus_signature_sharp") == (pair == CoprimePair(2, 3)),
             [&] { return tag(pair) + " unexpected sharpness of g4 + 1 <= -sigma"; });
    return t;
}

Tally suite_reciprocity(std::int64_t a, std::int64_t b_max) {
    Tally t;
    for (std::int64_t b = 1; b <= b_max; ++b) {
        if (std::gcd(a, b) != 1) continue;
        const Rational lhs = dedekind_sum(a, b) + dedekind_sum(b, a);
        const Rational rhs(a * a + b * b + 1 - 3 * a * b, 12 * a * b);
        t.expect(lhs == rhs, [&] {
            return "s(" + std::to_string(a) + "," + std::to_string(b) + ") reciprocity: " + lhs.to_string() +
                   " != " + rhs.to_string();
        });
        if (a >= 2) {
            t.expect(dedekind_sum(mod_inverse(b, a), a) == dedekind_sum(b, a),
                     [&] { return "s(b', a) != s(b, a) for a = " + std::to_string(a) + ", b = " + std::to_string(b); });
        }
    }
    return t;
}

Tally suite_partial_sums(std::int64_t b) {
    Tally t;
    for (std::int64_t a = 1; a < b; ++a) {
        if (std::gcd(a, b) != 1) continue;
        Rational running;
        for (std::int64_t m = 0; m <= 3 * b; ++m) {
            const Rational closed = sawtooth_partial_sum(a, b, m);
            t.expect(closed == running, [&] {
                return "partial sum a=" + std::to_string(a) + " b=" + std::to_string(b) + " m=" + std::to_string(m);
            });
            if (m == b) {
                t.expect(running.sign() == 0, [&] { return "full-period sawtooth sum nonzero for b=" + std::to_string(b); });
            }
            running += sawtooth(Rational(m * a, b));
        }
    }
    return t;
}

struct SuiteResult {
    std::string name;
    std::int64_t units = 0;
    std::string unit_name;
    Tally tally;
};

template <typename T>
Tally run_parallel(const std::vector<T>& items, const std::function<Tally(const T&)>& fn) {
    const auto results = parallel_map(items, fn);
    Tally total;
    for (const auto& r : results) total.merge(r);
    return total;
}

SuiteResult run_suite(const std::string& name, std::int64_t p_max, std::int64_t q_max) {
    const auto pairs = coprime_pairs(p_max, q_max);
    const auto per_pair = [&](Tally (*fn)(const CoprimePair&)) {
        return SuiteResult{name, static_cast<std::int64_t>(pairs.size()), "pairs",
                           run_parallel<CoprimePair>(pairs, fn)};
    };
    if (name == "d-agreement") return per_pair(suite_d_agreement);
    if (name == "tau-oracle") return per_pair(suite_tau_oracle);
    if (name == "extrema") return per_pair(suite_extrema);
    if (name == "prop71") return per_pair(suite_prop71);
    if (name == "duality") return per_pair(suite_duality);
    if (name == "hf") return per_pair(suite_hf);
    if (name == "inequalities") return per_pair(suite_inequalities);

    std::vector<std::int64_t> range;
    if (name == "reciprocity") {
        range.resize(static_cast<std::size_t>(p_max));
        std::iota(range.begin(), range.end(), 1);
        return SuiteResult{name, static_cast<std::int64_t>(range.size()), "moduli",
                           run_parallel<std::int64_t>(range, [&](const std::int64_t& a) {
                               return suite_reciprocity(a, q_max);
                           })};
    }
    if (name == "partial-sums") {
        range.resize(static_cast<std::size_t>(q_max));
        std::iota(range.begin(), range.end(), 1);
        return SuiteResult{name, static_cast<std::int64_t>(range.size()), "moduli",
                           run_parallel<std::int64_t>(range, [](const std::int64_t& b) { return suite_partial_sums(b); })};
    }
    throw std::logic_error("unhandled suite " + name);
}

}  // namespace

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string out = "\"";
    for (const char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> table_columns() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : column_registry()) out.push_back(name);
    return out;
}

std::vector<std::string> default_table_columns() { return {"delta", "d", "sigma", "casson_plus"}; }

std::vector<std::string> verify_suites() {
    return {"d-agreement", "tau-oracle", "extrema", "prop71", "duality",
            "hf",          "inequalities", "reciprocity", "partial-sums"};
}

int emit_report(const InvariantReport& report, const std::string& format, std::ostream& out, std::ostream& err) {
    if (format == "json") {
        out << to_json(report).dump(2) << "\n";
    } else {
        write_text(report, out);
    }
    const auto failures = cross_check(report);
    for (const auto& f : failures) err << "verification failed: " << tag(report.pair) << " " << f << "\n";
    return failures.empty() ? exit_ok : exit_verification_failure;
}

int run_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_format(opts.format, {"json", "text"});
        const CoprimePair pair = checked_pair(opts.p, opts.q, opts.max_product);
        return emit_report(build_report(pair), opts.format, out, err);
    });
}

int run_table(const TableOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_format(opts.format, {"csv", "json"});
        require_bounds(opts.p_max, opts.q_max);
        require_ceiling(checked_product(opts.p_max, opts.q_max), opts.max_product.value_or(default_table_max_product));

        std::vector<std::string> names{"p", "q"};
        for (const auto& c : opts.columns.empty() ? default_table_columns() : opts.columns) {
            find_column(c);
            if (std::find(names.begin(), names.end(), c) == names.end()) names.push_back(c);
        }
        std::vector<const ColumnFn*> fns;
        for (const auto& n : names) fns.push_back(&find_column(n));

        const auto pairs = coprime_pairs(opts.p_max, opts.q_max);
        const auto reports = parallel_map(pairs, [](const CoprimePair& pair) { return build_report(pair); });

        int code = exit_ok;
        for (const auto& r : reports) {
            for (const auto& f : cross_check(r)) {
                err << "verification failed: " << tag(r.pair) << " " << f << "\n";
                code = exit_verification_failure;
            }
        }

        if (opts.format == "json") {
            ojson rows = ojson::array();
            for (const auto& r : reports) {
                ojson row;
                for (std::size_t i = 0; i < names.size(); ++i) row[names[i]] = (*fns[i])(r);
                rows.push_back(row);
            }
            out << ojson{{"columns", names}, {"rows", rows}}.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << csv_field(names[i]);
            out << "\n";
            for (const auto& r : reports) {
                for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << csv_cell((*fns[i])(r));
                out << "\n";
            }
        }
        return code;
    });
}

int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_format(opts.format, {"text", "json"});
        require_bounds(opts.p_max, opts.q_max);

        const auto known = verify_suites();
        std::vector<std::string> selected;
        for (const auto& s : opts.suites.empty() ? known : opts.suites) {
            if (std::find(known.begin(), known.end(), s) == known.end()) {
                std::string list;
                for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
                throw UsageError("unknown suite '" + s + "' (known: " + list + ")");
            }
            if (std::find(selected.begin(), selected.end(), s) == selected.end()) selected.push_back(s);
        }
        const bool heavy = std::find(selected.begin(), selected.end(), "tau-oracle") != selected.end();
        require_ceiling(checked_product(opts.p_max, opts.q_max),
                        opts.max_product.value_or(heavy ? default_tau_oracle_max_product : default_verify_max_product));

        std::vector<SuiteResult> results;
        for (const auto& s : selected) results.push_back(run_suite(s, opts.p_max, opts.q_max));
        const bool all_pass = std::all_of(results.begin(), results.end(),
                                          [](const SuiteResult& r) { return r.tally.failures.empty(); });

        constexpr std::size_t shown = 20;
        if (opts.format == "json") {
            ojson suites = ojson::array();
            for (const auto& r : results) {
                ojson failures = ojson::array();
                for (std::size_t i = 0; i < std::min(shown, r.tally.failures.size()); ++i) failures.push_back(r.tally.failures[i]);
                suites.push_back({{"name", r.name},
                                  {"status", r.tally.failures.empty() ? "pass" : "fail"},
                                  {r.unit_name, r.units},
                                  {"checks", r.tally.checks},
                                  {"failure_count", r.tally.failures.size()},
                                  {"failures", failures}});
            }
            out << ojson{{"status", all_pass ? "pass" : "fail"}, {"suites", suites}}.dump(2) << "\n";
        } else {
            for (const auto& r : results) {
                out << "suite " << r.name << ": " << (r.tally.failures.empty() ? "PASS" : "FAIL") << " " << r.unit_name
                    << "=" << r.units << " checks=" << r.tally.checks;
                if (!r.tally.failures.empty()) out << " failures=" << r.tally.failures.size();
                out << "\n";
            }
            out << "verify: " << (all_pass ? "PASS" : "FAIL") << "\n";
        }
        for (const auto& r : results) {
            for (std::size_t i = 0; i < std::min(shown, r.tally.failures.size()); ++i) {
                err << r.name << ": " << r.tally.failures[i] << "\n";
            }
        }
        return all_pass ? exit_ok : exit_verification_failure;
    });
}

int run_diagram(const DiagramOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_format(opts.format, {"csv", "dot"});
        if (opts.which != "plus" && opts.which != "minus" && opts.which != "both") {
            throw UsageError("unknown --which '" + opts.which + "', expected plus|minus|both");
        }
        const CoprimePair pair = checked_pair(opts.p, opts.q, opts.max_product);
        const DualityReport duality = duality_check(pair);
        const bool want_plus = opts.which != "minus";
        const bool want_minus = opts.which != "plus";

        if (opts.format == "csv") {
            out << "surgery,index,kind,position,value\n";
            const auto rows = [&](const char* name, const std::vector<std::int64_t>& corners, const TauProfile* profile) {
                for (std::size_t i = 0; i < corners.size(); ++i) {
                    const bool is_min = i % 2 == 0;
                    out << name << "," << i << "," << (is_min ? "min" : "max") << ",";
                    if (profile) {
                        const auto& pos = is_min ? profile->minima_positions : profile->maxima_positions;
                        out << pos[i / 2];
                    }
                    out << "," << corners[i] << "\n";
                }
            };
            if (want_plus) {
                const TauProfile profile = tau_profile(pair);
                rows("plus", duality.plus_tau_corners, &profile);
            }
            if (want_minus) rows("minus", duality.minus_tau_corners, nullptr);
            return exit_ok;
        }

        out << "digraph \"T(" << pair.p() << "," << pair.q() << ")\" {\n";
        out << "  rankdir=LR;\n  node [shape=box];\n";
        const auto cluster = [&](const HFDecomposition& hf, const std::vector<std::int64_t>& corners) {
            const std::string name(to_string(hf.surgery));
            out << "  subgraph \"cluster_" << name << "\" {\n";
            out << "    label=\"" << (hf.surgery == Surgery::plus_one ? "+1" : "-1") << " surgery, d = " << hf.d
                << ", tau corners " << join(corners, " ") << "\";\n";
            for (std::size_t i = 0; i < hf.towers.size(); ++i) {
                out << "    \"" << name << "_" << i << "\" [label=\"" << tower_label(hf.towers[i]) << "\"];\n";
            }
            for (std::size_t i = 1; i < hf.towers.size(); ++i) {
                out << "    \"" << name << "_" << i - 1 << "\" -> \"" << name << "_" << i << "\" [style=invis];\n";
            }
            out << "  }\n";
        };
        const SemigroupData sd = build_semigroup(pair);
        const AlexanderData alex = alexander(sd);
        if (want_plus) cluster(hf_plus_one(sd, alex), duality.plus_tau_corners);
        if (want_minus) cluster(hf_minus_one(sd, alex), duality.minus_tau_corners);
        out << "}\n";
        return exit_ok;
    });
}

}  // namespace tkhf::cli
