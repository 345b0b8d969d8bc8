// Runs each acceptance criterion over its full stated range and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "tkhf/hf.hpp"
#include "tkhf/numtheory.hpp"
#include "tkhf/semigroup.hpp"
#include "tkhf/seifert.hpp"
#include "tkhf/signature.hpp"

using namespace tkhf;

namespace {

class Criterion {
public:
    void expect(bool ok, const std::function<std::string()>& message) {
        ++checks_;
        if (!ok && first_failure_.empty()) first_failure_ = message();
        if (!ok) ++failures_;
    }
    bool passed() const { return failures_ == 0; }
    std::int64_t checks() const { return checks_; }
    std::int64_t failures() const { return failures_; }
    const std::string& first_failure() const { return first_failure_; }

private:
    std::int64_t checks_ = 0;
    std::int64_t failures_ = 0;
    std::string first_failure_;
};

std::string tag(const CoprimePair& pair) {
    return "(" + std::to_string(pair.p()) + "," + std::to_string(pair.q()) + ")";
}

std::string str(std::int64_t v) { return std::to_string(v); }

std::vector<std::int64_t> iota_to(std::int64_t last) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(last + 1));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

// Number of semigroup elements s <= n, counted from the membership test.
std::int64_t semigroup_count_le(const SemigroupData& sd, std::int64_t n) {
    std::int64_t count = 0;
    for (std::int64_t s = 0; s <= n; ++s) count += sd.contains(s) ? 1 : 0;
    return count;
}

std::int64_t gaps_ge(const SemigroupData& sd, std::int64_t a) {
    const auto gaps = sd.gaps();
    return std::count_if(gaps.begin(), gaps.end(), [a](std::int64_t s) { return s >= a; });
}

// 1. d via tau, Dedekind sums, the gap count and the signature.
void four_route_d(Criterion& c) {
    for (const auto& pair : coprime_pairs(39, 40)) {
        const auto sd = build_semigroup(pair);
        const std::int64_t gap = -2 * gaps_ge(sd, pair.delta());
        const std::int64_t tau = d_via_tau(pair);
        const std::int64_t ded = d_via_dedekind(pair);
        const std::int64_t sig = d_via_signature(pair);
        c.expect(tau == gap && ded == gap && sig == gap, [&] {
            return tag(pair) + " tau " + str(tau) + ", dedekind " + str(ded) + ", gaps " + str(gap) + ", signature " +
                   str(sig);
        });
    }
}

// 2. Compact tau against direct summation on [0, 2 delta pq].
void tau_oracle(Criterion& c) {
    for (const auto& pair : coprime_pairs(11, 12)) {
        const auto sd = plus_one_surgery(pair);
        const std::int64_t m_max = 2 * pair.delta() * pair.product();
        const auto brute = tau_bruteforce_at(sd, iota_to(m_max));
        for (std::int64_t m = 0; m <= m_max; ++m) {
            const std::int64_t compact = tau_compact(sd, m);
            const std::int64_t want = brute[static_cast<std::size_t>(m)];
            c.expect(compact == want, [&] { return tag(pair) + " m=" + str(m) + ": " + str(compact) + " != " + str(want); });
        }
    }
}

// 3. Extremum positions, jumps between adjacent extrema as semigroup counts, tau(M_n) and the global minimum, all on brute-force tau.
void extrema_structure(Criterion& c) {
    for (const auto& pair : coprime_pairs(19, 20)) {
        const auto sd = plus_one_surgery(pair);
        const auto sg = build_semigroup(pair);
        const std::int64_t delta = pair.delta();
        const std::int64_t pq = pair.product();
        const std::int64_t last_min = (2 * delta - 2) * (pq - 1);
        const std::int64_t end = last_min + 3 * pq;
        const auto tau = tau_bruteforce_at(sd, iota_to(end));
        const auto at = [&](std::int64_t m) { return tau[static_cast<std::size_t>(m)]; };
        const auto m_ = [&](std::int64_t n) { return n * (pq - 1); };
        const auto M_ = [&](std::int64_t n) { return n * pq + 1; };

        for (std::int64_t n = 0; n <= 2 * delta - 3; ++n) {
            for (std::int64_t j = m_(n); j < M_(n); ++j) {
                c.expect(at(j + 1) >= at(j), [&] { return tag(pair) + " tau decreases on [m_n, M_n] at " + str(j); });
            }
            for (std::int64_t j = M_(n); j < m_(n + 1); ++j) {
                c.expect(at(j + 1) <= at(j), [&] { return tag(pair) + " tau increases on [M_n, m_n+1] at " + str(j); });
            }
            const std::int64_t gaps_after = gaps_ge(sg, n + 2);
            const std::int64_t members_upto = semigroup_count_le(sg, n);
            c.expect(at(M_(n)) - at(m_(n + 1)) == gaps_after && gaps_after > 0,
                     [&] { return tag(pair) + " tau(M_n) - tau(m_n+1) != #gaps >= n+2 at n=" + str(n); });
            c.expect(at(M_(n)) - at(m_(n)) == members_upto && members_upto > 0,
                     [&] { return tag(pair) + " tau(M_n) - tau(m_n) != #S <= n at n=" + str(n); });
            c.expect(at(M_(n)) == n * (n - 2 * delta + 3) / 2 + 1,
                     [&] { return tag(pair) + " tau(M_n) closed form at n=" + str(n); });
        }
        for (std::int64_t j = last_min; j < end; ++j) {
            c.expect(at(j + 1) >= at(j), [&] { return tag(pair) + " tau decreases past m_{2delta-2} at " + str(j); });
        }
        const std::int64_t lowest = *std::min_element(tau.begin(), tau.end());
        c.expect(at(m_(delta - 1)) == lowest, [&] { return tag(pair) + " global minimum not at m_{delta-1}"; });

        const auto profile = tau_profile(pair);
        c.expect(profile.global_min == lowest && profile.global_min_position == m_(delta - 1),
                 [&] { return tag(pair) + " recurrence profile disagrees with brute force"; });
    }
}

// 4. Values quoted in the text.
void quoted_values(Criterion& c) {
    const CoprimePair p45(4, 5);
    c.expect(-d_via_tau(p45) == 6 && -d_via_dedekind(p45) == 6 && -d_via_signature(p45) == 6,
             [] { return std::string("(4,5): -d != 6"); });
    c.expect(classical_signature(spectrum(p45)) == -8 && levine_tristram(p45, 10).sigma == -8,
             [] { return std::string("(4,5): sigma != -8"); });

    for (std::int64_t p = 2; p <= 12; ++p) {
        const CoprimePair pair(p, p + 1);
        const std::int64_t h = p / 2;
        const std::int64_t want = -h * (h + 1);
        for (const std::int64_t got : {d_via_tau(pair), d_via_dedekind(pair), d_via_signature(pair)}) {
            c.expect(got == want, [&] { return tag(pair) + " d = " + str(got) + ", expected " + str(want); });
        }
    }
    for (std::int64_t delta = 1; delta <= 12; ++delta) {
        const CoprimePair pair(2, 2 * delta + 1);
        const std::int64_t want = -2 * ((delta + 1) / 2);
        for (const std::int64_t got : {d_via_tau(pair), d_via_dedekind(pair), d_via_signature(pair)}) {
            c.expect(got == want, [&] { return tag(pair) + " d = " + str(got) + ", expected " + str(want); });
        }
    }
    const CoprimePair trefoil(2, 3);
    c.expect(trefoil.delta() + 1 == -classical_signature(spectrum(trefoil)),
             [] { return std::string("(2,3): delta + 1 != -sigma"); });
}

// 5. Both sawtooth diagrams of T(3,4).
void t34_sawtooth(Criterion& c) {
    const CoprimePair pair(3, 4);
    const auto sd = build_semigroup(pair);
    const std::vector<std::int64_t> alpha(sd.alpha().begin(), sd.alpha().end());
    c.expect(alpha == std::vector<std::int64_t>{3, 2, 1, 1, 1}, [] { return std::string("alpha != (3,2,1,1,1)"); });

    const std::vector<std::int64_t> minus{0, 1, -2, -1, -3, -2, -3, -1, -2, 1, 0};
    const std::vector<std::int64_t> plus{0, 1, -1, 0, -1, 0, -1, 1, 0};
    const std::span<const std::int64_t> all(alpha);
    c.expect(sawtooth_from_sequence(all).corners == minus, [] { return std::string("-1 sawtooth corners"); });
    c.expect(sawtooth_from_sequence(all.subspan(1)).corners == plus, [] { return std::string("+1 sawtooth corners"); });
    c.expect(tau_minus_one_profile(pair).corners() == minus, [] { return std::string("-1 tau extrema"); });
    c.expect(tau_profile_bruteforce(pair).corners() == plus, [] { return std::string("+1 brute-force tau extrema"); });
}

// 6. Reduced ranks, Casson invariants and the grading identity.
void hf_consistency(Criterion& c) {
    for (const auto& pair : coprime_pairs(19, 20)) {
        const auto sd = build_semigroup(pair);
        const auto alex = alexander(sd);
        const std::int64_t delta = pair.delta();
        const std::int64_t half = alex.second_derivative_at_1 / 2;
        c.expect(alex.second_derivative_at_1 % 2 == 0, [&] { return tag(pair) + " odd second derivative"; });

        const auto plus = hf_plus_one(pair);
        std::int64_t lengths = 0;
        for (const auto& t : plus.towers) {
            if (t.length) lengths += *t.length * t.multiplicity;
        }
        const std::int64_t want_plus = half - sd.alpha_at(delta - 1);
        c.expect(plus.rank_reduced == want_plus && lengths == want_plus,
                 [&] { return tag(pair) + " +1 reduced rank " + str(plus.rank_reduced) + ", lengths " + str(lengths); });

        const auto minus = hf_minus_one(pair);
        c.expect(minus.casson == half && minus.rank_reduced == half,
                 [&] { return tag(pair) + " -1 casson " + str(minus.casson) + ", rank " + str(minus.rank_reduced); });

        const auto profile = tau_profile_bruteforce(pair);
        const Rational k2s = k2_plus_s(plus_one_surgery(pair));
        for (std::int64_t k = -1; k <= delta - 2; ++k) {
            const Rational lhs(k * k + k - 2 * sd.alpha_at(delta + k));
            const Rational rhs = Rational(2 * profile.minima_values[static_cast<std::size_t>(delta - 2 - k)]) -
                                 k2s / Rational(4);
            c.expect(lhs == rhs, [&] { return tag(pair) + " grading identity at k=" + str(k); });
        }
    }
}

// 7. Both identities of the spectrum/semigroup proposition for every a.
void gap_count_identities(Criterion& c) {
    for (const auto& pair : coprime_pairs(125, 125)) {
        if (pair.product() > 250) continue;
        const auto sd = build_semigroup(pair);
        const auto sp = spectrum(pair);
        const std::int64_t pq = pair.product();
        for (std::int64_t a = 0; a < pq; ++a) {
            const std::int64_t gaps = gaps_ge(sd, a);
            const Rational lo = Rational(1) + Rational(a, pq);
            std::int64_t tail = 0;
            for (std::size_t k = 0; k < sp.size(); ++k) {
                const Rational x = sp.element(k);
                if (x >= lo && x < Rational(2)) ++tail;
            }
            const auto lt = levine_tristram(sp, a);
            const Rational rhs = Rational(pair.delta()) + Rational(lt.sigma, 4) -
                                 Rational(1, 2) * (Rational(a - a / pair.p() - a / pair.q()) - tilde_c(sp, a));
            c.expect(gaps == tail, [&] { return tag(pair) + " a=" + str(a) + " spectrum count " + str(tail); });
            c.expect(rhs == Rational(gaps), [&] { return tag(pair) + " a=" + str(a) + " signature side " + rhs.to_string(); });
        }
    }
}

// 8. Sawtooth duality, with the +1 extrema taken from brute-force tau.
void duality(Criterion& c) {
    for (const auto& pair : coprime_pairs(19, 20)) {
        const auto sd = build_semigroup(pair);
        const std::span<const std::int64_t> alpha = sd.alpha();
        c.expect(sawtooth_from_sequence(alpha.subspan(1)).corners == tau_profile_bruteforce(pair).corners(),
                 [&] { return tag(pair) + " +1 extrema differ from the sawtooth of alpha_1.."; });
        c.expect(sawtooth_from_sequence(alpha).corners == tau_minus_one_profile(sd).corners(),
                 [&] { return tag(pair) + " -1 extrema differ from the sawtooth of alpha_0.."; });
        bool ok = true;
        try {
            duality_check(pair, ProfileRoute::bruteforce);
        } catch (const VerificationError&) {
            ok = false;
        }
        c.expect(ok, [&] { return tag(pair) + " duality_check raised"; });
    }
}

// 9. Reciprocity, vanishing full-period sums and the closed partial-sum formula.
void number_theory(Criterion& c) {
    for (std::int64_t p = 1; p <= 200; ++p) {
        for (std::int64_t q = 1; q <= 200; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const Rational lhs = dedekind_sum(p, q) + dedekind_sum(q, p);
            const Rational rhs(p * p + q * q + 1 - 3 * p * q, 12 * p * q);
            c.expect(lhs == rhs, [&] { return "reciprocity at (" + str(p) + "," + str(q) + ")"; });
        }
    }
    for (std::int64_t b = 1; b <= 50; ++b) {
        for (std::int64_t a = 0; a < std::max<std::int64_t>(b, 1); ++a) {
            if (std::gcd(a, b) != 1) continue;
            Rational full;
            for (std::int64_t j = 0; j < b; ++j) full += sawtooth(Rational(j * a, b));
            c.expect(full.sign() == 0, [&] { return "full-period sum at a=" + str(a) + " b=" + str(b); });
            if (a == 0) continue;
            Rational running;
            for (std::int64_t m = 0; m <= 3 * b; ++m) {
                c.expect(sawtooth_partial_sum(a, b, m) == running,
                         [&] { return "partial sum a=" + str(a) + " b=" + str(b) + " m=" + str(m); });
                running += sawtooth(Rational(m * a, b));
            }
        }
    }
    for (std::int64_t p = 2; p <= 50; ++p) {
        for (std::int64_t q = 1; q <= 50; ++q) {
            if (std::gcd(p, q) != 1) continue;
            c.expect(dedekind_sum(mod_inverse(q, p), p) == dedekind_sum(q, p),
                     [&] { return "s(p',p) != s(q,p) at (" + str(p) + "," + str(q) + ")"; });
        }
    }
}

// 10. Four-genus, signature and spectrum inequalities with their equality cases.
void inequalities(Criterion& c) {
    for (const auto& pair : coprime_pairs(39, 40)) {
        const auto sd = build_semigroup(pair);
        const auto sp = spectrum(pair);
        const std::int64_t delta = pair.delta();
        const std::int64_t q = pair.q();
        const std::int64_t pq = pair.product();
        const std::int64_t minus_d = -d_via_tau(pair);
        const std::int64_t sigma = classical_signature(sp);
        const std::int64_t mu_p = 2 * sp.count_in(3 * pq / 2 + (pq % 2), 2 * pq);
        const std::int64_t gaps = gaps_ge(sd, delta);
        const bool two_strand_odd = pair.p() == 2 && delta % 2 == 1;

        c.expect(minus_d <= delta + 1 && delta + 1 <= -sigma, [&] { return tag(pair) + " -d <= delta+1 <= -sigma"; });
        c.expect(!two_strand_odd || minus_d == delta + 1, [&] { return tag(pair) + " equality in -d <= delta+1"; });
        c.expect(2 * gaps <= delta + 1, [&] { return tag(pair) + " #gaps >= delta <= (delta+1)/2"; });
        c.expect(!two_strand_odd || 2 * gaps == delta + 1, [&] { return tag(pair) + " equality in the gap bound"; });
        c.expect((delta + 1 == -sigma) == (pair == CoprimePair(2, 3)),
                 [&] { return tag(pair) + " equality in delta+1 <= -sigma"; });
        c.expect(sp.count_in(pq + delta, 2 * pq) <= q - 1 + mu_p / 2,
                 [&] { return tag(pair) + " spectrum tail bound"; });
        c.expect(minus_d <= 2 * q - 2 + mu_p, [&] { return tag(pair) + " -d <= 2q - 2 + mu+"; });
        c.expect(2 * minus_d <= 4 * q - 4 + delta - 1, [&] { return tag(pair) + " -d <= 2q - 2 + (delta-1)/2"; });
        c.expect(0 <= minus_d && minus_d <= 2 * delta, [&] { return tag(pair) + " 0 <= -d <= 2 g4"; });
        c.expect(mu_p == mu_plus(sp), [&] { return tag(pair) + " mu+ count"; });
    }
    const CoprimePair p45(4, 5);
    const std::int64_t sigma = classical_signature(spectrum(p45));
    const std::int64_t bound = 2 * ceil_div(-sigma, 4);
    c.expect(-d_via_tau(p45) == 6 && bound == 4 && 6 > bound, [] { return std::string("(4,5) counterexample"); });
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        void (*run)(Criterion&);
    };
    const Entry entries[] = {
        {1, "four-route d agreement, q <= 40", four_route_d},
        {2, "tau compact vs brute force, q <= 12", tau_oracle},
        {3, "tau extrema structure, q <= 20", extrema_structure},
        {4, "quoted values", quoted_values},
        {5, "T(3,4) sawtooth diagrams", t34_sawtooth},
        {6, "HF+ ranks, Casson and gradings, q <= 20", hf_consistency},
        {7, "spectrum/semigroup identities, pq <= 250", gap_count_identities},
        {8, "sawtooth duality, q <= 20", duality},
        {9, "number-theory suites", number_theory},
        {10, "inequality suite, q <= 40", inequalities},
    };

    int failed = 0;
    for (const auto& e : entries) {
        Criterion c;
        const auto start = std::chrono::steady_clock::now();
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.expect(false, [&] { return std::string("exception: ") + ex.what(); });
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d: %s (%lld checks, %.2fs)\n", c.passed() ? "PASS" : "FAIL", e.id, e.name,
                    static_cast<long long>(c.checks()), secs);
        if (!c.passed()) {
            std::printf("     %lld failures, first: %s\n", static_cast<long long>(c.failures()), c.first_failure().c_str());
            ++failed;
        }
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
