#include "tkhf/signature.hpp"

#include <algorithm>
#include <stdexcept>

#include "tkhf/numtheory.hpp"

namespace tkhf {

SpectrumData::SpectrumData(CoprimePair pair) : pair_(pair) {
    const std::int64_t p = pair.p();
    const std::int64_t q = pair.q();
    numerators_.reserve(static_cast<std::size_t>((p - 1) * (q - 1)));
    for (std::int64_t i = 1; i < p; ++i) {
        for (std::int64_t j = 1; j < q; ++j) numerators_.push_back(i * q + j * p);
    }
    std::sort(numerators_.begin(), numerators_.end());
}

Rational SpectrumData::element(std::size_t k) const { return Rational(numerators_.at(k), pair_.product()); }

bool SpectrumData::contains_numerator(std::int64_t numerator) const {
    return std::binary_search(numerators_.begin(), numerators_.end(), numerator);
}

std::int64_t SpectrumData::count_in(std::int64_t lo, std::int64_t hi) const {
    if (hi <= lo) return 0;
    const auto first = std::lower_bound(numerators_.begin(), numerators_.end(), lo);
    const auto last = std::lower_bound(first, numerators_.end(), hi);
    return static_cast<std::int64_t>(last - first);
}

SpectrumData spectrum(const CoprimePair& pair) { return SpectrumData(pair); }

namespace {

void require_parameter(const SpectrumData& sp, std::int64_t a) {
    if (a < 0 || a >= sp.pair().product()) {
        throw std::out_of_range("signature parameter a must satisfy 0 <= a < pq, got " + std::to_string(a));
    }
}

}  // namespace

Rational tilde_c(const SpectrumData& sp, std::int64_t a) {
    require_parameter(sp, a);
    const std::int64_t pq = sp.pair().product();
    if (sp.contains_numerator(pq + a)) return Rational(1, 2);
    if (sp.contains_numerator(a)) return Rational(-1, 2);
    return Rational();
}

Rational tilde_c(const CoprimePair& pair, std::int64_t a) { return tilde_c(spectrum(pair), a); }

SignatureReport levine_tristram(const SpectrumData& sp, std::int64_t a) {
    require_parameter(sp, a);
    const std::int64_t pq = sp.pair().product();
    SignatureReport r;
    r.a = a;
    r.s1 = sp.count_in(1, a + 1);            // (0, a/pq]
    r.s2 = sp.count_in(a + 1, pq);           // (a/pq, 1)
    r.s3 = sp.count_in(pq + 1, pq + a);      // (1, 1 + a/pq)
    r.s4 = sp.count_in(pq + a, 2 * pq);      // [1 + a/pq, 2)
    r.boundary_hits = (sp.contains_numerator(a) ? 1 : 0) + (sp.contains_numerator(pq + a) ? 1 : 0);
    r.sigma = r.s1 + r.s4 - r.s2 - r.s3 + r.boundary_hits;
    r.tilde_c = tilde_c(sp, a);
    return r;
}

SignatureReport levine_tristram(const CoprimePair& pair, std::int64_t a) { return levine_tristram(spectrum(pair), a); }

GapCountIdentity gap_count_identity_check(const SemigroupData& sd, const SpectrumData& sp, std::int64_t a) {
    const std::int64_t p = sd.pair().p();
    const std::int64_t q = sd.pair().q();
    const std::int64_t pq = sd.pair().product();
    const SignatureReport lt = levine_tristram(sp, a);

    GapCountIdentity out;
    out.a = a;
    out.gap_count = count_gaps_ge(sd, a);
    out.spectrum_count = sp.count_in(pq + a, 2 * pq);
    out.signature_expression = Rational(sd.delta()) + Rational(lt.sigma, 4) -
                               Rational(1, 2) * (Rational(a - a / p - a / q) - lt.tilde_c);
    out.holds = out.gap_count == out.spectrum_count && Rational(out.gap_count) == out.signature_expression;
    return out;
}

GapCountIdentity gap_count_identity_check(const CoprimePair& pair, std::int64_t a) {
    return gap_count_identity_check(build_semigroup(pair), spectrum(pair), a);
}

Rational d_via_signature_exact(const SpectrumData& sp) {
    const std::int64_t p = sp.pair().p();
    const std::int64_t q = sp.pair().q();
    const std::int64_t delta = sp.pair().delta();
    const SignatureReport lt = levine_tristram(sp, delta);
    return Rational(-delta - delta / p - delta / q) - Rational(lt.sigma, 2) - lt.tilde_c;
}

std::int64_t d_via_signature(const CoprimePair& pair) { return d_via_signature_exact(spectrum(pair)).to_int64(); }

std::int64_t mu_plus(const SpectrumData& sp) {
    const std::int64_t pq = sp.pair().product();
    return 2 * sp.count_in(ceil_div(3 * pq, 2), 2 * pq);
}

std::int64_t mu_plus(const CoprimePair& pair) { return mu_plus(spectrum(pair)); }

std::int64_t classical_signature(const SpectrumData& sp) {
    const std::int64_t mp = mu_plus(sp);
    return mp - (2 * sp.pair().delta() - mp);
}

bool InequalityReport::all_hold() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return c.holds; });
}

bool InequalityReport::flag(const std::string& name) const {
    for (const auto* list : {&checks, &observations}) {
        for (const auto& c : *list) {
            if (c.name == name) return c.holds;
        }
    }
    throw std::out_of_range("no inequality named " + name);
}

InequalityReport inequality_suite(const CoprimePair& pair) {
    const SemigroupData sd = build_semigroup(pair);
    const SpectrumData sp = spectrum(pair);
    const std::int64_t p = pair.p();
    const std::int64_t q = pair.q();
    const std::int64_t pq = pair.product();
    const std::int64_t delta = pair.delta();

    InequalityReport r;
    r.pair = pair;
    r.delta = delta;
    r.gaps_from_delta = count_gaps_ge(sd, delta);
    r.minus_d = 2 * r.gaps_from_delta;
    r.mu_plus = mu_plus(sp);
    r.sigma = classical_signature(sp);
    const std::int64_t minus_d = r.minus_d;
    const std::int64_t sigma = r.sigma;
    const std::int64_t mp = r.mu_plus;

    const auto str = [](std::int64_t v) { return std::to_string(v); };
    auto check = [&](std::vector<InequalityCheck>& list, std::string name, bool holds, std::string detail) {
        list.push_back(InequalityCheck{std::move(name), holds, std::move(detail)});
    };

    check(r.checks, "four_genus_lower", minus_d >= 0, "0 <= -d = " + str(minus_d));
    check(r.checks, "four_genus_upper", minus_d <= 2 * delta, "-d = " + str(minus_d) + " <= 2g4 = " + str(2 * delta));
    check(r.checks, "d_genus_bound", minus_d <= delta + 1, "-d = " + str(minus_d) + " <= g4 + 1 = " + str(delta + 1));
    check(r.checks, "genus_signature_bound", delta + 1 <= -sigma,
          "g4 + 1 = " + str(delta + 1) + " <= -sigma = " + str(-sigma));
    check(r.checks, "gaps_from_delta_bound", 2 * r.gaps_from_delta <= delta + 1,
          "#{gaps >= delta} = " + str(r.gaps_from_delta) + " <= (delta + 1)/2");

    const std::int64_t tail = sp.count_in(pq + delta, 2 * pq);
    check(r.checks, "spectrum_tail_bound", tail <= q - 1 + mp / 2,
          "#Sp in [1 + delta/pq, 2) = " + str(tail) + " <= q - 1 + mu+/2 = " + str(q - 1 + mp / 2));
    check(r.checks, "d_mu_plus_bound", minus_d <= 2 * q - 2 + mp,
          "-d = " + str(minus_d) + " <= 2q - 2 + mu+ = " + str(2 * q - 2 + mp));
    check(r.checks, "mu_plus_bound", 2 * mp <= delta - 1, "mu+ = " + str(mp) + " <= (delta - 1)/2");
    check(r.checks, "d_half_delta_bound", 2 * minus_d <= 4 * q - 4 + delta - 1,
          "-d = " + str(minus_d) + " <= 2q - 2 + (delta - 1)/2");
    check(r.checks, "milnor_number", static_cast<std::int64_t>(sp.size()) == 2 * delta,
          "mu+ + mu- = #Sp = " + str(static_cast<std::int64_t>(sp.size())));

    if (pq % 2 == 0) {
        const std::int64_t half = levine_tristram(sp, pq / 2).sigma;
        check(r.checks, "signature_routes_agree", half == sigma,
              "sigma(1/2) = " + str(half) + ", mu+ - mu- = " + str(sigma));
    }
    if (p == q - 1) {
        // 2q - 5/2 <= 8 sqrt(delta) + 1, squared after clearing the 1/2.
        const std::int64_t lhs = 4 * q - 7;
        check(r.checks, "consecutive_pair_constant", lhs <= 0 || lhs * lhs <= 256 * delta,
              "2q - 5/2 <= 8 sqrt(delta) + 1 with q = " + str(q));
    }

    check(r.observations, "gaps_from_delta_sharp", 2 * r.gaps_from_delta == delta + 1,
          "#{gaps >= delta} == (delta + 1)/2");
    check(r.observations, "d_genus_sharp", minus_d == delta + 1, "-d == g4 + 1");
    check(r.observations, "genus_signature_sharp", delta + 1 == -sigma, "g4 + 1 == -sigma");
    check(r.observations, "exceeds_alternating_bound", minus_d > 2 * ceil_div(-sigma, 4),
          "-d = " + str(minus_d) + " > 2 ceil(-sigma/4) = " + str(2 * ceil_div(-sigma, 4)));
    return r;
}

}  // namespace tkhf
