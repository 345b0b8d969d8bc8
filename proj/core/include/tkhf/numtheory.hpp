#pragma once

// Integer and exact-rational primitives: the sawtooth function, classical and
// generalized Dedekind sums, modular inverses and divisibility indicators.

#include <cstdint>
#include <span>

#include "tkhf/rational.hpp"

namespace tkhf {

/// Floor and ceiling of a/b for b != 0, exact for negative operands.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// Least non-negative residue of a modulo b > 0.
std::int64_t mod_floor(std::int64_t a, std::int64_t b);

/// x in [0, b) with a*x = 1 mod b. Throws std::invalid_argument unless
/// b > 0 and gcd(a, b) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t b);

/// x in [0, b) with a*x = -1 mod b (the a* of the sawtooth partial-sum
/// formula). Same preconditions as mod_inverse.
std::int64_t mod_inverse_neg(std::int64_t a, std::int64_t b);

/// ((x)): 0 on integers, x - floor(x) - 1/2 otherwise.
Rational sawtooth(const Rational& x);

/// s(p, q; x, y) = sum_{i=0}^{|q|-1} (((i+y)/q)) ((p(i+y)/q + x)).
///
/// Evaluated by direct summation. Negative p is allowed. For q < 0 the index
/// still runs over |q| terms, which gives s(p, -q; x, y) = s(p, q; x, y) when
/// x = y = 0. Throws std::invalid_argument for q = 0.
Rational dedekind_sum_general(std::int64_t p, std::int64_t q, const Rational& x, const Rational& y);

/// Classical s(p, q) = s(p, q; 0, 0).
Rational dedekind_sum(std::int64_t p, std::int64_t q);

/// sum_{j=0}^{m-1} ((j a / b)) via the closed form
///   -1/2 ((m a / b)) - s(a*, b; m/b, 0) + s(a*, b),  a* a = -1 mod b.
/// Valid for every integer m; negative m follows the convention
/// sum_{j=0}^{m-1} = -sum_{j=m}^{-1}. Throws unless b > 0 and gcd(a, b) = 1.
Rational sawtooth_partial_sum(std::int64_t a, std::int64_t b, std::int64_t m);

/// 1 if a divides b, else 0. Throws std::invalid_argument for a = 0.
int epsilon_divides(std::int64_t a, std::int64_t b);

/// epsilon_p(b) + epsilon_q(b).
int epsilon_pq(std::int64_t p, std::int64_t q, std::int64_t b);

/// sum_l epsilon_{alpha_l}(b) over a list of Seifert multiplicities.
int epsilon_arms(std::span<const std::int64_t> alphas, std::int64_t b);

}  // namespace tkhf
