// density.hpp -- exact rational evaluation of the instance-probability
// series: two-sided bounds for I(Z2,q) and I(Z3,q), generic bounds and
// computable upper bounds for I(Zn,q), and empirical estimates
#pragma once

#include "zimin/numbers.hpp"
#include "zimin/words.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace zimin {

/// Certified enclosure [lower, upper] of a density, with the truncation
/// parameters that produced it. For the Z2 series only trunc_outer is
/// meaningful (the number of terms summed).
struct BoundsResult {
    Rat lower;
    Rat upper;
    int q = 0;
    int trunc_outer = 0; // N: context lengths summed (Z3) / terms (Z2)
    int trunc_inner = 0; // M: inner alternating-series parameter (Z3)
    std::string target;
};

/// A finite-length density measurement, exact in exhaustive mode
/// (denominator q^n) and a seeded sample proportion in Monte Carlo mode.
struct DensityEstimate {
    Rat value;
    int q = 0;
    bool exhaustive = true;
    int word_length = 0;
    long long samples = 0; // exhaustive: q^n as a count, clamped to ll max
    std::uint64_t seed = 0;
    std::string target;
};

/// Term j of the Z2 density series at x = q^-2; alternating in sign with
/// strictly decreasing magnitude.
Rat series_term_F(int q, int j);

/// Partial sum of terms 0..J of the Z2 density series.
Rat iz2_partial(int q, int J);

/// Grows the partial sum until consecutive partials differ by less than
/// eps; the two enclosing partials become the bounds. trunc_outer records
/// the number of terms in the later partial.
BoundsResult iz2_bounds(int q, const Rat& eps);

/// The named polynomials carried by the Z3 series terms. s and t coincide;
/// s, v, t use negative powers, so x = 0 is a domain error for them.
enum class SeriesPoly { r, s, u, v, t };

Rat series_poly(SeriesPoly which, int ell, int q, const Rat& x);

/// Term i of the (c-side) G series and (d-side) H series for context
/// length ell at x = q^-2. Sign is (-1)^i.
Rat series_term_G(int ell, int q, int i);
Rat series_term_H(int ell, int q, int i);

/// Two-sided bounds for I(Z3,q):
///   lower = sum_{l<=N} a_l sum_{i<=2M+1} (G(i)+H(i))
///   upper = q^-N + sum_{l<=N} a_l sum_{i<=2M} (G(i)+H(i))
BoundsResult iz3_bounds(int q, int N, int M);

/// Auto-tuned enclosure: doubles N (from 8) and widens M only while the
/// inner truncation still limits the gap, until upper - lower < eps.
/// Throws convergence_error if N would exceed 256.
BoundsResult iz3_auto(int q, const Rat& eps);

/// Closed-form bounds q^(-2^n+n+1) <= I(Zn,q) <= prod 1/(q^(2^j-1)-1).
BoundsResult izn_generic_bounds(int n, int q);

/// Partial sum of the first `terms` terms of the overcount series
/// fhat_ell evaluated at x = q^-2. Even/odd final indices bracket the
/// limit from above/below.
Rat fhat_partial(int ell, int q, int terms);

/// Computable upper bound for I(Zn,q), n >= 3: the nested chain sum over
/// context lengths capped by `caps` (length n-2), each tail replaced by
/// its geometric bound. fhat factors use an upper-bracket truncation.
Rat izn_upper(int n, int q, const std::vector<int>& caps);

/// Exact probability that a length-Mlen word over [q] is an aba-shaped
/// instance: sum_{l < ceil(Mlen/2)} a_l q^(-2l).
Rat z2_exact_prefix_density(int q, int word_length);

/// Probability that a uniform random length-n word over [q] is a
/// Z_zimin_n-instance. Exhaustive mode enumerates q^n words (budget
/// 10^7); Monte Carlo draws `samples` words from a seeded deterministic
/// generator.
DensityEstimate empirical_density_zimin(int zimin_n, int q, int n,
                                        bool exhaustive,
                                        long long samples = 0,
                                        std::uint64_t seed = 0);

/// Same for an arbitrary pattern, via the general matcher.
DensityEstimate empirical_density_pattern(const Pattern& v, int q, int n,
                                          bool exhaustive,
                                          long long samples = 0,
                                          std::uint64_t seed = 0);

nlohmann::ordered_json to_json(const BoundsResult& b, int digits);
nlohmann::ordered_json to_json(const DensityEstimate& e, int digits);

} // namespace zimin
