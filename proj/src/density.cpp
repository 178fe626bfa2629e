#include "zimin/density.hpp"

#include "zimin/errors.hpp"
#include "zimin/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

namespace zimin {

namespace {

// prod_{k=0..i} (1 - q^(1-2^(k+1))) for i = 0..imax
std::vector<Rat> denominator_products(int q, int imax) {
    std::vector<Rat> out(static_cast<std::size_t>(imax) + 1);
    Rat acc(1);
    for (int k = 0; k <= imax; ++k) {
        acc *= Rat(1) - rat_qpow(q, 1 - (1L << (k + 1)));
        out[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

struct PolyAtX {
    // shared powers of x for one (ell, x)
    Rat x, xl, x2l, x4l, x5l, x6l;
    PolyAtX(int ell, const Rat& xv) : x(xv) {
        xl = rat_pow(x, ell);
        x2l = xl * xl;
        x4l = x2l * x2l;
        x5l = x4l * xl;
        x6l = x5l * xl;
    }
    Rat r(int q) const { return q * x2l * x - x4l + x5l - q * x5l * x + x6l; }
    Rat u(int q) const { return q * x4l * x - x5l + q * x5l * x - x6l; }
    Rat s(int q) const { return Rat(1) - q * x / xl + Rat(1) / xl; }
    Rat v(int q) const { return s(q) - q * x / x2l + Rat(1) / x2l; }
};

} // namespace

Rat series_term_F(int q, int j) {
    if (q < 2) throw std::invalid_argument("series_term_F: q must be >= 2");
    if (j < 0) throw std::invalid_argument("series_term_F: j must be >= 0");
    Rat num = rat_qpow(q, 1 - (1L << (j + 1)));
    Rat den(1);
    for (int k = 0; k <= j; ++k)
        den *= Rat(1) - rat_qpow(q, 1 - (1L << (k + 1)));
    Rat t = num / den;
    return j % 2 == 0 ? t : -t;
}

Rat iz2_partial(int q, int J) {
    if (q < 2) throw std::invalid_argument("iz2_partial: q must be >= 2");
    if (J < 0) throw std::invalid_argument("iz2_partial: J must be >= 0");
    Rat num(1), den(1), sum(0);
    for (int j = 0; j <= J; ++j) {
        // F(j) = (-1)^j q^(1-2^(j+1)) / prod_{k<=j}(1 - q^(1-2^(k+1)))
        num *= rat_qpow(q, j == 0 ? -1 : -(1L << j));
        den *= Rat(1) - rat_qpow(q, 1 - (1L << (j + 1)));
        Rat t = num / den;
        sum += j % 2 == 0 ? t : -t;
    }
    return sum;
}

BoundsResult iz2_bounds(int q, const Rat& eps) {
    if (eps <= 0) throw std::invalid_argument("iz2_bounds: eps must be positive");
    std::string target = "I(Z2," + std::to_string(q) + ")";
    Rat prev = iz2_partial(q, 0);
    for (int J = 1; J <= 64; ++J) {
        Rat cur = iz2_partial(q, J);
        Rat diff = cur - prev;
        if (diff < 0) diff = -diff;
        if (diff < eps) {
            BoundsResult r;
            r.lower = std::min(prev, cur);
            r.upper = std::max(prev, cur);
            r.q = q;
            r.trunc_outer = J + 1;
            r.target = target;
            return r;
        }
        prev = cur;
    }
    throw convergence_error("iz2_bounds: did not converge within 64 terms");
}

Rat series_poly(SeriesPoly which, int ell, int q, const Rat& x) {
    if (ell < 1) throw std::invalid_argument("series_poly: ell must be >= 1");
    if (q < 2) throw std::invalid_argument("series_poly: q must be >= 2");
    bool needs_inverse = which == SeriesPoly::s || which == SeriesPoly::v ||
                         which == SeriesPoly::t;
    if (needs_inverse && x == 0)
        throw std::domain_error("series_poly: x = 0 outside the domain of s/v/t");
    PolyAtX p(ell, x);
    switch (which) {
        case SeriesPoly::r: return p.r(q);
        case SeriesPoly::u: return p.u(q);
        case SeriesPoly::s:
        case SeriesPoly::t: return p.s(q);
        case SeriesPoly::v: return p.v(q);
    }
    throw std::invalid_argument("series_poly: unknown polynomial");
}

Rat series_term_G(int ell, int q, int i) {
    if (i < 0) throw std::invalid_argument("series_term_G: i must be >= 0");
    if (i > 30) throw size_error("series_term_G: i exceeds the exponent budget");
    auto dens = denominator_products(q, i);
    Rat num = series_poly(SeriesPoly::r, ell, q, rat_qpow(q, -(1L << (i + 1))));
    for (int j = 0; j < i; ++j)
        num *= series_poly(SeriesPoly::s, ell, q, rat_qpow(q, -(1L << (j + 1))));
    Rat t = num / dens.back();
    return i % 2 == 0 ? t : -t;
}

Rat series_term_H(int ell, int q, int i) {
    if (i < 0) throw std::invalid_argument("series_term_H: i must be >= 0");
    if (i > 30) throw size_error("series_term_H: i exceeds the exponent budget");
    auto dens = denominator_products(q, i);
    Rat num = series_poly(SeriesPoly::u, ell, q, rat_qpow(q, -(1L << (i + 1))));
    for (int j = 0; j < i; ++j)
        num *= series_poly(SeriesPoly::v, ell, q, rat_qpow(q, -(1L << (j + 1))));
    Rat t = num / dens.back();
    return i % 2 == 0 ? t : -t;
}

// The double sum is evaluated in scaled-integer form: with e_i = 2^(i+1)
// and x_i = q^-e_i, the polynomial values rescale to the integers
//   R_i = q^(6l e_i) r(x_i), U_i = q^(6l e_i) u(x_i),
//   S_j = s(x_j),            V_j = v(x_j),
// and the denominator factors to (q^(2^(k+1)-1) - 1) / q^(2^(k+1)-1), so
// every term is an integer over q^(6l e_max) DN with
// DN = prod_{k<=imax}(q^(2^(k+1)-1) - 1). Keeping the inner loops purely
// integral avoids rational canonicalization on multi-megabit operands;
// the enclosing fraction is reduced once at the end.
BoundsResult iz3_bounds(int q, int N, int M) {
    if (q < 2) throw std::invalid_argument("iz3_bounds: q must be >= 2");
    if (N < 1) throw std::invalid_argument("iz3_bounds: N must be >= 1");
    if (M < 0) throw std::invalid_argument("iz3_bounds: M must be >= 0");
    if (M > 12 || N > 4096)
        throw size_error("iz3_bounds: parameters exceed the exponent budget");
    const int imax = 2 * M + 1;
    const unsigned long uq = static_cast<unsigned long>(q);
    auto qp = [uq](long e) { return int_pow(uq, static_cast<unsigned long>(e)); };

    // DN_i prefixes, exponents E_i, and suffix products DN_imax / DN_i
    std::vector<Int> dn_suffix(static_cast<size_t>(imax) + 2, 1);
    std::vector<long> den_exp(static_cast<size_t>(imax) + 1, 0);
    {
        long acc = 0;
        for (int i = 0; i <= imax; ++i) {
            acc += (1L << (i + 1)) - 1;
            den_exp[static_cast<size_t>(i)] = acc;
        }
        for (int i = imax; i >= 0; --i)
            dn_suffix[static_cast<size_t>(i)] =
                dn_suffix[static_cast<size_t>(i) + 1] * (qp((1L << (i + 1)) - 1) - 1);
    }
    const Int& dn_full = dn_suffix[0]; // DN_imax = prod over all k
    const long e_max = 1L << (imax + 1);
    auto a = a_seq(q, N);

    // per-l numerators over the common denominator q^(6 l e_max) DN_imax
    Int total_lo = 0, total_hi = 0; // over q^(6 N e_max) DN_imax
    for (int l = 1; l <= N; ++l) {
        Int sp = 1, vp = 1;
        Int num_lo = 0, num_hi = 0;
        for (int i = 0; i <= imax; ++i) {
            const long e = 1L << (i + 1);
            Int r_scaled = qp(1 + (4L * l - 1) * e) - qp(2L * l * e) + qp(1L * l * e) -
                           qp(1 + (1L * l - 1) * e) + 1;
            Int u_scaled = qp(1 + (2L * l - 1) * e) - qp(1L * l * e) +
                           qp(1 + (1L * l - 1) * e) - 1;
            Int term = r_scaled * sp + u_scaled * vp;
            term *= qp(6L * l * (e_max - e) + den_exp[static_cast<size_t>(i)]);
            term *= dn_suffix[static_cast<size_t>(i) + 1];
            if (i % 2 == 1) term = -term;
            num_lo += term;
            if (i <= 2 * M) num_hi += term;
            if (i < imax) {
                sp *= 1 - qp(1 + (1L * l - 1) * e) + qp(1L * l * e);
                vp *= 1 - qp(1 + (1L * l - 1) * e) + qp(1L * l * e) -
                      qp(1 + (2L * l - 1) * e) + qp(2L * l * e);
            }
        }
        Int weight = a[static_cast<size_t>(l)] * qp(6L * (N - l) * e_max);
        total_lo += num_lo * weight;
        total_hi += num_hi * weight;
    }

    Int denom = qp(6L * N * e_max) * dn_full;
    BoundsResult r;
    r.lower = Rat(total_lo, denom);
    r.lower.canonicalize();
    r.upper = Rat(total_hi, denom);
    r.upper.canonicalize();
    r.upper += rat_qpow(q, -N);
    r.q = q;
    r.trunc_outer = N;
    r.trunc_inner = M;
    r.target = "I(Z3," + std::to_string(q) + ")";
    return r;
}

BoundsResult iz3_auto(int q, const Rat& eps) {
    if (eps <= 0) throw std::invalid_argument("iz3_auto: eps must be positive");
    // The gap splits into the q^-N outer tail and the inner
    // alternating-series slack. The inner slack shrinks doubly
    // exponentially in M, so M = 2 already reaches ~q^-100; grow M only
    // when the measured slack still limits the gap, and double N for the
    // dominant q^-N part.
    int M = 2;
    int N = 8;
    for (;;) {
        BoundsResult b = iz3_bounds(q, N, M);
        Rat gap = b.upper - b.lower;
        if (gap < eps) return b;
        if (N > 256)
            throw convergence_error("iz3_auto: N exceeded 256 without reaching eps");
        Rat inner_slack = gap - rat_qpow(q, -N);
        if (2 * inner_slack >= eps) ++M;
        else N *= 2;
    }
}

BoundsResult izn_generic_bounds(int n, int q) {
    if (n < 1) throw std::invalid_argument("izn_generic_bounds: n must be >= 1");
    if (n > 30) throw size_error("izn_generic_bounds: n > 30 exceeds the size budget");
    if (q < 2) throw std::invalid_argument("izn_generic_bounds: q must be >= 2");
    BoundsResult r;
    r.lower = rat_qpow(q, -(1L << n) + n + 1);
    r.upper = Rat(1);
    for (int j = 1; j < n; ++j)
        r.upper /= Rat(int_pow(static_cast<unsigned long>(q),
                               (1UL << j) - 1) - 1);
    r.q = q;
    r.target = "I(Z" + std::to_string(n) + "," + std::to_string(q) + ") generic";
    return r;
}

Rat fhat_partial(int ell, int q, int terms) {
    if (ell < 1) throw std::invalid_argument("fhat_partial: ell must be >= 1");
    if (q < 2) throw std::invalid_argument("fhat_partial: q must be >= 2");
    if (terms < 1) throw std::invalid_argument("fhat_partial: need at least one term");
    if (terms > 31) throw size_error("fhat_partial: terms exceed the exponent budget");
    auto dens = denominator_products(q, terms - 1);
    Rat sum(0), tprod(1);
    Rat prev_mag(-1);
    for (int i = 0; i < terms; ++i) {
        Rat x = rat_qpow(q, -(1L << (i + 1)));
        Rat term = q * rat_pow(x, 2 * ell + 1) * tprod / dens[static_cast<std::size_t>(i)];
        // |terms| must decrease for the even/odd bracketing to hold
        if (prev_mag >= 0 && term > prev_mag)
            throw std::logic_error("fhat_partial: term magnitudes not decreasing");
        prev_mag = term;
        sum += i % 2 == 0 ? term : -term;
        if (i + 1 < terms)
            tprod *= series_poly(SeriesPoly::t, ell, q, x);
    }
    return sum;
}

Rat izn_upper(int n, int q, const std::vector<int>& caps) {
    if (n < 3) throw std::invalid_argument("izn_upper: n must be >= 3");
    if (q < 2) throw std::invalid_argument("izn_upper: q must be >= 2");
    if (static_cast<int>(caps.size()) != n - 2)
        throw std::invalid_argument("izn_upper: caps must have length n - 2");
    for (int c : caps)
        if (c < 1) throw std::invalid_argument("izn_upper: caps must be >= 1");

    constexpr int kFhatTerms = 9; // odd count: final index even, upper bracket
    auto a = a_seq(q, caps[0]);

    std::vector<Rat> fhat(static_cast<std::size_t>(caps.back()) + 1);
    for (int l = 1; l <= caps.back(); ++l)
        fhat[static_cast<std::size_t>(l)] = fhat_partial(l, q, kFhatTerms);

    // chain weights a_{l1} bhat^{l1}_{l2} ... over l_i <= caps[i-1]
    std::vector<Rat> weight(static_cast<std::size_t>(caps[0]) + 1);
    for (int l = 1; l <= caps[0]; ++l)
        weight[static_cast<std::size_t>(l)] = Rat(a[static_cast<std::size_t>(l)]);
    for (std::size_t level = 1; level < caps.size(); ++level) {
        int prev_cap = caps[level - 1], cap = caps[level];
        std::vector<Rat> next(static_cast<std::size_t>(cap) + 1, Rat(0));
        for (int lp = 1; lp <= prev_cap; ++lp) {
            if (weight[static_cast<std::size_t>(lp)] == 0) continue;
            auto bh = bhat_seq(q, lp, cap);
            for (int l = 1; l <= cap; ++l)
                next[static_cast<std::size_t>(l)] +=
                    weight[static_cast<std::size_t>(lp)] * Rat(bh[static_cast<std::size_t>(l)]);
        }
        weight = std::move(next);
    }
    Rat main(0);
    for (int l = 1; l <= caps.back(); ++l)
        main += weight[static_cast<std::size_t>(l)] * fhat[static_cast<std::size_t>(l)];

    // tails: sum_i (prod_{j<i} N_j) q^(N_{i-1}) q^(-N_i) / (q-1), N_0 -> exponent 0
    Rat tail(0);
    Int prod_n(1);
    for (int i = 1; i <= n - 2; ++i) {
        long prev_exp = i >= 2 ? caps[static_cast<std::size_t>(i - 2)] : 0;
        tail += Rat(prod_n) * rat_qpow(q, prev_exp) *
                rat_qpow(q, -caps[static_cast<std::size_t>(i - 1)]) / Rat(q - 1);
        prod_n *= caps[static_cast<std::size_t>(i - 1)];
    }
    return main + tail;
}

Rat z2_exact_prefix_density(int q, int word_length) {
    if (q < 2) throw std::invalid_argument("z2_exact_prefix_density: q must be >= 2");
    if (word_length < 1)
        throw std::invalid_argument("z2_exact_prefix_density: length must be >= 1");
    int lmax = (word_length + 1) / 2 - 1; // l ranges over 0 .. ceil(M/2)-1
    auto a = a_seq(q, std::max(lmax, 0));
    Rat sum(0);
    for (int l = 0; l <= lmax; ++l)
        sum += Rat(a[static_cast<std::size_t>(l)]) * rat_qpow(q, -2L * l);
    return sum;
}

namespace {

constexpr long long kEnumBudget = 10'000'000;

DensityEstimate run_empirical(int q, int n, bool exhaustive, long long samples,
                              std::uint64_t seed, const std::string& target,
                              const std::function<bool(std::span<const Letter>)>& hit) {
    if (q < 2) throw std::invalid_argument("empirical_density: q must be >= 2");
    if (n < 0) throw std::invalid_argument("empirical_density: n must be >= 0");
    DensityEstimate e;
    e.q = q;
    e.exhaustive = exhaustive;
    e.word_length = n;
    e.seed = seed;
    e.target = target;
    if (exhaustive) {
        double total = std::pow(static_cast<double>(q), n);
        if (total > static_cast<double>(kEnumBudget))
            throw size_error("empirical_density: q^n exceeds the enumeration budget");
        std::vector<Letter> w(static_cast<std::size_t>(n), 0);
        Int count = 0;
        Int denom = int_pow(static_cast<unsigned long>(q), static_cast<unsigned long>(n));
        if (n == 0) {
            count = hit(w) ? 1 : 0;
        } else {
            do {
                if (hit(w)) ++count;
            } while ([&] {
                for (std::size_t i = w.size(); i-- > 0;) {
                    if (++w[i] < q) return true;
                    w[i] = 0;
                }
                return false;
            }());
        }
        e.value = Rat(count, denom);
        e.value.canonicalize();
        e.samples = denom.fits_slong_p() ? denom.get_si() : std::numeric_limits<long long>::max();
    } else {
        if (samples < 1)
            throw std::invalid_argument("empirical_density: need at least one sample");
        e.samples = samples;
        std::mt19937_64 rng(seed);
        // rejection sampling keeps letter draws unbiased and reproducible
        const std::uint64_t qq = static_cast<std::uint64_t>(q);
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() / qq * qq;
        std::vector<Letter> w(static_cast<std::size_t>(n), 0);
        long long hits = 0;
        for (long long s = 0; s < samples; ++s) {
            for (auto& x : w) {
                std::uint64_t r;
                do { r = rng(); } while (r >= limit);
                x = static_cast<Letter>(r % qq);
            }
            if (hit(w)) ++hits;
        }
        e.value = Rat(static_cast<long>(hits), static_cast<long>(samples));
        e.value.canonicalize();
    }
    return e;
}

} // namespace

DensityEstimate empirical_density_zimin(int zimin_n, int q, int n, bool exhaustive,
                                        long long samples, std::uint64_t seed) {
    if (zimin_n < 0) throw std::invalid_argument("empirical_density: zimin index >= 0");
    std::string target = "I_n(Z" + std::to_string(zimin_n) + "," + std::to_string(q) + ")";
    return run_empirical(q, n, exhaustive, samples, seed, target,
                         [zimin_n](std::span<const Letter> w) {
                             if (zimin_n == 0) return w.empty();
                             return !w.empty() && detail::zimin_level(w) >= zimin_n;
                         });
}

DensityEstimate empirical_density_pattern(const Pattern& v, int q, int n, bool exhaustive,
                                          long long samples, std::uint64_t seed) {
    std::string target = "I_n(pattern," + std::to_string(q) + ")";
    return run_empirical(q, n, exhaustive, samples, seed, target,
                         [&v, q](std::span<const Letter> w) {
                             Word word(std::vector<Letter>(w.begin(), w.end()), q);
                             return is_instance(word, v);
                         });
}

nlohmann::ordered_json to_json(const BoundsResult& b, int digits) {
    nlohmann::ordered_json j;
    j["target"] = b.target;
    j["q"] = b.q;
    j["params"] = {{"N", b.trunc_outer}, {"M", b.trunc_inner}};
    j["lower"] = to_fraction_string(b.lower);
    j["upper"] = to_fraction_string(b.upper);
    j["decimal"] = {{"lower", to_decimal(b.lower, digits)},
                    {"upper", to_decimal(b.upper, digits)},
                    {"digits", digits}};
    return j;
}

nlohmann::ordered_json to_json(const DensityEstimate& e, int digits) {
    nlohmann::ordered_json j;
    j["target"] = e.target;
    j["q"] = e.q;
    j["mode"] = e.exhaustive ? "exhaustive" : "montecarlo";
    j["n"] = e.word_length;
    j["samples"] = e.samples;
    if (!e.exhaustive) j["seed"] = e.seed;
    j["value"] = to_fraction_string(e.value);
    j["decimal"] = {{"value", to_decimal(e.value, digits)}, {"digits", digits}};
    return j;
}

} // namespace zimin
