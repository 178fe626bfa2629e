#include "zimin/oracles.hpp"

#include "zimin/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace zimin {

namespace {

constexpr long kEnumBudget = 10'000'000;

void check_budget(int q, int len) {
    double total = 1;
    for (int i = 0; i < len; ++i) {
        total *= q;
        if (total > static_cast<double>(kEnumBudget))
            throw size_error("oracle: q^" + std::to_string(len) +
                             " exceeds the enumeration budget");
    }
}

// odometer over [q]^len; returns false once wrapped around
bool next_word(std::vector<Letter>& w, int q) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (++w[i] < q) return true;
        w[i] = 0;
    }
    return false;
}

bool span_bifix_free(std::span<const Letter> w) {
    return detail::border_array(w).back() == 0;
}

// true iff prefix w[0,t) is an aba-shaped (Z_2) instance
std::vector<char> z2_prefix_flags(std::span<const Letter> w) {
    auto minb = detail::min_border_table(w);
    std::vector<char> f(w.size() + 1, 0);
    for (std::size_t t = 1; t <= w.size(); ++t)
        f[t] = minb[t] != 0 && 2 * minb[t] < t;
    return f;
}

bool span_has_z2_bifix(std::span<const Letter> w) {
    auto pi = detail::border_array(w);
    auto flags = z2_prefix_flags(w);
    for (std::size_t t = pi[w.size()]; t != 0; t = pi[t])
        if (flags[t]) return true;
    return false;
}

void require_context(const Word& L) {
    if (L.is_empty())
        throw std::invalid_argument("oracle: context word must be nonempty");
    if (!is_bifix_free(L))
        throw std::invalid_argument("oracle: context word must be bifix-free");
}

} // namespace

Int oracle_bifix_free_count(int q, int ell) {
    if (q < 2) throw std::invalid_argument("oracle: q must be >= 2");
    if (ell < 0) throw std::invalid_argument("oracle: ell must be >= 0");
    if (ell == 0) return 0; // the empty word has no proper prefix
    check_budget(q, ell);
    std::vector<Letter> w(static_cast<std::size_t>(ell), 0);
    Int count = 0;
    do {
        if (span_bifix_free(w)) ++count;
    } while (next_word(w, q));
    return count;
}

Int oracle_b_count(int q, const Word& L, int m) {
    require_context(L);
    if (q < 2) throw std::invalid_argument("oracle: q must be >= 2");
    int l = static_cast<int>(L.size());
    if (m <= 2 * l) return 0; // the middle must be nonempty
    check_budget(q, m - 2 * l);
    std::vector<Letter> w(static_cast<std::size_t>(m), 0);
    std::copy(L.letters().begin(), L.letters().end(), w.begin());
    std::copy(L.letters().begin(), L.letters().end(),
              w.begin() + (m - l));
    std::span<Letter> mid(w.data() + l, static_cast<std::size_t>(m - 2 * l));
    std::vector<Letter> a(mid.size(), 0);
    Int count = 0;
    do {
        std::copy(a.begin(), a.end(), mid.begin());
        if (!span_has_z2_bifix(w)) ++count;
    } while (next_word(a, q));
    return count;
}

Int oracle_bhat_count(int q, const Word& L, int m) {
    require_context(L);
    if (q < 2) throw std::invalid_argument("oracle: q must be >= 2");
    int l = static_cast<int>(L.size());
    if (m <= 2 * l) return 0;
    check_budget(q, m - 2 * l);
    std::vector<Letter> w(static_cast<std::size_t>(m), 0);
    std::copy(L.letters().begin(), L.letters().end(), w.begin());
    std::copy(L.letters().begin(), L.letters().end(), w.begin() + (m - l));
    std::span<Letter> mid(w.data() + l, static_cast<std::size_t>(m - 2 * l));
    std::vector<Letter> a(mid.size(), 0);
    auto L_at = [&](std::size_t pos) {
        for (int i = 0; i < l; ++i)
            if (w[pos + static_cast<std::size_t>(i)] != L[static_cast<std::size_t>(i)])
                return false;
        return true;
    };
    Int count = 0;
    do {
        std::copy(a.begin(), a.end(), mid.begin());
        // excluded iff some prefix P = w[0,k) ending in L recurs as the
        // suffix with gap >= 0 (shapes LBLCLBL / LBLLBL) or overlap
        // exactly L (shape LBLBL)
        bool excluded = false;
        for (int k = 2 * l + 1; 2 * k <= m + l && !excluded; ++k) {
            if (2 * k > m && 2 * k != m + l) continue;
            if (!L_at(static_cast<std::size_t>(k - l))) continue;
            if (std::equal(w.begin(), w.begin() + k, w.begin() + (m - k)))
                excluded = true;
        }
        if (!excluded) ++count;
    } while (next_word(a, q));
    return count;
}

Int oracle_z2_instance_count(int q, int n) {
    if (q < 2) throw std::invalid_argument("oracle: q must be >= 2");
    if (n < 0) throw std::invalid_argument("oracle: n must be >= 0");
    if (n == 0) return 0;
    check_budget(q, n);
    std::vector<Letter> w(static_cast<std::size_t>(n), 0);
    auto is_z2 = [](std::span<const Letter> s) {
        auto minb = detail::min_border_table(s);
        return minb.back() != 0 && 2 * minb.back() < s.size();
    };
    Int count = 0;
    do {
        if (is_z2(w)) ++count;
    } while (next_word(w, q));
    return count;
}

const char* to_string(BifixCase c) {
    switch (c) {
        case BifixCase::case_i: return "i";
        case BifixCase::case_ii: return "ii";
        case BifixCase::case_iii: return "iii";
        case BifixCase::case_iv: return "iv";
        case BifixCase::case_v: return "v";
        case BifixCase::none: return "none";
    }
    return "?";
}

BifixCase classify_bifix_case(const Word& w, const Word& L) {
    require_context(L);
    std::size_t l = L.size();
    std::size_t m = w.size();
    auto bifixes = bifix_lengths(w);
    bool prefix_is_L = m >= l;
    for (std::size_t i = 0; i < l && prefix_is_L; ++i)
        prefix_is_L = w[i] == L[i];
    if (!prefix_is_L || std::find(bifixes.begin(), bifixes.end(), l) == bifixes.end())
        throw std::invalid_argument("classify_bifix_case: L is not a bifix of w");
    auto flags = z2_prefix_flags(w.letters());
    std::size_t k = 0;
    for (std::size_t t : bifixes)
        if (flags[t]) { k = t; break; } // shortest aba-shaped bifix
    if (k == 0) return BifixCase::none;

    auto starts_ends_with = [&](std::size_t from, std::size_t to) {
        // w[from,to) begins and ends with L
        if (to - from < 2 * l) return false;
        for (std::size_t i = 0; i < l; ++i)
            if (w[from + i] != L[i] || w[to - l + i] != L[i]) return false;
        return true;
    };

    if (m == 4 * l) {
        bool all_L = true;
        for (std::size_t i = 0; i < m && all_L; ++i)
            all_L = w[i] == L[i % l];
        if (all_L) return BifixCase::case_v;
    }
    if (2 * k < m) return BifixCase::case_i;
    if (2 * k == m) return BifixCase::case_ii;
    if (2 * k == m + l) return BifixCase::case_iii;
    if (2 * k == m + 2 * l) {
        // shortest bifix should be LLFLL with F nonempty
        if (k >= 4 * l + 1 && starts_ends_with(0, 2 * l) && starts_ends_with(k - 2 * l, k))
            return BifixCase::case_iv;
    }
    throw std::logic_error("classify_bifix_case: word fits none of the five shapes");
}

} // namespace zimin
