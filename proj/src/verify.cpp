#include "zimin/verify.hpp"

#include "zimin/density.hpp"
#include "zimin/oracles.hpp"
#include "zimin/sequences.hpp"
#include "zimin/text.hpp"
#include "zimin/words.hpp"

#include <map>
#include <sstream>

namespace zimin {

namespace {

CheckResult check(const std::string& name, bool pass, const std::string& detail) {
    return {name, pass, detail};
}

// two bifix-free contexts per length, for the L-independence checks
const std::map<int, std::pair<std::string, std::string>> kContexts = {
    {1, {"0", "1"}},
    {2, {"01", "10"}},
    {3, {"100", "011"}},
};

} // namespace

std::vector<CheckResult> verify_recursions(bool quick) {
    std::vector<CheckResult> out;

    {
        int lmax2 = quick ? 12 : 20;
        int lmax3 = quick ? 8 : 12;
        bool ok = true;
        std::ostringstream detail;
        int checked = 0;
        for (auto [q, lmax] : {std::pair{2, lmax2}, std::pair{3, lmax3}}) {
            auto a = a_seq(q, lmax);
            for (int l = 0; l <= lmax; ++l, ++checked) {
                Int o = oracle_bifix_free_count(q, l);
                if (o != a[static_cast<size_t>(l)]) {
                    ok = false;
                    detail << " mismatch a(q=" << q << ",l=" << l << "): recursion "
                           << a[static_cast<size_t>(l)].get_str() << " vs enumeration "
                           << o.get_str() << ";";
                }
            }
        }
        out.push_back(check("a-vs-enumeration", ok,
                            std::to_string(checked) + " (q,l) pairs" + detail.str()));
    }

    {
        bool ok = true, indep_ok = true;
        std::ostringstream detail;
        int checked = 0;
        for (int l = 1; l <= 3; ++l) {
            int mmax = quick ? (8 + 2 * l) : (l == 3 ? 18 : 14);
            auto [lit1, lit2] = kContexts.at(l);
            Word L1 = parse_word(lit1, 2).word;
            Word L2 = parse_word(lit2, 2).word;
            auto b = b_seq(2, l, mmax);
            for (int m = 0; m <= mmax; ++m, ++checked) {
                Int o1 = oracle_b_count(2, L1, m);
                Int o2 = oracle_b_count(2, L2, m);
                if (o1 != b[static_cast<size_t>(m)]) {
                    ok = false;
                    detail << " mismatch b(q=2,l=" << l << ",m=" << m << "): recursion "
                           << b[static_cast<size_t>(m)].get_str() << " vs enumeration "
                           << o1.get_str() << ";";
                }
                if (o1 != o2) {
                    indep_ok = false;
                    detail << " context-dependence at l=" << l << ",m=" << m << ";";
                }
            }
        }
        {
            // q = 3 slice
            const char* lits3[] = {"0", "01", "012"};
            for (int l = 1; l <= (quick ? 1 : 3); ++l) {
                Word L1 = parse_word(lits3[l - 1], 3).word;
                int mmax = quick ? 7 : 9;
                auto b = b_seq(3, l, mmax);
                for (int m = 0; m <= mmax; ++m, ++checked)
                    if (oracle_b_count(3, L1, m) != b[static_cast<size_t>(m)]) {
                        ok = false;
                        detail << " mismatch b(q=3,l=" << l << ",m=" << m << ");";
                    }
            }
        }
        if (!quick) {
            // independence over every bifix-free context of each length
            for (int l = 1; l <= 3; ++l) {
                std::vector<Word> contexts;
                std::vector<Letter> w(static_cast<size_t>(l), 0);
                for (bool more = true; more;) {
                    Word cand(w, 2);
                    if (is_bifix_free(cand)) contexts.push_back(cand);
                    more = false;
                    for (size_t i = w.size(); i-- > 0;) {
                        if (++w[i] < 2) { more = true; break; }
                        w[i] = 0;
                    }
                }
                for (int m = 2 * l + 1; m <= 12; ++m) {
                    Int first = oracle_b_count(2, contexts.front(), m);
                    for (const Word& L : contexts)
                        if (oracle_b_count(2, L, m) != first) {
                            indep_ok = false;
                            detail << " context-dependence at l=" << l << ",m=" << m << ";";
                        }
                }
            }
        }
        out.push_back(check("b-vs-enumeration", ok,
                            std::to_string(checked) + " (q,l,m) triples" + detail.str()));
        out.push_back(check("b-context-independence", indep_ok,
                            quick ? "two contexts per length 1..3"
                                  : "every bifix-free context of length 1..3, m <= 12"));
    }

    if (!quick) {
        // exceptional indices around 4l..6l in both large regimes:
        // even at l = 4, odd at l = 5
        bool ok = true;
        std::ostringstream detail;
        auto spots = [&](const char* lit, int l, std::initializer_list<int> ms) {
            Word L = parse_word(lit, 2).word;
            auto b = b_seq(2, l, 30);
            for (int m : ms) {
                Int o = oracle_b_count(2, L, m);
                if (o != b[static_cast<size_t>(m)]) {
                    ok = false;
                    detail << " mismatch b(q=2,l=" << l << ",m=" << m << "): recursion "
                           << b[static_cast<size_t>(m)].get_str() << " vs enumeration "
                           << o.get_str() << ";";
                }
            }
        };
        spots("0001", 4, {16, 17, 18, 19, 20, 21, 22, 23, 24});
        spots("00001", 5, {20, 21, 25, 26, 30});
        out.push_back(check("b-exceptional-indices", ok,
                            "l=4 m=16..24 and l=5 m in {20,21,25,26,30}" + detail.str()));
    }

    {
        // bhat: enumeration count dominates b pointwise; the recursion and
        // the enumeration agree on the b = 0 range and the seed
        bool dominates = true, seed_ok = true;
        std::ostringstream detail;
        for (int l = 1; l <= (quick ? 2 : 3); ++l) {
            Word L = parse_word(kContexts.at(l).first, 2).word;
            int mmax = quick ? 10 : 12 + l;
            auto b = b_seq(2, l, mmax);
            auto bh = bhat_seq(2, l, mmax);
            for (int m = 0; m <= mmax; ++m) {
                Int o = oracle_bhat_count(2, L, m);
                if (o < b[static_cast<size_t>(m)]) {
                    dominates = false;
                    detail << " enumeration bhat < b at (l=" << l << ",m=" << m << ");";
                }
            }
            if (bh[static_cast<size_t>(2 * l + 1)] != 2) seed_ok = false;
        }
        out.push_back(check("bhat-overcounts-b", dominates,
                            "enumeration comparison, q=2" + detail.str()));
        out.push_back(check("bhat-seed", seed_ok, "bhat_{2l+1} = q"));
    }

    {
        // entrywise structure of the recursion outputs
        bool ok = true;
        for (int q : {2, 3})
            for (int l = 1; l <= 3; ++l) {
                auto [c, d] = cd_seq(q, l, 24);
                auto b = b_seq(q, l, 24);
                auto bh = bhat_seq(q, l, 24);
                for (int m = 0; m <= 24; ++m) {
                    auto mi = static_cast<size_t>(m);
                    ok &= c[mi] >= 0 && d[mi] >= 0 && bh[mi] >= 0;
                    ok &= b[mi] == c[mi] + d[mi];
                    if (m > 2 * l)
                        ok &= b[mi] <= int_pow(static_cast<unsigned long>(q),
                                               static_cast<unsigned long>(m - 2 * l));
                }
                auto a = a_seq(q, 20);
                for (int i = 0; i <= 20; ++i)
                    ok &= a[static_cast<size_t>(i)] <=
                          int_pow(static_cast<unsigned long>(q), static_cast<unsigned long>(i));
            }
        out.push_back(check("sequence-invariants", ok,
                            "nonnegative, b = c + d, count bounds"));
    }

    return out;
}

std::vector<CheckResult> verify_cases(bool quick) {
    int max_len = quick ? 10 : 12;
    Word L = parse_word("0", 2).word;
    long total = 0, with_z2_bifix = 0;
    std::map<BifixCase, long> tally;
    bool ok = true;
    std::ostringstream detail;
    for (int m = 2; m <= max_len; ++m) {
        std::vector<Letter> mid(static_cast<size_t>(m - 2), 0);
        bool more = true;
        while (more) {
            std::vector<Letter> lv;
            lv.push_back(0);
            lv.insert(lv.end(), mid.begin(), mid.end());
            lv.push_back(0);
            Word w(lv, 2);
            ++total;
            BifixCase tag;
            try {
                tag = classify_bifix_case(w, L);
            } catch (const std::logic_error&) {
                ok = false;
                detail << " unclassifiable word " << format_word(w) << ";";
                tag = BifixCase::none;
            }
            ++tally[tag];
            if (tag != BifixCase::none) ++with_z2_bifix;

            // independent mutual-exclusivity probe: each shape tested on
            // its own from the shortest aba-shaped bifix
            auto bl = bifix_lengths(w);
            size_t k = 0;
            for (size_t t : bl) {
                if (t < w.size() && is_zimin_instance(w.substring(0, t), 2)) { k = t; break; }
            }
            if (k != 0) {
                size_t mm = w.size();
                Word U = w.substring(0, k);
                int fired = 0;
                if (2 * k < mm && w.substring(mm - k, mm) == U) ++fired;           // i
                if (2 * k == mm && w.substring(k, mm) == U) ++fired;               // ii
                if (2 * k == mm + 1 && w.substring(mm - k, mm) == U) ++fired;      // iii
                if (2 * k == mm + 2 && k >= 5 && w[1] == 0 && w[k - 2] == 0 &&
                    w[k - 1] == 0 && w.substring(mm - k, mm) == U) ++fired;        // iv
                if (w.size() == 4 && w == Word({0, 0, 0, 0}, 2)) ++fired;          // v
                if (fired != 1) {
                    ok = false;
                    detail << " shape count " << fired << " for " << format_word(w) << ";";
                }
            } else if (tag != BifixCase::none) {
                ok = false;
            }

            more = false;
            for (size_t i = mid.size(); i-- > 0;) {
                if (++mid[i] < 2) { more = true; break; }
                mid[i] = 0;
            }
        }
    }
    std::ostringstream summary;
    summary << total << " words;";
    for (auto [tag, n] : tally) summary << " " << to_string(tag) << "=" << n;
    summary << detail.str();
    std::vector<CheckResult> out;
    out.push_back(check("five-shape-partition", ok, summary.str()));
    if (!quick) {
        bool counts_ok = total == 2047 && tally[BifixCase::case_i] == 378 &&
                         tally[BifixCase::case_ii] == 25 && tally[BifixCase::case_iii] == 25 &&
                         tally[BifixCase::case_iv] == 10 && tally[BifixCase::case_v] == 1 &&
                         tally[BifixCase::none] == 1608;
        out.push_back(check("five-shape-tallies", counts_ok,
                            "frozen tallies for length <= 12"));
    }
    return out;
}

std::vector<CheckResult> verify_sandwich(bool quick) {
    std::vector<CheckResult> out;

    {
        bool ok = true;
        for (int q = 2; q <= 3; ++q) {
            Rat prev = abs(series_term_F(q, 0));
            for (int i = 1; i <= 8; ++i) {
                Rat cur = abs(series_term_F(q, i));
                ok &= cur < prev;
                prev = cur;
            }
            for (int l = 1; l <= 3; ++l) {
                Rat pg = abs(series_term_G(l, q, 0));
                Rat ph = abs(series_term_H(l, q, 0));
                for (int i = 1; i <= 8; ++i) {
                    Rat cg = abs(series_term_G(l, q, i));
                    Rat ch = abs(series_term_H(l, q, i));
                    ok &= cg < pg && ch < ph;
                    Rat sg = series_term_G(l, q, i);
                    Rat sh = series_term_H(l, q, i);
                    ok &= (i % 2 == 0 ? sg > 0 : sg < 0);
                    ok &= (i % 2 == 0 ? sh > 0 : sh < 0);
                    pg = cg;
                    ph = ch;
                }
            }
        }
        out.push_back(check("term-magnitudes-decreasing", ok,
                            "|F|,|G|,|H| strictly decreasing, signs (-1)^i; i <= 8"));
    }

    {
        bool ok = true;
        for (int q = 2; q <= 8; ++q) {
            Rat odd_max(-1), even_min(2);
            Rat prev_odd(-1), prev_even(2);
            for (int J = 0; J <= 10; ++J) {
                Rat s = iz2_partial(q, J);
                if (J % 2 == 1) {
                    ok &= prev_odd < 0 || s > prev_odd; // odd partials increase
                    prev_odd = s;
                    odd_max = s;
                } else {
                    ok &= prev_even > 1 || s < prev_even; // even partials decrease
                    prev_even = s;
                    even_min = s;
                }
            }
            ok &= odd_max < even_min;
        }
        out.push_back(check("z2-partial-sandwich", ok, "q = 2..8, J <= 10"));
    }

    {
        bool ok = true;
        std::vector<int> ns = quick ? std::vector<int>{8, 16} : std::vector<int>{8, 16, 31};
        std::vector<int> ms = {2, 4, 6};
        std::ostringstream grid;
        grid << "grid {8,16" << (quick ? "" : ",31") << "} x {2,4,6}, q in {2,3}";
        for (int q : {2, 3}) {
            std::map<std::pair<int, int>, BoundsResult> grid;
            for (int n : ns)
                for (int m : ms) grid[{n, m}] = iz3_bounds(q, n, m);
            for (auto& [nm, b] : grid) ok &= b.lower <= b.upper;
            for (int i1 = 0; i1 < static_cast<int>(ns.size()); ++i1)
                for (int j1 = 0; j1 < static_cast<int>(ms.size()); ++j1)
                    for (int i2 = i1; i2 < static_cast<int>(ns.size()); ++i2)
                        for (int j2 = j1; j2 < static_cast<int>(ms.size()); ++j2) {
                            auto& c1 = grid[{ns[static_cast<size_t>(i1)], ms[static_cast<size_t>(j1)]}];
                            auto& c2 = grid[{ns[static_cast<size_t>(i2)], ms[static_cast<size_t>(j2)]}];
                            ok &= c1.lower <= c2.lower && c2.upper <= c1.upper;
                        }
        }
        out.push_back(check("z3-bounds-nested", ok, grid.str()));
    }

    {
        // fhat: bracketing and the series-level overcount against b
        bool ok = true;
        for (int q : {2, 3})
            for (int l = 1; l <= 3; ++l) {
                Rat up = fhat_partial(l, q, 9);
                Rat lo = fhat_partial(l, q, 10);
                ok &= lo <= up;
                auto b = b_seq(q, l, 40);
                Rat bsum(0);
                for (int m = 0; m <= 40; ++m)
                    bsum += Rat(b[static_cast<size_t>(m)]) * rat_qpow(q, -2L * m);
                ok &= lo >= bsum;
                // bhat coefficients resum to fhat within the m > 40 tail
                auto bh = bhat_seq(q, l, 40);
                Rat bhsum(0);
                for (int m = 0; m <= 40; ++m)
                    bhsum += Rat(bh[static_cast<size_t>(m)]) * rat_qpow(q, -2L * m);
                Rat tail = rat_qpow(q, -36); // generous bound on the m > 40 coefficient tail
                ok &= bhsum <= up && up - bhsum <= tail + (up - lo);
            }
        out.push_back(check("fhat-bracketing-and-overcount", ok,
                            "q in {2,3}, l <= 3: bracket, >= b-series, coefficients"));
    }

    return out;
}

namespace {

std::string decimal_value(const BoundsResult& b, int digits) {
    std::string lo = to_decimal(b.lower, digits);
    std::string hi = to_decimal(b.upper, digits);
    return lo == hi ? lo : ("[" + lo + "," + hi + "]");
}

} // namespace

std::vector<CheckResult> verify_tables(bool) {
    std::vector<CheckResult> out;

    const char* z2_7[] = {"0.7322132", "0.4430202", "0.3122520", "0.2399355", "0.1944229"};
    const char* z2_5[] = {"0.73221", "0.44302", "0.31225", "0.23994", "0.19442", "0.16326", "0.14062"};
    const char* z3_8[] = {"0.11944370", "0.01835140", "0.00519251", "0.00199739", "0.00092532"};
    const char* mid_5[] = {"0.87500", "0.46296", "0.31771", "0.24200", "0.19537", "0.16375", "0.14090"};

    {
        bool ok = true;
        std::ostringstream detail;
        for (int q = 2; q <= 8; ++q) {
            auto b = iz2_bounds(q, rat_from_string("1e-9"));
            std::string five = decimal_value(b, 5);
            if (five != z2_5[q - 2]) { ok = false; detail << " q=" << q << " got " << five << ";"; }
            if (q <= 6) {
                std::string seven = decimal_value(b, 7);
                if (seven != z2_7[q - 2]) { ok = false; detail << " q=" << q << " got " << seven << ";"; }
            }
        }
        out.push_back(check("table-z2-values", ok, "7 digits q=2..6, 5 digits q=2..8" + detail.str()));
    }

    {
        bool ok = true;
        std::ostringstream detail;
        for (int q = 2; q <= 6; ++q) {
            auto b = iz3_auto(q, rat_from_string("1e-9"));
            std::string eight = decimal_value(b, 8);
            if (eight != z3_8[q - 2]) { ok = false; detail << " q=" << q << " got " << eight << ";"; }
        }
        out.push_back(check("table-z3-values", ok, "8 digits, q = 2..6" + detail.str()));
    }

    {
        // the comparison rows: q^-1 < I(Z2,q) and the two (q-1)^-1 rows
        bool ok = true;
        for (int q = 2; q <= 8; ++q) {
            auto b = iz2_bounds(q, rat_from_string("1e-9"));
            Rat inv_q(1, q), inv_q1(1, q - 1);
            Rat mid = inv_q1 - rat_qpow(q, -3);
            ok &= inv_q < b.lower && b.upper < mid && mid < inv_q1;
            if (to_decimal(mid, 5) != mid_5[q - 2]) ok = false;
        }
        out.push_back(check("table-z2-comparison-rows", ok,
                            "q^-1 < I(Z2,q) < (q-1)^-1 - q^-3 < (q-1)^-1, q = 2..8"));
    }

    return out;
}

std::vector<CheckResult> verify_all(bool quick) {
    std::vector<CheckResult> out;
    for (auto&& part : {verify_recursions(quick), verify_cases(quick),
                        verify_sandwich(quick), verify_tables(quick)})
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace zimin
