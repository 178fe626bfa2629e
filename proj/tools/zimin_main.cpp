// zimin -- command-line front end: pattern queries, sequence dumps,
// density computations, verification suites, and reference tables
#include "zimin/density.hpp"
#include "zimin/errors.hpp"
#include "zimin/oracles.hpp"
#include "zimin/sequences.hpp"
#include "zimin/text.hpp"
#include "zimin/verify.hpp"
#include "zimin/words.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using namespace zimin;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCompute = 3;

struct CacheGuard {
    std::string path;
    ~CacheGuard() {
        if (path.empty()) return;
        try {
            SeqStore::global().save_cache(path);
        } catch (const std::exception& e) {
            std::cerr << "warning: could not write cache: " << e.what() << "\n";
        }
    }
};

void load_cache_if_any(const std::string& path) {
    if (path.empty()) return;
    std::ifstream probe(path);
    if (!probe.good()) return; // fresh cache; will be created on exit
    try {
        SeqStore::global().load_cache(path);
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring unreadable cache: " << e.what() << "\n";
    }
}

ParsedWord parse_word_arg(const std::string& literal, int q, const std::string& alphabet) {
    if (!alphabet.empty())
        return parse_word_with_alphabet(literal, split_tokens(alphabet));
    return parse_word(literal, q);
}

// ---- check ----------------------------------------------------------

int run_check(const std::string& what, const std::string& word_lit,
              const std::string& pattern_lit, int q, const std::string& alphabet) {
    ParsedPattern pp = parse_pattern(pattern_lit);
    if (what == "unavoidable") {
        bool r = is_unavoidable(pp.pattern);
        std::cout << (r ? "true" : "false") << "\n";
        return r ? kExitTrue : kExitFalse;
    }
    ParsedWord pw = parse_word_arg(word_lit, q, alphabet);
    if (what == "instance") {
        auto phi = instance_witness(pw.word, pp.pattern);
        std::cout << (phi ? "true" : "false") << "\n";
        if (phi)
            for (int v = 0; v < phi->variable_count(); ++v) {
                std::string img;
                for (Letter x : phi->image(v).letters())
                    img += pw.symbols.empty() ? std::to_string(x)
                                              : pw.symbols[static_cast<size_t>(x)];
                std::cout << pp.symbols[static_cast<size_t>(v)] << " -> " << img << "\n";
            }
        return phi ? kExitTrue : kExitFalse;
    }
    if (what == "encounters") {
        bool r = encounters(pw.word, pp.pattern);
        std::cout << (r ? "true" : "false") << "\n";
        return r ? kExitTrue : kExitFalse;
    }
    if (what == "zimin-instance") {
        int n = std::stoi(pattern_lit); // pattern slot holds the index here
        bool r = is_zimin_instance(pw.word, n);
        std::cout << (r ? "true" : "false") << "\n";
        return r ? kExitTrue : kExitFalse;
    }
    throw CLI::ValidationError("check", "unknown query: " + what);
}

// ---- seq ------------------------------------------------------------

int run_seq(const std::string& kind_name, int q, int ell, int maxm,
            const std::string& format) {
    auto kind = seq_kind_from_string(kind_name);
    if (!kind) throw CLI::ValidationError("seq", "unknown kind: " + kind_name);
    auto vals = SeqStore::global().values(*kind, q, ell, maxm);
    if (format == "plain") {
        for (const auto& v : vals) std::cout << v.get_str() << "\n";
    } else if (format == "csv") {
        std::cout << "kind,q,ell,m,value\n";
        for (size_t m = 0; m < vals.size(); ++m)
            std::cout << kind_name << "," << q << ","
                      << (*kind == SeqKind::a ? 0 : ell) << "," << m << ","
                      << vals[m].get_str() << "\n";
    } else if (format == "json") {
        nlohmann::ordered_json j;
        j["kind"] = kind_name;
        j["q"] = q;
        j["ell"] = *kind == SeqKind::a ? 0 : ell;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& v : vals) arr.push_back(v.get_str());
        j["values"] = std::move(arr);
        std::cout << j.dump(1) << "\n";
    } else {
        throw CLI::ValidationError("seq", "unknown format: " + format);
    }
    return kExitTrue;
}

// ---- density --------------------------------------------------------

// Tightens until both enclosing bounds agree on the printed digits, so
// the output is the correctly rounded decimal.
template <typename Compute>
std::pair<BoundsResult, std::string> rounded_bounds(Compute&& compute, int digits) {
    Rat eps = rat_from_string("1e-" + std::to_string(digits + 2));
    for (int attempt = 0; attempt < 4; ++attempt) {
        BoundsResult b = compute(eps);
        std::string lo = to_decimal(b.lower, digits);
        std::string hi = to_decimal(b.upper, digits);
        if (lo == hi) return {std::move(b), std::move(lo)};
        eps /= 1000;
    }
    throw convergence_error("density: bounds straddle a rounding boundary");
}

int run_density(const std::string& target, int q, int digits, const std::string& eps_str,
                int n_arg, const std::string& caps_str, const std::string& mode,
                long long samples, std::uint64_t seed, const std::string& pattern_lit,
                int zimin_n, const std::string& format) {
    if (target == "z2" || target == "z3") {
        auto compute = [&](const Rat& eps) {
            return target == "z2" ? iz2_bounds(q, eps) : iz3_auto(q, eps);
        };
        BoundsResult b;
        std::string value;
        if (!eps_str.empty()) {
            b = compute(rat_from_string(eps_str));
            value = to_decimal((b.lower + b.upper) / 2, digits);
        } else {
            std::tie(b, value) = rounded_bounds(compute, digits);
        }
        if (format == "json") {
            std::cout << to_json(b, digits).dump(1) << "\n";
        } else {
            std::cout << value << "\n";
            std::cout << "target: " << b.target << "\n";
            std::cout << "lower:  " << to_decimal(b.lower, digits + 4) << "\n";
            std::cout << "upper:  " << to_decimal(b.upper, digits + 4) << "\n";
            std::cout << "params: N=" << b.trunc_outer << " M=" << b.trunc_inner << "\n";
        }
        return kExitTrue;
    }
    if (target == "zn-bounds") {
        int n = n_arg;
        if (n < 1) throw CLI::ValidationError("density", "zn-bounds requires --n >= 1");
        BoundsResult gen = izn_generic_bounds(n, q);
        std::optional<Rat> chain;
        if (n >= 3 && !caps_str.empty()) {
            std::vector<int> caps;
            for (const auto& t : split_tokens(caps_str)) caps.push_back(std::stoi(t));
            chain = izn_upper(n, q, caps);
        }
        if (format == "json") {
            nlohmann::ordered_json j = to_json(gen, digits);
            if (chain) {
                j["chain_upper"] = to_fraction_string(*chain);
                j["decimal"]["chain_upper"] = to_decimal(*chain, digits);
            }
            std::cout << j.dump(1) << "\n";
        } else {
            std::cout << (chain ? to_decimal(*chain, digits) : to_decimal(gen.upper, digits))
                      << "\n";
            std::cout << "target: " << gen.target << "\n";
            std::cout << "generic-lower: " << to_decimal(gen.lower, digits) << "\n";
            std::cout << "generic-upper: " << to_decimal(gen.upper, digits) << "\n";
            if (chain) std::cout << "chain-upper:   " << to_decimal(*chain, digits) << "\n";
        }
        return kExitTrue;
    }
    if (target == "empirical") {
        bool exhaustive = mode != "montecarlo";
        DensityEstimate e;
        if (!pattern_lit.empty()) {
            ParsedPattern pp = parse_pattern(pattern_lit);
            e = empirical_density_pattern(pp.pattern, q, n_arg, exhaustive, samples, seed);
        } else {
            e = empirical_density_zimin(zimin_n, q, n_arg, exhaustive, samples, seed);
        }
        if (format == "json") {
            std::cout << to_json(e, digits).dump(1) << "\n";
        } else {
            std::cout << to_decimal(e.value, digits) << "\n";
            std::cout << "target: " << e.target << "\n";
            std::cout << "mode:   " << (e.exhaustive ? "exhaustive" : "montecarlo") << "\n";
            std::cout << "n:      " << e.word_length << "\n";
            std::cout << "samples: " << e.samples << "\n";
            if (!e.exhaustive) std::cout << "seed:   " << e.seed << "\n";
            std::cout << "value:  " << to_fraction_string(e.value) << "\n";
        }
        return kExitTrue;
    }
    throw CLI::ValidationError("density", "unknown target: " + target);
}

// ---- table ----------------------------------------------------------

struct TableSpec {
    std::string title;
    std::vector<std::string> row_names;
    std::vector<int> qs;
    int digits;
};

int run_table(const std::string& which, const std::string& format) {
    TableSpec spec;
    std::vector<std::vector<std::string>> rows;
    auto z2_value = [](int q, int digits) {
        auto b = iz2_bounds(q, rat_from_string("1e-" + std::to_string(digits + 2)));
        return to_decimal((b.lower + b.upper) / 2, digits);
    };
    auto z3_value = [](int q, int digits) {
        auto b = iz3_auto(q, rat_from_string("1e-" + std::to_string(digits + 2)));
        return to_decimal((b.lower + b.upper) / 2, digits);
    };
    if (which == "t1") {
        spec = {"Approximate values of I(Z2,q) and I(Z3,q)",
                {"I(Z2,q)", "I(Z3,q)"}, {2, 3, 4, 5, 6}, 7};
        rows.resize(2);
        for (int q : spec.qs) {
            rows[0].push_back(z2_value(q, spec.digits));
            rows[1].push_back(z3_value(q, spec.digits));
        }
    } else if (which == "t2") {
        spec = {"Approximate values of I(Z2,q)", {"I(Z2,q)"}, {2, 3, 4, 5, 6, 7, 8}, 7};
        rows.resize(1);
        for (int q : spec.qs) rows[0].push_back(z2_value(q, spec.digits));
    } else if (which == "t3") {
        spec = {"I(Z2,q) against its closed-form neighbors",
                {"q^-1", "I(Z2,q)", "(q-1)^-1 - q^-3", "(q-1)^-1"},
                {2, 3, 4, 5, 6, 7, 8}, 5};
        rows.resize(4);
        for (int q : spec.qs) {
            rows[0].push_back(to_decimal(Rat(1, q), spec.digits));
            rows[1].push_back(z2_value(q, spec.digits));
            rows[2].push_back(to_decimal(Rat(1, q - 1) - rat_qpow(q, -3), spec.digits));
            rows[3].push_back(to_decimal(Rat(1, q - 1), spec.digits));
        }
    } else if (which == "t4") {
        spec = {"Approximate values of I(Z3,q)", {"I(Z3,q)"}, {2, 3, 4, 5, 6}, 8};
        rows.resize(1);
        for (int q : spec.qs) rows[0].push_back(z3_value(q, spec.digits));
    } else {
        throw CLI::ValidationError("table", "unknown table: " + which);
    }

    if (format == "csv") {
        std::cout << "row";
        for (int q : spec.qs) std::cout << ",q=" << q;
        std::cout << "\n";
        for (size_t r = 0; r < rows.size(); ++r) {
            std::cout << spec.row_names[r];
            for (const auto& v : rows[r]) std::cout << "," << v;
            std::cout << "\n";
        }
    } else if (format == "md") {
        std::cout << "| q |";
        for (int q : spec.qs) std::cout << " " << q << " |";
        std::cout << "\n|---|";
        for (size_t i = 0; i < spec.qs.size(); ++i) std::cout << "---|";
        std::cout << "\n";
        for (size_t r = 0; r < rows.size(); ++r) {
            std::cout << "| " << spec.row_names[r] << " |";
            for (const auto& v : rows[r]) std::cout << " " << v << " |";
            std::cout << "\n";
        }
    } else {
        std::cout << spec.title << "\n";
        std::cout << "q:";
        for (int q : spec.qs) std::cout << "\t" << q;
        std::cout << "\n";
        for (size_t r = 0; r < rows.size(); ++r) {
            std::cout << spec.row_names[r] << ":";
            for (const auto& v : rows[r]) std::cout << "\t" << v;
            std::cout << "\n";
        }
    }
    return kExitTrue;
}

// ---- verify ---------------------------------------------------------

int run_verify(const std::string& suite, bool quick) {
    std::vector<CheckResult> results;
    if (suite == "recursions") results = verify_recursions(quick);
    else if (suite == "cases") results = verify_cases(quick);
    else if (suite == "sandwich") results = verify_sandwich(quick);
    else if (suite == "tables") results = verify_tables(quick);
    else if (suite == "all") results = verify_all(quick);
    else throw CLI::ValidationError("verify", "unknown suite: " + suite);
    for (const auto& r : results)
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
    return all_passed(results) ? kExitTrue : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zimin: instance densities of Zimin words, exactly"};
    app.require_subcommand(1);

    std::string cache_path;
    auto add_cache_option = [&cache_path](CLI::App* sub) {
        sub->add_option("--cache", cache_path, "JSON sequence cache to read and update");
    };

    // check
    auto* check = app.add_subcommand("check", "word/pattern queries");
    add_cache_option(check);
    std::string check_what, check_word, check_pattern, check_alphabet;
    int check_q = 0, check_n = 0;
    check->add_option("query", check_what, "instance|encounters|unavoidable|zimin-instance")
        ->required();
    check->add_option("--word", check_word, "word literal");
    check->add_option("--pattern", check_pattern, "pattern literal");
    check->add_option("--n", check_n, "Zimin index for zimin-instance");
    check->add_option("--q", check_q, "alphabet size (inferred when omitted)");
    check->add_option("--alphabet", check_alphabet, "explicit token alphabet");

    // seq
    auto* seq = app.add_subcommand("seq", "dump a counting sequence");
    add_cache_option(seq);
    std::string seq_kind, seq_format = "plain";
    int seq_q = 2, seq_ell = 1, seq_max = 10;
    seq->add_option("kind", seq_kind, "a|c|d|b|bhat")->required();
    seq->add_option("--q", seq_q, "alphabet size");
    seq->add_option("--ell", seq_ell, "context length (ignored for a)");
    seq->add_option("--max", seq_max, "largest index to print");
    seq->add_option("--format", seq_format, "plain|csv|json");

    // density
    auto* density = app.add_subcommand("density", "density bounds and estimates");
    add_cache_option(density);
    std::string den_target, den_eps, den_caps, den_mode = "exhaustive", den_pattern,
                den_format = "plain";
    int den_q = 2, den_digits = 7, den_n = 0, den_zimin = 2;
    long long den_samples = 100000;
    std::uint64_t den_seed = 0;
    density->add_option("target", den_target, "z2|z3|zn-bounds|empirical")->required();
    density->add_option("--q", den_q, "alphabet size");
    density->add_option("--digits", den_digits, "decimal digits to print");
    density->add_option("--eps", den_eps, "explicit enclosure width (overrides digits-driven)");
    density->add_option("--n", den_n, "word length (empirical) or Zimin index (zn-bounds)");
    density->add_option("--caps", den_caps, "context-length caps for zn-bounds, comma separated");
    density->add_option("--mode", den_mode, "exhaustive|montecarlo");
    density->add_option("--samples", den_samples, "Monte Carlo sample count");
    density->add_option("--seed", den_seed, "Monte Carlo seed");
    density->add_option("--pattern", den_pattern, "pattern literal (empirical)");
    density->add_option("--zimin", den_zimin, "Zimin index (empirical)");
    density->add_option("--format", den_format, "plain|json");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_cache_option(verify);
    std::string verify_suite;
    std::string verify_budget = "full";
    verify->add_option("suite", verify_suite, "recursions|cases|sandwich|tables|all")
        ->required();
    verify->add_option("--budget", verify_budget, "full|quick");

    // table
    auto* table = app.add_subcommand("table", "recompute a reference table");
    add_cache_option(table);
    std::string table_which, table_format = "plain";
    table->add_option("which", table_which, "t1|t2|t3|t4")->required();
    table->add_option("--format", table_format, "plain|csv|md");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        load_cache_if_any(cache_path);
        CacheGuard guard{cache_path};
        if (*check)
            return run_check(check_what, check_word,
                             check_what == "zimin-instance" ? std::to_string(check_n)
                                                            : check_pattern,
                             check_q, check_alphabet);
        if (*seq) return run_seq(seq_kind, seq_q, seq_ell, seq_max, seq_format);
        if (*density)
            return run_density(den_target, den_q, den_digits, den_eps, den_n, den_caps,
                               den_mode, den_samples, den_seed, den_pattern, den_zimin,
                               den_format);
        if (*verify) return run_verify(verify_suite, verify_budget == "quick");
        if (*table) return run_table(table_which, table_format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const zimin::size_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    } catch (const zimin::convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
    return kExitUsage;
}
