#include "zimin/text.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace zimin {

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

bool all_alpha(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalpha(static_cast<unsigned char>(c));
    });
}

} // namespace

ParsedWord parse_word(const std::string& literal, int q) {
    if (literal.empty() || literal == "-") {
        // "-" denotes the empty word
        return {Word::empty(std::max(q, 1)), {}};
    }
    std::vector<Letter> letters;
    std::vector<std::string> symbols;
    if (all_digits(literal)) {
        int maxd = 0;
        for (char c : literal) {
            letters.push_back(c - '0');
            maxd = std::max(maxd, c - '0');
        }
        int alpha = std::max(q, maxd + 1);
        for (int i = 0; i < alpha; ++i) symbols.push_back(std::string(1, static_cast<char>('0' + i)));
        if (q != 0 && maxd >= q)
            throw std::invalid_argument("word literal uses digit " + std::to_string(maxd) +
                                        " outside alphabet of size " + std::to_string(q));
        return {Word(std::move(letters), alpha), std::move(symbols)};
    }
    if (all_alpha(literal)) {
        for (char c : literal) {
            std::string sym(1, c);
            auto it = std::find(symbols.begin(), symbols.end(), sym);
            if (it == symbols.end()) {
                symbols.push_back(sym);
                letters.push_back(static_cast<Letter>(symbols.size()) - 1);
            } else {
                letters.push_back(static_cast<Letter>(it - symbols.begin()));
            }
        }
        int alpha = std::max<int>(q, static_cast<int>(symbols.size()));
        if (q != 0 && static_cast<int>(symbols.size()) > q)
            throw std::invalid_argument("word literal uses more than q distinct letters");
        return {Word(std::move(letters), alpha), std::move(symbols)};
    }
    throw std::invalid_argument("malformed word literal: \"" + literal +
                                "\" (expect digits, letters, or --alphabet tokens)");
}

ParsedWord parse_word_with_alphabet(const std::string& literal,
                                    const std::vector<std::string>& alphabet) {
    if (alphabet.empty())
        throw std::invalid_argument("empty alphabet");
    std::vector<Letter> letters;
    for (const auto& tok : split_tokens(literal)) {
        auto it = std::find(alphabet.begin(), alphabet.end(), tok);
        if (it == alphabet.end())
            throw std::invalid_argument("token \"" + tok + "\" not in alphabet");
        letters.push_back(static_cast<Letter>(it - alphabet.begin()));
    }
    return {Word(std::move(letters), static_cast<int>(alphabet.size())), alphabet};
}

ParsedPattern parse_pattern(const std::string& literal) {
    if (literal.empty() || literal == "-")
        return {Pattern(), {}};
    std::vector<int> raw;
    std::vector<std::string> seen;
    if (!all_digits(literal) && !all_alpha(literal))
        throw std::invalid_argument("malformed pattern literal: \"" + literal + "\"");
    for (char c : literal) {
        std::string sym(1, c);
        auto it = std::find(seen.begin(), seen.end(), sym);
        if (it == seen.end()) {
            seen.push_back(sym);
            raw.push_back(static_cast<int>(seen.size()) - 1);
        } else {
            raw.push_back(static_cast<int>(it - seen.begin()));
        }
    }
    return {Pattern(raw), std::move(seen)};
}

std::string format_word(const Word& w) {
    if (w.is_empty()) return "-";
    if (w.alphabet_size() <= 10) {
        std::string s;
        for (Letter x : w.letters()) s += static_cast<char>('0' + x);
        return s;
    }
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

std::string format_pattern(const Pattern& p) {
    if (p.is_empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        int v = p[i];
        if (v < 26) s += static_cast<char>('a' + v);
        else s += "<" + std::to_string(v) + ">";
    }
    return s;
}

} // namespace zimin
