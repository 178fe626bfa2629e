#include "zimin/words.hpp"

#include "zimin/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zimin {

Word::Word(std::vector<Letter> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ < 1)
        throw std::invalid_argument("Word: alphabet size must be positive");
    for (Letter x : letters_)
        if (x < 0 || x >= alphabet_size_)
            throw std::invalid_argument("Word: letter " + std::to_string(x) +
                                        " outside [0, " + std::to_string(alphabet_size_) + ")");
}

std::size_t Word::distinct_letters() const {
    std::vector<bool> seen(static_cast<std::size_t>(alphabet_size_), false);
    std::size_t n = 0;
    for (Letter x : letters_)
        if (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            ++n;
        }
    return n;
}

Word Word::substring(std::size_t i, std::size_t j) const {
    if (!(i < j && j <= size()))
        throw std::out_of_range("Word::substring: need 0 <= i < j <= |W|");
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(i),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(j)),
                alphabet_size_);
}

Pattern::Pattern(std::span<const int> symbols) {
    vars_.reserve(symbols.size());
    std::vector<int> rename;
    for (int s : symbols) {
        auto it = std::find(rename.begin(), rename.end(), s);
        if (it == rename.end()) {
            rename.push_back(s);
            vars_.push_back(static_cast<int>(rename.size()) - 1);
        } else {
            vars_.push_back(static_cast<int>(it - rename.begin()));
        }
    }
    variable_count_ = static_cast<int>(rename.size());
}

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images)) {
    for (const Word& w : images_)
        if (w.is_empty())
            throw std::invalid_argument("Morphism: images must be nonempty (nonerasing)");
}

const Word& Morphism::image(int variable) const {
    if (variable < 0 || variable >= variable_count())
        throw std::out_of_range("Morphism::image: unknown variable");
    return images_[static_cast<std::size_t>(variable)];
}

Word Morphism::apply(const Pattern& p) const {
    if (p.variable_count() > variable_count())
        throw std::invalid_argument("Morphism::apply: pattern has unmapped variables");
    std::vector<Letter> out;
    int q = 1;
    for (const Word& w : images_)
        q = std::max(q, w.alphabet_size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Word& im = images_[static_cast<std::size_t>(p[i])];
        out.insert(out.end(), im.letters().begin(), im.letters().end());
    }
    return Word(std::move(out), q);
}

Pattern zimin_pattern(int n) {
    if (n < 0) throw std::invalid_argument("zimin_pattern: n must be >= 0");
    if (n > 30) throw size_error("zimin_pattern: n > 30 exceeds the size budget");
    std::vector<int> v;
    v.reserve((n >= 1 ? (std::size_t{1} << n) : 1) - 1);
    for (int k = 0; k < n; ++k) {
        std::size_t len = v.size();
        v.push_back(k);
        for (std::size_t i = 0; i < len; ++i) v.push_back(v[i]);
    }
    return Pattern(v);
}

Word zimin_word(int n) {
    if (n < 0) throw std::invalid_argument("zimin_word: n must be >= 0");
    if (n > 30) throw size_error("zimin_word: n > 30 exceeds the size budget");
    Pattern p = zimin_pattern(n);
    std::vector<Letter> v(p.variables().begin(), p.variables().end());
    return Word(std::move(v), std::max(n, 1));
}

bool is_factor(const Word& v, const Word& w, bool allow_empty) {
    if (v.is_empty()) return allow_empty;
    if (v.size() > w.size()) return false;
    auto vs = v.letters();
    auto ws = w.letters();
    return std::search(ws.begin(), ws.end(), vs.begin(), vs.end()) != ws.end();
}

namespace detail {

std::vector<std::size_t> border_array(std::span<const Letter> w) {
    std::size_t n = w.size();
    std::vector<std::size_t> pi(n + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (k > 0 && w[i] != w[k]) k = pi[k];
        if (w[i] == w[k]) ++k;
        pi[i + 1] = k;
    }
    return pi;
}

std::vector<std::size_t> min_border_table(std::span<const Letter> w) {
    auto pi = border_array(w);
    std::vector<std::size_t> minb(w.size() + 1, 0);
    for (std::size_t t = 1; t <= w.size(); ++t) {
        std::size_t p = pi[t];
        minb[t] = p == 0 ? 0 : (minb[p] != 0 ? minb[p] : p);
    }
    return minb;
}

std::vector<int> zimin_level_table(std::span<const Letter> w) {
    // w[0,t) is a Z_{n+1}-instance iff some border u of it has 2|u| < t
    // and u is a Z_n-instance; borders of prefixes come from the border
    // array chain, so levels propagate prefix-to-prefix.
    auto pi = border_array(w);
    std::vector<int> lev(w.size() + 1, 0);
    for (std::size_t t = 1; t <= w.size(); ++t) {
        int best = 1;
        for (std::size_t u = pi[t]; u != 0; u = pi[u])
            if (2 * u < t) best = std::max(best, lev[u] + 1);
        lev[t] = best;
    }
    return lev;
}

int zimin_level(std::span<const Letter> w) {
    if (w.empty()) return 0;
    return zimin_level_table(w).back();
}

} // namespace detail

std::vector<std::size_t> bifix_lengths(const Word& w) {
    auto pi = detail::border_array(w.letters());
    std::vector<std::size_t> out;
    for (std::size_t t = pi[w.size()]; t != 0; t = pi[t]) out.push_back(t);
    std::reverse(out.begin(), out.end());
    return out;
}

bool is_bifix_free(const Word& w) {
    return w.is_empty() || detail::border_array(w.letters()).back() == 0;
}

namespace {

struct Matcher {
    std::span<const Letter> w;
    const Pattern& p;
    // per variable: (start, len) of the image inside w; len 0 = unassigned
    std::vector<std::pair<std::size_t, std::size_t>> img;

    Matcher(std::span<const Letter> word, const Pattern& pat)
        : w(word), p(pat),
          img(static_cast<std::size_t>(pat.variable_count()), {0, 0}) {}

    bool match(std::size_t pi, std::size_t wi) {
        if (pi == p.size()) return wi == w.size();
        auto var = static_cast<std::size_t>(p[pi]);
        auto [start, len] = img[var];
        if (len != 0) {
            if (wi + len > w.size()) return false;
            for (std::size_t k = 0; k < len; ++k)
                if (w[wi + k] != w[start + k]) return false;
            return match(pi + 1, wi + len);
        }
        // occurrences of var at or after pi, and fixed demand of the rest
        std::size_t occ = 0, fixed = 0;
        for (std::size_t j = pi; j < p.size(); ++j) {
            if (static_cast<std::size_t>(p[j]) == var) ++occ;
            else {
                std::size_t l2 = img[static_cast<std::size_t>(p[j])].second;
                fixed += l2 != 0 ? l2 : 1;
            }
        }
        std::size_t avail = w.size() - wi;
        if (avail < fixed + occ) return false;
        std::size_t max_len = (avail - fixed) / occ;
        for (std::size_t len2 = 1; len2 <= max_len; ++len2) {
            img[var] = {wi, len2};
            if (match(pi + 1, wi + len2)) return true;
        }
        img[var] = {0, 0};
        return false;
    }
};

} // namespace

std::optional<Morphism> instance_witness(const Word& w, const Pattern& v) {
    if (v.is_empty())
        throw std::invalid_argument("instance_witness: empty pattern");
    if (w.size() < v.size()) return std::nullopt;
    Matcher m(w.letters(), v);
    if (!m.match(0, 0)) return std::nullopt;
    std::vector<Word> images;
    images.reserve(m.img.size());
    for (auto [start, len] : m.img)
        images.push_back(w.substring(start, start + len));
    return Morphism(std::move(images));
}

bool is_instance(const Word& w, const Pattern& v) {
    return instance_witness(w, v).has_value();
}

bool is_zimin_instance(const Word& w, int n) {
    if (n < 0) throw std::invalid_argument("is_zimin_instance: n must be >= 0");
    if (n == 0) return w.is_empty();
    if (w.is_empty()) return false;
    return detail::zimin_level(w.letters()) >= n;
}

int zimin_level(const Word& w) { return detail::zimin_level(w.letters()); }

bool encounters(const Word& w, const Pattern& v) {
    if (v.is_empty())
        throw std::invalid_argument("encounters: empty pattern");
    // longest factors first
    for (std::size_t len = w.size(); len >= v.size() && len >= 1; --len)
        for (std::size_t i = 0; i + len <= w.size(); ++i)
            if (is_instance(w.substring(i, i + len), v)) return true;
    return false;
}

bool is_unavoidable(const Pattern& v) {
    if (v.is_empty())
        throw std::invalid_argument("is_unavoidable: empty pattern");
    int n = v.variable_count();
    if (n > 5)
        throw size_error("is_unavoidable: more than 5 distinct variables");
    return encounters(zimin_word(n), v);
}

} // namespace zimin
