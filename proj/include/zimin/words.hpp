// words.hpp -- finite words over [q], patterns, morphisms, and the
// instance / encounter machinery built on them
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace zimin {

using Letter = int;

/// Immutable finite word over the alphabet [q] = {0, 1, ..., q-1}.
/// The empty word is permitted for any alphabet size >= 1.
class Word {
public:
    /// Empty word over a one-letter alphabet.
    Word() : alphabet_size_(1) {}

    /// Throws std::invalid_argument unless every letter lies in [0, q).
    Word(std::vector<Letter> letters, int alphabet_size);

    static Word empty(int alphabet_size) { return Word({}, alphabet_size); }

    int alphabet_size() const { return alphabet_size_; }
    std::size_t size() const { return letters_.size(); }
    bool is_empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const { return letters_; }

    /// |L(W)|: number of distinct letters occurring in the word.
    std::size_t distinct_letters() const;

    /// ||W|| = |W| - |L(W)|: number of letter recurrences.
    std::size_t recurrence_count() const { return size() - distinct_letters(); }

    /// W[i,j): the j-i consecutive letters starting at position i.
    /// Requires 0 <= i < j <= |W|; throws std::out_of_range otherwise.
    Word substring(std::size_t i, std::size_t j) const;

    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
    int alphabet_size_;
};

/// A word of variables, canonically renamed so that variable ids form
/// 0..k-1 in order of first occurrence. Structurally equal patterns
/// therefore compare equal.
class Pattern {
public:
    Pattern() = default;

    explicit Pattern(std::span<const int> symbols);
    explicit Pattern(const std::vector<int>& symbols)
        : Pattern(std::span<const int>(symbols)) {}

    std::size_t size() const { return vars_.size(); }
    bool is_empty() const { return vars_.empty(); }
    int variable_count() const { return variable_count_; }
    int operator[](std::size_t i) const { return vars_[i]; }
    std::span<const int> variables() const { return vars_; }

    bool operator==(const Pattern&) const = default;

private:
    std::vector<int> vars_;
    int variable_count_ = 0;
};

/// Nonerasing substitution: each variable maps to a nonempty word.
/// Construction validates that no image is empty.
class Morphism {
public:
    explicit Morphism(std::vector<Word> images);

    int variable_count() const { return static_cast<int>(images_.size()); }
    const Word& image(int variable) const;

    /// Concatenates the images along the pattern. Requires the pattern's
    /// variables to be covered by this morphism.
    Word apply(const Pattern& p) const;

private:
    std::vector<Word> images_;
};

/// Z_n as a pattern: Z_0 = eps, Z_{n+1} = Z_n x_n Z_n, so |Z_n| = 2^n - 1.
/// Rejects n > 30 with size_error.
Pattern zimin_pattern(int n);

/// Z_n rendered as a word over the alphabet [max(n, 1)].
Word zimin_word(int n);

/// True iff v = w[i,j) for some 0 <= i < j <= |w|. A factor is nonempty
/// under this definition; pass allow_empty to treat the empty word as a
/// factor of everything.
bool is_factor(const Word& v, const Word& w, bool allow_empty = false);

/// All k with 1 <= k < |w| such that w[0,k) equals w[|w|-k,|w|), ascending.
std::vector<std::size_t> bifix_lengths(const Word& w);

/// True iff the word has no bifix. The empty word counts as bifix-free.
bool is_bifix_free(const Word& w);

/// Searches for a nonerasing morphism phi with phi(v) = w. Variables are
/// assigned in order of first occurrence, image lengths shortest-first, so
/// the witness is deterministic. Empty patterns are rejected with
/// std::invalid_argument.
std::optional<Morphism> instance_witness(const Word& w, const Pattern& v);

/// True iff w is an instance of v.
bool is_instance(const Word& w, const Pattern& v);

/// Fast path equivalent to is_instance(w, zimin_pattern(n)): w is a
/// Z_n-instance iff n = 0 and w is empty, or w is nonempty and has a bifix
/// u with 2|u| < |w| that is itself a Z_{n-1}-instance.
bool is_zimin_instance(const Word& w, int n);

/// Largest n such that w is a Z_n-instance (0 for the empty word).
int zimin_level(const Word& w);

/// True iff some factor of w is a v-instance.
bool encounters(const Word& w, const Pattern& v);

/// Zimin's characterization: a pattern with n distinct variables is
/// unavoidable iff Z_n encounters it. Guarded to n <= 5 variables
/// (size_error beyond; the scan is exponential in n).
bool is_unavoidable(const Pattern& v);

namespace detail {

/// pi[t] = length of the longest proper border of w[0,t), with pi[0] = 0.
std::vector<std::size_t> border_array(std::span<const Letter> w);

/// minb[t] = shortest nonzero border length of w[0,t), 0 if borderless.
std::vector<std::size_t> min_border_table(std::span<const Letter> w);

/// Zimin level of every prefix: lev[t] = largest n with w[0,t) a
/// Z_n-instance. lev[0] = 0 and lev[t] >= 1 for t >= 1.
std::vector<int> zimin_level_table(std::span<const Letter> w);

int zimin_level(std::span<const Letter> w);

} // namespace detail

} // namespace zimin
