// sequences.hpp -- the counting sequences a, c, d, b = c + d, and bhat,
// memoized per (kind, q, context length)
#pragma once

#include "zimin/numbers.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace zimin {

enum class SeqKind { a, c, d, b, bhat };

const char* to_string(SeqKind kind);
std::optional<SeqKind> seq_kind_from_string(std::string_view s);

/// Append-only store of computed sequence prefixes, shared per
/// (kind, q, ell). Extension is serialized per store; committed values are
/// never mutated. b is derived entrywise from c and d and not stored.
class SeqStore {
public:
    /// Values v[0..max_index] of the requested sequence. For kind a the
    /// ell argument is ignored (pass 0). Throws std::invalid_argument on
    /// bad parameters (q < 2; ell < 1 for the context-indexed kinds).
    std::vector<Int> values(SeqKind kind, int q, int ell, int max_index);

    /// Merges a JSON cache file: an object mapping "kind:q:ell" to an
    /// array of decimal strings. Throws std::runtime_error on malformed
    /// content.
    void load_cache(const std::string& path);

    /// Writes every stored table to the JSON cache format.
    void save_cache(const std::string& path) const;

    void clear();

    static SeqStore& global();

private:
    using Key = std::tuple<int, int, int>; // (kind, q, ell)

    mutable std::mutex mu_;
    std::map<Key, std::vector<Int>> tables_;

    std::vector<Int>& table_locked(SeqKind kind, int q, int ell, int max_index);
};

/// a_0..a_max: bifix-free word counts over [q].
/// a_0 = 0, a_1 = q, a_{2k} = q a_{2k-1} - a_k, a_{2k+1} = q a_{2k}.
std::vector<Int> a_seq(int q, int max_ell);

/// The paired context recursions for a bifix-free context of length ell;
/// returns (c, d), each indexed 0..max_m.
std::pair<std::vector<Int>, std::vector<Int>> cd_seq(int q, int ell, int max_m);

/// b_m = c_m + d_m entrywise.
std::vector<Int> b_seq(int q, int ell, int max_m);

/// The context-structure-blind overcount recursion (see RECURSION_NOTES
/// for the seed and its relation to the enumeration-based count).
std::vector<Int> bhat_seq(int q, int ell, int max_m);

} // namespace zimin
