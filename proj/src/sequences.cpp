#include "zimin/sequences.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace zimin {

const char* to_string(SeqKind kind) {
    switch (kind) {
        case SeqKind::a: return "a";
        case SeqKind::c: return "c";
        case SeqKind::d: return "d";
        case SeqKind::b: return "b";
        case SeqKind::bhat: return "bhat";
    }
    return "?";
}

std::optional<SeqKind> seq_kind_from_string(std::string_view s) {
    if (s == "a") return SeqKind::a;
    if (s == "c") return SeqKind::c;
    if (s == "d") return SeqKind::d;
    if (s == "b") return SeqKind::b;
    if (s == "bhat") return SeqKind::bhat;
    return std::nullopt;
}

namespace {

void check_params(SeqKind kind, int q, int ell) {
    if (q < 2) throw std::invalid_argument("sequence: q must be >= 2");
    if (kind != SeqKind::a && ell < 1)
        throw std::invalid_argument("sequence: ell must be >= 1");
}

void extend_a(std::vector<Int>& a, int q, int upto) {
    if (a.empty()) a.push_back(0);
    if (a.size() == 1 && upto >= 1) a.push_back(q);
    for (int n = static_cast<int>(a.size()); n <= upto; ++n) {
        int k = n / 2;
        Int next = q * a[static_cast<size_t>(n - 1)];
        if (n % 2 == 0) next -= a[static_cast<size_t>(k)];
        a.push_back(std::move(next));
    }
}

// The c/d recursions come in three regimes by the parity of ell, the
// exceptional indices 2l+1, 4l(+1), 5l, 5l+1, 6l taking precedence over
// the generic even/odd rules. Two index readings are corrected against
// the enumeration oracle; see RECURSION_NOTES.md.
void extend_cd(std::vector<Int>& c, std::vector<Int>& d, int q, int l, int upto) {
    auto ref = [](std::vector<Int>& v, int i) -> Int& { return v[static_cast<size_t>(i)]; };
    int start = static_cast<int>(c.size());
    c.resize(static_cast<size_t>(upto) + 1);
    d.resize(static_cast<size_t>(upto) + 1);
    for (int n = start; n <= upto; ++n) {
        Int& cn = ref(c, n);
        Int& dn = ref(d, n);
        if (l == 1) {
            if (n <= 2) cn = 0;
            else if (n == 3) cn = q;
            else if (n == 4) cn = q * ref(c, 3) - 1;
            else if (n == 5) cn = q * ref(c, 4) - (ref(c, 3) - 1);
            else if (n == 6) cn = q * (ref(c, 5) + ref(c, 3) - 1) - (ref(c, 3) - 1);
            else if (n % 2 == 0) { int k = n / 2; cn = q * (ref(c, n - 1) + ref(c, k)) - ref(c, k); }
            else { int k = (n - 1) / 2; cn = q * ref(c, n - 1) - ref(c, k + 1); }

            if (n <= 4) dn = 0;
            else if (n == 5) dn = q - 1;
            else if (n == 6) dn = q * (ref(d, 5) + 1) - 1;
            else if (n % 2 == 0) { int k = n / 2; dn = q * (ref(d, n - 1) + ref(d, k)) - (ref(d, k) + ref(d, k + 1)); }
            else { int k = (n - 1) / 2; dn = q * (ref(d, n - 1) + ref(d, k + 1)) - ref(d, k + 1); }
        } else if (l % 2 == 0) {
            int h = l / 2;
            if (n <= 2 * l) cn = 0;
            else if (n == 2 * l + 1) cn = q;
            else if (n == 4 * l) cn = q * ref(c, n - 1) - (ref(c, 5 * h) + 1);
            else if (n == 5 * l) cn = q * ref(c, n - 1) - (ref(c, 5 * h) + ref(c, 3 * l) - 1);
            else if (n == 5 * l + 1) cn = q * (ref(c, 5 * l) + ref(c, 3 * l) - 1);
            else if (n == 6 * l) cn = q * ref(c, n - 1) - (ref(c, 3 * l) + ref(c, 3 * l + h) - 1);
            else if (n % 2 == 0) { int k = n / 2; cn = q * ref(c, n - 1) - (ref(c, k) + ref(c, k + h)); }
            else { int k = (n - 1) / 2; cn = q * (ref(c, n - 1) + ref(c, k + h)); }

            if (n <= 4 * l) dn = 0;
            else if (n == 4 * l + 1) dn = q;
            else if (n == 5 * l) dn = q * ref(d, n - 1) - 1;
            else if (n == 5 * l + 1) dn = q * (ref(d, 5 * l) + 1);
            else if (n == 6 * l) dn = q * ref(d, n - 1) - 1;
            else if (n % 2 == 0) { int k = n / 2; dn = q * ref(d, n - 1) - (ref(d, k) + ref(d, k + l) + ref(d, k + h)); }
            else { int k = (n - 1) / 2; dn = q * (ref(d, n - 1) + ref(d, k + l) + ref(d, k + h)); }
        } else {
            int fl = l / 2, cl = (l + 1) / 2;
            if (n <= 2 * l) cn = 0;
            else if (n == 2 * l + 1) cn = q;
            else if (n == 4 * l) cn = q * (ref(c, n - 1) + ref(c, (5 * l) / 2)) - (ref(c, 2 * l) + 1);
            else if (n == 5 * l) cn = q * ref(c, n - 1) - (ref(c, 3 * l) - 1);
            else if (n == 5 * l + 1) cn = q * (ref(c, 5 * l) + ref(c, 3 * l) - 1) - ref(c, (5 * l + 1) / 2);
            else if (n == 6 * l) cn = q * (ref(c, n - 1) + ref(c, (7 * l) / 2)) - (ref(c, 3 * l) - 1);
            else if (n % 2 == 0) { int k = n / 2; cn = q * (ref(c, n - 1) + ref(c, k + fl)) - ref(c, k); }
            else { int k = (n - 1) / 2; cn = q * ref(c, n - 1) - ref(c, k + cl); }

            if (n <= 4 * l) dn = 0;
            else if (n == 4 * l + 1) dn = q;
            else if (n == 5 * l) dn = q * ref(d, n - 1) - 1;
            else if (n == 5 * l + 1) dn = q * (ref(d, 5 * l) + 1);
            else if (n == 6 * l) dn = q * ref(d, n - 1) - 1;
            else if (n % 2 == 0) { int k = n / 2; dn = q * (ref(d, n - 1) + ref(d, k + fl)) - (ref(d, k) + ref(d, k + l)); }
            else { int k = (n - 1) / 2; dn = q * (ref(d, n - 1) + ref(d, k + l)) - ref(d, k + cl); }
        }
    }
}

void extend_bhat(std::vector<Int>& b, int q, int l, int upto) {
    auto ref = [](std::vector<Int>& v, int i) -> Int& { return v[static_cast<size_t>(i)]; };
    int start = static_cast<int>(b.size());
    b.resize(static_cast<size_t>(upto) + 1);
    for (int n = start; n <= upto; ++n) {
        Int& bn = ref(b, n);
        if (n <= 2 * l) bn = 0;
        else if (n == 2 * l + 1) bn = q; // seed; see RECURSION_NOTES.md
        else if (l % 2 == 0) {
            int h = l / 2;
            if (n % 2 == 0) { int k = n / 2; bn = q * ref(b, n - 1) - (ref(b, k) + ref(b, k + h)); }
            else { int k = (n - 1) / 2; bn = q * (ref(b, n - 1) + ref(b, k + h)); }
        } else {
            int fl = l / 2, cl = (l + 1) / 2;
            if (n % 2 == 0) { int k = n / 2; bn = q * (ref(b, n - 1) + ref(b, k + fl)) - ref(b, k); }
            else { int k = (n - 1) / 2; bn = q * ref(b, n - 1) - ref(b, k + cl); }
        }
    }
}

} // namespace

std::vector<Int>& SeqStore::table_locked(SeqKind kind, int q, int ell, int max_index) {
    Key key{static_cast<int>(kind), q, kind == SeqKind::a ? 0 : ell};
    auto& tab = tables_[key];
    if (static_cast<int>(tab.size()) > max_index) return tab;
    switch (kind) {
        case SeqKind::a:
            extend_a(tab, q, max_index);
            break;
        case SeqKind::c:
        case SeqKind::d: {
            Key ck{static_cast<int>(SeqKind::c), q, ell};
            Key dk{static_cast<int>(SeqKind::d), q, ell};
            extend_cd(tables_[ck], tables_[dk], q, ell, max_index);
            break;
        }
        case SeqKind::bhat:
            extend_bhat(tab, q, ell, max_index);
            break;
        case SeqKind::b:
            throw std::logic_error("SeqStore: b is derived, not stored");
    }
    return tables_[key];
}

std::vector<Int> SeqStore::values(SeqKind kind, int q, int ell, int max_index) {
    check_params(kind, q, ell);
    if (max_index < 0) throw std::invalid_argument("sequence: max index must be >= 0");
    std::lock_guard<std::mutex> lock(mu_);
    if (kind == SeqKind::b) {
        const auto& c = table_locked(SeqKind::c, q, ell, max_index);
        const auto& d = table_locked(SeqKind::d, q, ell, max_index);
        std::vector<Int> out(static_cast<size_t>(max_index) + 1);
        for (int m = 0; m <= max_index; ++m)
            out[static_cast<size_t>(m)] =
                c[static_cast<size_t>(m)] + d[static_cast<size_t>(m)];
        return out;
    }
    const auto& tab = table_locked(kind, q, ell, max_index);
    return std::vector<Int>(tab.begin(), tab.begin() + max_index + 1);
}

void SeqStore::load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cache: cannot open " + path);
    nlohmann::json j;
    in >> j;
    if (!j.is_object()) throw std::runtime_error("cache: expected a JSON object");
    std::lock_guard<std::mutex> lock(mu_);
    for (auto& [key, arr] : j.items()) {
        auto p1 = key.find(':');
        auto p2 = key.rfind(':');
        if (p1 == std::string::npos || p2 == p1)
            throw std::runtime_error("cache: bad key " + key);
        auto kind = seq_kind_from_string(key.substr(0, p1));
        if (!kind || *kind == SeqKind::b)
            throw std::runtime_error("cache: bad kind in key " + key);
        int q = std::stoi(key.substr(p1 + 1, p2 - p1 - 1));
        int ell = std::stoi(key.substr(p2 + 1));
        if (!arr.is_array()) throw std::runtime_error("cache: bad entry for " + key);
        std::vector<Int> vals;
        vals.reserve(arr.size());
        for (const auto& v : arr) vals.emplace_back(v.get<std::string>(), 10);
        Key k{static_cast<int>(*kind), q, ell};
        auto& tab = tables_[k];
        if (vals.size() > tab.size()) tab = std::move(vals);
    }
}

void SeqStore::save_cache(const std::string& path) const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    {
        std::lock_guard<std::mutex> lock(mu_);
        for (const auto& [key, tab] : tables_) {
            auto [kind, q, ell] = key;
            std::string name = std::string(to_string(static_cast<SeqKind>(kind))) + ":" +
                               std::to_string(q) + ":" + std::to_string(ell);
            auto arr = nlohmann::ordered_json::array();
            for (const Int& v : tab) arr.push_back(v.get_str());
            j[name] = std::move(arr);
        }
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cache: cannot write " + path);
    out << j.dump(1) << "\n";
}

void SeqStore::clear() {
    std::lock_guard<std::mutex> lock(mu_);
    tables_.clear();
}

SeqStore& SeqStore::global() {
    static SeqStore store;
    return store;
}

std::vector<Int> a_seq(int q, int max_ell) {
    return SeqStore::global().values(SeqKind::a, q, 0, max_ell);
}

std::pair<std::vector<Int>, std::vector<Int>> cd_seq(int q, int ell, int max_m) {
    auto& s = SeqStore::global();
    return {s.values(SeqKind::c, q, ell, max_m), s.values(SeqKind::d, q, ell, max_m)};
}

std::vector<Int> b_seq(int q, int ell, int max_m) {
    return SeqStore::global().values(SeqKind::b, q, ell, max_m);
}

std::vector<Int> bhat_seq(int q, int ell, int max_m) {
    return SeqStore::global().values(SeqKind::bhat, q, ell, max_m);
}

} // namespace zimin
