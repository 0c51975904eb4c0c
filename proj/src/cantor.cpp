#include "ssg/cantor.hpp"

#include <algorithm>
#include <map>

namespace ssg {

void check_word(std::string_view w, int d) {
    for (char c : w) {
        int x = letter_value(c);
        if (x < 0 || x >= d) {
            throw DomainError("letter out of range for alphabet of size " +
                              std::to_string(d) + ": '" + std::string(1, c) + "'");
        }
    }
}

bool is_prefix(std::string_view prefix, std::string_view word) {
    return word.size() >= prefix.size() &&
           word.compare(0, prefix.size(), prefix) == 0;
}

namespace {

// Length of the shortest word whose power equals w.
std::size_t primitive_root_length(const std::string& w) {
    for (std::size_t p = 1; p <= w.size(); ++p) {
        if (w.size() % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < w.size() && ok; ++i) {
            ok = (w[i] == w[i - p]);
        }
        if (ok) return p;
    }
    return w.size();
}

}  // namespace

RationalPoint RationalPoint::make(int d, std::string preperiod, std::string period) {
    if (d < 2 || d > kMaxAlphabet) {
        throw DomainError("alphabet size must be in [2," +
                          std::to_string(kMaxAlphabet) + "], got " + std::to_string(d));
    }
    if (period.empty()) throw DomainError("empty period");
    check_word(preperiod, d);
    check_word(period, d);

    period.resize(primitive_root_length(period));
    // Absorb preperiod letters into the period: while the last letters agree,
    // rotating the period right shortens the representation by one.
    while (!preperiod.empty() && preperiod.back() == period.back()) {
        period.insert(period.begin(), period.back());
        period.pop_back();
        preperiod.pop_back();
    }
    return RationalPoint(d, std::move(preperiod), std::move(period));
}

std::string RationalPoint::expand(std::size_t n) const {
    std::string out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(letter(i));
    return out;
}

char RationalPoint::letter(std::size_t i) const {
    if (i < preperiod_.size()) return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
}

bool point_in_cone(const RationalPoint& p, const Address& cone) {
    check_word(cone, p.d());
    for (std::size_t i = 0; i < cone.size(); ++i) {
        if (p.letter(i) != cone[i]) return false;
    }
    return true;
}

RationalPoint tail_after(const RationalPoint& p, const Address& cone) {
    if (!point_in_cone(p, cone)) {
        throw DomainError("tail of a point that is not in the cone " +
                          format_address(cone));
    }
    const std::string& pre = p.preperiod();
    const std::string& per = p.period();
    if (cone.size() <= pre.size()) {
        return RationalPoint::make(p.d(), pre.substr(cone.size()), per);
    }
    std::size_t r = (cone.size() - pre.size()) % per.size();
    return RationalPoint::make(p.d(), "", per.substr(r) + per.substr(0, r));
}

namespace {

struct Trie {
    // Cone addresses with a common (implicit) prefix, that prefix stripped.
    // Disjointness means at most one entry, and then only the empty one.
    static void check_entries(const std::vector<std::string_view>& entries) {
        for (const auto& e : entries) {
            if (e.empty() && entries.size() > 1) {
                throw DomainError("overlapping cones");
            }
        }
    }
};

std::vector<std::vector<std::string_view>> bucket_by_letter(
    int d, const std::vector<std::string_view>& entries) {
    std::vector<std::vector<std::string_view>> buckets(static_cast<std::size_t>(d));
    for (const auto& e : entries) {
        buckets[static_cast<std::size_t>(letter_value(e[0]))].push_back(e.substr(1));
    }
    return buckets;
}

void complement_walk(int d, const Address& prefix,
                     const std::vector<std::string_view>& entries,
                     std::vector<Address>& out) {
    Trie::check_entries(entries);
    if (entries.size() == 1 && entries[0].empty()) return;  // an input cone
    auto buckets = bucket_by_letter(d, entries);
    for (int x = 0; x < d; ++x) {
        const auto& b = buckets[static_cast<std::size_t>(x)];
        if (b.empty()) {
            out.push_back(prefix + letter_char(x));
        } else {
            complement_walk(d, prefix + letter_char(x), b, out);
        }
    }
}

bool complete_walk(int d, const std::vector<std::string_view>& entries) {
    Trie::check_entries(entries);
    if (entries.empty()) return false;
    if (entries.size() == 1 && entries[0].empty()) return true;
    auto buckets = bucket_by_letter(d, entries);
    for (int x = 0; x < d; ++x) {
        if (!complete_walk(d, buckets[static_cast<std::size_t>(x)])) return false;
    }
    return true;
}

// Returns the normalized suffix list; {""} means the node is fully covered.
std::vector<Address> normalize_walk(int d, const std::vector<std::string_view>& entries) {
    Trie::check_entries(entries);
    if (entries.empty()) return {};
    if (entries.size() == 1 && entries[0].empty()) return {""};
    auto buckets = bucket_by_letter(d, entries);
    std::vector<std::vector<Address>> parts(static_cast<std::size_t>(d));
    bool all_full = true;
    for (int x = 0; x < d; ++x) {
        parts[static_cast<std::size_t>(x)] =
            normalize_walk(d, buckets[static_cast<std::size_t>(x)]);
        const auto& px = parts[static_cast<std::size_t>(x)];
        all_full = all_full && px.size() == 1 && px[0].empty();
    }
    if (all_full) return {""};
    std::vector<Address> out;
    for (int x = 0; x < d; ++x) {
        for (const auto& s : parts[static_cast<std::size_t>(x)]) {
            out.push_back(letter_char(x) + s);
        }
    }
    return out;
}

std::vector<std::string_view> as_views(int d, const std::vector<Address>& cones) {
    std::vector<std::string_view> views;
    views.reserve(cones.size());
    for (const auto& c : cones) {
        check_word(c, d);
        views.emplace_back(c);
    }
    return views;
}

}  // namespace

void check_pairwise_disjoint(int d, const std::vector<Address>& cones) {
    auto views = as_views(d, cones);
    std::sort(views.begin(), views.end());
    for (std::size_t i = 0; i + 1 < views.size(); ++i) {
        if (is_prefix(views[i], views[i + 1])) {
            throw DomainError("overlapping cones: " + format_address(Address(views[i])) +
                              " and " + format_address(Address(views[i + 1])));
        }
    }
}

bool pairwise_disjoint(int d, const std::vector<Address>& cones) {
    try {
        check_pairwise_disjoint(d, cones);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

bool is_complete_partition(int d, const std::vector<Address>& cones) {
    check_pairwise_disjoint(d, cones);
    return complete_walk(d, as_views(d, cones));
}

void check_complete_partition(int d, const std::vector<Address>& cones) {
    if (!is_complete_partition(d, cones)) {
        throw DomainError("cones do not form a complete partition");
    }
}

std::vector<Address> complement_partition(int d, const std::vector<Address>& cones) {
    check_pairwise_disjoint(d, cones);
    if (cones.empty()) return {""};
    std::vector<Address> out;
    complement_walk(d, "", as_views(d, cones), out);
    return out;
}

std::vector<Address> refine_to_count(int d, std::vector<Address> cones,
                                     std::size_t target) {
    check_pairwise_disjoint(d, cones);
    if (cones.empty()) {
        if (target == 0) return cones;
        throw DomainError("cannot refine an empty cone list to a positive count");
    }
    if (target < cones.size() || (target - cones.size()) % static_cast<std::size_t>(d - 1) != 0) {
        throw DomainError("infeasible refinement target " + std::to_string(target) +
                          " from " + std::to_string(cones.size()) +
                          " cones (needs target >= count and target == count mod d-1)");
    }
    std::sort(cones.begin(), cones.end());
    while (cones.size() < target) {
        Address last = cones.back();
        cones.pop_back();
        for (int x = 0; x < d; ++x) cones.push_back(last + letter_char(x));
    }
    return cones;
}

std::vector<Address> standard_partition(int d, std::size_t k) {
    if (k == 0) throw DomainError("a partition has at least one cone");
    return refine_to_count(d, {Address("")}, k);
}

std::vector<Address> normalize_clopen(int d, std::vector<Address> cones) {
    check_pairwise_disjoint(d, cones);
    if (cones.empty()) return {};
    return normalize_walk(d, as_views(d, cones));
}

std::vector<Address> common_refinement(int d, const std::vector<Address>& a,
                                       const std::vector<Address>& b) {
    check_complete_partition(d, a);
    check_complete_partition(d, b);
    std::vector<Address> out;
    for (const auto& u : a) {
        for (const auto& v : b) {
            if (is_prefix(u, v)) {
                out.push_back(v);
            } else if (is_prefix(v, u)) {
                out.push_back(u);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string format_address(const Address& a) { return a.empty() ? "^" : a; }

std::string format_point(const RationalPoint& p) {
    return p.preperiod() + "(" + p.period() + ")";
}

}  // namespace ssg
