#include "ssg/rn.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <unordered_map>

namespace ssg {

RNElement RNElement::make(GroupPtr group, std::vector<RNRow> rows) {
    if (!group) throw DomainError("element without a group");
    if (rows.empty()) throw DomainError("empty table");
    std::vector<Address> domains, ranges;
    domains.reserve(rows.size());
    ranges.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.action.group() != group) throw DomainError("mismatched groups in table row");
        domains.push_back(row.domain);
        ranges.push_back(row.range);
    }
    check_complete_partition(group->d(), domains);
    check_complete_partition(group->d(), ranges);
    std::sort(rows.begin(), rows.end(),
              [](const RNRow& a, const RNRow& b) { return a.domain < b.domain; });
    return RNElement(std::move(group), std::move(rows));
}

RNElement RNElement::identity(GroupPtr group) {
    GroupWord id = GroupWord::identity(group);
    return make(group, {RNRow{"", "", std::move(id)}});
}

std::vector<Address> RNElement::domain_partition() const {
    std::vector<Address> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.domain);
    return out;
}

std::vector<Address> RNElement::range_partition() const {
    std::vector<Address> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.range);
    return out;
}

const RNRow& RNElement::row_containing(const RationalPoint& p) const {
    for (const auto& r : rows_) {
        if (point_in_cone(p, r.domain)) return r;
    }
    throw DomainError("no row contains the point (broken table)");  // unreachable
}

namespace {

RNRow descend(const RNRow& row, std::string_view suffix) {
    return RNRow{row.domain + std::string(suffix),
                 row.range + ssg::act(row.action, suffix),
                 restriction(row.action, suffix)};
}

}  // namespace

RNElement expand(const RNElement& h, const std::vector<Address>& finer) {
    check_complete_partition(h.d(), finer);
    std::vector<RNRow> rows;
    rows.reserve(finer.size());
    for (const auto& f : finer) {
        const RNRow* base = nullptr;
        for (const auto& r : h.rows()) {
            if (is_prefix(r.domain, f)) {
                base = &r;
                break;
            }
        }
        if (!base) throw DomainError("partition does not refine the element's domain");
        rows.push_back(descend(*base, std::string_view(f).substr(base->domain.size())));
    }
    return RNElement::make(h.group(), std::move(rows));
}

RNElement expand_range(const RNElement& h, const std::vector<Address>& finer) {
    check_complete_partition(h.d(), finer);
    std::vector<RNRow> rows;
    rows.reserve(finer.size());
    for (const auto& f : finer) {
        const RNRow* base = nullptr;
        for (const auto& r : h.rows()) {
            if (is_prefix(r.range, f)) {
                base = &r;
                break;
            }
        }
        if (!base) throw DomainError("partition does not refine the element's range");
        // To land on range f = base.range · w, descend the domain along the
        // preimage of w.
        std::string_view w = std::string_view(f).substr(base->range.size());
        std::string u = ssg::act(base->action.inverse(), w);
        RNRow row = descend(*base, u);
        assert(row.range == f);
        rows.push_back(std::move(row));
    }
    return RNElement::make(h.group(), std::move(rows));
}

RNElement compose(const RNElement& h1, const RNElement& h2) {
    if (h1.group() != h2.group()) throw DomainError("mismatched groups");
    std::vector<Address> mid = common_refinement(h1.d(), h2.range_partition(),
                                                 h1.domain_partition());
    RNElement inner = expand_range(h2, mid);
    RNElement outer = expand(h1, mid);
    std::unordered_map<Address, const RNRow*> outer_by_domain;
    for (const auto& r : outer.rows()) outer_by_domain.emplace(r.domain, &r);
    std::vector<RNRow> rows;
    rows.reserve(inner.size());
    for (const auto& r2 : inner.rows()) {
        const RNRow* r1 = outer_by_domain.at(r2.range);
        rows.push_back(RNRow{r2.domain, r1->range, r1->action * r2.action});
    }
    return RNElement::make(h1.group(), std::move(rows));
}

RNElement invert(const RNElement& h) {
    std::vector<RNRow> rows;
    rows.reserve(h.size());
    for (const auto& r : h.rows()) {
        rows.push_back(RNRow{r.range, r.domain, r.action.inverse()});
    }
    return RNElement::make(h.group(), std::move(rows));
}

RNElement power(const RNElement& h, long exponent) {
    RNElement base = exponent < 0 ? invert(h) : h;
    long n = exponent < 0 ? -exponent : exponent;
    RNElement acc = RNElement::identity(h.group());
    for (long i = 0; i < n; ++i) acc = compose(base, acc);
    return acc;
}

bool equal_rn(const RNElement& h1, const RNElement& h2) {
    if (h1.group() != h2.group()) throw DomainError("mismatched groups");
    std::vector<Address> common = common_refinement(h1.d(), h1.domain_partition(),
                                                    h2.domain_partition());
    RNElement a = expand(h1, common);
    RNElement b = expand(h2, common);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const RNRow& ra = a.rows()[i];
        const RNRow& rb = b.rows()[i];
        assert(ra.domain == rb.domain);
        if (ra.range != rb.range) return false;
        if (!equal(ra.action, rb.action)) return false;
    }
    return true;
}

namespace {

// Push an eventually periodic tail through a word. States (restriction word,
// phase in the period) are finite, so scanning the periodic part must repeat.
RationalPoint apply_to_rational(const GroupWord& g, const RationalPoint& t) {
    std::string out;
    GroupWord cur = g;
    for (char c : t.preperiod()) {
        Step s = step(cur, letter_value(c));
        out.push_back(letter_char(s.image));
        cur = std::move(s.rest);
    }
    std::map<std::pair<std::string, std::size_t>, std::size_t> seen;
    std::size_t phase = 0;
    while (true) {
        auto state = std::make_pair(cur.key(), phase);
        auto it = seen.find(state);
        if (it != seen.end()) {
            std::size_t start = it->second;
            return RationalPoint::make(t.d(), out.substr(0, start), out.substr(start));
        }
        seen.emplace(std::move(state), out.size());
        Step s = step(cur, letter_value(t.period()[phase]));
        out.push_back(letter_char(s.image));
        cur = std::move(s.rest);
        phase = (phase + 1) % t.period().size();
    }
}

}  // namespace

RationalPoint evaluate(const RNElement& h, const RationalPoint& p) {
    if (p.d() != h.d()) throw DomainError("point alphabet does not match the group");
    const RNRow& row = h.row_containing(p);
    RationalPoint image_tail = apply_to_rational(row.action, tail_after(p, row.domain));
    return RationalPoint::make(p.d(), row.range + image_tail.preperiod(),
                               image_tail.period());
}

bool fixes(const RNElement& h, const RationalPoint& p) { return evaluate(h, p) == p; }

RNElement make_element(const GroupPtr& group, std::vector<RNRow> pairs) {
    if (pairs.empty()) return RNElement::identity(group);
    const int d = group->d();
    std::vector<Address> sources, targets;
    for (const auto& row : pairs) {
        sources.push_back(row.domain);
        targets.push_back(row.range);
    }
    check_pairwise_disjoint(d, sources);
    check_pairwise_disjoint(d, targets);
    if (is_complete_partition(d, sources) || is_complete_partition(d, targets)) {
        throw DomainError("make_element requires cones that do not cover the space");
    }
    std::vector<Address> pad_src = complement_partition(d, sources);
    std::vector<Address> pad_tgt = complement_partition(d, targets);
    if (pad_src.size() < pad_tgt.size()) {
        pad_src = refine_to_count(d, std::move(pad_src), pad_tgt.size());
    } else if (pad_tgt.size() < pad_src.size()) {
        pad_tgt = refine_to_count(d, std::move(pad_tgt), pad_src.size());
    }
    assert(pad_src.size() == pad_tgt.size());
    std::sort(pad_src.begin(), pad_src.end());
    std::sort(pad_tgt.begin(), pad_tgt.end());
    for (std::size_t i = 0; i < pad_src.size(); ++i) {
        pairs.push_back(RNRow{pad_src[i], pad_tgt[i], GroupWord::identity(group)});
    }
    return RNElement::make(group, std::move(pairs));
}

RegularCone regular_cone(const RNElement& h, const RationalPoint& p) {
    const RNRow& row = h.row_containing(p);
    return RegularCone{row.domain, row.action};
}

std::optional<RNRow> row_at_depth(const RNElement& h, const RationalPoint& p,
                                  std::size_t depth) {
    const RNRow& row = h.row_containing(p);
    if (row.domain.size() > depth) return std::nullopt;
    std::string path = p.expand(depth);
    return descend(row, std::string_view(path).substr(row.domain.size()));
}

bool is_identity_on(const RNElement& h, const std::vector<Address>& cones) {
    check_pairwise_disjoint(h.d(), cones);
    for (const auto& row : h.rows()) {
        for (const auto& c : cones) {
            if (is_prefix(c, row.domain)) {
                if (row.range != row.domain || !is_trivial(row.action)) return false;
            } else if (is_prefix(row.domain, c) && row.domain != c) {
                RNRow sub = descend(row, std::string_view(c).substr(row.domain.size()));
                if (sub.range != sub.domain || !is_trivial(sub.action)) return false;
            }
        }
    }
    return true;
}

std::vector<Address> image_of_clopen(const RNElement& h,
                                     const std::vector<Address>& cones) {
    check_pairwise_disjoint(h.d(), cones);
    std::vector<Address> images;
    for (const auto& row : h.rows()) {
        for (const auto& c : cones) {
            if (is_prefix(c, row.domain)) {
                images.push_back(row.range);
            } else if (is_prefix(row.domain, c) && row.domain != c) {
                images.push_back(descend(row, std::string_view(c).substr(row.domain.size())).range);
            }
        }
    }
    return normalize_clopen(h.d(), std::move(images));
}

}  // namespace ssg
