#include "ssg/witnesses.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace ssg {

SeparatedSystem separate_points(int d, std::vector<RationalPoint> points, int cap) {
    for (const auto& p : points) {
        if (p.d() != d) throw DomainError("point alphabet does not match");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) {
                throw DomainError("duplicate point " + format_point(points[i]));
            }
        }
    }
    if (points.empty()) throw DomainError("no points to separate");

    for (int k = 0; k <= cap; ++k) {
        std::vector<Address> cones;
        cones.reserve(points.size());
        bool all_nonempty = true;
        for (const auto& p : points) {
            std::string cone = p.preperiod();
            for (int c = 0; c < k; ++c) cone += p.period();
            if (cone.empty()) all_nonempty = false;
            cones.push_back(std::move(cone));
        }
        if (!all_nonempty) continue;
        if (!pairwise_disjoint(d, cones)) continue;
        if (is_complete_partition(d, cones)) continue;  // union must miss a cone
        SeparatedSystem system;
        system.d = d;
        system.points = std::move(points);
        system.cones = std::move(cones);
        return system;
    }
    throw BoundsError("separation cap exceeded (distinct rational points always separate)");
}

RNElement tuple_transporter(
    const GroupPtr& group,
    const std::vector<std::pair<RationalPoint, RationalPoint>>& pairs,
    const std::vector<RNElement>& movers, int cap) {
    if (pairs.empty()) throw DomainError("no pairs to transport");
    if (movers.size() != pairs.size()) throw DomainError("one mover per pair required");
    const int d = group->d();

    std::vector<RNRow> rows;
    rows.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [p, q] = pairs[i];
        if (movers[i].group() != group) throw DomainError("mover over a different group");
        if (evaluate(movers[i], p) != q) {
            throw DomainError("mover " + std::to_string(i) + " does not send " +
                              format_point(p) + " to " + format_point(q));
        }
        const RNRow& base = movers[i].row_containing(p);
        rows.push_back(base);
    }

    auto admissible = [&](auto proj) {
        std::vector<Address> cones;
        for (const auto& r : rows) cones.push_back(proj(r));
        return pairwise_disjoint(d, cones) && !is_complete_partition(d, cones);
    };

    for (int round = 0; round <= cap; ++round) {
        bool sources_ok = admissible([](const RNRow& r) { return r.domain; });
        bool images_ok = sources_ok && admissible([](const RNRow& r) { return r.range; });
        if (sources_ok && images_ok) {
            return make_element(group, std::move(rows));
        }
        // Descend every row one letter along its point's expansion.
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::string suffix(1, pairs[i].first.letter(rows[i].domain.size()));
            rows[i] = RNRow{rows[i].domain + suffix,
                            rows[i].range + ssg::act(rows[i].action, suffix),
                            restriction(rows[i].action, suffix)};
        }
    }
    throw BoundsError("transporter shrinking cap exceeded (points were not distinct?)");
}

RNElement build_f(const GroupPtr& group, const SeparatedSystem& system) {
    std::vector<RNRow> pairs;
    pairs.reserve(system.cones.size());
    for (std::size_t i = 0; i < system.cones.size(); ++i) {
        pairs.push_back(RNRow{system.cones[i], system.cones[i] + system.points[i].period(),
                              GroupWord::identity(group)});
    }
    return make_element(group, std::move(pairs));
}

EPrimeData build_e_prime(const SeparatedSystem& system) {
    const int d = system.d;
    EPrimeData data;
    data.d = d;
    data.gamma = complement_partition(d, system.cones);
    data.m = data.gamma.size();

    // k extra cones inside E, off the points: step along each point's
    // expansion below its cone and take the lexicographically first letter
    // that leaves the expansion.
    data.k = static_cast<std::size_t>((1 - static_cast<long>(data.m) % (d - 1) + (d - 1)) %
                                      (d - 1));
    std::size_t placed = 0;
    for (std::size_t depth = 0; placed < data.k; ++depth) {
        for (std::size_t i = 0; i < system.points.size() && placed < data.k; ++i) {
            const auto& p = system.points[i];
            const auto& cone = system.cones[i];
            std::string on_path = p.expand(cone.size() + depth + 1);
            char stay = on_path.back();
            for (int x = 0; x < d; ++x) {
                if (letter_char(x) != stay) {
                    data.gamma.push_back(on_path.substr(0, cone.size() + depth) +
                                         letter_char(x));
                    ++placed;
                    break;
                }
            }
        }
    }
    assert(placed == data.k);
    data.delta = standard_partition(d, data.gamma.size());
    data.e_prime = complement_partition(d, data.gamma);
    return data;
}

RNElement phi(const RNElement& h, const EPrimeData& data) {
    const int d = h.d();
    if (d != data.d) throw DomainError("mismatched alphabets");

    // Refine h until every domain and range address extends some delta cone.
    auto needs_split = [&](const RNRow& r) {
        for (const auto& dl : data.delta) {
            if ((is_prefix(r.domain, dl) && r.domain != dl) ||
                (is_prefix(r.range, dl) && r.range != dl)) {
                return true;
            }
        }
        return false;
    };
    std::vector<RNRow> rows = h.rows();
    const std::size_t row_cap = 1u << 20;
    for (std::size_t i = 0; i < rows.size();) {
        if (!needs_split(rows[i])) {
            ++i;
            continue;
        }
        RNRow row = rows[i];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
        for (int x = 0; x < d; ++x) {
            std::string suffix(1, letter_char(x));
            rows.push_back(RNRow{row.domain + suffix,
                                 row.range + ssg::act(row.action, suffix),
                                 restriction(row.action, suffix)});
        }
        if (rows.size() > row_cap) {
            throw BoundsError("refinement cap exceeded in phi");  // unreachable for finite tables
        }
    }

    auto pull_back = [&](const Address& a) -> Address {
        for (std::size_t i = 0; i < data.delta.size(); ++i) {
            if (is_prefix(data.delta[i], a)) {
                return data.gamma[i] + a.substr(data.delta[i].size());
            }
        }
        throw std::logic_error("address escaped the delta partition");
    };

    std::vector<RNRow> result;
    result.reserve(rows.size() + data.e_prime.size());
    for (const auto& r : rows) {
        result.push_back(RNRow{pull_back(r.domain), pull_back(r.range), r.action});
    }
    for (const auto& e : data.e_prime) {
        result.push_back(RNRow{e, e, GroupWord::identity(h.group())});
    }
    return RNElement::make(h.group(), std::move(result));
}

}  // namespace ssg
