#include "ssg/germs.hpp"

#include <algorithm>
#include <numeric>

namespace ssg {

int PeriodicNucleusData::find(const GroupWord& w) const {
    for (std::size_t i = 0; i < n_beta.size(); ++i) {
        if (equal(n_beta[i], w)) return static_cast<int>(i);
    }
    return -1;
}

PeriodicNucleusData periodic_nucleus(const Nucleus& nucleus, const GroupPtr& group,
                                     const std::string& beta) {
    check_word(beta, group->d());
    if (beta.empty()) throw DomainError("empty period");

    // The map g -> g|_beta is a function on the (finite) nucleus; its image
    // stays inside by restriction closure. Periodic points are the elements
    // that some iterate returns to.
    const std::size_t n = nucleus.elements.size();
    std::vector<int> next(n);
    for (std::size_t i = 0; i < n; ++i) {
        int j = nucleus.find(restriction(nucleus.elements[i], beta));
        if (j < 0) {
            throw DomainError("nucleus is not closed under restriction at '" + beta +
                              "' (invalid certificate)");
        }
        next[i] = j;
    }

    PeriodicNucleusData data;
    data.beta = beta;
    long m = 1;
    std::vector<int> cycle_len(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        // Walk n steps to land on the cycle of this component, then measure it.
        std::size_t u = start;
        for (std::size_t k = 0; k < n; ++k) u = static_cast<std::size_t>(next[u]);
        if (cycle_len[u] != 0) continue;
        std::size_t v = u;
        int len = 0;
        do {
            v = static_cast<std::size_t>(next[v]);
            ++len;
        } while (v != u);
        v = u;
        do {
            cycle_len[v] = len;
            data.n_beta.push_back(nucleus.elements[v]);
            v = static_cast<std::size_t>(next[v]);
        } while (v != u);
        m = std::lcm(m, static_cast<long>(len));
    }
    data.M = static_cast<int>(m);
    return data;
}

std::string GermSignature::render() const {
    return "germ(point=" + alpha + "(" + beta + "), n=" + nucleus_component.str() +
           ", delta=" + std::to_string(delta) + ", depth=" +
           std::to_string(stabilized_at) + ")";
}

namespace {

struct DepthSample {
    int component = -1;
    long delta = 0;
};

// Signature candidate at depth index i (source cone alpha·beta^(M·i)), or
// nothing if the table row at p is still deeper or the action has not entered
// n_beta yet.
std::optional<DepthSample> sample_at(const RNElement& h, const RationalPoint& p,
                                     const std::string& alpha,
                                     const PeriodicNucleusData& data, int i) {
    const std::size_t depth = alpha.size() +
        static_cast<std::size_t>(i) * static_cast<std::size_t>(data.M) * data.beta.size();
    auto row = row_at_depth(h, p, depth);
    if (!row) return std::nullopt;
    // h fixes p, so the image cone must contain p as well.
    if (row->range != p.expand(row->range.size())) {
        throw DomainError("image cone is not a prefix of the fixed point (broken table)");
    }
    int component = data.find(row->action);
    if (component < 0) return std::nullopt;
    DepthSample s;
    s.component = component;
    s.delta = static_cast<long>(row->range.size()) - static_cast<long>(depth);
    return s;
}

}  // namespace

GermOutcome germ_signature(const RNElement& h, const RationalPoint& p,
                           const PeriodicNucleusData& data, int cap) {
    if (!fixes(h, p)) {
        throw DomainError("FixedPointViolation: element does not fix " + format_point(p));
    }
    const std::string alpha = p.preperiod().empty() ? p.period() : p.preperiod();
    if (data.beta != p.period()) {
        throw DomainError("periodic nucleus data was built for period '" + data.beta +
                          "', point has period '" + p.period() + "'");
    }

    GermOutcome outcome;
    std::optional<DepthSample> prev;
    for (int i = 1; i <= cap; ++i) {
        auto cur = sample_at(h, p, alpha, data, i);
        if (prev && cur && prev->component == cur->component && prev->delta == cur->delta) {
            outcome.signature = GermSignature{
                alpha,     data.beta, data.n_beta[static_cast<std::size_t>(cur->component)],
                cur->component, cur->delta, i};
            return outcome;
        }
        prev = cur;
    }
    outcome.failure = "NotStabilized: no constant (component, delta) pair within depth cap " +
                      std::to_string(cap);
    return outcome;
}

GermSignature require_signature(const RNElement& h, const RationalPoint& p,
                                const PeriodicNucleusData& data, int cap) {
    GermOutcome outcome = germ_signature(h, p, data, cap);
    if (!outcome.ok()) throw BoundsError(outcome.failure);
    return *outcome.signature;
}

bool germ_equal(const RNElement& h1, const RNElement& h2, const RationalPoint& p,
                const PeriodicNucleusData& data, int cap) {
    GermSignature s1 = require_signature(h1, p, data, cap);
    GermSignature s2 = require_signature(h2, p, data, cap);
    // At a common stabilized depth both image addresses are prefixes of p's
    // expansion of length depth+delta, so they coincide iff the deltas do.
    return s1.component_index == s2.component_index && s1.delta == s2.delta;
}

CosetOutcome coset_witness(const RNElement& h1, const RNElement& h2,
                           const RationalPoint& p, const RNElement& f,
                           const PeriodicNucleusData& data, int cap) {
    GermSignature s1 = require_signature(h1, p, data, cap);
    GermSignature s2 = require_signature(h2, p, data, cap);
    CosetOutcome outcome;
    if (s1.component_index != s2.component_index) return outcome;

    const long blocks = static_cast<long>(data.beta.size());
    if ((s2.delta - s1.delta) % blocks != 0) {
        throw std::logic_error("germ displacements in one fiber differ by a non-multiple of |beta|");
    }
    long k = (s2.delta - s1.delta) / blocks;
    if (!germ_equal(h2, compose(power(f, k), h1), p, data, cap)) {
        throw std::logic_error("coset witness verification failed for k=" + std::to_string(k));
    }
    outcome.has_witness = true;
    outcome.k = k;
    return outcome;
}

}  // namespace ssg
