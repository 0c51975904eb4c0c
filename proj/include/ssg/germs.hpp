#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssg/automaton.hpp"
#include "ssg/rn.hpp"

namespace ssg {

// The periodic part of the nucleus under g -> g|_beta, and the lcm M of the
// cycle lengths. Restrictions at aligned depths (multiples of M·|beta|) of a
// stabilizer's local actions land in n_beta and repeat with period dividing M.
struct PeriodicNucleusData {
    std::string beta;
    std::vector<GroupWord> n_beta;
    int M = 1;

    // Index of the member equal to w, or -1.
    int find(const GroupWord& w) const;
};

PeriodicNucleusData periodic_nucleus(const Nucleus& nucleus, const GroupPtr& group,
                                     const std::string& beta);

// The stabilized invariant of the germ of h at p = alpha·beta^inf: the
// constant value n of the local actions along the cones alpha·beta^(M·i),
// and the displacement delta = |image address| - |source address| in letters.
// stabilized_at is the depth index at which constancy was confirmed.
struct GermSignature {
    std::string alpha;  // preperiod, made nonempty (one beta copy if needed)
    std::string beta;
    GroupWord nucleus_component;
    int component_index = 0;  // into PeriodicNucleusData::n_beta
    long delta = 0;
    int stabilized_at = 0;

    std::string render() const;
};

struct GermOutcome {
    std::optional<GermSignature> signature;
    std::string failure;  // nonempty: NotStabilized diagnostic

    bool ok() const { return signature.has_value(); }
};

// Extract the germ signature of h at p, scanning depth indices i = 1..cap and
// requiring two consecutive agreeing values. Throws DomainError if h does not
// fix p ("FixedPointViolation") or if data was built for a different period.
GermOutcome germ_signature(const RNElement& h, const RationalPoint& p,
                           const PeriodicNucleusData& data, int cap = 32);

// As above but a BoundsError replaces the NotStabilized outcome.
GermSignature require_signature(const RNElement& h, const RationalPoint& p,
                                const PeriodicNucleusData& data, int cap = 32);

// Germ equality at p: h1 and h2 agree on some cone alpha·beta^(M·i), which
// holds iff their signatures share the nucleus component and delta.
bool germ_equal(const RNElement& h1, const RNElement& h2, const RationalPoint& p,
                const PeriodicNucleusData& data, int cap = 32);

// Right-coset witness: when the nucleus components of h1 and h2 agree, their
// germs differ by the power k = (delta2 - delta1)/|beta| of f, and this is
// verified via germ_equal(h2, f^k·h1). Different components: no witness.
struct CosetOutcome {
    bool has_witness = false;
    long k = 0;
};

CosetOutcome coset_witness(const RNElement& h1, const RNElement& h2,
                           const RationalPoint& p, const RNElement& f,
                           const PeriodicNucleusData& data, int cap = 32);

}  // namespace ssg
