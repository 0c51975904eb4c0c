#pragma once

#include <vector>

#include "ssg/automaton.hpp"
#include "ssg/cantor.hpp"

namespace ssg {

// One row of the table: the domain cone maps onto the range cone with the
// given local action, domain·psi -> range·action(psi).
struct RNRow {
    Address domain;
    Address range;
    GroupWord action;
};

// A homeomorphism of the d-ary Cantor space given by a finite table of
// decorated cone exchanges. Domains and ranges each form a complete
// partition; rows are kept sorted by domain address. Immutable.
class RNElement {
  public:
    static RNElement make(GroupPtr group, std::vector<RNRow> rows);
    static RNElement identity(GroupPtr group);

    const GroupPtr& group() const { return group_; }
    int d() const { return group_->d(); }
    const std::vector<RNRow>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

    std::vector<Address> domain_partition() const;
    std::vector<Address> range_partition() const;

    // Row whose domain cone contains p.
    const RNRow& row_containing(const RationalPoint& p) const;

  private:
    RNElement(GroupPtr group, std::vector<RNRow> rows)
        : group_(std::move(group)), rows_(std::move(rows)) {}

    GroupPtr group_;
    std::vector<RNRow> rows_;
};

// Same homeomorphism on a finer complete domain partition: the row (a, b, g)
// splits at child x into (a·x, b·g(x), g|_x).
RNElement expand(const RNElement& h, const std::vector<Address>& finer);

// Same homeomorphism with the given complete partition refining the ranges.
RNElement expand_range(const RNElement& h, const std::vector<Address>& finer);

// First apply h2, then h1.
RNElement compose(const RNElement& h1, const RNElement& h2);

RNElement invert(const RNElement& h);

RNElement power(const RNElement& h, long exponent);

// Expand both to the coarsest common refinement and compare rows under the
// word problem. No minimal normal form is attempted.
bool equal_rn(const RNElement& h1, const RNElement& h2);

// Image of a rational point; the eventually periodic tail is pushed through
// the local action by cycle detection on (restriction word, period phase).
RationalPoint evaluate(const RNElement& h, const RationalPoint& p);

bool fixes(const RNElement& h, const RationalPoint& p);

// Build an element whose table contains exactly the given rows, padded by
// matching the two complements identity-to-identity: the smaller complement
// is refined to the size of the larger (counts agree mod d-1) and the lists
// are paired in lexicographic order.
// Preconditions: domains pairwise disjoint and not covering; likewise ranges.
RNElement make_element(const GroupPtr& group, std::vector<RNRow> pairs);

// The table row at p: a cone containing p that maps onto a cone with the
// returned local action.
struct RegularCone {
    Address cone;
    GroupWord action;
};
RegularCone regular_cone(const RNElement& h, const RationalPoint& p);

// The row at p, deepened along p's expansion to domain length `depth`.
// Returns nothing when the containing row is already deeper than `depth`.
std::optional<RNRow> row_at_depth(const RNElement& h, const RationalPoint& p,
                                  std::size_t depth);

// True iff h is the identity on the union of the given (disjoint) cones.
bool is_identity_on(const RNElement& h, const std::vector<Address>& cones);

// Image of a clopen set, as a normalized cone list.
std::vector<Address> image_of_clopen(const RNElement& h,
                                     const std::vector<Address>& cones);

}  // namespace ssg
