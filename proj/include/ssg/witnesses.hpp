#pragma once

#include <utility>
#include <vector>

#include "ssg/cantor.hpp"
#include "ssg/germs.hpp"
#include "ssg/rn.hpp"

namespace ssg {

// Distinct rational points together with pairwise disjoint cones, one per
// point, whose union E misses at least one cone. Each cone is the point's
// preperiod extended by whole period copies, so the tail beyond it is exactly
// the periodic part.
struct SeparatedSystem {
    int d = 0;
    std::vector<RationalPoint> points;
    std::vector<Address> cones;

    std::vector<Address> union_cones() const { return cones; }
};

// Extend every preperiod by the same number of whole period copies (the
// minimal number that makes all cones nonempty, pairwise disjoint and
// non-covering).
SeparatedSystem separate_points(int d, std::vector<RationalPoint> points,
                                int cap = 64);

// An element moving p_i to q_i for every i simultaneously: shrink each
// mover's regular cone at p_i (descending along p_i's digits, all rows in
// lockstep) until sources and images are admissible, then assemble with
// make_element using the movers' local actions.
RNElement tuple_transporter(
    const GroupPtr& group,
    const std::vector<std::pair<RationalPoint, RationalPoint>>& pairs,
    const std::vector<RNElement>& movers, int cap = 64);

// The contraction element: f(cone_i · psi) = cone_i · beta_i · psi, so f
// fixes every p_i and nests E > f(E) > f^2(E) > ...
RNElement build_f(const GroupPtr& group, const SeparatedSystem& system);

// The conjugation frame for the stabilizer witness: gamma lists the
// complement of E followed by k extra cones inside E avoiding the points
// (k minimal with m+k = 1 mod d-1); delta is the standard partition of the
// same size; E' is the complement of the gamma cones and contains every p_i.
struct EPrimeData {
    int d = 0;
    std::vector<Address> gamma;
    std::vector<Address> delta;
    std::vector<Address> e_prime;
    std::size_t m = 0;  // complement cones; gamma.size() == m + k
    std::size_t k = 0;
};

EPrimeData build_e_prime(const SeparatedSystem& system);

// The embedding phi into the pointwise fixer of E': phi(h) is the identity on
// E' and agrees elsewhere with z^-1·h·z, where z maps gamma_i·psi to
// delta_i·psi.
RNElement phi(const RNElement& h, const EPrimeData& data);

}  // namespace ssg
