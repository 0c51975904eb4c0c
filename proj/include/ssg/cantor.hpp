#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ssg/errors.hpp"

namespace ssg {

// A node of the rooted d-ary tree, i.e. a cone address: one char per letter,
// '0'..'0'+d-1. The empty string is the root (the whole space). Alphabets are
// capped at d = 10 by this single-digit representation.
using Address = std::string;

constexpr int kMaxAlphabet = 10;

inline int letter_value(char c) { return c - '0'; }
inline char letter_char(int x) { return static_cast<char>('0' + x); }

// Throws DomainError unless every letter of `w` is < d.
void check_word(std::string_view w, int d);

bool is_prefix(std::string_view prefix, std::string_view word);

// An eventually periodic point of the d-ary Cantor space, stored canonically:
// the period is primitive and the preperiod is as short as possible (its last
// letter differs from the period's last letter). Construct through make().
class RationalPoint {
  public:
    static RationalPoint make(int d, std::string preperiod, std::string period);

    int d() const { return d_; }
    const std::string& preperiod() const { return preperiod_; }
    const std::string& period() const { return period_; }

    // First n letters of the expansion preperiod·period·period·...
    std::string expand(std::size_t n) const;
    char letter(std::size_t i) const;

    // Canonical form makes structural equality semantic equality.
    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        return a.d_ == b.d_ && a.preperiod_ == b.preperiod_ && a.period_ == b.period_;
    }
    friend bool operator!=(const RationalPoint& a, const RationalPoint& b) {
        return !(a == b);
    }

  private:
    RationalPoint(int d, std::string preperiod, std::string period)
        : d_(d), preperiod_(std::move(preperiod)), period_(std::move(period)) {}

    int d_;
    std::string preperiod_;
    std::string period_;
};

bool point_in_cone(const RationalPoint& p, const Address& cone);

// Suffix of p after the cone address. Throws DomainError unless p lies in the
// cone.
RationalPoint tail_after(const RationalPoint& p, const Address& cone);

// ---- cone-partition calculus -----------------------------------------------
//
// A clopen set is a finite union of pairwise prefix-incomparable cones; a
// complete partition is a maximal prefix code (its size is 1 mod d-1).

void check_pairwise_disjoint(int d, const std::vector<Address>& cones);
bool pairwise_disjoint(int d, const std::vector<Address>& cones);

// True iff the (pairwise disjoint) cones cover the whole space.
bool is_complete_partition(int d, const std::vector<Address>& cones);
void check_complete_partition(int d, const std::vector<Address>& cones);

// Partition of the complement, emitted in lexicographic (depth-first) order.
// The complement of the empty union is the whole space, {""}.
std::vector<Address> complement_partition(int d, const std::vector<Address>& cones);

// Split cones until there are exactly `target` of them, always splitting the
// lexicographically last address into its d children. Each split adds d-1, so
// target must be >= the current count and congruent to it mod d-1.
std::vector<Address> refine_to_count(int d, std::vector<Address> cones,
                                     std::size_t target);

// refine_to_count({""}, k): the standard complete partition with k cones.
std::vector<Address> standard_partition(int d, std::size_t k);

// Minimal sorted cone list with the same union (full sibling families merged).
std::vector<Address> normalize_clopen(int d, std::vector<Address> cones);

// Coarsest common refinement of two complete partitions.
std::vector<Address> common_refinement(int d, const std::vector<Address>& a,
                                       const std::vector<Address>& b);

// Render/parse the CLI spellings: bare digits, '^' for the empty address.
std::string format_address(const Address& a);
std::string format_point(const RationalPoint& p);

}  // namespace ssg
