#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ssg/cantor.hpp"
#include "ssg/errors.hpp"

namespace ssg {

class AutomatonGroup;
using GroupPtr = std::shared_ptr<const AutomatonGroup>;

// One state of the letter transducer, as supplied by the user: a permutation
// of the alphabet (image list) and the state acting below each letter ("id"
// names the implicit identity state).
struct StateSpec {
    std::string name;
    std::vector<int> perm;
    std::vector<std::string> trans;
};

// A finite invertible letter transducer presenting a self-similar group on
// the rooted d-ary tree. Immutable after construction; shared by the words
// and cone-partition bijections built over it. The identity state is
// implicit and spelled "id"; transitions store it as kIdentity.
class AutomatonGroup : public std::enable_shared_from_this<AutomatonGroup> {
  public:
    static constexpr int kIdentity = -1;

    static GroupPtr make(std::string name, int d, std::vector<StateSpec> states);

    const std::string& name() const { return name_; }
    int d() const { return d_; }
    int state_count() const { return static_cast<int>(states_.size()); }
    const std::string& state_name(int i) const { return states_[static_cast<std::size_t>(i)].name; }
    const std::vector<int>& perm(int i) const { return states_[static_cast<std::size_t>(i)].perm; }
    const std::vector<int>& perm_inv(int i) const { return states_[static_cast<std::size_t>(i)].perm_inv; }
    int transition(int i, int letter) const {
        return states_[static_cast<std::size_t>(i)].trans[static_cast<std::size_t>(letter)];
    }
    std::optional<int> find_state(std::string_view name) const;

  private:
    struct State {
        std::string name;
        std::vector<int> perm;
        std::vector<int> perm_inv;
        std::vector<int> trans;  // kIdentity or a state index
    };

    AutomatonGroup() = default;

    std::string name_;
    int d_ = 0;
    std::vector<State> states_;
    std::unordered_map<std::string, int> index_;

    // Word-problem memo, shared across all words over this group.
    mutable std::mutex memo_mutex_;
    mutable std::unordered_map<std::string, bool> trivial_memo_;

    friend bool is_trivial(const class GroupWord&);
};

// A signed state: sign +1 for the state itself, -1 for its formal inverse.
struct Letter {
    int state;
    int sign;
    friend bool operator==(const Letter&, const Letter&) = default;
};

// A group element as a freely reduced word over states and formal inverses.
// letters()[0] is the leftmost factor, i.e. the one applied last. The empty
// word is the identity. Reduction happens eagerly at construction.
class GroupWord {
  public:
    GroupWord(GroupPtr group, std::vector<Letter> letters);

    static GroupWord identity(GroupPtr group) { return GroupWord(std::move(group), {}); }
    static GroupWord generator(GroupPtr group, int state, int sign = 1) {
        return GroupWord(std::move(group), {Letter{state, sign}});
    }

    const GroupPtr& group() const { return group_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity_word() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    GroupWord inverse() const;
    GroupWord operator*(const GroupWord& rhs) const;

    // Stable memoization/dedup key for the reduced word.
    std::string key() const;
    // "a.b'.c" rendering; the identity prints as "id".
    std::string str() const;

  private:
    GroupPtr group_;
    std::vector<Letter> letters_;
};

// One tree level: the image of `letter` under the word, and the local action
// below it.
struct Step {
    int image;
    GroupWord rest;
};
Step step(const GroupWord& w, int letter);

// Image of a path under the word (length-preserving, prefix-compatible).
std::string act(const GroupWord& w, std::string_view path);

// Local action w|_path.
GroupWord restriction(const GroupWord& w, std::string_view path);

// Breadth-first bisimulation with memoization: trivial iff every reachable
// restriction word acts as the identity permutation at its root.
bool is_trivial(const GroupWord& w);

// Word problem: w1 == w2 as tree automorphisms.
bool equal(const GroupWord& w1, const GroupWord& w2);

// A certified nucleus: representatives are pairwise inequivalent, the set
// contains the identity and is closed under inversion and single-letter
// restriction, and every pairwise product's restrictions at depth >=
// depth_certificate land in the set.
struct Nucleus {
    std::vector<GroupWord> elements;
    int depth_certificate = 0;

    // Index of the representative equal to w, or -1.
    int find(const GroupWord& w) const;
    bool contains(const GroupWord& w) const { return find(w) >= 0; }
};

// Semi-algorithm outcome: failure() is nonempty when a bound was exhausted,
// which signals the group may not be contracting.
struct NucleusOutcome {
    std::optional<Nucleus> nucleus;
    std::string failure;

    bool ok() const { return nucleus.has_value(); }
};

// Iterate "recurrent part of pairwise-product restriction graphs" to a fixed
// point, seeded with the identity, the states, and their inverses.
NucleusOutcome compute_nucleus(const GroupPtr& group, std::size_t max_size,
                               int max_depth);

// Least M >= 0 such that every depth-M restriction of w is equal to a nucleus
// element. Throws BoundsError if `cap` is exceeded.
int contraction_depth(const GroupWord& w, const Nucleus& nucleus, int cap = 64);

}  // namespace ssg
