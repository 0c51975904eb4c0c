#include "ssg/automaton.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace ssg {

GroupPtr AutomatonGroup::make(std::string name, int d, std::vector<StateSpec> specs) {
    if (d < 2 || d > kMaxAlphabet) {
        throw DomainError("alphabet size must be in [2," + std::to_string(kMaxAlphabet) +
                          "], got " + std::to_string(d));
    }
    auto group = std::shared_ptr<AutomatonGroup>(new AutomatonGroup());
    group->name_ = std::move(name);
    group->d_ = d;

    for (const auto& spec : specs) {
        if (spec.name.empty() || spec.name == "id") {
            throw DomainError("invalid state name '" + spec.name + "'");
        }
        if (!group->index_.emplace(spec.name, static_cast<int>(group->states_.size())).second) {
            throw DomainError("duplicate state name '" + spec.name + "'");
        }
        State st;
        st.name = spec.name;
        st.perm = spec.perm;
        if (static_cast<int>(st.perm.size()) != d) {
            throw DomainError("state '" + st.name + "': permutation must list " +
                              std::to_string(d) + " images");
        }
        st.perm_inv.assign(static_cast<std::size_t>(d), -1);
        for (int x = 0; x < d; ++x) {
            int y = st.perm[static_cast<std::size_t>(x)];
            if (y < 0 || y >= d || st.perm_inv[static_cast<std::size_t>(y)] != -1) {
                throw DomainError("state '" + st.name + "': not a permutation of 0.." +
                                  std::to_string(d - 1));
            }
            st.perm_inv[static_cast<std::size_t>(y)] = x;
        }
        group->states_.push_back(std::move(st));
    }
    // Second pass: transitions may refer to states defined later.
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto& spec = specs[i];
        if (static_cast<int>(spec.trans.size()) != d) {
            throw DomainError("state '" + spec.name + "': transition list must name " +
                              std::to_string(d) + " states");
        }
        auto& st = group->states_[i];
        st.trans.reserve(static_cast<std::size_t>(d));
        for (const auto& t : spec.trans) {
            if (t == "id") {
                st.trans.push_back(kIdentity);
            } else {
                auto it = group->index_.find(t);
                if (it == group->index_.end()) {
                    throw DomainError("state '" + spec.name + "': unknown transition target '" +
                                      t + "'");
                }
                st.trans.push_back(it->second);
            }
        }
    }
    return group;
}

std::optional<int> AutomatonGroup::find_state(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

GroupWord::GroupWord(GroupPtr group, std::vector<Letter> letters)
    : group_(std::move(group)) {
    if (!group_) throw DomainError("word without a group");
    letters_.reserve(letters.size());
    for (const Letter& l : letters) {
        if (l.state < 0 || l.state >= group_->state_count()) {
            throw DomainError("letter names a state outside the group");
        }
        if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
        if (!letters_.empty() && letters_.back().state == l.state &&
            letters_.back().sign == -l.sign) {
            letters_.pop_back();
        } else {
            letters_.push_back(l);
        }
    }
}

GroupWord GroupWord::inverse() const {
    std::vector<Letter> inv;
    inv.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        inv.push_back(Letter{it->state, -it->sign});
    }
    return GroupWord(group_, std::move(inv));
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
    if (group_ != rhs.group_) throw DomainError("mismatched automata");
    std::vector<Letter> prod = letters_;
    prod.insert(prod.end(), rhs.letters_.begin(), rhs.letters_.end());
    return GroupWord(group_, std::move(prod));
}

std::string GroupWord::key() const {
    std::string k;
    for (const Letter& l : letters_) {
        k += std::to_string(l.state);
        if (l.sign < 0) k += '\'';
        k += '.';
    }
    return k;
}

std::string GroupWord::str() const {
    if (letters_.empty()) return "id";
    std::string s;
    for (const Letter& l : letters_) {
        if (!s.empty()) s += '.';
        s += group_->state_name(l.state);
        if (l.sign < 0) s += '\'';
    }
    return s;
}

namespace {

// Image of `letter` under a single signed state.
int act_letter(const AutomatonGroup& g, Letter l, int letter) {
    const auto& p = l.sign > 0 ? g.perm(l.state) : g.perm_inv(l.state);
    return p[static_cast<std::size_t>(letter)];
}

// Local action of a single signed state: s|_x = trans[x]; (s^-1)|_x is the
// inverse of s restricted at the preimage of x.
std::optional<Letter> restrict_letter(const AutomatonGroup& g, Letter l, int letter) {
    int below = l.sign > 0 ? letter : g.perm_inv(l.state)[static_cast<std::size_t>(letter)];
    int t = g.transition(l.state, below);
    if (t == AutomatonGroup::kIdentity) return std::nullopt;
    return Letter{t, l.sign};
}

int check_letter(const GroupWord& w, int letter) {
    if (letter < 0 || letter >= w.group()->d()) {
        throw DomainError("letter out of range for alphabet of size " +
                          std::to_string(w.group()->d()));
    }
    return letter;
}

}  // namespace

Step step(const GroupWord& w, int letter) {
    check_letter(w, letter);
    const AutomatonGroup& g = *w.group();
    // Restrict the right factor first, then each left letter at the running
    // image. Collected right-to-left, so reverse at the end.
    std::vector<Letter> parts;
    int cur = letter;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        if (auto r = restrict_letter(g, *it, cur)) parts.push_back(*r);
        cur = act_letter(g, *it, cur);
    }
    std::reverse(parts.begin(), parts.end());
    return Step{cur, GroupWord(w.group(), std::move(parts))};
}

std::string act(const GroupWord& w, std::string_view path) {
    check_word(path, w.group()->d());
    std::string out;
    out.reserve(path.size());
    GroupWord cur = w;
    for (char c : path) {
        Step s = step(cur, letter_value(c));
        out.push_back(letter_char(s.image));
        cur = std::move(s.rest);
    }
    return out;
}

GroupWord restriction(const GroupWord& w, std::string_view path) {
    check_word(path, w.group()->d());
    GroupWord cur = w;
    for (char c : path) cur = step(cur, letter_value(c)).rest;
    return cur;
}

namespace {

bool root_is_identity(const GroupWord& w) {
    const AutomatonGroup& g = *w.group();
    for (int x = 0; x < g.d(); ++x) {
        int cur = x;
        for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
            cur = act_letter(g, *it, cur);
        }
        if (cur != x) return false;
    }
    return true;
}

}  // namespace

bool is_trivial(const GroupWord& w) {
    if (w.is_identity_word()) return true;
    const AutomatonGroup& g = *w.group();
    std::unique_lock lock(g.memo_mutex_);
    auto& memo = g.trivial_memo_;
    if (auto it = memo.find(w.key()); it != memo.end()) return it->second;

    // Closure of {w} under single-letter restriction. Restrictions of a
    // length-k word have length <= k, so this set is finite. The word is
    // trivial iff every member permutes its children trivially.
    std::unordered_map<std::string, GroupWord> visited;
    std::deque<const GroupWord*> queue;
    auto enqueue = [&](GroupWord u) -> std::optional<bool> {
        std::string k = u.key();
        if (auto it = memo.find(k); it != memo.end()) {
            // Known words need no expansion; a known-nontrivial one settles it.
            return it->second ? std::optional<bool>(true) : std::optional<bool>(false);
        }
        auto [it, fresh] = visited.emplace(std::move(k), std::move(u));
        if (fresh) queue.push_back(&it->second);
        return std::nullopt;
    };

    bool trivial = true;
    enqueue(w);
    while (!queue.empty() && trivial) {
        const GroupWord* u = queue.front();
        queue.pop_front();
        if (!root_is_identity(*u)) {
            memo[u->key()] = false;
            trivial = false;
            break;
        }
        for (int x = 0; x < g.d() && trivial; ++x) {
            if (auto known = enqueue(step(*u, x).rest)) {
                if (!*known) trivial = false;
            }
        }
    }
    if (trivial) {
        // The whole closure was visited with identity root actions, so every
        // member is trivial.
        for (const auto& [k, u] : visited) memo[k] = true;
    } else {
        memo[w.key()] = false;
    }
    return trivial;
}

bool equal(const GroupWord& w1, const GroupWord& w2) {
    if (w1.group() != w2.group()) throw DomainError("mismatched automata");
    return is_trivial(w1 * w2.inverse());
}

int Nucleus::find(const GroupWord& w) const {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (equal(elements[i], w)) return static_cast<int>(i);
    }
    return -1;
}

namespace {

// Shortlex order on reduced words; used to pick deterministic representatives.
bool shortlex_less(const GroupWord& a, const GroupWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto& la = a.letters();
    const auto& lb = b.letters();
    for (std::size_t i = 0; i < la.size(); ++i) {
        if (la[i].state != lb[i].state) return la[i].state < lb[i].state;
        if (la[i].sign != lb[i].sign) return la[i].sign > lb[i].sign;  // + before -
    }
    return false;
}

struct RestrictionGraph {
    std::vector<GroupWord> reps;                 // one per node, shortlex-least seen
    std::vector<std::vector<int>> edges;         // node x letter -> node
    std::string failure;

    bool ok() const { return failure.empty(); }
};

// Nodes are restriction words of w up to `equal`; edges are single-letter
// restrictions. Breadth-first with a depth cap.
RestrictionGraph build_restriction_graph(const GroupWord& w, int max_depth) {
    RestrictionGraph graph;
    const int d = w.group()->d();
    std::unordered_map<std::string, int> by_key;

    auto node_of = [&](GroupWord u) -> int {
        auto it = by_key.find(u.key());
        if (it != by_key.end()) return it->second;
        for (std::size_t i = 0; i < graph.reps.size(); ++i) {
            if (equal(graph.reps[i], u)) {
                by_key.emplace(u.key(), static_cast<int>(i));
                if (shortlex_less(u, graph.reps[i])) graph.reps[i] = std::move(u);
                return static_cast<int>(i);
            }
        }
        int id = static_cast<int>(graph.reps.size());
        by_key.emplace(u.key(), id);
        graph.reps.push_back(std::move(u));
        graph.edges.emplace_back();
        return id;
    };

    std::deque<std::pair<int, int>> queue;  // node, depth
    std::vector<bool> expanded;
    queue.emplace_back(node_of(w), 0);
    while (!queue.empty()) {
        auto [n, depth] = queue.front();
        queue.pop_front();
        if (static_cast<std::size_t>(n) < expanded.size() && expanded[static_cast<std::size_t>(n)]) continue;
        expanded.resize(std::max(expanded.size(), static_cast<std::size_t>(n) + 1), false);
        expanded[static_cast<std::size_t>(n)] = true;
        if (depth > max_depth) {
            graph.failure = "restriction graph of " + w.str() + " exceeded depth " +
                            std::to_string(max_depth);
            return graph;
        }
        GroupWord u = graph.reps[static_cast<std::size_t>(n)];
        std::vector<int> out(static_cast<std::size_t>(d));
        for (int x = 0; x < d; ++x) {
            int m = node_of(step(u, x).rest);  // may grow reps/edges
            out[static_cast<std::size_t>(x)] = m;
            if (static_cast<std::size_t>(m) >= expanded.size() || !expanded[static_cast<std::size_t>(m)]) {
                queue.emplace_back(m, depth + 1);
            }
        }
        graph.edges[static_cast<std::size_t>(n)] = std::move(out);
    }
    return graph;
}

// Nodes lying on a cycle or reachable from one.
std::vector<int> recurrent_closure(const RestrictionGraph& graph) {
    const std::size_t n = graph.reps.size();
    // reach[i] = nodes reachable from i in >= 1 step
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        std::deque<int> q;
        for (int m : graph.edges[i]) {
            if (!reach[i][static_cast<std::size_t>(m)]) {
                reach[i][static_cast<std::size_t>(m)] = true;
                q.push_back(m);
            }
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int m : graph.edges[static_cast<std::size_t>(u)]) {
                if (!reach[i][static_cast<std::size_t>(m)]) {
                    reach[i][static_cast<std::size_t>(m)] = true;
                    q.push_back(m);
                }
            }
        }
    }
    std::vector<int> keep;
    for (std::size_t i = 0; i < n; ++i) {
        if (reach[i][i]) {
            keep.push_back(static_cast<int>(i));
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (reach[j][j] && reach[j][i]) {
                keep.push_back(static_cast<int>(i));
                break;
            }
        }
    }
    return keep;
}

}  // namespace

NucleusOutcome compute_nucleus(const GroupPtr& group, std::size_t max_size, int max_depth) {
    if (max_size == 0 || max_depth <= 0) throw DomainError("nucleus bounds must be positive");
    NucleusOutcome outcome;

    std::vector<GroupWord> candidates;
    auto add_candidate = [&](const GroupWord& w) -> bool {
        for (auto& c : candidates) {
            if (equal(c, w)) {
                if (shortlex_less(w, c)) c = w;
                return false;
            }
        }
        candidates.push_back(w);
        return true;
    };

    add_candidate(GroupWord::identity(group));
    for (int s = 0; s < group->state_count(); ++s) {
        add_candidate(GroupWord::generator(group, s, 1));
        add_candidate(GroupWord::generator(group, s, -1));
    }
    if (candidates.size() > max_size) {
        outcome.failure = "candidate set exceeded max size " + std::to_string(max_size);
        return outcome;
    }

    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t snapshot = candidates.size();
        for (std::size_t i = 0; i < snapshot; ++i) {
            for (std::size_t j = 0; j < snapshot; ++j) {
                auto graph = build_restriction_graph(candidates[i] * candidates[j], max_depth);
                if (!graph.ok()) {
                    outcome.failure = graph.failure;
                    return outcome;
                }
                for (int n : recurrent_closure(graph)) {
                    const GroupWord& rep = graph.reps[static_cast<std::size_t>(n)];
                    if (add_candidate(rep)) grew = true;
                    if (add_candidate(rep.inverse())) grew = true;
                    if (candidates.size() > max_size) {
                        outcome.failure = "candidate set exceeded max size " +
                                          std::to_string(max_size) + " (grew to " +
                                          std::to_string(candidates.size()) + ")";
                        return outcome;
                    }
                }
            }
        }
    }

    Nucleus nucleus;
    nucleus.elements = candidates;
    std::sort(nucleus.elements.begin(), nucleus.elements.end(), shortlex_less);

    // Certificate: deepest transient over all pairwise-product restriction
    // trees. Bounded by the node count of each (finite) graph.
    int certificate = 0;
    for (const auto& a : nucleus.elements) {
        for (const auto& b : nucleus.elements) {
            GroupWord w = a * b;
            std::vector<GroupWord> level{w};
            int depth = 0;
            const int cap = max_depth + 1;
            while (true) {
                bool all_in = true;
                for (const auto& u : level) {
                    if (!nucleus.contains(u)) {
                        all_in = false;
                        break;
                    }
                }
                if (all_in) break;
                if (++depth > cap) {
                    outcome.failure = "no contraction certificate for " + w.str() +
                                      " within depth " + std::to_string(cap);
                    return outcome;
                }
                std::vector<GroupWord> next;
                std::set<std::string> seen;
                for (const auto& u : level) {
                    for (int x = 0; x < group->d(); ++x) {
                        GroupWord r = step(u, x).rest;
                        if (seen.insert(r.key()).second) next.push_back(std::move(r));
                    }
                }
                level = std::move(next);
            }
            certificate = std::max(certificate, depth);
        }
    }
    nucleus.depth_certificate = certificate;
    outcome.nucleus = std::move(nucleus);
    return outcome;
}

int contraction_depth(const GroupWord& w, const Nucleus& nucleus, int cap) {
    std::vector<GroupWord> level{w};
    int depth = 0;
    while (true) {
        bool all_in = true;
        for (const auto& u : level) {
            if (!nucleus.contains(u)) {
                all_in = false;
                break;
            }
        }
        if (all_in) return depth;
        if (++depth > cap) {
            throw BoundsError("contraction depth of " + w.str() + " exceeds cap " +
                              std::to_string(cap));
        }
        std::vector<GroupWord> next;
        std::set<std::string> seen;
        for (const auto& u : level) {
            for (int x = 0; x < w.group()->d(); ++x) {
                GroupWord r = step(u, x).rest;
                if (seen.insert(r.key()).second) next.push_back(std::move(r));
            }
        }
        level = std::move(next);
    }
}

}  // namespace ssg
