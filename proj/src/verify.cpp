#include "ssg/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ssg/builtins.hpp"
#include "ssg/germs.hpp"
#include "ssg/witnesses.hpp"

namespace ssg {

GroupWord random_word(const GroupPtr& group, Rng& rng, int max_len) {
    if (group->state_count() == 0) return GroupWord::identity(group);
    std::vector<Letter> letters;
    int len = static_cast<int>(rng.below(static_cast<std::size_t>(max_len) + 1));
    for (int i = 0; i < len; ++i) {
        letters.push_back(Letter{static_cast<int>(rng.below(
                                     static_cast<std::size_t>(group->state_count()))),
                                 rng.coin() ? 1 : -1});
    }
    return GroupWord(group, std::move(letters));
}

RationalPoint random_point(int d, Rng& rng, int max_pre, int max_per) {
    std::string pre, per;
    int pre_len = static_cast<int>(rng.below(static_cast<std::size_t>(max_pre) + 1));
    int per_len = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(max_per)));
    for (int i = 0; i < pre_len; ++i) pre.push_back(letter_char(rng.range(0, d - 1)));
    for (int i = 0; i < per_len; ++i) per.push_back(letter_char(rng.range(0, d - 1)));
    return RationalPoint::make(d, std::move(pre), std::move(per));
}

std::vector<Address> random_complete_partition(int d, Rng& rng, int splits) {
    std::vector<Address> cones{""};
    for (int s = 0; s < splits; ++s) {
        std::size_t i = rng.below(cones.size());
        Address a = cones[i];
        cones.erase(cones.begin() + static_cast<std::ptrdiff_t>(i));
        for (int x = 0; x < d; ++x) cones.push_back(a + letter_char(x));
    }
    std::sort(cones.begin(), cones.end());
    return cones;
}

RNElement random_rn(const GroupPtr& group, Rng& rng, int max_splits, int max_word_len) {
    const int d = group->d();
    if (rng.coin()) {
        // Full table: two equal-size random partitions, randomly paired.
        int splits = rng.range(1, max_splits);
        std::vector<Address> dom = random_complete_partition(d, rng, splits);
        std::vector<Address> ran = random_complete_partition(d, rng, splits);
        rng.shuffle(ran);
        std::vector<RNRow> rows;
        for (std::size_t i = 0; i < dom.size(); ++i) {
            rows.push_back(RNRow{dom[i], ran[i], random_word(group, rng, max_word_len)});
        }
        return RNElement::make(group, std::move(rows));
    }
    // Partial table completed by make_element.
    int splits = rng.range(1, max_splits);
    std::vector<Address> dom = random_complete_partition(d, rng, splits);
    std::vector<Address> ran = random_complete_partition(d, rng, splits);
    std::size_t max_pairs = std::min(dom.size(), ran.size()) - 1;
    std::size_t n = 1 + rng.below(std::min<std::size_t>(max_pairs, 3));
    rng.shuffle(dom);
    rng.shuffle(ran);
    std::vector<RNRow> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        pairs.push_back(RNRow{dom[i], ran[i], random_word(group, rng, max_word_len)});
    }
    return make_element(group, std::move(pairs));
}

RNElement random_prefix_stabilizer(const GroupPtr& group, Rng& rng,
                                   const RationalPoint& p) {
    const std::size_t period = p.period().size();
    const std::size_t base = p.preperiod().size();
    std::size_t r = rng.below(period);
    std::size_t j1 = rng.below(4);
    std::size_t j2 = rng.below(4);
    if (base + r == 0) {
        // Prefixes must be nonempty cones.
        j1 += 1;
        j2 += 1;
    }
    Address c1 = p.expand(base + j1 * period + r);
    Address c2 = p.expand(base + j2 * period + r);
    if (c1 == c2) return RNElement::identity(group);
    return make_element(group, {RNRow{c1, c2, GroupWord::identity(group)}});
}

std::string oracle_apply(const AutomatonGroup& group, const std::vector<Letter>& word,
                         std::string path) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::string out(path.size(), '0');
        int cur = it->state;
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (cur == AutomatonGroup::kIdentity) {
                out[i] = path[i];
                continue;
            }
            int x = letter_value(path[i]);
            if (it->sign > 0) {
                out[i] = letter_char(group.perm(cur)[static_cast<std::size_t>(x)]);
                cur = group.transition(cur, x);
            } else {
                int y = group.perm_inv(cur)[static_cast<std::size_t>(x)];
                out[i] = letter_char(y);
                cur = group.transition(cur, y);
            }
        }
        path = std::move(out);
    }
    return path;
}

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.status == CheckStatus::Pass; });
}

bool SuiteReport::bounds_hit() const {
    return std::any_of(checks.begin(), checks.end(), [](const Check& c) {
        return c.status == CheckStatus::NotStabilized;
    });
}

int SuiteReport::exit_code() const {
    bool fail = false;
    bool bounds = false;
    for (const auto& c : checks) {
        fail = fail || c.status == CheckStatus::Fail;
        bounds = bounds || c.status == CheckStatus::NotStabilized;
    }
    if (fail) return 1;
    if (bounds) return 2;
    return 0;
}

namespace {

class Suite {
  public:
    Suite(std::string name, std::uint64_t seed, int cases)
        : report_{std::move(name), seed, cases, {}} {}

    // Runs the body, converting stray exceptions into one failed check so a
    // suite always yields a report.
    void check(const std::string& id, const std::function<void(Check&)>& body) {
        Check c;
        c.id = id;
        try {
            body(c);
        } catch (const BoundsError& e) {
            c.status = CheckStatus::NotStabilized;
            c.detail = e.what();
        } catch (const std::exception& e) {
            c.status = CheckStatus::Fail;
            c.detail = std::string("exception: ") + e.what();
        }
        report_.checks.push_back(std::move(c));
    }

    SuiteReport finish() {
        std::sort(report_.checks.begin(), report_.checks.end(),
                  [](const Check& a, const Check& b) { return a.id < b.id; });
        return std::move(report_);
    }

  private:
    SuiteReport report_;
};

void require(Check& c, bool cond, const std::string& msg) {
    if (!cond && c.status == CheckStatus::Pass) {
        c.status = CheckStatus::Fail;
        c.detail = msg;
    }
}

std::string fraction(int good, int total) {
    return std::to_string(good) + "/" + std::to_string(total);
}

// All paths of the given length, in lexicographic order.
std::vector<std::string> all_paths(int d, int length) {
    std::vector<std::string> paths{""};
    for (int i = 0; i < length; ++i) {
        std::vector<std::string> next;
        next.reserve(paths.size() * static_cast<std::size_t>(d));
        for (const auto& p : paths) {
            for (int x = 0; x < d; ++x) next.push_back(p + letter_char(x));
        }
        paths = std::move(next);
    }
    return paths;
}

// ---- suite: wp --------------------------------------------------------------
//
// The word problem oracle: a word acts trivially to depth L iff it moves no
// path of length L. For short words over a contracting automaton this is the
// ground truth to compare the bisimulation against.

bool oracle_trivial_to_depth(const AutomatonGroup& group,
                             const std::vector<Letter>& word,
                             const std::vector<std::string>& paths) {
    for (const auto& p : paths) {
        if (oracle_apply(group, word, p) != p) return false;
    }
    return true;
}

SuiteReport suite_wp(std::uint64_t seed, int cases) {
    Suite suite("wp", seed, cases);
    GroupPtr g = builtin_group("grigorchuk");
    const int max_len = 6;
    const int depth = 8;

    suite.check("wp.relations", [&](Check& c) {
        auto w = [&](const std::string& s) {
            std::vector<Letter> letters;
            for (char ch : s) {
                letters.push_back(Letter{*g->find_state(std::string(1, ch)), 1});
            }
            return GroupWord(g, letters);
        };
        require(c, is_trivial(w("aa")), "a.a should be trivial");
        require(c, is_trivial(w("bb")), "b.b should be trivial");
        require(c, is_trivial(w("cc")), "c.c should be trivial");
        require(c, is_trivial(w("dd")), "d.d should be trivial");
        require(c, is_trivial(w("bcd")), "b.c.d should be trivial");
        require(c, !is_trivial(w("a")), "a should be nontrivial");
        require(c, !is_trivial(w("ab")), "a.b should be nontrivial");
        require(c, equal(w("bc"), w("d")), "b.c should equal d");
        if (c.status == CheckStatus::Pass) c.detail = "defining relations detected";
    });

    suite.check("wp.enumeration", [&](Check& c) {
        std::vector<std::string> paths = all_paths(g->d(), depth);
        long total = 0;
        long disagreements = 0;
        std::vector<Letter> word;
        std::function<void(int)> walk = [&](int remaining) {
            if (!word.empty()) {
                ++total;
                bool fast = is_trivial(GroupWord(g, word));
                bool slow = oracle_trivial_to_depth(*g, word, paths);
                if (fast != slow) ++disagreements;
            }
            if (remaining == 0) return;
            for (int s = 0; s < g->state_count(); ++s) {
                for (int sign : {1, -1}) {
                    if (!word.empty() && word.back().state == s && word.back().sign == -sign) {
                        continue;  // not freely reduced
                    }
                    word.push_back(Letter{s, sign});
                    walk(remaining - 1);
                    word.pop_back();
                }
            }
        };
        walk(max_len);
        require(c, disagreements == 0,
                std::to_string(disagreements) + " disagreements out of " +
                    std::to_string(total) + " words");
        if (c.status == CheckStatus::Pass) {
            c.detail = std::to_string(total) + " reduced words of length <= " +
                       std::to_string(max_len) + " vs depth-" + std::to_string(depth) +
                       " tree action, 0 disagreements";
        }
    });

    return suite.finish();
}

// ---- suite: nucleus ---------------------------------------------------------

void check_nucleus_of(Check& c, const GroupPtr& g, std::size_t expected_size) {
    NucleusOutcome outcome = compute_nucleus(g, 64, 32);
    require(c, outcome.ok(), "nucleus computation failed: " + outcome.failure);
    if (!outcome.ok()) return;
    const Nucleus& nuc = *outcome.nucleus;

    require(c, nuc.elements.size() == expected_size,
            "expected " + std::to_string(expected_size) + " elements, got " +
                std::to_string(nuc.elements.size()));
    for (std::size_t i = 0; i < nuc.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < nuc.elements.size(); ++j) {
            require(c, !equal(nuc.elements[i], nuc.elements[j]),
                    "representatives " + nuc.elements[i].str() + " and " +
                        nuc.elements[j].str() + " are equivalent");
        }
    }
    require(c, nuc.contains(GroupWord::identity(g)), "identity missing");
    for (int s = 0; s < g->state_count(); ++s) {
        require(c, nuc.contains(GroupWord::generator(g, s)),
                "state " + g->state_name(s) + " missing");
    }
    for (const auto& n : nuc.elements) {
        require(c, nuc.contains(n.inverse()), "not closed under inversion at " + n.str());
        for (int x = 0; x < g->d(); ++x) {
            require(c, nuc.contains(step(n, x).rest),
                    "not closed under restriction at " + n.str());
        }
    }
    // Independent certificate check: all restrictions of pairwise products at
    // depths certificate..certificate+2 land in the set.
    for (const auto& a : nuc.elements) {
        for (const auto& b : nuc.elements) {
            GroupWord w = a * b;
            for (int k = nuc.depth_certificate; k <= nuc.depth_certificate + 2; ++k) {
                for (const auto& path : all_paths(g->d(), k)) {
                    require(c, nuc.contains(restriction(w, path)),
                            "restriction of " + w.str() + " at depth " + std::to_string(k) +
                                " escapes the set");
                }
            }
        }
    }
    if (c.status == CheckStatus::Pass) {
        c.detail = std::to_string(nuc.elements.size()) + " elements, certificate " +
                   std::to_string(nuc.depth_certificate) + ", closure and depth checks pass";
    }
}

SuiteReport suite_nucleus(std::uint64_t seed, int cases) {
    Suite suite("nucleus", seed, cases);
    suite.check("nucleus.grigorchuk", [&](Check& c) {
        check_nucleus_of(c, builtin_group("grigorchuk"), 5);
    });
    suite.check("nucleus.odometer", [&](Check& c) {
        GroupPtr g = builtin_group("odometer");
        check_nucleus_of(c, g, 3);
        NucleusOutcome outcome = compute_nucleus(g, 64, 32);
        GroupWord a = GroupWord::generator(g, 0);
        require(c, outcome.nucleus->contains(a), "a missing");
        require(c, outcome.nucleus->contains(a.inverse()), "a' missing");
    });
    suite.check("nucleus.trivial", [&](Check& c) {
        check_nucleus_of(c, builtin_group("trivial"), 1);
    });
    return suite.finish();
}

// ---- suite: make ------------------------------------------------------------

SuiteReport suite_make(std::uint64_t seed, int cases) {
    Suite suite("make", seed, cases);
    suite.check("make.construction", [&](Check& c) {
        Rng rng(seed);
        int good = 0;
        for (int i = 0; i < cases; ++i) {
            GroupPtr g = builtin_group(i % 2 == 0 ? "reflection" : "gupta_sidki_3");
            const int d = g->d();
            std::vector<Address> dom = random_complete_partition(d, rng, rng.range(2, 4));
            std::vector<Address> ran = random_complete_partition(d, rng, rng.range(2, 4));
            std::size_t n = 1 + rng.below(std::min({dom.size() - 1, ran.size() - 1,
                                                    std::size_t{3}}));
            rng.shuffle(dom);
            rng.shuffle(ran);
            std::vector<RNRow> pairs;
            for (std::size_t r = 0; r < n; ++r) {
                pairs.push_back(RNRow{dom[r], ran[r], random_word(g, rng, 3)});
            }
            RNElement h = make_element(g, pairs);

            bool ok = is_complete_partition(d, h.domain_partition()) &&
                      is_complete_partition(d, h.range_partition());
            for (const auto& pair : pairs) {
                // The input rows appear verbatim.
                bool found = false;
                for (const auto& row : h.rows()) {
                    if (row.domain == pair.domain) {
                        found = row.range == pair.range &&
                                row.action.key() == pair.action.key();
                        break;
                    }
                }
                ok = ok && found;
                // And the element maps the cone as prescribed: compare a
                // 16-letter expansion against the independent transducer walk.
                RationalPoint p = RationalPoint::make(d, pair.domain, "0");
                RationalPoint img = evaluate(h, p);
                std::string tail = tail_after(p, pair.domain).expand(16);
                std::string expect = pair.range + oracle_apply(*g, pair.action.letters(), tail);
                ok = ok && img.expand(expect.size()) == expect;
            }
            if (ok) ++good;
        }
        require(c, good == cases, fraction(good, cases) + " cases passed");
        if (c.status == CheckStatus::Pass) {
            c.detail = fraction(good, cases) + " random pair lists over d in {2,3}";
        }
    });
    return suite.finish();
}

// ---- suite: oligo -----------------------------------------------------------

SuiteReport suite_oligo(std::uint64_t seed, int cases) {
    Suite suite("oligo", seed, cases);
    suite.check("oligo.transport", [&](Check& c) {
        GroupPtr g = builtin_group("odometer");
        Rng rng(seed);
        int good = 0;
        int max_n = 1;
        for (int i = 0; i < cases; ++i) {
            std::size_t n = 1 + rng.below(4);
            std::vector<std::pair<RationalPoint, RationalPoint>> pairs;
            std::vector<RNElement> movers;
            for (int attempt = 0; attempt < 200 && pairs.size() < n; ++attempt) {
                RationalPoint p = random_point(g->d(), rng, 2, 2);
                RNElement mover = random_rn(g, rng, 3, 2);
                RationalPoint q = evaluate(mover, p);
                bool fresh = true;
                for (const auto& [pp, qq] : pairs) {
                    fresh = fresh && !(pp == p) && !(qq == q);
                }
                if (!fresh) continue;
                pairs.emplace_back(p, q);
                movers.push_back(std::move(mover));
            }
            if (pairs.size() < n) continue;  // exceedingly unlikely
            max_n = std::max(max_n, static_cast<int>(n));
            RNElement h = tuple_transporter(g, pairs, movers);
            bool ok = true;
            for (const auto& [p, q] : pairs) ok = ok && evaluate(h, p) == q;
            if (ok) ++good;
        }
        require(c, good == cases, fraction(good, cases) + " tuples transported");
        if (c.status == CheckStatus::Pass) {
            c.detail = fraction(good, cases) + " tuples (n <= " + std::to_string(max_n) +
                       ") moved pointwise";
        }
    });
    return suite.finish();
}

// ---- suite: germ ------------------------------------------------------------

struct GermFixture {
    GroupPtr group = builtin_group("reflection");
    RationalPoint p = RationalPoint::make(2, "", "01");
    Nucleus nucleus;
    PeriodicNucleusData data;
    RNElement f = RNElement::identity(group);
    RNElement decorated_h = RNElement::identity(group);

    GermFixture() {
        nucleus = *compute_nucleus(group, 16, 16).nucleus;
        data = periodic_nucleus(nucleus, group, "01");
        f = build_f(group, separate_points(2, {p}));
        decorated_h = make_element(
            group, {RNRow{"0", "01", GroupWord::generator(group, *group->find_state("a"))}});
    }

    // Random product of stabilizer pieces; every factor fixes p.
    RNElement random_stabilizer(Rng& rng, bool allow_decorated) {
        std::size_t factors = 1 + rng.below(3);
        RNElement acc = RNElement::identity(group);
        for (std::size_t i = 0; i < factors; ++i) {
            switch (rng.below(allow_decorated ? 4 : 3)) {
                case 0: acc = compose(acc, f); break;
                case 1: acc = compose(acc, invert(f)); break;
                case 2: acc = compose(acc, random_prefix_stabilizer(group, rng, p)); break;
                default: acc = compose(acc, decorated_h); break;
            }
        }
        return acc;
    }
};

SuiteReport suite_germ(std::uint64_t seed, int cases) {
    Suite suite("germ", seed, cases);
    GermFixture fx;

    suite.check("germ.nbeta", [&](Check& c) {
        require(c, fx.data.M == 1, "M should be 1, got " + std::to_string(fx.data.M));
        require(c, fx.data.n_beta.size() == 2,
                "expected 2 periodic elements, got " + std::to_string(fx.data.n_beta.size()));
        require(c, fx.data.find(GroupWord::identity(fx.group)) >= 0, "id missing");
        require(c, fx.data.find(GroupWord::generator(fx.group, 0)) >= 0, "a missing");
        if (c.status == CheckStatus::Pass) c.detail = "periodic nucleus {id, a}, M = 1";
    });

    suite.check("germ.f-signature", [&](Check& c) {
        GermSignature sig = require_signature(fx.f, fx.p, fx.data);
        require(c, sig.nucleus_component.is_identity_word(), "component of f should be id");
        require(c, sig.delta == 2, "delta of f should be |beta| = 2, got " +
                                       std::to_string(sig.delta));
        GermSignature inv = require_signature(invert(fx.f), fx.p, fx.data);
        require(c, inv.delta == -2, "delta of f' should be -2");
        if (c.status == CheckStatus::Pass) c.detail = "f carries (id, +2), f' carries (id, -2)";
    });

    suite.check("germ.decorated-h", [&](Check& c) {
        require(c, fixes(fx.decorated_h, fx.p), "h should fix the point");
        GermSignature sig = require_signature(fx.decorated_h, fx.p, fx.data);
        require(c, sig.nucleus_component.str() == "a", "component should be a");
        require(c, sig.delta == 1, "delta should be 1, got " + std::to_string(sig.delta));
        require(c, sig.render() == "germ(point=01(01), n=a, delta=1, depth=2)",
                "unexpected rendering: " + sig.render());
        if (c.status == CheckStatus::Pass) c.detail = sig.render();
    });

    suite.check("germ.delta-additivity", [&](Check& c) {
        Rng rng(seed);
        int good = 0;
        for (int i = 0; i < cases; ++i) {
            RNElement h1 = fx.random_stabilizer(rng, true);
            RNElement h2 = fx.random_stabilizer(rng, true);
            long d1 = require_signature(h1, fx.p, fx.data).delta;
            long d2 = require_signature(h2, fx.p, fx.data).delta;
            long d12 = require_signature(compose(h1, h2), fx.p, fx.data).delta;
            if (d12 == d1 + d2) ++good;
        }
        require(c, good == cases, fraction(good, cases) + " pairs additive");
        if (c.status == CheckStatus::Pass) {
            c.detail = fraction(good, cases) + " composable pairs, delta additive";
        }
    });

    suite.check("germ.coset", [&](Check& c) {
        Rng rng(seed + 1);
        // Pinned witnesses first.
        CosetOutcome same = coset_witness(fx.decorated_h, fx.decorated_h, fx.p, fx.f, fx.data);
        require(c, same.has_witness && same.k == 0, "k(h, h) should be 0");
        CosetOutcome one = coset_witness(fx.decorated_h, compose(fx.f, fx.decorated_h), fx.p,
                                         fx.f, fx.data);
        require(c, one.has_witness && one.k == 1, "k(h, f·h) should be 1");
        CosetOutcome two = coset_witness(fx.decorated_h,
                                         compose(fx.f, compose(fx.f, fx.decorated_h)), fx.p,
                                         fx.f, fx.data);
        require(c, two.has_witness && two.k == 2, "k(h, f²·h) should be 2");
        int witnessed = 0;
        int disjoint = 0;
        for (int i = 0; i < cases; ++i) {
            RNElement h1 = fx.random_stabilizer(rng, true);
            RNElement h2 = fx.random_stabilizer(rng, true);
            GermSignature s1 = require_signature(h1, fx.p, fx.data);
            GermSignature s2 = require_signature(h2, fx.p, fx.data);
            CosetOutcome w = coset_witness(h1, h2, fx.p, fx.f, fx.data);
            if (s1.component_index == s2.component_index) {
                // coset_witness verifies germ_equal(h2, f^k·h1) internally.
                require(c, w.has_witness, "matching components must yield a witness");
                ++witnessed;
            } else {
                require(c, !w.has_witness, "distinct components cannot yield a witness");
                ++disjoint;
            }
        }
        if (c.status == CheckStatus::Pass) {
            c.detail = std::to_string(witnessed) + " witnessed, " + std::to_string(disjoint) +
                       " cross-fiber pairs rejected";
        }
    });

    suite.check("germ.thompson-distinct", [&](Check& c) {
        Rng rng(seed + 2);
        const int samples = 4 * cases;
        int id_components = 0;
        int germ_hits = 0;
        for (int i = 0; i < samples; ++i) {
            RNElement t = random_prefix_stabilizer(fx.group, rng, fx.p);
            GermSignature sig = require_signature(t, fx.p, fx.data);
            if (sig.nucleus_component.is_identity_word()) ++id_components;
            if (germ_equal(t, fx.decorated_h, fx.p, fx.data)) ++germ_hits;
        }
        require(c, id_components == samples, "a prefix exchange left the identity fiber");
        require(c, germ_hits == 0,
                std::to_string(germ_hits) + " prefix exchanges matched the decorated germ");
        if (c.status == CheckStatus::Pass) {
            c.detail = std::to_string(samples) +
                       " prefix-exchange stabilizers, all in the identity fiber, none "
                       "germ-equal to the decorated element";
        }
    });

    suite.check("germ.index-two", [&](Check& c) {
        Rng rng(seed + 3);
        std::set<int> components;
        for (int i = 0; i < cases; ++i) {
            RNElement s = fx.random_stabilizer(rng, true);
            components.insert(require_signature(s, fx.p, fx.data).component_index);
        }
        require(c, components.size() == 2,
                "expected both fibers realized, got " + std::to_string(components.size()));
        if (c.status == CheckStatus::Pass) {
            c.detail = "both nucleus components {id, a} realized by stabilizer samples";
        }
    });

    suite.check("germ.pure-g-delta", [&](Check& c) {
        // Undecorated tree automorphisms preserve depth, so their germs have
        // delta 0. Exercised on grigorchuk at (1), where M = 3.
        GroupPtr g = builtin_group("grigorchuk");
        RationalPoint p = RationalPoint::make(2, "", "1");
        Nucleus nuc = *compute_nucleus(g, 64, 32).nucleus;
        PeriodicNucleusData data = periodic_nucleus(nuc, g, "1");
        require(c, data.M == 3, "M at period 1 should be 3, got " + std::to_string(data.M));
        require(c, data.n_beta.size() == 4, "periodic nucleus should be {id, b, c, d}");
        Rng rng(seed + 4);
        int fixing = 0;
        for (int i = 0; i < cases; ++i) {
            GroupWord w = random_word(g, rng, 4);
            RNElement e = RNElement::make(g, {RNRow{"", "", w}});
            if (!fixes(e, p)) continue;
            ++fixing;
            GermSignature sig = require_signature(e, p, data);
            require(c, sig.delta == 0, "tree automorphism germ with delta " +
                                           std::to_string(sig.delta));
        }
        require(c, fixing > 0, "no sampled word fixed the point");
        if (c.status == CheckStatus::Pass) {
            c.detail = std::to_string(fixing) + " fixing words, all with delta 0 (M = 3)";
        }
    });

    suite.check("germ.signature-finiteness", [&](Check& c) {
        Rng rng(seed + 5);
        std::set<std::pair<int, long>> classes;
        const long modulus = static_cast<long>(fx.data.M) *
                             static_cast<long>(fx.data.beta.size());
        for (int i = 0; i < cases; ++i) {
            RNElement s = fx.random_stabilizer(rng, true);
            GermSignature sig = require_signature(s, fx.p, fx.data);
            classes.emplace(sig.component_index,
                            ((sig.delta % modulus) + modulus) % modulus);
        }
        const std::size_t bound = fx.data.n_beta.size() *
                                  static_cast<std::size_t>(modulus);
        require(c, classes.size() <= bound,
                std::to_string(classes.size()) + " classes exceed the bound " +
                    std::to_string(bound));
        if (c.status == CheckStatus::Pass) {
            c.detail = std::to_string(classes.size()) + " signature classes within bound " +
                       std::to_string(bound);
        }
    });

    suite.check("germ.congruence", [&](Check& c) {
        Rng rng(seed + 6);
        int congruent = 0;
        for (int i = 0; i < cases; ++i) {
            RNElement h1 = fx.random_stabilizer(rng, true);
            RNElement h2 = fx.random_stabilizer(rng, true);
            RNElement g = fx.random_stabilizer(rng, true);
            require(c, germ_equal(h1, h1, fx.p, fx.data), "germ equality not reflexive");
            bool ab = germ_equal(h1, h2, fx.p, fx.data);
            bool ba = germ_equal(h2, h1, fx.p, fx.data);
            require(c, ab == ba, "germ equality not symmetric");
            if (ab) {
                ++congruent;
                require(c, germ_equal(compose(g, h1), compose(g, h2), fx.p, fx.data),
                        "left composition broke germ equality");
            }
        }
        if (c.status == CheckStatus::Pass) {
            c.detail = "equivalence and left-congruence on samples (" +
                       std::to_string(congruent) + " equal pairs)";
        }
    });

    return suite.finish();
}

// ---- suite: stab ------------------------------------------------------------

SuiteReport suite_stab(std::uint64_t seed, int cases) {
    Suite suite("stab", seed, cases);
    GroupPtr g = builtin_group("grigorchuk");
    RationalPoint p = RationalPoint::make(2, "", "1");
    SeparatedSystem system = separate_points(2, {p});
    RNElement f = build_f(g, system);
    EPrimeData data = build_e_prime(system);

    suite.check("stab.system", [&](Check& c) {
        require(c, system.cones == std::vector<Address>{"1"}, "separating cone should be 1");
        require(c, fixes(f, p), "f should fix the point");
        require(c, require_signature(f, p, periodic_nucleus(
                       *compute_nucleus(g, 64, 32).nucleus, g, "1")).delta == 1,
                "f should carry delta |beta| = 1");
        if (c.status == CheckStatus::Pass) c.detail = "S = {(1)}, E = 1-cone, f built";
    });

    suite.check("stab.f-nesting", [&](Check& c) {
        std::vector<Address> image = system.cones;
        std::string expect = "1";
        for (int k = 1; k <= 5; ++k) {
            image = image_of_clopen(f, image);
            expect += "1";
            require(c, image == std::vector<Address>{expect},
                    "f^" + std::to_string(k) + "(E) should be the cone " + expect);
            require(c, is_prefix(expect.substr(0, expect.size() - 1), expect),
                    "nesting by address extension");
        }
        if (c.status == CheckStatus::Pass) {
            c.detail = "E > f(E) > ... > f^5(E), each image one period deeper";
        }
    });

    suite.check("stab.eprime", [&](Check& c) {
        require(c, data.gamma == std::vector<Address>{"0"}, "gamma should be {0}");
        require(c, data.m == 1 && data.k == 0, "m = 1, k = 0 expected");
        require(c, data.delta == std::vector<Address>{""}, "delta should be the root");
        require(c, data.e_prime == std::vector<Address>{"1"}, "E' should be the 1-cone");
        bool inside = false;
        for (const auto& cone : data.e_prime) inside = inside || point_in_cone(p, cone);
        require(c, inside, "the point should lie in E'");
        if (c.status == CheckStatus::Pass) c.detail = "E' = 1-cone contains S; z swaps 0-cone with the root";
    });

    suite.check("stab.phi-homomorphism", [&](Check& c) {
        Rng rng(seed);
        int good = 0;
        for (int i = 0; i < cases; ++i) {
            RNElement h1 = random_rn(g, rng, 3, 2);
            RNElement h2 = random_rn(g, rng, 3, 2);
            if (equal_rn(phi(compose(h1, h2), data), compose(phi(h1, data), phi(h2, data)))) {
                ++good;
            }
        }
        require(c, good == cases, fraction(good, cases) + " pairs multiplicative");
        if (c.status == CheckStatus::Pass) {
            c.detail = fraction(good, cases) + " random pairs, phi multiplicative";
        }
    });

    suite.check("stab.phi-fixes-eprime", [&](Check& c) {
        Rng rng(seed + 1);
        std::vector<RationalPoint> samples = {
            RationalPoint::make(2, "", "1"), RationalPoint::make(2, "1", "0"),
            RationalPoint::make(2, "11", "01"), RationalPoint::make(2, "1", "10"),
            RationalPoint::make(2, "10", "1")};
        int checked = 0;
        for (int i = 0; i < 10; ++i) {
            RNElement img = phi(random_rn(g, rng, 3, 2), data);
            require(c, is_identity_on(img, data.e_prime), "phi image moved a point of E'");
            for (const auto& pt : samples) {
                require(c, evaluate(img, pt) == pt,
                        "phi image moved " + format_point(pt));
                ++checked;
            }
        }
        require(c, phi(RNElement::identity(g), data).size() >= 1, "phi(id) build failed");
        require(c, equal_rn(phi(RNElement::identity(g), data), RNElement::identity(g)),
                "phi(id) should be the identity");
        if (c.status == CheckStatus::Pass) {
            c.detail = std::to_string(checked) + " sampled points of E' fixed exactly";
        }
    });

    suite.check("stab.phi-injective", [&](Check& c) {
        Rng rng(seed + 2);
        RNElement id = RNElement::identity(g);
        int nontrivial = 0;
        for (int i = 0; i < cases; ++i) {
            RNElement h = random_rn(g, rng, 3, 2);
            bool h_id = equal_rn(h, id);
            bool img_id = equal_rn(phi(h, data), id);
            require(c, h_id == img_id, "phi(h) = id must force h = id");
            if (!h_id) ++nontrivial;
        }
        require(c, nontrivial > 0, "sample contained no nontrivial element");
        if (c.status == CheckStatus::Pass) {
            c.detail = fraction(nontrivial, cases) + " nontrivial samples, kernel trivial";
        }
    });

    suite.check("stab.kernel-exhaustion", [&](Check& c) {
        Rng rng(seed + 3);
        const int planted = 20;
        int max_i = 0;
        for (int n = 0; n < planted; ++n) {
            // Identity on the cone 1^j, arbitrary elsewhere.
            int j = 1 + static_cast<int>(rng.below(4));
            Address fixed(static_cast<std::size_t>(j), '1');
            std::vector<Address> rest = complement_partition(2, {fixed});
            std::vector<Address> shuffled = rest;
            rng.shuffle(shuffled);
            std::vector<RNRow> rows{RNRow{fixed, fixed, GroupWord::identity(g)}};
            for (std::size_t i = 0; i < rest.size(); ++i) {
                rows.push_back(RNRow{rest[i], shuffled[i], random_word(g, rng, 2)});
            }
            RNElement h = RNElement::make(g, rows);

            int found = -1;
            for (int i = 0; i <= 8 && found < 0; ++i) {
                RNElement conj = compose(power(f, -i), compose(h, power(f, i)));
                if (is_identity_on(conj, system.cones)) found = i;
            }
            require(c, found >= 0, "no conjugation depth <= 8 pulled the element into Fix(E)");
            max_i = std::max(max_i, found);
        }
        if (c.status == CheckStatus::Pass) {
            c.detail = std::to_string(planted) + " planted neighborhood identities, i <= " +
                       std::to_string(max_i);
        }
    });

    return suite.finish();
}

// ---- suite: algebra ---------------------------------------------------------

SuiteReport suite_algebra(std::uint64_t seed, int cases) {
    Suite suite("algebra", seed, cases);
    for (const auto& name : builtin_names()) {
        suite.check("algebra." + name, [&](Check& c) {
            GroupPtr g = builtin_group(name);
            Rng rng(seed);
            RNElement id = RNElement::identity(g);
            int triples = 0;
            for (int i = 0; i < cases; ++i) {
                RNElement h1 = random_rn(g, rng, 3, 2);
                RNElement h2 = random_rn(g, rng, 3, 2);

                require(c, equal_rn(compose(h1, id), h1), "right identity failed");
                require(c, equal_rn(compose(id, h1), h1), "left identity failed");
                require(c, equal_rn(compose(h1, invert(h1)), id), "right inverse failed");
                require(c, equal_rn(compose(invert(h1), h1), id), "left inverse failed");
                require(c, equal_rn(invert(invert(h1)), h1), "inversion not involutive");

                RNElement prod = compose(h1, h2);
                require(c, prod.size() <= h1.size() * h2.size(),
                        "composite table larger than the product of the factors");
                RationalPoint p = random_point(g->d(), rng, 2, 2);
                require(c, evaluate(prod, p) == evaluate(h1, evaluate(h2, p)),
                        "action axiom failed at " + format_point(p));

                if (i % 3 == 0) {
                    RNElement h3 = random_rn(g, rng, 3, 2);
                    ++triples;
                    require(c, equal_rn(compose(prod, h3), compose(h1, compose(h2, h3))),
                            "associativity failed");
                }
            }
            if (c.status == CheckStatus::Pass) {
                c.detail = std::to_string(cases) + " elements, " + std::to_string(triples) +
                           " associativity triples, group laws and action axiom hold";
            }
        });
    }
    return suite.finish();
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"wp", "nucleus", "make", "oligo", "germ", "stab", "algebra"};
}

int default_cases(const std::string& suite) {
    if (suite == "make" || suite == "oligo") return 100;
    if (suite == "algebra") return 200;
    if (suite == "germ" || suite == "stab") return 50;
    return 0;  // wp, nucleus: fully deterministic
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int cases) {
    if (cases <= 0) cases = std::max(1, default_cases(name));
    if (name == "wp") return suite_wp(seed, cases);
    if (name == "nucleus") return suite_nucleus(seed, cases);
    if (name == "make") return suite_make(seed, cases);
    if (name == "oligo") return suite_oligo(seed, cases);
    if (name == "germ") return suite_germ(seed, cases);
    if (name == "stab") return suite_stab(seed, cases);
    if (name == "algebra") return suite_algebra(seed, cases);
    throw DomainError("unknown suite '" + name + "'");
}

namespace {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotStabilized: return "not-stabilized";
    }
    return "?";
}

}  // namespace

std::string render_report_text(const SuiteReport& report, bool color) {
    const char* green = color ? "\033[32m" : "";
    const char* red = color ? "\033[31m" : "";
    const char* reset = color ? "\033[0m" : "";
    std::ostringstream out;
    out << "suite " << report.suite << "  seed=" << report.seed
        << "  cases=" << report.cases << "\n";
    int pass = 0;
    for (const auto& c : report.checks) {
        bool ok = c.status == CheckStatus::Pass;
        if (ok) ++pass;
        out << (ok ? green : red) << "[" << (ok ? "PASS" : (c.status == CheckStatus::Fail
                                                                ? "FAIL"
                                                                : "NOT-STABILIZED"))
            << "]" << reset << " " << c.id;
        if (!c.detail.empty()) out << "  " << c.detail;
        out << "\n";
    }
    out << "result: " << (report.passed() ? "PASS" : "FAIL") << " (" << pass << "/"
        << report.checks.size() << " checks)\n";
    return out.str();
}

std::string render_report_json(const SuiteReport& report) {
    nlohmann::json doc;
    doc["suite"] = report.suite;
    doc["seed"] = report.seed;
    doc["cases"] = report.cases;
    doc["passed"] = report.passed();
    doc["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) {
        doc["checks"].push_back({{"id", c.id},
                                 {"status", status_name(c.status)},
                                 {"detail", c.detail}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace ssg
