#include <doctest.h>

#include "helpers.hpp"
#include "ssg/germs.hpp"
#include "ssg/verify.hpp"
#include "ssg/witnesses.hpp"

using namespace ssg;
using ssg::testing::pt;
using ssg::testing::wd;

namespace {

struct Reflection {
    GroupPtr g = builtin_group("reflection");
    RationalPoint p = pt(2, "", "01");
    Nucleus nucleus = *compute_nucleus(g, 16, 16).nucleus;
    PeriodicNucleusData data = periodic_nucleus(nucleus, g, "01");
    RNElement f = build_f(g, separate_points(2, {p}));
    RNElement h = make_element(g, {RNRow{"0", "01", wd(g, "a")}});
};

}  // namespace

TEST_CASE("periodic nucleus under restriction at the period") {
    SUBCASE("trivial group") {
        GroupPtr g = builtin_group("trivial");
        Nucleus nuc = *compute_nucleus(g, 8, 8).nucleus;
        PeriodicNucleusData data = periodic_nucleus(nuc, g, "0");
        CHECK(data.n_beta.size() == 1);
        CHECK(data.M == 1);
    }
    SUBCASE("reflection at 01") {
        Reflection fx;
        CHECK(fx.data.n_beta.size() == 2);
        CHECK(fx.data.M == 1);
        CHECK(fx.data.find(GroupWord::identity(fx.g)) >= 0);
        CHECK(fx.data.find(wd(fx.g, "a")) >= 0);
    }
    SUBCASE("grigorchuk at 1: b -> c -> d -> b") {
        GroupPtr g = builtin_group("grigorchuk");
        Nucleus nuc = *compute_nucleus(g, 16, 16).nucleus;
        PeriodicNucleusData data = periodic_nucleus(nuc, g, "1");
        CHECK(data.n_beta.size() == 4);
        CHECK(data.M == 3);
        CHECK(data.find(wd(g, "b")) >= 0);
        CHECK(data.find(wd(g, "c")) >= 0);
        CHECK(data.find(wd(g, "d")) >= 0);
        CHECK(data.find(wd(g, "a")) < 0);  // a is pre-periodic: a|_1 = id
    }
}

TEST_CASE("germ signatures") {
    Reflection fx;
    SUBCASE("identity") {
        GermSignature sig = require_signature(RNElement::identity(fx.g), fx.p, fx.data);
        CHECK(sig.nucleus_component.is_identity_word());
        CHECK(sig.delta == 0);
    }
    SUBCASE("the contraction element f") {
        GermSignature sig = require_signature(fx.f, fx.p, fx.data);
        CHECK(sig.nucleus_component.is_identity_word());
        CHECK(sig.delta == 2);
        CHECK(require_signature(invert(fx.f), fx.p, fx.data).delta == -2);
    }
    SUBCASE("decorated stabilizer") {
        GermSignature sig = require_signature(fx.h, fx.p, fx.data);
        CHECK(equal(sig.nucleus_component, wd(fx.g, "a")));
        CHECK(sig.delta == 1);
        CHECK(sig.render() == "germ(point=01(01), n=a, delta=1, depth=2)");
    }
    SUBCASE("non-stabilizers are rejected") {
        RNElement a_global = RNElement::make(fx.g, {RNRow{"", "", wd(fx.g, "a")}});
        CHECK_THROWS_AS(require_signature(a_global, fx.p, fx.data), DomainError);
    }
    SUBCASE("a deep table still yields the signature") {
        std::vector<Address> fine;
        for (const auto& path : {"000", "001", "010", "011", "100", "101", "110", "111"}) {
            fine.push_back(path);
        }
        RNElement deep = expand(fx.h, fine);
        GermSignature sig = require_signature(deep, fx.p, fx.data);
        CHECK(equal(sig.nucleus_component, wd(fx.g, "a")));
        CHECK(sig.delta == 1);
    }
    SUBCASE("an exhausted cap is NotStabilized, not silence") {
        GermOutcome out = germ_signature(fx.f, fx.p, fx.data, 1);
        CHECK_FALSE(out.ok());
        CHECK(out.failure.find("NotStabilized") != std::string::npos);
        CHECK_THROWS_AS(require_signature(fx.f, fx.p, fx.data, 1), BoundsError);
    }
    SUBCASE("wrong period data is rejected") {
        PeriodicNucleusData other = periodic_nucleus(fx.nucleus, fx.g, "0");
        CHECK_THROWS_AS(require_signature(fx.f, fx.p, other), DomainError);
    }
}

TEST_CASE("germ equality") {
    Reflection fx;
    CHECK(germ_equal(fx.h, fx.h, fx.p, fx.data));
    CHECK_FALSE(germ_equal(fx.h, compose(fx.f, fx.h), fx.p, fx.data));  // delta differs by 2
    Rng rng(41);
    for (int i = 0; i < 20; ++i) {
        RNElement t = random_prefix_stabilizer(fx.g, rng, fx.p);
        CHECK_FALSE(germ_equal(fx.h, t, fx.p, fx.data));  // different fibers
    }
}

TEST_CASE("germ equality agrees with identity-on-a-cone") {
    // Independent route: h1 and h2 have the same germ iff h1^-1 h2 is the
    // identity on the stabilized cone of its own signature.
    Reflection fx;
    Rng rng(73);
    int equal_pairs = 0;
    for (int i = 0; i < 40; ++i) {
        std::vector<RNElement> pieces{fx.f, invert(fx.f), fx.h,
                                      random_prefix_stabilizer(fx.g, rng, fx.p)};
        RNElement h1 = compose(rng.pick(pieces), rng.pick(pieces));
        RNElement h2 = compose(rng.pick(pieces), rng.pick(pieces));
        bool ge = germ_equal(h1, h2, fx.p, fx.data);
        RNElement w = compose(invert(h1), h2);
        GermSignature sig = require_signature(w, fx.p, fx.data);
        CHECK(ge == (sig.nucleus_component.is_identity_word() && sig.delta == 0));
        Address cone = sig.alpha;
        for (int k = 0; k < sig.stabilized_at * fx.data.M; ++k) cone += sig.beta;
        CHECK(ge == is_identity_on(w, {cone}));
        if (ge) ++equal_pairs;
    }
    CHECK(equal_pairs > 0);
}

TEST_CASE("coset witnesses") {
    Reflection fx;
    CosetOutcome zero = coset_witness(fx.h, fx.h, fx.p, fx.f, fx.data);
    CHECK(zero.has_witness);
    CHECK(zero.k == 0);

    CosetOutcome one = coset_witness(fx.h, compose(fx.f, fx.h), fx.p, fx.f, fx.data);
    CHECK(one.has_witness);
    CHECK(one.k == 1);

    CosetOutcome two =
        coset_witness(fx.h, compose(fx.f, compose(fx.f, fx.h)), fx.p, fx.f, fx.data);
    CHECK(two.has_witness);
    CHECK(two.k == 2);

    Rng rng(43);
    RNElement t = random_prefix_stabilizer(fx.g, rng, fx.p);
    CosetOutcome cross = coset_witness(fx.h, t, fx.p, fx.f, fx.data);
    CHECK_FALSE(cross.has_witness);  // different fibers of the component map
}

TEST_CASE("delta is additive and zero on plain tree automorphisms") {
    Reflection fx;
    Rng rng(47);
    for (int i = 0; i < 25; ++i) {
        std::vector<RNElement> pieces{fx.f, invert(fx.f), fx.h,
                                      random_prefix_stabilizer(fx.g, rng, fx.p)};
        RNElement h1 = compose(rng.pick(pieces), rng.pick(pieces));
        RNElement h2 = rng.pick(pieces);
        long d1 = require_signature(h1, fx.p, fx.data).delta;
        long d2 = require_signature(h2, fx.p, fx.data).delta;
        CHECK(require_signature(compose(h1, h2), fx.p, fx.data).delta == d1 + d2);
    }

    GroupPtr g = builtin_group("grigorchuk");
    RationalPoint p = pt(2, "", "1");
    PeriodicNucleusData data = periodic_nucleus(*compute_nucleus(g, 16, 16).nucleus, g, "1");
    for (const char* name : {"b", "c", "d", "bc", "cd", "bcd"}) {
        RNElement e = RNElement::make(g, {RNRow{"", "", wd(g, name)}});
        REQUIRE(fixes(e, p));
        CHECK(require_signature(e, p, data).delta == 0);
    }
}
