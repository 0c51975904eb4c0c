#include <doctest.h>

#include <thread>

#include "helpers.hpp"
#include "ssg/verify.hpp"

using namespace ssg;
using ssg::testing::wd;

TEST_CASE("construction validates the transducer") {
    CHECK_THROWS_AS(AutomatonGroup::make("g", 1, {}), DomainError);
    CHECK_THROWS_AS(AutomatonGroup::make("g", 2, {{"a", {1, 1}, {"id", "id"}}}), DomainError);
    CHECK_THROWS_AS(AutomatonGroup::make("g", 2, {{"a", {1, 0}, {"id", "z"}}}), DomainError);
    CHECK_THROWS_AS(AutomatonGroup::make("g", 2, {{"id", {0, 1}, {"id", "id"}}}), DomainError);
    CHECK_THROWS_AS(AutomatonGroup::make("g", 2,
                                         {{"a", {1, 0}, {"id", "id"}},
                                          {"a", {0, 1}, {"id", "id"}}}),
                    DomainError);
}

TEST_CASE("restriction of single states") {
    GroupPtr odo = builtin_group("odometer");
    CHECK(restriction(GroupWord::identity(odo), "0110").is_identity_word());
    CHECK(restriction(wd(odo, "a"), "0").is_identity_word());
    CHECK(equal(restriction(wd(odo, "a"), "1"), wd(odo, "a")));

    GroupPtr grig = builtin_group("grigorchuk");
    CHECK(equal(restriction(wd(grig, "b"), "0"), wd(grig, "a")));
    CHECK_THROWS_AS(restriction(wd(grig, "b"), "2"), DomainError);
}

TEST_CASE("application to paths") {
    GroupPtr odo = builtin_group("odometer");
    CHECK(act(GroupWord::identity(odo), "010") == "010");
    CHECK(act(wd(odo, "a"), "111") == "000");
    // Two increments; composing apply twice gives the same answer.
    CHECK(act(wd(odo, "a"), act(wd(odo, "a"), "10")) == "11");
    CHECK(act(wd(odo, "aa"), "10") == "11");
    CHECK_THROWS_AS(act(wd(odo, "a"), "013"), DomainError);
}

TEST_CASE("word problem") {
    GroupPtr grig = builtin_group("grigorchuk");
    CHECK(is_trivial(wd(grig, "aa'")));
    CHECK(is_trivial(wd(grig, "aa")));
    CHECK(is_trivial(wd(grig, "bcd")));
    CHECK(is_trivial(wd(grig, "bb")));
    CHECK_FALSE(is_trivial(wd(grig, "ab")));
    CHECK(equal(wd(grig, "bc"), wd(grig, "d")));
    CHECK(equal(wd(grig, "cd"), wd(grig, "b")));

    GroupPtr odo = builtin_group("odometer");
    CHECK_FALSE(is_trivial(wd(odo, "aa")));
    CHECK_FALSE(equal(wd(odo, "a"), wd(odo, "a'")));
    CHECK(equal(wd(odo, "a"), wd(odo, "a")));
    CHECK_THROWS_AS(equal(wd(odo, "a"), wd(grig, "a")), DomainError);
}

TEST_CASE("bisimulation agrees with the direct tree action") {
    Rng rng(17);
    for (const auto& name : {"grigorchuk", "gupta_sidki_3", "odometer", "reflection"}) {
        GroupPtr g = builtin_group(name);
        for (int i = 0; i < 60; ++i) {
            GroupWord w = random_word(g, rng, 5);
            bool moved = false;
            std::vector<std::string> paths{""};
            for (int depth = 0; depth < 6 && !moved; ++depth) {
                std::vector<std::string> next;
                for (const auto& p : paths) {
                    for (int x = 0; x < g->d(); ++x) next.push_back(p + letter_char(x));
                }
                paths = std::move(next);
                for (const auto& p : paths) {
                    if (oracle_apply(*g, w.letters(), p) != p) {
                        moved = true;
                        break;
                    }
                }
            }
            if (moved) {
                CHECK_FALSE(is_trivial(w));
            }
            if (is_trivial(w)) {
                CHECK_FALSE(moved);
            }
        }
    }
}

TEST_CASE("cocycle and composition laws") {
    Rng rng(23);
    for (const auto& name : {"grigorchuk", "gupta_sidki_3", "odometer"}) {
        GroupPtr g = builtin_group(name);
        for (int i = 0; i < 40; ++i) {
            GroupWord w1 = random_word(g, rng, 4);
            GroupWord w2 = random_word(g, rng, 4);
            std::string u, v;
            for (int k = rng.range(0, 3); k > 0; --k) u.push_back(letter_char(rng.range(0, g->d() - 1)));
            for (int k = rng.range(1, 3); k > 0; --k) v.push_back(letter_char(rng.range(0, g->d() - 1)));

            // h|_(uv) = (h|_u)|_v
            CHECK(equal(restriction(w1, u + v), restriction(restriction(w1, u), v)));
            // act(w1·w2, p) = act(w1, act(w2, p))
            CHECK(act(w1 * w2, v) == act(w1, act(w2, v)));
            // (w1·w2)|_x = w1|_(w2 x) · w2|_x
            std::string x(1, letter_char(rng.range(0, g->d() - 1)));
            CHECK(equal(restriction(w1 * w2, x),
                        restriction(w1, act(w2, x)) * restriction(w2, x)));
            // inverses undo application
            CHECK(act(w1.inverse(), act(w1, v)) == v);
        }
    }
}

TEST_CASE("free reduction is eager and canonical") {
    GroupPtr grig = builtin_group("grigorchuk");
    CHECK(wd(grig, "aa'").is_identity_word());
    CHECK((wd(grig, "ab") * wd(grig, "b'a")).size() == 2);  // a.b.b'.a -> a.a
    CHECK(wd(grig, "ab").inverse().str() == "b'.a'");
    CHECK(wd(grig, "ab").key() != wd(grig, "ba").key());
}

TEST_CASE("nucleus of the builtin groups") {
    SUBCASE("trivial") {
        NucleusOutcome out = compute_nucleus(builtin_group("trivial"), 8, 8);
        REQUIRE(out.ok());
        CHECK(out.nucleus->elements.size() == 1);
        CHECK(out.nucleus->depth_certificate == 0);
    }
    SUBCASE("odometer") {
        GroupPtr g = builtin_group("odometer");
        NucleusOutcome out = compute_nucleus(g, 8, 8);
        REQUIRE(out.ok());
        CHECK(out.nucleus->elements.size() == 3);
        CHECK(out.nucleus->contains(GroupWord::identity(g)));
        CHECK(out.nucleus->contains(wd(g, "a")));
        CHECK(out.nucleus->contains(wd(g, "a'")));
    }
    SUBCASE("grigorchuk") {
        GroupPtr g = builtin_group("grigorchuk");
        NucleusOutcome out = compute_nucleus(g, 16, 16);
        REQUIRE(out.ok());
        CHECK(out.nucleus->elements.size() == 5);
        for (const auto& n : out.nucleus->elements) {
            for (int x = 0; x < 2; ++x) {
                CHECK(out.nucleus->contains(restriction(n, std::string(1, letter_char(x)))));
            }
        }
        // representatives come out shortlex-sorted
        std::vector<std::string> names;
        for (const auto& n : out.nucleus->elements) names.push_back(n.str());
        CHECK(names == std::vector<std::string>{"id", "a", "b", "c", "d"});
    }
    SUBCASE("bounds exhaustion is reported, not fatal") {
        NucleusOutcome out = compute_nucleus(builtin_group("grigorchuk"), 2, 16);
        CHECK_FALSE(out.ok());
        CHECK(!out.failure.empty());
    }
    SUBCASE("a non-contracting group exhausts the candidate bound") {
        // Bireversible 3-state automaton whose states generate a free group;
        // the candidate set must blow past any cap.
        GroupPtr free3 = AutomatonGroup::make("aleshin", 2,
                                              {
                                                  {"a", {1, 0}, {"b", "c"}},
                                                  {"b", {1, 0}, {"c", "b"}},
                                                  {"c", {0, 1}, {"a", "a"}},
                                              });
        NucleusOutcome out = compute_nucleus(free3, 48, 24);
        CHECK_FALSE(out.ok());
        CHECK(out.failure.find("max size") != std::string::npos);
    }
}

TEST_CASE("contraction depth") {
    GroupPtr g = builtin_group("grigorchuk");
    Nucleus nuc = *compute_nucleus(g, 16, 16).nucleus;
    CHECK(contraction_depth(GroupWord::identity(g), nuc) == 0);
    CHECK(contraction_depth(wd(g, "b"), nuc) == 0);
    CHECK(contraction_depth(wd(g, "ab"), nuc) == 1);
    CHECK_THROWS_AS(contraction_depth(wd(g, "abab"), nuc, 0), BoundsError);
}

TEST_CASE("shared memo is usable from several threads") {
    GroupPtr g = builtin_group("grigorchuk");
    Rng seeder(99);
    std::vector<std::uint64_t> seeds;
    for (int t = 0; t < 4; ++t) seeds.push_back(seeder.next());
    std::vector<std::thread> workers;
    std::vector<int> trivial_counts(4, 0);
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
            Rng rng(seeds[static_cast<std::size_t>(t)]);
            for (int i = 0; i < 50; ++i) {
                GroupWord w = random_word(g, rng, 5);
                if (is_trivial(w * w.inverse())) ++trivial_counts[static_cast<std::size_t>(t)];
            }
        });
    }
    for (auto& w : workers) w.join();
    for (int t = 0; t < 4; ++t) CHECK(trivial_counts[static_cast<std::size_t>(t)] == 50);
}
