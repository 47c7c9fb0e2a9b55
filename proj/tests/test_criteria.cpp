#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace ordo;
using support::order;

TEST_CASE("extended_condorcet_check") {
    SECTION("9-voter fixture: the loser cannot lead") {
        auto t = tally(support::fixture_profile("example1.ballots"));
        auto verdict = extended_condorcet_check(order(t.universe, "d,a,b,c,e"), t);
        CHECK_FALSE(verdict.passed);
        REQUIRE(verdict.violated_block.has_value());
        CHECK(support::labels_of(t.universe, *verdict.violated_block) ==
              std::vector<std::string>{"a", "b", "c", "e"});
        REQUIRE(verdict.violated_pair.has_value());
        CHECK(t.universe.label(verdict.violated_pair->second) == "d");
    }
    SECTION("8-voter fixture: no dominating split exists, everything passes") {
        auto t = tally(support::fixture_profile("example2.ballots"));
        for (const auto* csv : {"d,a,b,c", "a,b,c,d", "c,d,b,a"})
            CHECK(extended_condorcet_check(order(t.universe, csv), t).passed);
    }
    SECTION("Condorcet winner first passes when it is the only split") {
        auto t = tally(parse_profile(
            "alternatives: a b c\n1: a > b > c\n1: a > c > b\n1: b > a > c\n1: c > a > b\n"));
        // a beats b and c; b vs c is tied 2-2, so {a} is the only dominating split
        CHECK(extended_condorcet_check(order(t.universe, "a,c,b"), t).passed);
        CHECK(extended_condorcet_check(order(t.universe, "a,b,c"), t).passed);
        CHECK_FALSE(extended_condorcet_check(order(t.universe, "b,a,c"), t).passed);
    }
    SECTION("passing orders put the winner first and the loser last") {
        auto t = tally(support::fixture_profile("example1.ballots"));
        auto extremes = condorcet_winner_loser(t);
        REQUIRE(extremes.loser.has_value());
        auto ok = order(t.universe, "c,a,e,b,d");
        if (extended_condorcet_check(ok, t).passed)
            CHECK(ok.at(t.universe.size() - 1) == *extremes.loser);
    }
}

TEST_CASE("pareto_check") {
    SECTION("9-voter fixture: unanimity on (a,e)") {
        auto p = support::fixture_profile("example1.ballots");
        auto verdict = pareto_check(order(p.universe, "e,a,b,c,d"), p);
        CHECK_FALSE(verdict.passed);
        REQUIRE(verdict.violated_pair.has_value());
        CHECK(p.universe.label(verdict.violated_pair->first) == "a");
        CHECK(p.universe.label(verdict.violated_pair->second) == "e");
    }
    SECTION("3-voter weak fixture: (a,d) is unopposed") {
        auto p = support::fixture_profile("example3.ballots");
        auto verdict = pareto_check(order(p.universe, "d,c,b,a"), p);
        CHECK_FALSE(verdict.passed);
        REQUIRE(verdict.violated_pair.has_value());
        CHECK(p.universe.label(verdict.violated_pair->first) == "a");
        CHECK(p.universe.label(verdict.violated_pair->second) == "d");
    }
    SECTION("unanimous profile and its order pass") {
        auto p = parse_profile("alternatives: a b c\n3: b > c > a\n");
        CHECK(pareto_check(order(p.universe, "b,c,a"), p).passed);
        CHECK_FALSE(pareto_check(order(p.universe, "b,a,c"), p).passed);
    }
}

TEST_CASE("condorcet_winner_loser") {
    SECTION("9-voter fixture has a loser but no winner") {
        auto extremes = condorcet_winner_loser(tally(support::fixture_profile("example1.ballots")));
        CHECK_FALSE(extremes.winner.has_value());
        REQUIRE(extremes.loser.has_value());
        CHECK(*extremes.loser == 3); // d
    }
    SECTION("unanimous profile has both extremes") {
        auto t = tally(parse_profile("alternatives: a b c\n3: b > c > a\n"));
        auto extremes = condorcet_winner_loser(t);
        REQUIRE(extremes.winner.has_value());
        REQUIRE(extremes.loser.has_value());
        CHECK(t.universe.label(*extremes.winner) == "b");
        CHECK(t.universe.label(*extremes.loser) == "a");
    }
    SECTION("47-voter fixture has neither") {
        auto extremes = condorcet_winner_loser(tally(support::fixture_profile("appendixC.ballots")));
        CHECK_FALSE(extremes.winner.has_value());
        CHECK_FALSE(extremes.loser.has_value());
    }
}

TEST_CASE("criteria on the order sets") {
    SECTION("every S-set member of each fixture passes the extended Condorcet check") {
        for (const auto* name :
             {"appendixC.ballots", "example1.ballots", "example2.ballots", "example3.ballots"}) {
            auto profile = support::fixture_profile(name);
            auto t = tally(profile);
            auto phi = strength_matrix(t, StrengthRule::ratio);
            for (const auto& o : s_order_set(phi).enumerate().orders)
                CHECK(extended_condorcet_check(o, t).passed);
        }
    }
    SECTION("ratio-rule S-set members pass Pareto on the weak-order fixtures") {
        for (const auto* name : {"appendixC.ballots", "example1.ballots", "example3.ballots"}) {
            auto profile = support::fixture_profile(name);
            auto phi = strength_matrix(tally(profile), StrengthRule::ratio);
            for (const auto& o : s_order_set(phi).enumerate().orders)
                CHECK(pareto_check(o, profile).passed);
        }
    }
    SECTION("margin rule admits a Pareto violation on the weak fixture") {
        auto profile = support::fixture_profile("example3.ballots");
        auto phi = strength_matrix(tally(profile), StrengthRule::margin);
        bool any_failure = false;
        for (const auto& o : t_order_set(phi).enumerate().orders)
            if (!pareto_check(o, profile).passed) any_failure = true;
        CHECK(any_failure);
    }
}
