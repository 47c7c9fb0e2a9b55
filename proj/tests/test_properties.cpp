#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gen.hpp"
#include "support.hpp"

using namespace ordo;

namespace {

// All 24/120/720 orders filtered by respects(); reference for enumeration.
std::set<std::string> permutation_filter(const BinaryRelation& r) {
    const int n = r.size();
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::set<std::string> out;
    do {
        LinearOrder o(r.universe(), seq);
        if (respects(o, r).respects) out.insert(o.to_string());
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

BinaryRelation random_relation(std::mt19937& rng) {
    static const std::vector<std::string> pool{"a", "b", "c", "d", "e"};
    const int n = std::uniform_int_distribution<int>(3, 5)(rng);
    BinaryRelation r(AlternativeSet(std::vector<std::string>(pool.begin(), pool.begin() + n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && std::uniform_int_distribution<int>(0, 9)(rng) < 4) r.set(a, b);
    return r;
}

} // namespace

TEST_CASE("closure laws on random relations") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 300; ++i) {
        const auto r = random_relation(rng);
        const auto s = suzumura_closure(r);
        const auto t = transitive_closure(r);

        CHECK(r.subset_of(s));
        CHECK(s.subset_of(t));
        CHECK(suzumura_closure(s) == s);
        CHECK(transitive_closure(t) == t);
        CHECK(relation_properties(s).suzumura_consistent);
        CHECK(relation_properties(t).transitive);

        // monotone in the relation argument
        auto bigger = r;
        const int n = r.size();
        const int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
        const int b = (a + 1 + std::uniform_int_distribution<int>(0, n - 2)(rng)) % n;
        if (a != b) bigger.set(a, b);
        CHECK(suzumura_closure(r).subset_of(suzumura_closure(bigger)));
        CHECK(transitive_closure(r).subset_of(transitive_closure(bigger)));

        // strict parts shrink under closure
        CHECK(asymmetric_part(s).subset_of(asymmetric_part(r)));
        CHECK(asymmetric_part(s).subset_of(asymmetric_part(t)));

        // property implication chain
        const auto props = relation_properties(r);
        if (props.transitive) CHECK(props.suzumura_consistent);
        if (props.suzumura_consistent) CHECK(props.p_acyclic);
        if (props.asymmetric && props.p_acyclic) CHECK(props.suzumura_consistent);
    }
}

TEST_CASE("enumeration matches the permutation filter") {
    std::mt19937 rng(42);
    for (int i = 0; i < 200; ++i) {
        const auto r = random_relation(rng);
        const auto result = enumerate_respecting_orders(r);
        CHECK(support::order_strings(result.orders) == permutation_filter(r));
        CHECK(result.total == result.orders.size());
        CHECK(result.orders.empty() != relation_properties(r).p_acyclic);
        if (relation_properties(r).p_acyclic)
            CHECK_FALSE(maximal_set(all_alternatives(r.universe()), r).empty());
    }
}

TEST_CASE("randomized profile invariants") {
    std::mt19937 rng(987654321);
    for (int i = 0; i < 300; ++i) {
        const auto kind = gen::kind_of(i);
        const auto profile = gen::random_profile(rng, kind);
        const auto t = tally(profile);
        const auto rule = (i % 2) ? StrengthRule::ratio : StrengthRule::margin;
        const auto phi = strength_matrix(t, rule);
        const auto ladder = critical_thresholds(phi);
        const auto w = widest_paths(phi);

        // closed forms against the definitional union
        const auto oracle = constraint_oracle(phi);
        CHECK(s_constraint(phi, w) == oracle.s_union);
        CHECK(schulze_relation(w) == oracle.t_union);

        // majority relation agrees across rules and with the tally
        const auto base = r_alpha(phi, Rational(1, 2));
        for (int a = 0; a < t.universe.size(); ++a)
            for (int b = 0; b < t.universe.size(); ++b)
                if (a != b) CHECK(base.contains(a, b) == (t.n(a, b) > t.n(b, a)));

        // the antitone ladder
        for (std::size_t k = 1; k < ladder.representatives.size(); ++k)
            CHECK(r_alpha(phi, ladder.representatives[k])
                      .subset_of(r_alpha(phi, ladder.representatives[k - 1])));

        // both order sets are nonempty, even when no R_alpha is P-acyclic
        const auto s_set = s_order_set(phi);
        const auto t_set = t_order_set(phi);
        const auto s_result = s_set.enumerate(2000);
        const auto t_result = t_set.enumerate(2000);
        CHECK(s_result.total > 0);
        CHECK(t_result.total > 0);
        CHECK(s_set.constraint.subset_of(t_set.constraint));

        // T refines S: every T member is an S member
        for (const auto& o : t_result.orders)
            CHECK(respects(o, s_set.constraint).respects);

        // ranked pairs lands inside the S set
        const auto rp = ranked_pairs(phi);
        CHECK(respects(rp, s_set.constraint).respects);
        for (const auto& o : ranked_pairs_outcomes(phi, 50).orders)
            CHECK(respects(o, s_set.constraint).respects);

        // winner identities; both carry internal logic_error cross-checks
        const auto report = winner_report(phi, ladder, 50);
        CHECK_FALSE(report.sk.empty());
        CHECK_FALSE(report.s_maximal.empty());

        // every enumerated S member passes the extended Condorcet criterion
        for (const auto& o : s_result.orders)
            CHECK(extended_condorcet_check(o, t).passed);

        // ratio-rule S members satisfy Pareto on linear and weak profiles
        if (rule == StrengthRule::ratio && kind != gen::Kind::general)
            for (const auto& o : s_result.orders)
                CHECK(pareto_check(o, profile).passed);

        // weak-order profiles admit alpha*, and every S member respects its core
        if (kind != gen::Kind::general && rule == StrengthRule::ratio) {
            const auto astar = alpha_star(phi);
            REQUIRE(astar.exists);
            const auto core = r_alpha(phi, *astar.value);
            for (const auto& o : s_result.orders)
                CHECK(respects(o, core).respects);
        }
    }
}
