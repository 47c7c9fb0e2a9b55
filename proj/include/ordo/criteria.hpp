#ifndef ordo_criteria_hpp
#define ordo_criteria_hpp

#include <optional>
#include <utility>
#include <vector>

#include "ordo/ballots.hpp"
#include "ordo/errors.hpp"

namespace ordo {

struct CriterionVerdict {
    bool passed = true;
    // dominating split placed below something outside it
    std::optional<std::vector<int>> violated_block;
    // (a,b) the order was required to rank a over b but did not
    std::optional<std::pair<int, int>> violated_pair;
};

// Two-block realization of the extended Condorcet criterion: every
// partition in the paper's family is refined by its two-block splits
// {A_1 u ... u A_x, rest}, and conversely every dominating split is
// itself a two-block partition, so checking splits is equivalent.
inline CriterionVerdict extended_condorcet_check(const LinearOrder& order,
                                                 const TallyMatrix& t) {
    const int n = t.universe.size();
    if (n > 20) throw GuardError("extended Condorcet check limited to 20 alternatives");
    for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t(1) << n); ++mask) {
        bool dominating = true;
        for (int x = 0; x < n && dominating; ++x) {
            if (!(mask & (1u << x))) continue;
            for (int y = 0; y < n; ++y) {
                if (y == x || (mask & (1u << y))) continue;
                if (t.n(x, y) <= t.n(y, x)) { dominating = false; break; }
            }
        }
        if (!dominating) continue;
        for (int x = 0; x < n; ++x) {
            if (!(mask & (1u << x))) continue;
            for (int y = 0; y < n; ++y) {
                if (y == x || (mask & (1u << y))) continue;
                if (!order.before(x, y)) {
                    CriterionVerdict verdict;
                    verdict.passed = false;
                    std::vector<int> block;
                    for (int z = 0; z < n; ++z)
                        if (mask & (1u << z)) block.push_back(z);
                    verdict.violated_block = std::move(block);
                    verdict.violated_pair = std::make_pair(x, y);
                    return verdict;
                }
            }
        }
    }
    return {};
}

// Pareto: if nobody strictly opposes a over b and someone strictly
// supports it, the order must place a above b.
inline CriterionVerdict pareto_check(const LinearOrder& order, const Profile& p) {
    const int n = p.universe.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            bool opposed = false;
            bool supported = false;
            for (const auto& [mult, pref] : p.entries) {
                if (pref.strict.contains(b, a)) { opposed = true; break; }
                if (pref.strict.contains(a, b)) supported = true;
            }
            if (!opposed && supported && !order.before(a, b)) {
                CriterionVerdict verdict;
                verdict.passed = false;
                verdict.violated_pair = std::make_pair(a, b);
                return verdict;
            }
        }
    return {};
}

struct CondorcetExtremes {
    std::optional<int> winner;
    std::optional<int> loser;
};

inline CondorcetExtremes condorcet_winner_loser(const TallyMatrix& t) {
    const int n = t.universe.size();
    CondorcetExtremes out;
    for (int a = 0; a < n; ++a) {
        bool wins_all = true;
        bool loses_all = true;
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            if (t.n(a, b) <= t.n(b, a)) wins_all = false;
            if (t.n(b, a) <= t.n(a, b)) loses_all = false;
        }
        if (wins_all) out.winner = a;
        if (loses_all) out.loser = a;
    }
    return out;
}

} // namespace ordo

#endif
