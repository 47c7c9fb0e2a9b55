#ifndef ordo_methods_hpp
#define ordo_methods_hpp

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "ordo/errors.hpp"
#include "ordo/ordersets.hpp"

namespace ordo {

// Total order over all |A|^2 ordered pairs, descending in strength on the
// off-diagonal entries. Diagonal entries are processed as no-ops, so their
// placement never matters; they sit at the end here.
struct PairAgenda {
    std::vector<std::pair<int, int>> sequence;
};

inline PairAgenda default_agenda(const StrengthMatrix& phi) {
    const int n = phi.universe.size();
    PairAgenda agenda;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) agenda.sequence.emplace_back(a, b);
    std::stable_sort(agenda.sequence.begin(), agenda.sequence.end(),
                     [&](const auto& p, const auto& q) {
                         return phi.phi(p.first, p.second) > phi.phi(q.first, q.second);
                     });
    for (int a = 0; a < n; ++a) agenda.sequence.emplace_back(a, a);
    return agenda;
}

namespace detail {

inline bool path_exists(const BinaryRelation& r, int from, int to) {
    const int n = r.size();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        if (cur == to) return true;
        for (int next = 0; next < n; ++next)
            if (!seen[next] && r.contains(cur, next)) {
                seen[next] = true;
                stack.push_back(next);
            }
    }
    return false;
}

inline void validate_agenda(const StrengthMatrix& phi, const PairAgenda& agenda) {
    const int n = phi.universe.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
    Rational last_strength;
    bool have_last = false;
    for (auto [a, b] : agenda.sequence) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("agenda pair out of range");
        const std::size_t cell = static_cast<std::size_t>(a) * n + b;
        if (seen[cell]) throw std::invalid_argument("agenda repeats a pair");
        seen[cell] = true;
        if (a == b) continue;
        if (have_last && phi.phi(a, b) > last_strength)
            throw std::invalid_argument("agenda is not strength-descending");
        last_strength = phi.phi(a, b);
        have_last = true;
    }
    if (std::count(seen.begin(), seen.end(), true) != n * n)
        throw std::invalid_argument("agenda must cover all ordered pairs");
}

inline LinearOrder relation_to_order(const BinaryRelation& r) {
    // A complete transitive asymmetric relation has distinct out-degrees
    // n-1 .. 0; sorting by them recovers the ranking.
    const int n = r.size();
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::vector<int> wins(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && r.contains(a, b)) ++wins[a];
    std::sort(seq.begin(), seq.end(), [&](int a, int b) { return wins[a] > wins[b]; });
    return LinearOrder(r.universe(), std::move(seq));
}

} // namespace detail

// Tideman's lock-in pass: add each pair in agenda order unless a reverse
// path already exists. The full agenda including sub-majority pairs is
// processed, which is what makes the result complete.
inline LinearOrder ranked_pairs(const StrengthMatrix& phi, const PairAgenda& agenda) {
    detail::validate_agenda(phi, agenda);
    BinaryRelation locked(phi.universe);
    for (auto [a, b] : agenda.sequence) {
        if (a == b) continue;
        if (detail::path_exists(locked, b, a)) continue;
        locked.set(a, b);
    }
    return detail::relation_to_order(locked);
}

inline LinearOrder ranked_pairs(const StrengthMatrix& phi) {
    return ranked_pairs(phi, default_agenda(phi));
}

struct RankedPairsOutcomes {
    std::vector<LinearOrder> orders; // distinct results, sorted
    bool truncated = false;          // tie-break combinations exceeded the cap
};

// Enumerates R^pi over tie-break choices by permuting pairs inside each
// equal-strength block. Exhaustive whenever the product of block
// factorials fits under the cap; otherwise a truncated prefix.
inline RankedPairsOutcomes ranked_pairs_outcomes(const StrengthMatrix& phi,
                                                 std::uint64_t cap = 10000) {
    const int n = phi.universe.size();
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) pairs.emplace_back(a, b);
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& p, const auto& q) {
        return phi.phi(p.first, p.second) > phi.phi(q.first, q.second);
    });

    std::vector<std::vector<std::pair<int, int>>> blocks;
    for (const auto& p : pairs) {
        if (blocks.empty() ||
            phi.phi(blocks.back().back().first, blocks.back().back().second) !=
                phi.phi(p.first, p.second))
            blocks.emplace_back();
        blocks.back().push_back(p);
    }

    std::set<LinearOrder> distinct;
    RankedPairsOutcomes out;
    std::uint64_t combos = 0;
    bool more = true;
    while (more) {
        if (combos++ >= cap) {
            out.truncated = true;
            break;
        }
        PairAgenda agenda;
        for (const auto& block : blocks)
            agenda.sequence.insert(agenda.sequence.end(), block.begin(), block.end());
        for (int a = 0; a < n; ++a) agenda.sequence.emplace_back(a, a);
        distinct.insert(ranked_pairs(phi, agenda));

        // odometer over per-block permutations, last block fastest
        more = false;
        for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
            if (std::next_permutation(it->begin(), it->end())) {
                more = true;
                break;
            }
    }
    out.orders.assign(distinct.begin(), distinct.end());
    return out;
}

// Exhaustive Kemeny-Young: all orders maximizing the summed pairwise
// support along the order.
inline std::vector<LinearOrder> kemeny_orders(const TallyMatrix& t) {
    const int n = t.universe.size();
    if (n > 10) throw GuardError("kemeny search limited to 10 alternatives");
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::vector<LinearOrder> best;
    std::uint64_t best_score = 0;
    do {
        std::uint64_t score = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) score += t.n(seq[i], seq[j]);
        if (best.empty() || score > best_score) {
            best.clear();
            best_score = score;
        }
        if (score == best_score) best.emplace_back(t.universe, seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return best;
}

struct BordaResult {
    std::vector<std::uint64_t> scores;  // score(x) = sum_y N[x,y]
    std::vector<LinearOrder> orders;    // descending score, ties expanded
};

inline BordaResult borda_ranking(const TallyMatrix& t) {
    const int n = t.universe.size();
    BordaResult out;
    out.scores.resize(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) out.scores[a] += t.n(a, b);

    std::vector<std::vector<int>> groups; // equal-score tiers, descending
    std::vector<int> by_score(n);
    std::iota(by_score.begin(), by_score.end(), 0);
    std::sort(by_score.begin(), by_score.end(), [&](int a, int b) {
        if (out.scores[a] != out.scores[b]) return out.scores[a] > out.scores[b];
        return a < b;
    });
    for (int a : by_score) {
        if (groups.empty() || out.scores[groups.back().back()] != out.scores[a])
            groups.emplace_back();
        groups.back().push_back(a);
    }

    std::vector<std::vector<int>> perms{{}};
    for (auto& group : groups) {
        std::vector<std::vector<int>> next;
        std::sort(group.begin(), group.end());
        do {
            for (const auto& prefix : perms) {
                auto seq = prefix;
                seq.insert(seq.end(), group.begin(), group.end());
                next.push_back(std::move(seq));
            }
        } while (std::next_permutation(group.begin(), group.end()));
        perms = std::move(next);
    }
    for (auto& seq : perms) out.orders.emplace_back(t.universe, std::move(seq));
    std::sort(out.orders.begin(), out.orders.end());
    return out;
}

// Simpson-Kramer min-max winners, computed both as the direct arg-min of
// the worst incoming strength and as the intersection of nonempty maximal
// sets along the ladder. The two must agree; a mismatch is a bug.
inline std::vector<int> simpson_kramer(const StrengthMatrix& phi, const ThresholdLadder& ladder) {
    const int n = phi.universe.size();

    std::vector<Rational> worst_in(n, Rational(0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && phi.phi(b, a) > worst_in[a]) worst_in[a] = phi.phi(b, a);
    const Rational v = *std::min_element(worst_in.begin(), worst_in.end());
    std::vector<int> direct;
    for (int a = 0; a < n; ++a)
        if (worst_in[a] == v) direct.push_back(a);

    const auto everyone = all_alternatives(phi.universe);
    std::vector<int> intersection = everyone;
    bool any_nonempty = false;
    for (const auto& rep : ladder.representatives) {
        auto m = maximal_set(everyone, r_alpha(phi, rep));
        if (m.empty()) continue;
        any_nonempty = true;
        std::vector<int> merged;
        std::set_intersection(intersection.begin(), intersection.end(), m.begin(), m.end(),
                              std::back_inserter(merged));
        intersection = std::move(merged);
    }
    if (!any_nonempty) intersection = everyone;

    if (direct != intersection)
        throw std::logic_error("simpson-kramer arg-min and maximal-set intersection disagree");
    return direct;
}

struct WinnerReport {
    std::vector<int> sk;           // Simpson-Kramer min-max
    std::vector<int> schulze;      // M(A, R^Sc)
    std::vector<int> ranked_pairs; // tops over tie-break choices
    std::vector<int> s_maximal;    // M(A, union of P(S(R_alpha)))
    std::vector<int> remark2;      // mixed maximal-set intersection; may be empty
    bool ranked_pairs_truncated = false;
};

inline WinnerReport winner_report(const StrengthMatrix& phi, const ThresholdLadder& ladder,
                                  std::uint64_t cap = 10000) {
    WinnerReport report;
    const auto everyone = all_alternatives(phi.universe);
    const auto w = widest_paths(phi);
    const auto schulze_rel = schulze_relation(w);

    report.sk = simpson_kramer(phi, ladder);
    report.schulze = maximal_set(everyone, schulze_rel);
    report.s_maximal = maximal_set(everyone, s_constraint(phi, w));

    auto outcomes = ranked_pairs_outcomes(phi, cap);
    report.ranked_pairs_truncated = outcomes.truncated;
    std::set<int> tops;
    for (const auto& order : outcomes.orders) tops.insert(order.top());
    report.ranked_pairs.assign(tops.begin(), tops.end());

    // mixed intersection: maximal sets of R_alpha where nonempty, of
    // S(R_alpha) where empty
    std::vector<int> mixed = everyone;
    for (const auto& rep : ladder.representatives) {
        const auto r = r_alpha(phi, rep);
        auto m = maximal_set(everyone, r);
        if (m.empty()) m = maximal_set(everyone, suzumura_closure(r));
        std::vector<int> merged;
        std::set_intersection(mixed.begin(), mixed.end(), m.begin(), m.end(),
                              std::back_inserter(merged));
        mixed = std::move(merged);
    }
    report.remark2 = std::move(mixed);

    // cross-checks: the Schulze winners equal the intersection of maximal
    // sets of T(R_alpha), and both winner sets sit inside s_maximal
    std::vector<int> t_intersection = everyone;
    for (const auto& rep : ladder.representatives) {
        auto m = maximal_set(everyone, transitive_closure(r_alpha(phi, rep)));
        std::vector<int> merged;
        std::set_intersection(t_intersection.begin(), t_intersection.end(), m.begin(), m.end(),
                              std::back_inserter(merged));
        t_intersection = std::move(merged);
    }
    if (t_intersection != report.schulze)
        throw std::logic_error("schulze winners disagree with T-closure maximal sets");
    for (int a : report.schulze)
        if (!std::binary_search(report.s_maximal.begin(), report.s_maximal.end(), a))
            throw std::logic_error("schulze winner outside the S-constraint maximal set");
    for (int a : report.ranked_pairs)
        if (!std::binary_search(report.s_maximal.begin(), report.s_maximal.end(), a))
            throw std::logic_error("ranked-pairs winner outside the S-constraint maximal set");

    return report;
}

} // namespace ordo

#endif
