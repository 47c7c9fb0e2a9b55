#ifndef ordo_supermajority_hpp
#define ordo_supermajority_hpp

#include <algorithm>
#include <optional>
#include <vector>

#include "ordo/ballots.hpp"
#include "ordo/relation.hpp"

namespace ordo {

// alpha |-> R_alpha is piecewise constant between consecutive distinct
// strength values, so every "for all alpha in [1/2,1)" quantifier in the
// library is discharged by iterating the representatives below.
struct ThresholdLadder {
    std::vector<Rational> thresholds;     // distinct strengths in (1/2, 1], ascending
    std::vector<Rational> representatives; // {1/2} plus thresholds below 1, ascending
};

struct AlphaStar {
    std::optional<Rational> value;
    bool exists = false;
};

inline BinaryRelation r_alpha(const StrengthMatrix& phi, const Rational& alpha) {
    if (alpha < Rational(1, 2) || alpha >= Rational(1))
        throw std::invalid_argument("alpha must lie in [1/2, 1)");
    BinaryRelation r(phi.universe);
    for (int a = 0; a < phi.universe.size(); ++a)
        for (int b = 0; b < phi.universe.size(); ++b)
            if (a != b && phi.phi(a, b) > alpha) r.set(a, b);
    return r;
}

inline ThresholdLadder critical_thresholds(const StrengthMatrix& phi) {
    ThresholdLadder ladder;
    for (int a = 0; a < phi.universe.size(); ++a)
        for (int b = 0; b < phi.universe.size(); ++b)
            if (a != b && phi.phi(a, b) > Rational(1, 2))
                ladder.thresholds.push_back(phi.phi(a, b));
    std::sort(ladder.thresholds.begin(), ladder.thresholds.end());
    ladder.thresholds.erase(std::unique(ladder.thresholds.begin(), ladder.thresholds.end()),
                            ladder.thresholds.end());
    ladder.representatives.push_back(Rational(1, 2));
    for (const auto& t : ladder.thresholds)
        if (t < Rational(1)) ladder.representatives.push_back(t);
    return ladder;
}

// Least representative whose R_alpha is P-acyclic. P-acyclicity is upward
// closed along the ladder, so the first hit is the minimum over all of
// [1/2, 1). May not exist when some ballots are general relations.
inline AlphaStar alpha_star(const StrengthMatrix& phi) {
    for (const auto& rep : critical_thresholds(phi).representatives)
        if (relation_properties(r_alpha(phi, rep)).p_acyclic) return {rep, true};
    return {std::nullopt, false};
}

} // namespace ordo

#endif
