#ifndef ordo_ordersets_hpp
#define ordo_ordersets_hpp

#include <string>
#include <utility>
#include <vector>

#include "ordo/supermajority.hpp"

namespace ordo {

// Max-min path strengths over the majority graph (edges with phi > 1/2,
// weighted by phi). 0 is the explicit no-path sentinel.
struct WidestPathMatrix {
    AlternativeSet universe;
    std::vector<Rational> values;

    const Rational& b(int a, int b_) const {
        return values[static_cast<std::size_t>(a) * universe.size() + b_];
    }
};

inline WidestPathMatrix widest_paths(const StrengthMatrix& phi) {
    const int n = phi.universe.size();
    WidestPathMatrix w{phi.universe,
                       std::vector<Rational>(static_cast<std::size_t>(n) * n, Rational(0))};
    auto at = [&](int a, int b) -> Rational& {
        return w.values[static_cast<std::size_t>(a) * n + b];
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && phi.phi(a, b) > Rational(1, 2)) at(a, b) = phi.phi(a, b);
    // All-pairs max-min relaxation; cubic and exact at desk scale.
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a) {
            if (a == k) continue;
            for (int b = 0; b < n; ++b) {
                if (b == a || b == k) continue;
                const Rational via = std::min(at(a, k), at(k, b));
                if (via > at(a, b)) at(a, b) = via;
            }
        }
    return w;
}

inline BinaryRelation schulze_relation(const WidestPathMatrix& w) {
    BinaryRelation r(w.universe);
    for (int a = 0; a < w.universe.size(); ++a)
        for (int b = 0; b < w.universe.size(); ++b)
            if (a != b && w.b(a, b) > w.b(b, a)) r.set(a, b);
    return r;
}

// Closed form for the union of P(S(R_alpha)) over all alpha: a pair is in
// iff it is a majority pair stronger than the strongest reverse path.
inline BinaryRelation s_constraint(const StrengthMatrix& phi, const WidestPathMatrix& w) {
    BinaryRelation r(phi.universe);
    for (int a = 0; a < phi.universe.size(); ++a)
        for (int b = 0; b < phi.universe.size(); ++b)
            if (a != b && phi.phi(a, b) > Rational(1, 2) && phi.phi(a, b) > w.b(b, a))
                r.set(a, b);
    return r;
}

struct ConstraintUnions {
    BinaryRelation s_union;
    BinaryRelation t_union;
};

// Definitional brute force: union the asymmetric parts of both closures of
// R_alpha across the threshold ladder. This is the specification the
// closed forms above are tested against, so it stays public.
inline ConstraintUnions constraint_oracle(const StrengthMatrix& phi) {
    ConstraintUnions u{BinaryRelation(phi.universe), BinaryRelation(phi.universe)};
    for (const auto& rep : critical_thresholds(phi).representatives) {
        const BinaryRelation r = r_alpha(phi, rep);
        u.s_union.unite(asymmetric_part(suzumura_closure(r)));
        u.t_union.unite(asymmetric_part(transitive_closure(r)));
    }
    return u;
}

enum class OrderSetKind { s, t, acyclic_core };

inline std::string to_string(OrderSetKind kind) {
    switch (kind) {
        case OrderSetKind::s: return "S";
        case OrderSetKind::t: return "T";
        default: return "acyclic-core";
    }
}

// A P-acyclic constraint plus lazy enumeration of the orders respecting
// it; members can be factorial so nothing is materialized up front.
struct OrderSet {
    BinaryRelation constraint;
    OrderSetKind kind = OrderSetKind::s;

    EnumerationResult enumerate(std::uint64_t cap = 10000) const {
        return enumerate_respecting_orders(constraint, cap);
    }
};

inline OrderSet order_set(BinaryRelation constraint, OrderSetKind kind) {
    return OrderSet{std::move(constraint), kind};
}

inline OrderSet s_order_set(const StrengthMatrix& phi) {
    return order_set(s_constraint(phi, widest_paths(phi)), OrderSetKind::s);
}

inline OrderSet t_order_set(const StrengthMatrix& phi) {
    return order_set(schulze_relation(widest_paths(phi)), OrderSetKind::t);
}

} // namespace ordo

#endif
