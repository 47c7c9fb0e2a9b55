#ifndef ordo_relation_hpp
#define ordo_relation_hpp

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordo/alternatives.hpp"

namespace ordo {

// Irreflexive binary relation on an AlternativeSet. The diagonal is not
// representable: set() on (a,a) is rejected, so irreflexivity holds by
// construction and the closures below never manufacture loops.
class BinaryRelation {
public:
    BinaryRelation() = default;

    explicit BinaryRelation(AlternativeSet universe)
        : universe_(std::move(universe)),
          adj_(static_cast<std::size_t>(universe_.size()) * universe_.size(), false) {}

    const AlternativeSet& universe() const { return universe_; }
    int size() const { return universe_.size(); }

    bool contains(int a, int b) const {
        return a != b && adj_[cell(a, b)];
    }

    void set(int a, int b, bool value = true) {
        if (a == b) throw std::invalid_argument("diagonal pair is unrepresentable");
        adj_[cell(a, b)] = value;
    }

    void add_label_pair(const std::string& a, const std::string& b) {
        set(universe_.index_of(a), universe_.index_of(b));
    }

    bool empty() const {
        return std::none_of(adj_.begin(), adj_.end(), [](bool v) { return v; });
    }

    std::size_t pair_count() const {
        return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), true));
    }

    // Ordered pairs in row-major index order; deterministic.
    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b)
                if (contains(a, b)) out.emplace_back(a, b);
        return out;
    }

    BinaryRelation& unite(const BinaryRelation& other) {
        if (!(universe_ == other.universe_))
            throw std::invalid_argument("relation union across different universes");
        for (std::size_t i = 0; i < adj_.size(); ++i)
            if (other.adj_[i]) adj_[i] = true;
        return *this;
    }

    bool subset_of(const BinaryRelation& other) const {
        for (std::size_t i = 0; i < adj_.size(); ++i)
            if (adj_[i] && !other.adj_[i]) return false;
        return true;
    }

    friend bool operator==(const BinaryRelation& a, const BinaryRelation& b) {
        return a.universe_ == b.universe_ && a.adj_ == b.adj_;
    }

private:
    std::size_t cell(int a, int b) const {
        return static_cast<std::size_t>(a) * universe_.size() + b;
    }

    AlternativeSet universe_;
    std::vector<bool> adj_;
};

struct RelationProperties {
    bool complete = false;
    bool transitive = false;
    bool negatively_transitive = false;
    bool suzumura_consistent = false;
    bool p_acyclic = false;
    bool asymmetric = false;
};

// Complete strict ranking; seq[0] is the top alternative.
class LinearOrder {
public:
    LinearOrder() = default;

    LinearOrder(AlternativeSet universe, std::vector<int> seq)
        : universe_(std::move(universe)), seq_(std::move(seq)), pos_(seq_.size()) {
        if (static_cast<int>(seq_.size()) != universe_.size())
            throw std::invalid_argument("order must cover every alternative");
        std::vector<bool> seen(seq_.size(), false);
        for (int p = 0; p < static_cast<int>(seq_.size()); ++p) {
            int a = seq_[p];
            if (a < 0 || a >= universe_.size() || seen[a])
                throw std::invalid_argument("order is not a permutation of the universe");
            seen[a] = true;
            pos_[a] = p;
        }
    }

    static LinearOrder from_labels(const AlternativeSet& universe,
                                   const std::vector<std::string>& labels) {
        std::vector<int> seq;
        seq.reserve(labels.size());
        for (const auto& l : labels) seq.push_back(universe.index_of(l));
        return LinearOrder(universe, std::move(seq));
    }

    const AlternativeSet& universe() const { return universe_; }
    const std::vector<int>& sequence() const { return seq_; }
    int at(int position) const { return seq_.at(position); }
    int top() const { return seq_.front(); }

    // True iff a outranks b.
    bool before(int a, int b) const { return pos_.at(a) < pos_.at(b); }

    BinaryRelation as_relation() const {
        BinaryRelation r(universe_);
        for (std::size_t i = 0; i < seq_.size(); ++i)
            for (std::size_t j = i + 1; j < seq_.size(); ++j)
                r.set(seq_[i], seq_[j]);
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < seq_.size(); ++i) {
            if (i) s += ',';
            s += universe_.label(seq_[i]);
        }
        return s;
    }

    friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
        return a.universe_ == b.universe_ && a.seq_ == b.seq_;
    }
    friend bool operator<(const LinearOrder& a, const LinearOrder& b) {
        return a.seq_ < b.seq_;
    }

private:
    AlternativeSet universe_;
    std::vector<int> seq_;
    std::vector<int> pos_;
};

inline BinaryRelation asymmetric_part(const BinaryRelation& r) {
    BinaryRelation p(r.universe());
    for (int a = 0; a < r.size(); ++a)
        for (int b = 0; b < r.size(); ++b)
            if (a != b && r.contains(a, b) && !r.contains(b, a)) p.set(a, b);
    return p;
}

// Warshall sweep over off-diagonal reachability. A pair (a,b) lands in the
// closure iff some path of distinct alternatives leads from a to b.
inline BinaryRelation transitive_closure(const BinaryRelation& r) {
    const int n = r.size();
    BinaryRelation t = r;
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a) {
            if (a == k || !t.contains(a, k)) continue;
            for (int b = 0; b < n; ++b)
                if (b != a && b != k && t.contains(k, b)) t.set(a, b);
        }
    return t;
}

inline BinaryRelation suzumura_closure(const BinaryRelation& r) {
    BinaryRelation t = transitive_closure(r);
    BinaryRelation s = r;
    for (int a = 0; a < r.size(); ++a)
        for (int b = 0; b < r.size(); ++b)
            if (a != b && t.contains(a, b) && r.contains(b, a)) s.set(a, b);
    return s;
}

inline RelationProperties relation_properties(const BinaryRelation& r) {
    const int n = r.size();
    RelationProperties props;
    props.complete = true;
    props.transitive = true;
    props.negatively_transitive = true;
    props.asymmetric = true;

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            if (!r.contains(a, b) && !r.contains(b, a)) props.complete = false;
            if (r.contains(a, b) && r.contains(b, a)) props.asymmetric = false;
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                if (r.contains(a, b) && r.contains(b, c) && !r.contains(a, c))
                    props.transitive = false;
                if (!r.contains(a, b) && !r.contains(b, c) && r.contains(a, c))
                    props.negatively_transitive = false;
            }
        }

    // Both cycle conditions reduce to reachability: a chain in R closed by a
    // strict reversal, or a cycle of strict steps.
    const BinaryRelation strict = asymmetric_part(r);
    const BinaryRelation reach = transitive_closure(r);
    const BinaryRelation strict_reach = transitive_closure(strict);
    props.suzumura_consistent = true;
    props.p_acyclic = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            if (reach.contains(a, b) && strict.contains(b, a))
                props.suzumura_consistent = false;
            if (strict_reach.contains(a, b) && strict_reach.contains(b, a))
                props.p_acyclic = false;
        }
    return props;
}

// Undominated elements of `subset` under P(r).
inline std::vector<int> maximal_set(const std::vector<int>& subset, const BinaryRelation& r) {
    if (subset.empty()) throw std::invalid_argument("maximal_set over empty subset");
    const BinaryRelation strict = asymmetric_part(r);
    std::vector<int> out;
    for (int a : subset) {
        bool dominated = false;
        for (int b : subset)
            if (b != a && strict.contains(b, a)) { dominated = true; break; }
        if (!dominated) out.push_back(a);
    }
    return out;
}

inline std::vector<int> all_alternatives(const AlternativeSet& universe) {
    std::vector<int> v(universe.size());
    for (int i = 0; i < universe.size(); ++i) v[i] = i;
    return v;
}

struct RespectsResult {
    bool respects = false;
    std::optional<std::pair<int, int>> witness; // a strict pair the order reverses
};

inline RespectsResult respects(const LinearOrder& order, const BinaryRelation& r) {
    if (!(order.universe() == r.universe()))
        throw std::invalid_argument("order and relation universes differ");
    const BinaryRelation strict = asymmetric_part(r);
    for (int a = 0; a < r.size(); ++a)
        for (int b = 0; b < r.size(); ++b)
            if (a != b && strict.contains(a, b) && !order.before(a, b))
                return {false, std::make_pair(a, b)};
    return {true, std::nullopt};
}

struct EnumerationResult {
    std::vector<LinearOrder> orders;   // lexicographic in the universe's label order
    std::uint64_t total = 0;           // exact count when total_exact, else a lower bound
    bool truncated = false;
    bool total_exact = true;
};

namespace detail {

inline void enumerate_rec(const std::vector<std::uint32_t>& preds, int n,
                          std::uint32_t used, std::vector<int>& prefix,
                          std::uint64_t cap, const AlternativeSet& universe,
                          std::vector<LinearOrder>& out, bool& truncated) {
    if (static_cast<int>(prefix.size()) == n) {
        if (out.size() < cap)
            out.emplace_back(universe, prefix);
        else
            truncated = true;
        return;
    }
    for (int a = 0; a < n && !truncated; ++a) {
        if (used & (1u << a)) continue;
        if ((preds[a] & ~used) != 0) continue; // a still dominated among the rest
        prefix.push_back(a);
        enumerate_rec(preds, n, used | (1u << a), prefix, cap, universe, out, truncated);
        prefix.pop_back();
        if (out.size() >= cap && truncated) return;
    }
}

} // namespace detail

// Enumerates the linear orders respecting r, i.e. every branch of the
// sequential-maximal construction over P(r). P-cyclic input is a valid
// query whose answer is empty. The exact total comes from a subset DP and
// is reported even when the listing is truncated (for up to 20
// alternatives; beyond that a truncated run reports a lower bound).
inline EnumerationResult enumerate_respecting_orders(const BinaryRelation& r,
                                                     std::uint64_t cap = 10000) {
    const int n = r.size();
    EnumerationResult result;
    if (n > 20) throw std::invalid_argument("enumeration supports at most 20 alternatives");

    const BinaryRelation strict = asymmetric_part(r);
    std::vector<std::uint32_t> preds(n, 0); // preds[a]: elements that must precede a
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && strict.contains(b, a)) preds[a] |= (1u << b);

    std::vector<int> prefix;
    prefix.reserve(n);
    detail::enumerate_rec(preds, n, 0, prefix, cap, r.universe(), result.orders,
                          result.truncated);

    if (!result.truncated) {
        result.total = result.orders.size();
        return result;
    }

    // Count without listing: ways[S] = orders of the placed set S.
    std::vector<std::uint64_t> ways(std::size_t(1) << n, 0);
    ways[0] = 1;
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << n); ++s) {
        std::uint64_t acc = 0;
        for (int a = 0; a < n; ++a) {
            const std::uint32_t bit = 1u << a;
            if (!(s & bit)) continue;
            if ((preds[a] & ~(s & ~bit)) != 0) continue;
            acc += ways[s & ~bit];
        }
        ways[s] = acc;
    }
    result.total = ways[(std::size_t(1) << n) - 1];
    return result;
}

} // namespace ordo

#endif
