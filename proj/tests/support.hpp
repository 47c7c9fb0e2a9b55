#ifndef ordo_tests_support_hpp
#define ordo_tests_support_hpp

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <ordo/ordo.hpp>

namespace support {

inline std::string fixture_text(const std::string& name) {
    std::ifstream in(std::string(ORDO_FIXTURES_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture: " + name);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline ordo::Profile fixture_profile(const std::string& name) {
    return ordo::parse_profile(fixture_text(name));
}

inline ordo::StrengthMatrix fixture_strengths(const std::string& name,
                                              ordo::StrengthRule rule = ordo::StrengthRule::ratio) {
    return ordo::strength_matrix(ordo::tally(fixture_profile(name)), rule);
}

using LabelPair = std::pair<std::string, std::string>;

inline ordo::BinaryRelation rel(const ordo::AlternativeSet& universe,
                                const std::vector<LabelPair>& pairs) {
    ordo::BinaryRelation r(universe);
    for (const auto& [a, b] : pairs) r.add_label_pair(a, b);
    return r;
}

inline std::set<LabelPair> label_pairs(const ordo::BinaryRelation& r) {
    std::set<LabelPair> out;
    for (auto [a, b] : r.pairs())
        out.insert({r.universe().label(a), r.universe().label(b)});
    return out;
}

inline ordo::LinearOrder order(const ordo::AlternativeSet& universe, const std::string& csv) {
    std::vector<std::string> labels;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            labels.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    labels.push_back(cur);
    return ordo::LinearOrder::from_labels(universe, labels);
}

inline std::set<std::string> order_strings(const std::vector<ordo::LinearOrder>& orders) {
    std::set<std::string> out;
    for (const auto& o : orders) out.insert(o.to_string());
    return out;
}

inline std::vector<std::string> labels_of(const ordo::AlternativeSet& universe,
                                          const std::vector<int>& set) {
    std::vector<std::string> out;
    for (int a : set) out.push_back(universe.label(a));
    return out;
}

inline ordo::AlternativeSet abc() {
    return ordo::AlternativeSet({"a", "b", "c"});
}

} // namespace support

#endif
