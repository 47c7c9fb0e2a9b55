#ifndef ordo_ballots_hpp
#define ordo_ballots_hpp

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ordo/rational.hpp"
#include "ordo/relation.hpp"

namespace ordo {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line(line) {}
    int line;
};

enum class PreferenceKind { linear, weak, general };

struct VoterPreference {
    PreferenceKind kind = PreferenceKind::general;
    BinaryRelation relation; // R^i
    BinaryRelation strict;   // cached P(R^i)
};

struct Profile {
    AlternativeSet universe;
    std::vector<std::pair<std::uint64_t, VoterPreference>> entries; // (multiplicity, preference)

    std::uint64_t voters() const {
        std::uint64_t n = 0;
        for (const auto& [mult, pref] : entries) n += mult;
        return n;
    }
};

struct TallyMatrix {
    AlternativeSet universe;
    std::vector<std::uint64_t> counts; // row-major N[a,b], diagonal zero
    std::uint64_t voters = 0;

    std::uint64_t n(int a, int b) const {
        return counts[static_cast<std::size_t>(a) * universe.size() + b];
    }
};

enum class StrengthRule { ratio, margin };

inline std::string to_string(StrengthRule rule) {
    return rule == StrengthRule::ratio ? "ratio" : "margin";
}

struct StrengthMatrix {
    AlternativeSet universe;
    std::vector<Rational> values; // row-major, diagonal entries unused
    StrengthRule rule = StrengthRule::ratio;
    std::uint64_t voters = 0;

    const Rational& phi(int a, int b) const {
        return values[static_cast<std::size_t>(a) * universe.size() + b];
    }
};

namespace detail {

// Splits a ballot body into tokens: labels and the punctuation
// > [ ] ( ) , which are significant on their own.
inline std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) { tokens.push_back(cur); cur.clear(); }
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else if (c == '>' || c == '[' || c == ']' || c == '(' || c == ')' || c == ',') {
            flush();
            tokens.push_back(std::string(1, c));
        } else {
            cur += c;
        }
    }
    flush();
    return tokens;
}

inline VoterPreference build_grouped(const AlternativeSet& universe,
                                     const std::vector<std::vector<int>>& groups,
                                     int line) {
    std::vector<bool> seen(universe.size(), false);
    int covered = 0;
    bool all_singletons = true;
    for (const auto& g : groups) {
        if (g.size() != 1) all_singletons = false;
        for (int a : g) {
            if (seen[a])
                throw ParseError(line, "duplicate alternative within a ballot: " + universe.label(a));
            seen[a] = true;
            ++covered;
        }
    }
    if (covered != universe.size())
        throw ParseError(line, "ballot must cover every alternative exactly once");

    VoterPreference pref;
    pref.kind = all_singletons ? PreferenceKind::linear : PreferenceKind::weak;
    pref.relation = BinaryRelation(universe);
    // Indifference is stored symmetrically, so tie-group members drop out of
    // the strict part and are counted for neither direction in the tally.
    for (std::size_t i = 0; i < groups.size(); ++i) {
        for (int a : groups[i]) {
            for (int b : groups[i])
                if (a != b) pref.relation.set(a, b);
            for (std::size_t j = i + 1; j < groups.size(); ++j)
                for (int b : groups[j]) pref.relation.set(a, b);
        }
    }
    pref.strict = asymmetric_part(pref.relation);
    return pref;
}

inline VoterPreference build_general(const AlternativeSet& universe,
                                     const std::vector<std::pair<int, int>>& pairs) {
    VoterPreference pref;
    pref.kind = PreferenceKind::general;
    pref.relation = BinaryRelation(universe);
    for (auto [a, b] : pairs) pref.relation.set(a, b);
    pref.strict = asymmetric_part(pref.relation);
    return pref;
}

} // namespace detail

// Ballot file grammar (line oriented, '#' starts a comment):
//   alternatives: a b c
//   2: a > b > c
//   1: a > [b c]        tie group
//   1: rel (a,b) (b,c)  explicit relation
inline Profile parse_profile(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    Profile profile;

    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        auto tokens = detail::tokenize(line);
        if (tokens.empty()) continue;

        if (!have_header) {
            if (tokens[0] != "alternatives:")
                throw ParseError(line_no, "expected 'alternatives:' header");
            std::vector<std::string> labels(tokens.begin() + 1, tokens.end());
            if (labels.size() < 3)
                throw ParseError(line_no, "at least 3 alternatives required");
            try {
                profile.universe = AlternativeSet(labels);
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, e.what());
            }
            have_header = true;
            continue;
        }

        // count ":" ballot
        std::size_t t = 0;
        std::string count_tok = tokens[t];
        if (!count_tok.empty() && count_tok.back() == ':') {
            count_tok.pop_back();
            ++t;
        } else if (t + 1 < tokens.size() && tokens[t + 1] == ":") {
            t += 2;
        } else {
            throw ParseError(line_no, "expected 'count:' prefix");
        }
        std::uint64_t mult = 0;
        try {
            std::size_t consumed = 0;
            long long v = std::stoll(count_tok, &consumed);
            if (consumed != count_tok.size() || v <= 0) throw std::invalid_argument("");
            mult = static_cast<std::uint64_t>(v);
        } catch (const std::exception&) {
            throw ParseError(line_no, "multiplicity must be a positive integer");
        }
        if (t >= tokens.size()) throw ParseError(line_no, "empty ballot");

        auto lookup = [&](const std::string& label) {
            auto idx = profile.universe.find(label);
            if (!idx) throw ParseError(line_no, "unknown alternative label: " + label);
            return *idx;
        };

        if (tokens[t] == "rel") {
            ++t;
            std::vector<std::pair<int, int>> pairs;
            while (t < tokens.size()) {
                if (tokens[t] != "(" || t + 4 >= tokens.size())
                    throw ParseError(line_no, "expected '(a,b)' pair");
                if (tokens[t + 2] != "," || tokens[t + 4] != ")")
                    throw ParseError(line_no, "expected '(a,b)' pair");
                int a = lookup(tokens[t + 1]);
                int b = lookup(tokens[t + 3]);
                if (a == b) throw ParseError(line_no, "reflexive pair not allowed");
                pairs.emplace_back(a, b);
                t += 5;
            }
            if (pairs.empty()) throw ParseError(line_no, "rel ballot lists no pairs");
            profile.entries.emplace_back(mult, detail::build_general(profile.universe, pairs));
        } else {
            std::vector<std::vector<int>> groups;
            bool expect_group = true;
            while (t < tokens.size()) {
                if (!expect_group) {
                    if (tokens[t] != ">")
                        throw ParseError(line_no, "expected '>' between groups");
                    ++t;
                    expect_group = true;
                    continue;
                }
                std::vector<int> group;
                if (tokens[t] == "[") {
                    ++t;
                    while (t < tokens.size() && tokens[t] != "]")
                        group.push_back(lookup(tokens[t++]));
                    if (t >= tokens.size()) throw ParseError(line_no, "unterminated tie group");
                    ++t; // ']'
                    if (group.empty()) throw ParseError(line_no, "empty tie group");
                } else if (tokens[t] == ">" || tokens[t] == "]" || tokens[t] == "(" ||
                           tokens[t] == ")" || tokens[t] == ",") {
                    throw ParseError(line_no, "expected a label or tie group");
                } else {
                    group.push_back(lookup(tokens[t++]));
                }
                groups.push_back(std::move(group));
                expect_group = false;
            }
            if (expect_group) throw ParseError(line_no, "dangling '>'");
            profile.entries.emplace_back(mult,
                                         detail::build_grouped(profile.universe, groups, line_no));
        }
    }

    if (!have_header) throw ParseError(line_no, "missing 'alternatives:' header");
    if (profile.voters() < 3) throw ParseError(line_no, "at least 3 voters required");
    return profile;
}

inline TallyMatrix tally(const Profile& p) {
    const int n = p.universe.size();
    TallyMatrix t{p.universe, std::vector<std::uint64_t>(static_cast<std::size_t>(n) * n, 0),
                  p.voters()};
    for (const auto& [mult, pref] : p.entries)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && pref.strict.contains(a, b))
                    t.counts[static_cast<std::size_t>(a) * n + b] += mult;
    return t;
}

inline Rational strength_value(StrengthRule rule, std::uint64_t n, std::uint64_t m,
                               std::uint64_t voters) {
    const auto ni = static_cast<std::int64_t>(n);
    const auto mi = static_cast<std::int64_t>(m);
    const auto vi = static_cast<std::int64_t>(voters);
    if (rule == StrengthRule::ratio)
        return (n + m) > 0 ? Rational(ni, ni + mi) : Rational(1, 2);
    return Rational(vi + (ni - mi), 2 * vi);
}

inline StrengthMatrix strength_matrix(const TallyMatrix& t, StrengthRule rule) {
    const int n = t.universe.size();
    StrengthMatrix phi{t.universe,
                       std::vector<Rational>(static_cast<std::size_t>(n) * n, Rational(0)), rule,
                       t.voters};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b)
                phi.values[static_cast<std::size_t>(a) * n + b] =
                    strength_value(rule, t.n(a, b), t.n(b, a), t.voters);
    return phi;
}

} // namespace ordo

#endif
