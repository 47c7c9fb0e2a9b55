#ifndef ordo_cli_hpp
#define ordo_cli_hpp

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordo/criteria.hpp"
#include "ordo/methods.hpp"

namespace ordo::cli {

enum class Command {
    tally,
    constraints,
    s_set,
    t_set,
    schulze,
    ranked_pairs,
    kemeny,
    borda,
    minmax,
    winners,
    check,
};

enum class OutputFormat { text, json };

struct RunConfig {
    std::string input_path;
    StrengthRule rule = StrengthRule::ratio;
    Command command = Command::tally;
    std::uint64_t cap = 10000;
    OutputFormat format = OutputFormat::text;
    std::optional<std::string> order;     // for `check`: "a,b,c"
    std::optional<std::string> criterion; // for `check`: pareto | extended-condorcet
};

// exit codes
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_parse = 2;
inline constexpr int exit_guard = 3;

namespace detail {

using nlohmann::json;

inline json pairs_json(const BinaryRelation& r) {
    json out = json::array();
    for (auto [a, b] : r.pairs())
        out.push_back({r.universe().label(a), r.universe().label(b)});
    return out;
}

inline std::string pairs_text(const BinaryRelation& r) {
    std::string s;
    for (auto [a, b] : r.pairs()) {
        if (!s.empty()) s += " ";
        s += "(" + r.universe().label(a) + "," + r.universe().label(b) + ")";
    }
    return s.empty() ? "(empty)" : s;
}

inline json labels_json(const AlternativeSet& universe, const std::vector<int>& set) {
    json out = json::array();
    for (int a : set) out.push_back(universe.label(a));
    return out;
}

inline std::string labels_text(const AlternativeSet& universe, const std::vector<int>& set) {
    std::string s;
    for (int a : set) {
        if (!s.empty()) s += " ";
        s += universe.label(a);
    }
    return s.empty() ? "(empty)" : s;
}

inline json orders_json(const std::vector<LinearOrder>& orders) {
    json out = json::array();
    for (const auto& o : orders) out.push_back(o.to_string());
    return out;
}

inline std::vector<std::string> split_labels(const std::string& csv) {
    std::vector<std::string> labels;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            labels.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    labels.push_back(cur);
    return labels;
}

struct Pipeline {
    Profile profile;
    TallyMatrix tallies;
    StrengthMatrix phi;
    ThresholdLadder ladder;
};

inline json base_json(const Pipeline& p, const RunConfig& config) {
    json out;
    out["universe"] = p.tallies.universe.labels();
    out["voters"] = p.tallies.voters;
    out["rule"] = ordo::to_string(config.rule);
    json thresholds = json::array();
    for (const auto& t : p.ladder.thresholds) thresholds.push_back(ordo::to_string(t));
    json reps = json::array();
    for (const auto& r : p.ladder.representatives) reps.push_back(ordo::to_string(r));
    out["thresholds"] = thresholds;
    out["representatives"] = reps;
    return out;
}

inline json tally_json(const TallyMatrix& t) {
    json rows = json::array();
    for (int a = 0; a < t.universe.size(); ++a) {
        json row = json::array();
        for (int b = 0; b < t.universe.size(); ++b) row.push_back(a == b ? 0 : t.n(a, b));
        rows.push_back(row);
    }
    return rows;
}

inline void emit_enumeration(const AlternativeSet& universe, const BinaryRelation& constraint,
                             const EnumerationResult& result, const std::string& name,
                             const RunConfig& config, const Pipeline& p, std::ostream& out) {
    if (config.format == OutputFormat::json) {
        json j = base_json(p, config);
        j["constraint"] = pairs_json(constraint);
        j["orders"] = orders_json(result.orders);
        j["count"] = result.total;
        j["count_exact"] = result.total_exact;
        j["truncated"] = result.truncated;
        out << j.dump(2) << "\n";
        return;
    }
    out << name << " constraint: " << pairs_text(constraint) << "\n";
    out << (result.total_exact ? "count: " : "count >= ") << result.total
        << (result.truncated ? " (listing truncated)" : "") << "\n";
    for (const auto& o : result.orders) out << "R: " << o.to_string() << "\n";
}

} // namespace detail

inline int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    using detail::json;

    std::ifstream file(config.input_path);
    if (!file) {
        err << "error: cannot read " << config.input_path << "\n";
        return exit_parse;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();

    detail::Pipeline p;
    try {
        p.profile = parse_profile(buffer.str());
    } catch (const ParseError& e) {
        err << "error: " << config.input_path << ": " << e.what() << "\n";
        return exit_parse;
    }
    p.tallies = tally(p.profile);
    p.phi = strength_matrix(p.tallies, config.rule);
    p.ladder = critical_thresholds(p.phi);

    try {
        switch (config.command) {
            case Command::tally: {
                if (config.format == OutputFormat::json) {
                    json j = detail::base_json(p, config);
                    j["tally"] = detail::tally_json(p.tallies);
                    out << j.dump(2) << "\n";
                } else {
                    const auto& u = p.tallies.universe;
                    out << "voters: " << p.tallies.voters << "\n";
                    for (int a = 0; a < u.size(); ++a) {
                        for (int b = 0; b < u.size(); ++b) {
                            if (a == b) continue;
                            out << "N[" << u.label(a) << "," << u.label(b)
                                << "] = " << p.tallies.n(a, b) << "\n";
                        }
                    }
                }
                break;
            }
            case Command::constraints: {
                const auto w = widest_paths(p.phi);
                const auto s_closed = s_constraint(p.phi, w);
                const auto t_closed = schulze_relation(w);
                const auto oracle = constraint_oracle(p.phi);
                const bool s_ok = s_closed == oracle.s_union;
                const bool t_ok = t_closed == oracle.t_union;
                if (config.format == OutputFormat::json) {
                    json j = detail::base_json(p, config);
                    j["s_constraint"] = detail::pairs_json(s_closed);
                    j["t_constraint"] = detail::pairs_json(t_closed);
                    j["s_constraint_oracle"] = detail::pairs_json(oracle.s_union);
                    j["t_constraint_oracle"] = detail::pairs_json(oracle.t_union);
                    j["s_matches_oracle"] = s_ok;
                    j["t_matches_oracle"] = t_ok;
                    out << j.dump(2) << "\n";
                } else {
                    out << "S-constraint (closed form): " << detail::pairs_text(s_closed) << "\n";
                    out << "S-constraint (oracle):      " << detail::pairs_text(oracle.s_union)
                        << "\n";
                    out << "T-constraint (closed form): " << detail::pairs_text(t_closed) << "\n";
                    out << "T-constraint (oracle):      " << detail::pairs_text(oracle.t_union)
                        << "\n";
                    out << "closed forms match oracle: " << (s_ok && t_ok ? "yes" : "NO") << "\n";
                }
                break;
            }
            case Command::s_set:
            case Command::t_set: {
                const auto set = config.command == Command::s_set ? s_order_set(p.phi)
                                                                  : t_order_set(p.phi);
                const auto result = set.enumerate(config.cap);
                detail::emit_enumeration(p.tallies.universe, set.constraint, result,
                                         to_string(set.kind), config, p, out);
                break;
            }
            case Command::schulze: {
                const auto w = widest_paths(p.phi);
                const auto rel = schulze_relation(w);
                const auto winners = maximal_set(all_alternatives(p.tallies.universe), rel);
                if (config.format == OutputFormat::json) {
                    json j = detail::base_json(p, config);
                    json rows = json::array();
                    for (int a = 0; a < p.tallies.universe.size(); ++a) {
                        json row = json::array();
                        for (int b = 0; b < p.tallies.universe.size(); ++b)
                            row.push_back(a == b ? "0" : ordo::to_string(w.b(a, b)));
                        rows.push_back(row);
                    }
                    j["widest_paths"] = rows;
                    j["schulze_relation"] = detail::pairs_json(rel);
                    j["winners"] = detail::labels_json(p.tallies.universe, winners);
                    out << j.dump(2) << "\n";
                } else {
                    out << "schulze relation: " << detail::pairs_text(rel) << "\n";
                    out << "winners: " << detail::labels_text(p.tallies.universe, winners) << "\n";
                }
                break;
            }
            case Command::ranked_pairs: {
                const auto outcomes = ranked_pairs_outcomes(p.phi, config.cap);
                if (config.format == OutputFormat::json) {
                    json j = detail::base_json(p, config);
                    j["orders"] = detail::orders_json(outcomes.orders);
                    j["truncated"] = outcomes.truncated;
                    out << j.dump(2) << "\n";
                } else {
                    for (const auto& o : outcomes.orders) out << "R: " << o.to_string() << "\n";
                    if (outcomes.truncated) out << "(tie-break enumeration truncated)\n";
                }
                break;
            }
            case Command::kemeny: {
                const auto orders = kemeny_orders(p.tallies);
                if (config.format == OutputFormat::json) {
                    json j = detail::base_json(p, config);
                    j["orders"] = detail::orders_json(orders);
                    out << j.dump(2) << "\n";
                } else {
                    for (const auto& o : orders) out << "R: " << o.to_string() << "\n";
                }
                break;
            }
            case Command::borda: {
                const auto result = borda_ranking(p.tallies);
                if (config.format == OutputFormat::json) {
                    json j = detail::base_json(p, config);
                    json scores;
                    for (int a = 0; a < p.tallies.universe.size(); ++a)
                        scores[p.tallies.universe.label(a)] = result.scores[a];
                    j["scores"] = scores;
                    j["orders"] = detail::orders_json(result.orders);
                    out << j.dump(2) << "\n";
                } else {
                    for (int a = 0; a < p.tallies.universe.size(); ++a)
                        out << "score[" << p.tallies.universe.label(a)
                            << "] = " << result.scores[a] << "\n";
                    for (const auto& o : result.orders) out << "R: " << o.to_string() << "\n";
                }
                break;
            }
            case Command::minmax: {
                const auto winners = simpson_kramer(p.phi, p.ladder);
                if (config.format == OutputFormat::json) {
                    json j = detail::base_json(p, config);
                    j["winners"] = detail::labels_json(p.tallies.universe, winners);
                    out << j.dump(2) << "\n";
                } else {
                    out << "winners: " << detail::labels_text(p.tallies.universe, winners) << "\n";
                }
                break;
            }
            case Command::winners: {
                const auto report = winner_report(p.phi, p.ladder, config.cap);
                const auto& u = p.tallies.universe;
                if (config.format == OutputFormat::json) {
                    json j = detail::base_json(p, config);
                    j["simpson_kramer"] = detail::labels_json(u, report.sk);
                    j["schulze"] = detail::labels_json(u, report.schulze);
                    j["ranked_pairs"] = detail::labels_json(u, report.ranked_pairs);
                    j["s_maximal"] = detail::labels_json(u, report.s_maximal);
                    j["remark2"] = detail::labels_json(u, report.remark2);
                    j["ranked_pairs_truncated"] = report.ranked_pairs_truncated;
                    out << j.dump(2) << "\n";
                } else {
                    out << "simpson-kramer: " << detail::labels_text(u, report.sk) << "\n";
                    out << "schulze:        " << detail::labels_text(u, report.schulze) << "\n";
                    out << "ranked pairs:   " << detail::labels_text(u, report.ranked_pairs)
                        << "\n";
                    out << "s-maximal:      " << detail::labels_text(u, report.s_maximal) << "\n";
                    out << "remark2:        " << detail::labels_text(u, report.remark2) << "\n";
                }
                break;
            }
            case Command::check: {
                if (!config.order || !config.criterion) {
                    err << "error: check requires --order and --criterion\n";
                    return exit_usage;
                }
                LinearOrder order;
                try {
                    order = LinearOrder::from_labels(p.tallies.universe,
                                                     detail::split_labels(*config.order));
                } catch (const std::invalid_argument& e) {
                    err << "error: bad --order: " << e.what() << "\n";
                    return exit_usage;
                }
                CriterionVerdict verdict;
                if (*config.criterion == "pareto") {
                    verdict = pareto_check(order, p.profile);
                } else if (*config.criterion == "extended-condorcet" ||
                           *config.criterion == "ecc") {
                    verdict = extended_condorcet_check(order, p.tallies);
                } else {
                    err << "error: unknown criterion " << *config.criterion << "\n";
                    return exit_usage;
                }
                const auto& u = p.tallies.universe;
                if (config.format == OutputFormat::json) {
                    json j = detail::base_json(p, config);
                    j["criterion"] = *config.criterion;
                    j["order"] = order.to_string();
                    j["passed"] = verdict.passed;
                    if (verdict.violated_pair)
                        j["witness_pair"] = {u.label(verdict.violated_pair->first),
                                             u.label(verdict.violated_pair->second)};
                    if (verdict.violated_block)
                        j["witness_block"] = detail::labels_json(u, *verdict.violated_block);
                    out << j.dump(2) << "\n";
                } else {
                    out << (verdict.passed ? "pass" : "fail") << "\n";
                    if (verdict.violated_pair)
                        out << "witness: (" << u.label(verdict.violated_pair->first) << ","
                            << u.label(verdict.violated_pair->second) << ")\n";
                    if (verdict.violated_block)
                        out << "dominating block: "
                            << detail::labels_text(u, *verdict.violated_block) << "\n";
                }
                break;
            }
        }
    } catch (const GuardError& e) {
        err << "error: " << e.what() << "\n";
        return exit_guard;
    }
    return exit_ok;
}

} // namespace ordo::cli

#endif
