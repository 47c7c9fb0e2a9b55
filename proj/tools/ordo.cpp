#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ordo/cli.hpp"

int main(int argc, char** argv) {
    using ordo::cli::Command;
    CLI::App app{"rank aggregation under supermajority rules"};
    app.require_subcommand(1);

    ordo::cli::RunConfig config;
    std::string rule = "ratio";
    std::string format = "text";
    std::string order;
    std::string criterion;

    const std::map<std::string, Command> commands = {
        {"tally", Command::tally},         {"constraints", Command::constraints},
        {"s-set", Command::s_set},         {"t-set", Command::t_set},
        {"schulze", Command::schulze},     {"ranked-pairs", Command::ranked_pairs},
        {"kemeny", Command::kemeny},       {"borda", Command::borda},
        {"minmax", Command::minmax},       {"winners", Command::winners},
        {"check", Command::check},
    };

    for (const auto& [name, cmd] : commands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("input", config.input_path, "ballot file")->required();
        sub->add_option("--strength", rule, "strength rule: ratio|margin")
            ->check(CLI::IsMember({"ratio", "margin"}));
        sub->add_option("--cap", config.cap, "enumeration cap");
        sub->add_option("--format", format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        if (cmd == Command::check) {
            sub->add_option("--order", order, "comma-separated ranking, best first");
            sub->add_option("--criterion", criterion, "pareto|extended-condorcet");
        }
        sub->callback([&, cmd] { config.command = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : ordo::cli::exit_usage;
    }

    config.rule = rule == "margin" ? ordo::StrengthRule::margin : ordo::StrengthRule::ratio;
    config.format = format == "json" ? ordo::cli::OutputFormat::json
                                     : ordo::cli::OutputFormat::text;
    if (!order.empty()) config.order = order;
    if (!criterion.empty()) config.criterion = criterion;

    return ordo::cli::execute(config, std::cout, std::cerr);
}
