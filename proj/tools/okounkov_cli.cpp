#include <iostream>

#include <CLI11.hpp>

#include "okounkov/cli/commands.hpp"

namespace {

using namespace okounkov;

void print_report(const cli::RunReport& r, const std::filesystem::path& out)
{
    for (const auto& c : r.checks)
    {
        const char* tag = c.pass ? "PASS" : (c.hard ? "FAIL" : "info");
        std::cout << "[" << tag << "] " << c.name;
        if (!c.detail.empty())
            std::cout << " (" << c.detail << ")";
        std::cout << '\n';
    }
    std::cout << (r.ok() ? "ok" : "FAILED") << ": " << r.command << " on " << r.instance << ", report in "
              << (out / "report.json").string() << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Okounkov bodies of adelic divisors on toric instances"};
    app.require_subcommand(1);

    cli::RunOptions opts;
    std::string instance, pair, out;
    std::vector<std::string> fibers;

    for (const auto& name : cli::command_names())
    {
        auto* sub = app.add_subcommand(name);
        sub->add_option("instance", instance, "instance JSON file")->required()->check(CLI::ExistingFile);
        sub->add_option("--divisor", opts.divisor, "divisor name")->capture_default_str();
        sub->add_option("--max-degree", opts.max_degree, "degree bound M (default: instance)")->check(CLI::PositiveNumber);
        sub->add_option("--stages", opts.stages, "stage bound J (default: instance)")->check(CLI::PositiveNumber);
        sub->add_option("--flag", opts.flag, "named flag from the instance");
        sub->add_option("--out", out, "output directory (default: $OKOUNKOV_OUT or ./okounkov_out)");
        sub->add_option("--seed", opts.seed, "seed for randomized suites")->capture_default_str();
        if (name == "global" || name == "restricted" || name == "verify")
        {
            sub->add_option("--pair", pair, "divisor pair D,E");
            sub->add_option("--amax", opts.amax, "grid bound A_max (default: instance)")->check(CLI::PositiveNumber);
            sub->add_option("--fiber", fibers, "fiber a1,a2 (repeatable; rationals as p/q)");
        }
        if (name == "restricted")
            sub->add_option("--flat", opts.flat, "named flat from the instance");
        if (name == "verify")
        {
            sub->add_flag("--all", opts.all, "run every suite");
            sub->add_option("--suite", opts.suites, "suite to run (repeatable)")
                ->check(CLI::IsMember(cli::suite_names()));
        }
    }

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();
    try
    {
        if (!pair.empty())
        {
            const auto comma = pair.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("--pair expects D,E");
            opts.pair = std::pair{pair.substr(0, comma), pair.substr(comma + 1)};
        }
        for (const auto& f : fibers)
            opts.fibers.push_back(cli::parse_pair(f));
        opts.out = out;
        const auto report = cli::run(command, std::filesystem::path(instance), opts);
        print_report(report, cli::output_dir(opts));
        return report.ok() ? 0 : 1;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
