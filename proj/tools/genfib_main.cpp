#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "genfib/cli.hpp"

namespace {

constexpr int kUsageExit = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Horadam / generalized Fibonacci-Lucas family toolkit"};
    app.require_subcommand(1);

    std::string family_arg;
    std::vector<std::string> family_args;
    std::string range_arg;
    std::vector<std::string> range_args;
    std::string which_arg = "U";
    std::string identity_arg;
    std::string format_arg = "csv";
    std::uint64_t count_arg = 0;

    CLI::App* table = app.add_subcommand("table", "Print family values over an index range");
    table->add_option("--family", family_arg, "Family spec, e.g. fibonacci,k=2 or p=1,q=-1")
        ->required();
    table->add_option("--range", range_arg, "Index range lo..hi (inclusive)")->required();
    table->add_option("--which", which_arg, "Sequence to print: U, V or W (default U)");
    table->add_option("--format", format_arg, "Output format: csv or json (default csv)");

    CLI::App* verify = app.add_subcommand("verify", "Check one identity over a parameter grid");
    verify->add_option("--identity", identity_arg,
                       "One of T1i, T1ii, T1iii, T3, T4U, T4V, ShortEven, ShortOdd, Simson, "
                       "MatrixEntries")
        ->required();
    verify->add_option("--family", family_args, "Family spec (repeatable)")->required();
    verify
        ->add_option("--range", range_args,
                     "Index range lo..hi, optionally named (m=1..25, k=1..6); repeat for the "
                     "T1 identities' k range")
        ->required();
    verify->add_option("--format", format_arg, "Output format: csv or json (default csv)");

    CLI::App* gfcheck = app.add_subcommand(
        "gfcheck", "Compare generating-function coefficients against the k=2 family values");
    gfcheck->add_option("--family", family_arg, "Family spec")->required();
    gfcheck->add_option("--count", count_arg, "Number of coefficients to compare")->required();
    gfcheck->add_option("--format", format_arg, "Output format: csv or json (default csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsageExit;
    }

    try {
        const genfib::OutputFormat format = genfib::parse_format(format_arg);
        if (table->parsed()) {
            const genfib::FamilySpec family = genfib::parse_family(family_arg);
            const genfib::RangeArg range = genfib::parse_range(range_arg);
            if (range.name && *range.name != "n") {
                throw genfib::UsageError("table: range must be unnamed or named n");
            }
            return genfib::cmd_table(family, range.range, genfib::parse_table_kind(which_arg),
                                     format, std::cout);
        }
        if (verify->parsed()) {
            const auto id = genfib::parse_identity(identity_arg);
            if (!id) {
                throw genfib::UsageError("unknown identity \"" + identity_arg + "\"");
            }
            std::vector<genfib::FamilySpec> families;
            families.reserve(family_args.size());
            for (const std::string& arg : family_args) {
                families.push_back(genfib::parse_family(arg));
            }
            std::vector<genfib::RangeArg> ranges;
            ranges.reserve(range_args.size());
            for (const std::string& arg : range_args) {
                ranges.push_back(genfib::parse_range(arg));
            }
            return genfib::cmd_verify(*id, families, ranges, format, std::cout);
        }
        const genfib::FamilySpec family = genfib::parse_family(family_arg);
        return genfib::cmd_gfcheck(family, count_arg, format, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageExit;
    }
}
