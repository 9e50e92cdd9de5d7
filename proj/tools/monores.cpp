// monores: residue-current annihilators of monomial ideals from the command line.
//
//   monores annihilator samples/five_point.txt
//   monores partial --ideal "z1 z3, z2 z3"
//   monores render samples/five_point.txt --format=svg -o five_point.svg

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "monores/io/report.hpp"

using namespace monores;

namespace {

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Annihilators of residue currents of monomial ideals"};
    app.require_subcommand(1, 1);

    std::string input;
    std::string inlineIdeal;
    std::string outputPath;
    io::CommandOptions opts;
    std::map<std::string, io::Format> formats{
        {"json", io::Format::json}, {"ascii", io::Format::ascii}, {"svg", io::Format::svg}};

    const std::map<std::string, std::string> help{
        {"facets", "facets of the Newton polyhedron"},
        {"essential", "essential sets (requires an Artinian ideal)"},
        {"annihilator", "annihilator of the residue current (requires an Artinian ideal)"},
        {"closure", "integral closure of the r-th power"},
        {"chain", "Briançon–Skoda chain (requires an Artinian ideal)"},
        {"partial", "partial annihilator for arbitrary monomial ideals"},
        {"render", "staircase diagram (two variables)"}};
    for (const auto& name : io::commandNames()) {
        auto* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("input", input, "generator file (text or JSON), '-' for stdin");
        sub->add_option("--ideal", inlineIdeal, "generators given inline, e.g. \"z1^2, z2^3\"");
        sub->add_option("--format", opts.format, "json, ascii or svg")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("-o,--output", outputPath, "write the picture here instead of stdout");
        sub->add_flag("--strip-redundant", opts.stripRedundant, "drop non-minimal generators first");
        sub->add_flag("--oracle", opts.oracle, "cross-check membership with the current-action oracle");
        if (name == "closure") sub->add_option("-r,--power", opts.power, "power r")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? io::exit_code::ok : io::exit_code::parse;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        if (input.empty() == inlineIdeal.empty()) throw InvalidInput("give exactly one of an input file or --ideal");
        io::IdealSource src;
        if (!inlineIdeal.empty()) {
            src = io::parseAny(inlineIdeal, "<inline>");
        } else if (input == "-") {
            src = io::parseAny(slurp(std::cin), "<stdin>");
        } else {
            std::ifstream f(input);
            if (!f) throw InvalidInput("cannot read " + input);
            src = io::parseAny(slurp(f), input);
        }
        if (opts.format != io::Format::json && command != "render")
            throw InvalidInput("--format=" + std::string(opts.format == io::Format::svg ? "svg" : "ascii") +
                               " is only available for render");

        const auto res = io::runCommand(command, opts, src);
        for (const auto& w : res.document["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
        if (opts.format == io::Format::json) {
            std::cout << res.document.dump(2) << "\n";
        } else if (!outputPath.empty()) {
            std::ofstream out(outputPath);
            if (!(out << res.picture)) throw InvalidInput("cannot write " + outputPath);
        } else {
            std::cout << res.picture;
        }
        if (res.exitCode == io::exit_code::oracleMismatch) std::cerr << "error: oracle mismatch\n";
        return res.exitCode;
    } catch (const ParseError& e) {
        std::cerr << (input.empty() ? "<inline>" : input) << ":" << e.what() << "\n";
        return io::exit_code::parse;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io::exit_code::parse;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io::exit_code::parse;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return io::exit_code::precondition;
    } catch (const OverflowError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return io::exit_code::precondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
