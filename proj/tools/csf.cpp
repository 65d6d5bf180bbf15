// csf: command-line front end for the star-expansion library.
//
// Exit status: 0 success, 1 property failure, 2 input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "csf/analysis.hpp"
#include "csf/canonical.hpp"
#include "csf/dnc.hpp"
#include "csf/graph_io.hpp"
#include "csf/harness.hpp"
#include "csf/reconstruct.hpp"

using namespace csf;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_property = 1;
constexpr int exit_input = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_to(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path);
    out << text;
}

/// A SymFunc from JSON, or from text such as "st(4,1) - st(3,2)".
SymFunc read_symfunc(const std::string& path)
{
    const std::string text = slurp(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return symfunc_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw InputError(path + ": " + e.what());
        }
    }
    return parse_text(text);
}

Forest read_forest(const std::string& path, bool graph6)
{
    const std::string text = slurp(path);
    if (graph6) {
        std::string line = text.substr(0, text.find('\n'));
        return from_graph6(line);
    }
    return parse_edge_list(text);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chromatic symmetric functions of trees in the star basis"};
    app.require_subcommand(1);

    // expand
    auto* expand = app.add_subcommand("expand", "Edge list -> CSF (text or JSON)");
    std::string expand_in = "-";
    std::string basis_name_arg = "star";
    std::string trace_path;
    bool expand_json = false;
    bool expand_graph6 = false;
    expand->add_option("input", expand_in, "Edge-list file ('-' for stdin)");
    expand->add_option("--basis", basis_name_arg, "Output basis")
        ->check(CLI::IsMember({"star", "power"}));
    expand->add_option("--trace", trace_path, "Write the DNC tree as Graphviz DOT");
    expand->add_flag("--json", expand_json, "Emit JSON instead of text");
    expand->add_flag("--graph6", expand_graph6, "Input is a graph6 line");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "CSF -> adjacency report JSON");
    std::string analyze_in = "-";
    analyze_cmd->add_option("input", analyze_in, "SymFunc JSON or text ('-' for stdin)");

    // reconstruct
    auto* reconstruct_cmd =
        app.add_subcommand("reconstruct", "CSF -> edge list of a tree with that CSF");
    std::string reconstruct_in = "-";
    std::string reconstruct_out;
    std::string report_path;
    reconstruct_cmd->add_option("input", reconstruct_in, "SymFunc JSON or text ('-' for stdin)");
    reconstruct_cmd->add_option("-o,--output", reconstruct_out, "Edge-list output file");
    reconstruct_cmd->add_option("--report", report_path,
                                "Write the JSON report here instead of a trailing '#' line");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a property suite");
    std::string suite = "all";
    int verify_max_n = 8;
    std::uint64_t seed = 1;
    int random_trees = -1;
    bool with_elapsed = false;
    verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-n", verify_max_n, "Exhaustive up to this many vertices");
    verify->add_option("--seed", seed, "Seed for randomized parts");
    verify->add_option("--random", random_trees,
                       "Random trees beyond max-n (default: suite-specific)");
    verify->add_flag("--elapsed", with_elapsed, "Include wall time in the report");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List non-isomorphic trees");
    int enum_n = 0;
    std::string format = "edges";
    enumerate->add_option("--n", enum_n, "Number of vertices")->required();
    enumerate->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"edges", "graph6"}));

    // census
    auto* census = app.add_subcommand("census", "Look for CSF collisions among trees");
    int census_max_n = 10;
    std::string store;
    census->add_option("--max-n", census_max_n, "Largest tree order");
    census->add_option("--store", store, "Append-only JSONL record file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*expand) {
            const Forest f = read_forest(expand_in, expand_graph6);
            SymFunc out = star_expand(f);
            if (!trace_path.empty())
                write_to(trace_path, star_expand_traced(f).second.to_dot());
            if (parse_basis(basis_name_arg) == Basis::power)
                out = to_power(out);
            if (expand_json)
                std::cout << nlohmann::json(out).dump(2) << '\n';
            else
                std::cout << to_text(out) << '\n';
            return exit_ok;
        }
        if (*analyze_cmd) {
            const SymFunc f = read_symfunc(analyze_in);
            std::cout << to_json(analyze(f)).dump(2) << '\n';
            return exit_ok;
        }
        if (*reconstruct_cmd) {
            const SymFunc f = read_symfunc(reconstruct_in);
            try {
                const auto result = reconstruct(f);
                const nlohmann::json report{{"diameter_class", class_name(result.diameter_class)},
                                            {"n", result.tree.order()},
                                            {"verified", result.verified}};
                std::string edges = write_edge_list(result.tree);
                if (report_path.empty())
                    edges += "# " + report.dump() + "\n";
                else
                    write_to(report_path, report.dump(2) + "\n");
                write_to(reconstruct_out, edges);
                return exit_ok;
            } catch (const ReconstructionError& e) {
                std::cerr << "reconstruct: " << e.what() << '\n';
                return e.kind() == ReconstructionError::Kind::not_a_tree_csf ? exit_input
                                                                             : exit_property;
            }
        }
        if (*verify) {
            SuiteOptions options;
            options.random_trees = random_trees;
            const auto report = run_suite(suite, verify_max_n, seed, options);
            std::cout << to_json(report, with_elapsed).dump(2) << '\n';
            return report.passed() ? exit_ok : exit_property;
        }
        if (*enumerate) {
            if (enum_n < 1)
                throw InputError("--n must be at least 1");
            if (enum_n > enumeration_cap(16))
                throw InputError("--n exceeds CSF_MAX_N");
            bool first = true;
            for (const Forest& t : enumerate_trees(enum_n)) {
                if (format == "graph6") {
                    std::cout << to_graph6(t) << '\n';
                } else {
                    std::cout << (first ? "" : "\n") << write_edge_list(t);
                    first = false;
                }
            }
            return exit_ok;
        }
        if (*census) {
            std::optional<std::filesystem::path> path;
            if (!store.empty())
                path = store;
            const auto report = conjecture_census(census_max_n, path);
            std::cout << to_json(report).dump(2) << '\n';
            return report.collisions.empty() ? exit_ok : exit_property;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
