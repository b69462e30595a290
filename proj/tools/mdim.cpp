#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdim/automorphisms.hpp"
#include "mdim/claims.hpp"
#include "mdim/distance.hpp"
#include "mdim/distance_regular.hpp"
#include "mdim/families.hpp"
#include "mdim/io.hpp"
#include "mdim/resolving.hpp"
#include "mdim/spectrum.hpp"

namespace {

constexpr int kUsageError = 3;

mdim::Graph build_family(const std::string& family, int n, const std::vector<int>& window) {
    const std::set<int> w(window.begin(), window.end());
    if (family == "dihedral") return mdim::dihedral_cayley(n);
    if (family == "toeplitz") return mdim::toeplitz(n, w);
    if (family == "circulant") return mdim::circulant(n, w);
    if (family == "cocktail") return mdim::cocktail_party(n);
    throw std::invalid_argument("unknown family: " + family);
}

void print_graph(const mdim::Graph& g, const std::string& format) {
    if (format == "json")
        std::cout << mdim::graph_json(g).dump(2) << "\n";
    else if (format == "dot")
        std::cout << mdim::to_dot(g);
    else if (format == "edges")
        std::cout << mdim::to_edge_list(g);
    else
        throw std::invalid_argument("unknown output format: " + format);
}

nlohmann::ordered_json run_invariant(const mdim::Graph& g, const std::string& which) {
    using namespace mdim;
    if (which == "beta") return dimension_json(metric_dimension(g), ResolutionKind::Resolving);
    if (which == "psi") return dimension_json(min_doubly_resolving(g), ResolutionKind::Doubly);
    if (which == "sdim") return dimension_json(strong_metric_dimension(g), ResolutionKind::Strong);
    if (which == "spectrum") return spectrum_json(integer_spectrum(g));
    if (which == "aut") return automorphism_json(automorphism_group(g));
    if (which == "drg") return distance_regularity_json(distance_regularity_check(g));
    if (which == "profile") return profile_json(profile(g));
    throw std::invalid_argument("unknown invariant: " + which);
}

std::string pretty_invariant(const nlohmann::ordered_json& j) {
    std::ostringstream out;
    for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << "\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of dihedral Cayley / Toeplitz graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable output instead of JSON");

    std::string family = "dihedral";
    int n = 0;
    std::vector<int> window;
    std::string out_format = "json";
    auto* build = app.add_subcommand("build", "construct a graph and print it");
    build->add_option("--family", family)->check(CLI::IsMember({"dihedral", "toeplitz", "circulant", "cocktail"}));
    build->add_option("--n", n)->required();
    build->add_option("--window", window)->delimiter(',');
    build->add_option("--out", out_format)->check(CLI::IsMember({"json", "dot", "edges"}));

    std::string which;
    auto* invariants = app.add_subcommand("invariants", "compute one invariant of a graph");
    invariants->add_option("--family", family)->check(CLI::IsMember({"dihedral", "toeplitz", "circulant", "cocktail"}));
    invariants->add_option("--n", n)->required();
    invariants->add_option("--window", window)->delimiter(',');
    invariants->add_option("--which", which)
        ->required()
        ->check(CLI::IsMember({"beta", "psi", "sdim", "spectrum", "aut", "drg", "profile"}));

    std::uint64_t cap = mdim::kDefaultExhaustiveCap;
    std::string json_path;
    bool timings = false;
    auto* verify = app.add_subcommand("verify-paper", "run all sixteen claims for one n");
    verify->add_option("--n", n)->required();
    verify->add_option("--cap", cap, "budget cap for exhaustive subset searches");
    verify->add_option("--json", json_path, "also write the JSON report to a file");
    verify->add_flag("--timings", timings, "include per-claim wall time in the report");

    std::string example_id;
    auto* examples = app.add_subcommand("examples", "run a worked resolving-set example");
    examples->add_option("--id", example_id)->required()->check(CLI::IsMember({"3.4", "3.5"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*build) {
            print_graph(build_family(family, n, window), out_format);
            return 0;
        }
        if (*invariants) {
            const auto j = run_invariant(build_family(family, n, window), which);
            if (pretty)
                std::cout << pretty_invariant(j);
            else
                std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*verify) {
            const mdim::ClaimReport report = mdim::verify_claims(n, cap);
            if (pretty)
                std::cout << mdim::claim_report_table(report, timings);
            else
                std::cout << mdim::claim_report_json(report, timings).dump(2) << "\n";
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                if (!out) throw std::runtime_error("cannot write " + json_path);
                out << mdim::claim_report_json(report, timings).dump(2) << "\n";
            }
            return report.exit_code();
        }
        if (*examples) {
            const auto ex = mdim::run_example(example_id);
            if (pretty) {
                std::cout << "example " << ex.id << ": set {";
                for (std::size_t i = 0; i < ex.set_labels.size(); ++i)
                    std::cout << (i ? ", " : "") << ex.set_labels[i];
                std::cout << "} is " << (ex.report.verdict ? "" : "not ") << "a resolving set\n";
                for (const auto& [label, vec] : ex.vectors) {
                    std::cout << "  r(" << label << ") = (";
                    for (std::size_t i = 0; i < vec.size(); ++i)
                        std::cout << (i ? "," : "") << vec[i];
                    std::cout << ")\n";
                }
            } else {
                std::cout << mdim::example_json(ex).dump(2) << "\n";
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsageError;
}
