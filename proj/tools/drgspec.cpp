// drgspec: decide distance-regularity from the Laplacian spectrum.
//
//   drgspec analyze [FILE|-] [--gen family:params] [--json] [--tol-eig R] [--tol-eq R] [--no-oracle]
//   drgspec spectrum [FILE|-] [--gen family:params] [--json] [--tol-eig R]
//   drgspec gen family:params
//
// analyze exits 0 (distance_regular), 1 (not_distance_regular) or
// 2 (inconclusive). Errors: 64 bad input or usage, 65 disconnected or
// otherwise invalid graph, 70 solver or internal failure.

#include "drgspec/drgspec.hpp"
#include "drgspec/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitSoftware = 70;

struct InputOptions {
    std::string path;
    std::string gen;
};

drgspec::Graph load_graph(const InputOptions& in)
{
    if (!in.gen.empty() && !in.path.empty())
        throw drgspec::ParseError("give either an input file or --gen, not both");
    if (!in.gen.empty())
        return drgspec::generate(in.gen);
    if (in.path.empty())
        throw drgspec::ParseError("no input: pass a file, '-' for stdin, or --gen family:params");

    std::string text;
    if (in.path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(in.path);
        if (!f)
            throw drgspec::ParseError("cannot open " + in.path);
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    return drgspec::parse_edge_list(text);
}

int verdict_exit_code(drgspec::Verdict v)
{
    switch (v) {
    case drgspec::Verdict::distance_regular:
        return 0;
    case drgspec::Verdict::not_distance_regular:
        return 1;
    case drgspec::Verdict::inconclusive:
        return 2;
    }
    return kExitSoftware;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Distance-regularity from the Laplacian spectrum (spectral excess test)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(drgspec::kToolVersion));

    InputOptions input;
    drgspec::EvaluateOptions eval;
    bool json = false;
    bool no_oracle = false;

    auto* analyze = app.add_subcommand("analyze", "full spectral excess report");
    analyze->add_option("input", input.path, "edge-list file, or - for stdin");
    analyze->add_option("--gen", input.gen, "generate the graph instead, e.g. path:4, petersen");
    analyze->add_flag("--json", json, "emit the JSON report");
    analyze->add_option("--tol-eig", eval.tol_eig, "relative eigenvalue clustering tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    analyze->add_option("--tol-eq", eval.tol_eq, "relative tolerance for k_d = r_d(0)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    analyze->add_flag("--no-oracle", no_oracle, "skip the combinatorial distance-regularity check");

    auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum, multiplicities and phi_i");
    spectrum->add_option("input", input.path, "edge-list file, or - for stdin");
    spectrum->add_option("--gen", input.gen, "generate the graph instead");
    spectrum->add_flag("--json", json, "emit JSON");
    spectrum->add_option("--tol-eig", eval.tol_eig, "relative eigenvalue clustering tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    std::string family;
    auto* gen = app.add_subcommand("gen", "print the canonical edge list of a generated graph");
    gen->add_option("family", family, "path:k cycle:k complete:k complete_bipartite:a,b star:k petersen hypercube:q")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            std::cout << drgspec::to_edge_list(drgspec::generate(family));
            return 0;
        }

        const auto g = load_graph(input);

        if (spectrum->parsed()) {
            const auto lap = drgspec::laplacian_matrix(g);
            const auto raw = drgspec::eigenvalues_sym(lap);
            const auto s = drgspec::cluster_spectrum(raw, eval.tol_eig);
            const auto phis = drgspec::phi_products(s);
            if (json)
                std::cout << drgspec::spectrum_json(raw, s, phis).dump(2) << '\n';
            else
                std::cout << drgspec::spectrum_text(raw, s, phis);
            return 0;
        }

        eval.run_oracle = !no_oracle;
        const auto a = drgspec::analyze(g, eval);
        if (json)
            std::cout << drgspec::report_json(a).dump(2) << '\n';
        else
            std::cout << drgspec::report_text(a);
        return verdict_exit_code(a.excess.verdict);
    } catch (const drgspec::ParseError& e) {
        std::cerr << "drgspec: input error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const drgspec::GraphError& e) {
        std::cerr << "drgspec: invalid graph: " << e.what() << '\n';
        return kExitData;
    } catch (const drgspec::ConvergenceError& e) {
        std::cerr << "drgspec: eigensolver failure: " << e.what() << '\n';
        return kExitSoftware;
    } catch (const drgspec::InternalError& e) {
        std::cerr << "drgspec: internal error: " << e.what() << '\n';
        return kExitSoftware;
    } catch (const std::exception& e) {
        std::cerr << "drgspec: error: " << e.what() << '\n';
        return kExitSoftware;
    }
}
