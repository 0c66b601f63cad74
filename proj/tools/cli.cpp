// Command-line front end: validate graph documents, run the fusion pipeline
// at a node, evaluate pignistic distributions, and generate reproducible
// random graphs.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "beliefnet/error.hpp"
#include "beliefnet/fusion.hpp"
#include "beliefnet/graph_io.hpp"

namespace {

using beliefnet::DiagnosticCode;
using beliefnet::RuleMix;
using beliefnet::TransportStrategy;

int run_validate(const std::string& path) {
    const beliefnet::LoadResult result = beliefnet::load_graph(path);
    if (!result.graph) {
        for (const auto& d : result.diagnostics) std::cerr << d << '\n';
        std::cerr << path << ": " << result.diagnostics.size() << " problem"
                  << (result.diagnostics.size() == 1 ? "" : "s") << " found\n";
        return 1;
    }
    const beliefnet::EvidentialGraph& g = *result.graph;
    std::cout << "ok: " << g.nodes().size() << " nodes, " << g.edges().size() << " edges, "
              << g.messages().size() << " messages\n";
    return 0;
}

int run_fuse(const std::string& path, const std::string& target,
             const beliefnet::FusionOptions& options, const std::string& report_path) {
    const beliefnet::LoadResult result = beliefnet::load_graph(path);
    if (!result.graph) {
        for (const auto& d : result.diagnostics) std::cerr << d << '\n';
        return 1;
    }
    const beliefnet::FusionReport report = beliefnet::fuse_at_node(*result.graph, target, options);
    std::cout << std::fixed << std::setprecision(6) << "decision: " << report.decision.label
              << " (BetP=" << report.decision.betp.prob(report.decision.label)
              << ", conflict=" << report.conflict << ")\n";
    if (report.decision.ambiguous)
        std::cout << "note: top probabilities tie; kept the first label in frame order\n";
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw beliefnet::Error("cannot write report to " + report_path);
        out << beliefnet::report_to_json(report).dump(2) << '\n';
    }
    return 0;
}

int run_betp(const std::string& path, const std::string& inline_json) {
    nlohmann::json j;
    if (!inline_json.empty()) {
        j = nlohmann::json::parse(inline_json);
    } else if (path == "-") {
        j = nlohmann::json::parse(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) throw beliefnet::Error("cannot open " + path);
        j = nlohmann::json::parse(in);
    }
    const beliefnet::MassFunction m = beliefnet::mass_from_json(j);
    const beliefnet::PignisticDistribution betp = beliefnet::pignistic(m);
    std::cout << std::fixed << std::setprecision(6);
    for (std::size_t i = 0; i < betp.frame()->size(); ++i)
        std::cout << betp.frame()->label(i) << ": " << betp.prob(i) << '\n';
    return 0;
}

int run_gen(std::size_t nodes, double density, std::uint32_t seed, const std::string& out_path) {
    const beliefnet::GraphDocument doc = beliefnet::random_graph_document(nodes, density, seed);
    const std::string text = beliefnet::to_json(doc).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw beliefnet::Error("cannot write " + out_path);
        out << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"belief-function fusion over evidential social graphs"};
    app.require_subcommand(1);

    const std::map<std::string, TransportStrategy> strategy_names{
        {"ignorance", TransportStrategy::Ignorance}, {"union", TransportStrategy::Union}};
    const std::map<std::string, RuleMix> rule_names{{"default", RuleMix::Default},
                                                    {"conjunctive", RuleMix::Conjunctive},
                                                    {"dempster", RuleMix::Dempster}};

    std::string graph_path;
    CLI::App* validate = app.add_subcommand("validate", "check a graph document");
    validate->add_option("file", graph_path, "graph JSON document")->required();

    std::string fuse_path;
    std::string target;
    std::string report_path;
    beliefnet::FusionOptions options;
    CLI::App* fuse = app.add_subcommand("fuse", "classify the messages received at a node");
    fuse->add_option("file", fuse_path, "graph JSON document")->required();
    fuse->add_option("--target", target, "node whose incoming messages to fuse")->required();
    fuse->add_option("--gamma-strategy", options.gamma_strategy,
                     "passage of non-singleton focal sets")
        ->transform(CLI::CheckedTransformer(strategy_names, CLI::ignore_case));
    fuse->add_option("--rule", options.rule, "combination rule mix")
        ->transform(CLI::CheckedTransformer(rule_names, CLI::ignore_case));
    fuse->add_option("--out", report_path, "write the full fusion trace as JSON");

    std::string betp_path;
    std::string inline_json;
    CLI::App* betp = app.add_subcommand("betp", "pignistic distribution of a mass function");
    betp->add_option("file", betp_path, "mass JSON ('-' reads stdin)");
    betp->add_option("--inline", inline_json, "mass JSON given directly");

    std::size_t gen_nodes = 5;
    double gen_density = 0.3;
    std::uint32_t gen_seed = 0;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "generate a reproducible random graph");
    gen->add_option("--nodes", gen_nodes, "node count")->capture_default_str();
    gen->add_option("--density", gen_density, "edge probability per ordered pair")
        ->capture_default_str();
    gen->add_option("--seed", gen_seed, "random seed")->required();
    gen->add_option("--out", gen_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(validate)) return run_validate(graph_path);
        if (app.got_subcommand(fuse)) return run_fuse(fuse_path, target, options, report_path);
        if (app.got_subcommand(betp)) {
            if (betp_path.empty() && inline_json.empty()) {
                std::cerr << "betp: give a file argument or --inline\n";
                return 2;
            }
            return run_betp(betp_path, inline_json);
        }
        if (app.got_subcommand(gen)) return run_gen(gen_nodes, gen_density, gen_seed, gen_out);
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
