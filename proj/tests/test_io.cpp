#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "beliefnet/error.hpp"
#include "beliefnet/fusion.hpp"
#include "beliefnet/graph_io.hpp"
#include "test_util.hpp"

using beliefnet::DiagnosticCode;
using beliefnet::GraphDocument;
using beliefnet::LoadResult;
using nlohmann::json;
using testutil::near;

namespace {

const std::string kDataDir = BELIEFNET_DATA_DIR;

bool has_code(const std::vector<beliefnet::Diagnostic>& diags, DiagnosticCode code) {
    return std::any_of(diags.begin(), diags.end(),
                       [code](const auto& d) { return d.code == code; });
}

json demo_json() {
    GraphDocument doc = beliefnet::document_from_graph(testutil::demo_graph());
    return json::parse(beliefnet::to_json(doc).dump());
}

} // namespace

TEST_CASE("the bundled demo graph loads clean") {
    const LoadResult result = beliefnet::load_graph(kDataDir + "/demo_graph.json");
    REQUIRE(result.graph.has_value());
    CHECK(result.diagnostics.empty());
    CHECK(result.graph->nodes().size() == 3);
    CHECK(result.graph->edges().size() == 2);
    CHECK(result.graph->messages().size() == 2);
    CHECK(result.graph->validate().empty());

    const LoadResult single = beliefnet::load_graph(kDataDir + "/demo_graph_one_message.json");
    REQUIRE(single.graph.has_value());
    CHECK(single.graph->messages().size() == 1);
}

TEST_CASE("a loaded graph fuses identically to its in-memory twin") {
    const LoadResult result = beliefnet::load_graph(kDataDir + "/demo_graph.json");
    REQUIRE(result.graph.has_value());
    const beliefnet::FusionReport from_file = beliefnet::fuse_at_node(*result.graph, "n3");
    const beliefnet::FusionReport from_memory =
        beliefnet::fuse_at_node(testutil::demo_graph(), "n3");
    CHECK(from_file.global_mass == from_memory.global_mass);
    for (std::size_t e = 0; e < 4; ++e)
        CHECK(from_file.decision.betp.prob(e) == from_memory.decision.betp.prob(e));
}

TEST_CASE("save and load round-trip to a bit-identical fusion") {
    const beliefnet::EvidentialGraph g = testutil::demo_graph();
    const GraphDocument doc = beliefnet::document_from_graph(g);
    const LoadResult reloaded =
        beliefnet::load_graph_from_json(json::parse(beliefnet::to_json(doc).dump()));
    REQUIRE(reloaded.graph.has_value());

    const beliefnet::FusionReport a = beliefnet::fuse_at_node(g, "n3");
    const beliefnet::FusionReport b = beliefnet::fuse_at_node(*reloaded.graph, "n3");
    CHECK(a.global_mass == b.global_mass);
    CHECK(a.conflict == b.conflict);
    CHECK(a.decision.label == b.decision.label);
    REQUIRE(a.sources.size() == b.sources.size());
    for (std::size_t i = 0; i < a.sources.size(); ++i) {
        CHECK(a.sources[i].network_mass == b.sources[i].network_mass);
        CHECK(a.sources[i].gamma_mass == b.sources[i].gamma_mass);
        CHECK(a.sources[i].fused_mass == b.sources[i].fused_mass);
    }
}

TEST_CASE("vacuous masses survive the round trip as the shorthand") {
    const GraphDocument doc = beliefnet::document_from_graph(testutil::demo_graph());
    const auto n3 = std::find_if(doc.nodes.begin(), doc.nodes.end(),
                                 [](const auto& n) { return n.id == "n3"; });
    REQUIRE(n3 != doc.nodes.end());
    CHECK(n3->mass.vacuous);
    CHECK(beliefnet::to_json(doc)["nodes"][2]["mass"] == "vacuous");
}

TEST_CASE("structural violations surface as BAD_STRUCTURE") {
    GraphDocument doc;
    CHECK(has_code(beliefnet::parse_document(json::parse("[]"), doc), DiagnosticCode::BadStructure));
    CHECK(has_code(beliefnet::parse_document(json::parse(R"({"version": 1})"), doc),
                   DiagnosticCode::BadStructure));

    json no_frames = demo_json();
    no_frames.erase("frames");
    CHECK(has_code(beliefnet::parse_document(no_frames, doc), DiagnosticCode::BadStructure));

    json bad_mass = demo_json();
    bad_mass["nodes"][0]["mass"] = "almost-vacuous";
    CHECK(has_code(beliefnet::parse_document(bad_mass, doc), DiagnosticCode::BadStructure));
}

TEST_CASE("semantic violations carry their own codes") {
    json j = demo_json();

    SUBCASE("unknown focal label") {
        j["nodes"][0]["mass"][0]["focal"] = {"Robot"};
        CHECK(has_code(beliefnet::load_graph_from_json(j).diagnostics,
                       DiagnosticCode::UnknownLabel));
    }
    SUBCASE("empty focal array") {
        j["nodes"][0]["mass"][0]["focal"] = json::array();
        CHECK(has_code(beliefnet::load_graph_from_json(j).diagnostics,
                       DiagnosticCode::EmptyFocal));
    }
    SUBCASE("masses that do not sum to one") {
        j["nodes"][0]["mass"][0]["value"] = 0.9;
        CHECK(has_code(beliefnet::load_graph_from_json(j).diagnostics, DiagnosticCode::BadSum));
    }
    SUBCASE("non-positive mass value") {
        j["nodes"][0]["mass"][0]["value"] = -0.75;
        CHECK(has_code(beliefnet::load_graph_from_json(j).diagnostics, DiagnosticCode::BadMass));
    }
    SUBCASE("missing gamma cell") {
        j["gamma"]["Place"].erase("Family");
        CHECK(has_code(beliefnet::load_graph_from_json(j).diagnostics,
                       DiagnosticCode::MissingGammaCell));
    }
    SUBCASE("edge endpoint that is not a node") {
        j["edges"][0]["to"] = "n9";
        const auto diags = beliefnet::load_graph_from_json(j).diagnostics;
        CHECK(has_code(diags, DiagnosticCode::DanglingEdge));
    }
    SUBCASE("message without a connecting edge") {
        j["messages"][0]["from"] = "n2";
        j["messages"][0]["to"] = "n1";
        CHECK(has_code(beliefnet::load_graph_from_json(j).diagnostics,
                       DiagnosticCode::DanglingEdge));
    }
    SUBCASE("duplicate identifiers") {
        j["nodes"][1]["id"] = "n1";
        CHECK(has_code(beliefnet::load_graph_from_json(j).diagnostics,
                       DiagnosticCode::DuplicateId));
    }
    SUBCASE("unsupported format version") {
        j["version"] = "2";
        CHECK(has_code(beliefnet::load_graph_from_json(j).diagnostics,
                       DiagnosticCode::BadVersion));
    }
}

TEST_CASE("unreadable input surfaces as PARSE_ERROR") {
    CHECK(has_code(beliefnet::load_graph("/nonexistent/graph.json").diagnostics,
                   DiagnosticCode::ParseError));
}

TEST_CASE("build_graph refuses an invalid document") {
    GraphDocument doc;
    json j = demo_json();
    j["version"] = "2";
    REQUIRE(beliefnet::parse_document(j, doc).empty());
    CHECK_THROWS_AS((void)beliefnet::build_graph(doc), beliefnet::Error);
}

TEST_CASE("undirected edges expand to both ordered pairs") {
    json j = demo_json();
    j["edges"][0]["directed"] = false;
    const LoadResult result = beliefnet::load_graph_from_json(j);
    REQUIRE(result.graph.has_value());
    CHECK(result.graph->has_edge("n1", "n3"));
    CHECK(result.graph->has_edge("n3", "n1"));
    CHECK(result.graph->edges().size() == 3);
}

TEST_CASE("inline mass parsing") {
    const json j = json::parse(
        R"({"frame": ["PC", "PNC", "IC", "INC"],
            "mass": [{"focal": ["PNC"], "value": 0.6},
                     {"focal": ["PC", "PNC", "IC", "INC"], "value": 0.4}]})");
    const beliefnet::MassFunction m = beliefnet::mass_from_json(j);
    CHECK(near(m.mass_bits(0b0010u), 0.6, 1e-12));

    const json vac = json::parse(R"({"frame": ["a", "b"], "mass": "vacuous"})");
    CHECK(beliefnet::mass_from_json(vac).is_vacuous());

    // The empty focal set is allowed only for combination-style inputs.
    const json open = json::parse(
        R"({"frame": ["a", "b"], "mass": [{"focal": [], "value": 0.3},
                                          {"focal": ["a", "b"], "value": 0.7}]})");
    CHECK(near(beliefnet::mass_from_json(open, true).conflict(), 0.3, 1e-12));
    CHECK_THROWS_AS((void)beliefnet::mass_from_json(open, false), beliefnet::Error);

    CHECK_THROWS_AS((void)beliefnet::mass_from_json(json::parse("{}")), beliefnet::Error);
}

TEST_CASE("generated graphs are deterministic and valid") {
    const GraphDocument a = beliefnet::random_graph_document(5, 0.3, 7);
    const GraphDocument b = beliefnet::random_graph_document(5, 0.3, 7);
    CHECK(beliefnet::to_json(a).dump(2) == beliefnet::to_json(b).dump(2));
    CHECK(beliefnet::to_json(a).dump(2) !=
          beliefnet::to_json(beliefnet::random_graph_document(5, 0.3, 8)).dump(2));

    CHECK(beliefnet::validate_document(a).empty());
    CHECK_NOTHROW((void)beliefnet::build_graph(a));
    CHECK(a.nodes.size() == 5);

    const GraphDocument empty = beliefnet::random_graph_document(4, 0.0, 1);
    CHECK(empty.edges.empty());
    CHECK(empty.messages.empty());

    CHECK_THROWS_AS((void)beliefnet::random_graph_document(0, 0.3, 1), beliefnet::Error);
    CHECK_THROWS_AS((void)beliefnet::random_graph_document(3, 1.5, 1), beliefnet::Error);
}

TEST_CASE("the default skeleton matches the hand-built gamma table") {
    const GraphDocument skeleton = beliefnet::default_skeleton();
    CHECK(beliefnet::validate_document(skeleton).empty());
    const beliefnet::GammaTable gamma = testutil::social_gamma();
    for (const auto& n : skeleton.node_labels)
        for (const auto& l : skeleton.link_labels)
            CHECK(skeleton.gamma.at({n, l}) == gamma.cell(n, l).labels());
}

TEST_CASE("fusion reports serialize with sections that sum to one") {
    const beliefnet::FusionReport report =
        beliefnet::fuse_at_node(testutil::demo_graph(), "n3");
    const json j = json::parse(beliefnet::report_to_json(report).dump());

    CHECK(j["target"] == "n3");
    CHECK(j["decision"] == "PNC");
    CHECK(j["ambiguous"] == false);
    CHECK(j["options"]["gamma_strategy"] == "ignorance");
    CHECK(j["options"]["rule"] == "default");
    CHECK(near(j["conflict"].get<double>(), 0.5541, 1e-4));

    auto section_sum = [](const json& mass) {
        double total = 0.0;
        for (const auto& entry : mass) total += entry["value"].get<double>();
        return total;
    };
    CHECK(near(section_sum(j["global_mass"]), 1.0, 1e-6));
    REQUIRE(j["sources"].size() == 2);
    for (const auto& source : j["sources"]) {
        CHECK(near(section_sum(source["network_mass"]), 1.0, 1e-6));
        CHECK(near(section_sum(source["gamma_mass"]), 1.0, 1e-6));
        CHECK(near(section_sum(source["fused_mass"]), 1.0, 1e-6));
    }

    double betp_total = 0.0;
    for (const auto& [label, p] : j["betp"].items()) betp_total += p.get<double>();
    CHECK(near(betp_total, 1.0, 1e-6));
}
