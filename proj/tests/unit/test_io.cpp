#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "consensus/io.hpp"
#include "consensus/worked_example.hpp"
#include "generators.hpp"

using namespace consensus;
namespace we = consensus::worked_example;

namespace {

std::string schema_path_of(const std::string& text) {
    try {
        parse_session(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SchemaViolation);
        return e.path();
    }
    FAIL("expected a schema violation");
    return {};
}

nlohmann::json worked_json() { return nlohmann::json::parse(we::kSessionJson); }

}  // namespace

TEST_CASE("the shipped session file encodes the rank table") {
    const auto from_file = load_session(std::filesystem::path(CONSENSUS_SOURCE_DIR) / "data" / "paper_4_2.json");
    CHECK(from_file == parse_session(we::kSessionJson));
    CHECK(from_file.participant_count() == 3);
    CHECK(from_file.alternative_count() == 5);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(from_file.individual_ranks()[k].ranks() ==
              std::vector<int>(we::kIndividualRanks[k].begin(), we::kIndividualRanks[k].end()));
    }
    CHECK(from_file.group_ranks().ranks() == std::vector<int>(we::kGroupRanks.begin(), we::kGroupRanks.end()));
}

TEST_CASE("schema violations name the offending JSON path") {
    auto j = worked_json();
    j.erase("group_ranks");
    CHECK(schema_path_of(j.dump()) == "/group_ranks");

    j = worked_json();
    j["individual_ranks"]["L1"] = {1, 2, 3, 4};
    CHECK(schema_path_of(j.dump()) == "/individual_ranks/L1");

    j = worked_json();
    j["group_scores"] = {0.1, 0.2, 0.3, 0.2, 0.2};
    CHECK(schema_path_of(j.dump()) == "/group_scores");

    j = worked_json();
    j["individual_ranks"]["L9"] = {1, 2, 3, 4, 5};
    CHECK(schema_path_of(j.dump()) == "/individual_ranks/L9");

    j = worked_json();
    j["individual_ranks"].erase("L2");
    CHECK(schema_path_of(j.dump()) == "/individual_ranks/L2");

    j = worked_json();
    j["schema_version"] = 2;
    CHECK(schema_path_of(j.dump()) == "/schema_version");

    j = worked_json();
    j["config"]["normalization_mode"] = "per_column";
    CHECK(schema_path_of(j.dump()) == "/config/normalization_mode");

    j = worked_json();
    j["individual_ranks"]["L1"][2] = 2.5;
    CHECK(schema_path_of(j.dump()) == "/individual_ranks/L1/2");
}

TEST_CASE("invariant violations inside a valid document are reported with their path") {
    auto j = worked_json();
    j["individual_ranks"]["L1"] = {1, 3, 3, 4, 5};
    try {
        parse_session(j.dump());
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvariantViolation);
        CHECK(e.path() == "/individual_ranks/L1");
    }
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_session("{\n  \"schema_version\": 1,\n  oops\n}");
        FAIL("expected a syntax error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Syntax);
        REQUIRE(e.cell().has_value());
        CHECK(e.cell()->first == 3);
        CHECK(e.cell()->second == 3);
    }
}

TEST_CASE("group_scores are converted to dense ranks") {
    auto j = worked_json();
    j.erase("group_ranks");
    j["group_scores"] = {0.40, 0.10, 0.25, 0.25, 0.05};
    const auto s = parse_session(j.dump());
    CHECK(s.group_ranks().ranks() == std::vector<int>{1, 3, 2, 2, 4});
}

TEST_CASE("participant weights: explicit when present, config overrides") {
    auto j = worked_json();
    j["config"].erase("participant_weights");
    j["participants"][0]["weight"] = 2.0;
    j["participants"][1]["weight"] = 1.0;
    j["participants"][2]["weight"] = 1.0;
    const auto s = parse_session(j.dump());
    CHECK(s.config().participant_weights() == WeightMode::Explicit);
    CHECK(s.normalized_weights()[0] == doctest::Approx(0.5));

    j["config"]["participant_weights"] = "uniform";
    CHECK(parse_session(j.dump()).normalized_weights()[0] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("parse_comparison_matrix") {
    const auto m = parse_comparison_matrix("1,3\n1/3,1\n");
    CHECK(m.size() == 2);
    CHECK(m(1, 0) == 1.0 / 3.0);
    CHECK(parse_comparison_matrix("1, 2 ,4\r\n0.5,1,2\r\n\r\n0.25,1/2,1").size() == 3);

    try {
        parse_comparison_matrix("1,3,2\n1/3,1,1\n");
        FAIL("expected NonSquare");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonSquare);
    }
    try {
        parse_comparison_matrix("1,x\n1,1");
        FAIL("expected NumberParse");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NumberParse);
        CHECK(*e.cell() == std::pair<std::size_t, std::size_t>{0, 1});
    }
    CHECK_THROWS_AS(parse_comparison_matrix("1,1/0\n1,1"), Error);
    CHECK_THROWS_AS(parse_comparison_matrix("1,2\n0.4,1"), Error);
}

TEST_CASE("parse_project") {
    const auto p = parse_project(R"({"project_id": "p", "threshold": 0.5,
        "stages": [{"stage": "a", "homogeneity": 0.56}, {"stage": "b", "session_path": "s.json"}]})");
    CHECK(p.stages.size() == 2);
    CHECK(std::get<double>(p.stages[0].source) == 0.56);
    CHECK(std::get<std::filesystem::path>(p.stages[1].source) == "s.json");

    CHECK_THROWS_WITH_AS(parse_project(R"({"project_id": "p", "threshold": 0.5, "stages": []})"),
                         doctest::Contains("/stages"), Error);
    CHECK_THROWS_AS(parse_project(R"({"project_id": "p", "threshold": 1.5, "stages": [{"stage": "a", "homogeneity": 1}]})"),
                    Error);
    CHECK_THROWS_AS(parse_project(R"({"project_id": "p", "threshold": 0.5, "stages": [{"stage": "a"}]})"), Error);
}

TEST_CASE("load_project resolves session paths relative to the project file") {
    const auto dir = std::filesystem::temp_directory_path() / "consensus_io_test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "stage.json") << we::kSessionJson;
    std::ofstream(dir / "project.json")
        << R"({"project_id": "p", "threshold": 0.3, "stages": [{"stage": "s1", "session_path": "stage.json"},
              {"stage": "s2", "homogeneity": 0.5}]})";
    const auto record = load_project(dir / "project.json");
    REQUIRE(record.stages().size() == 2);
    CHECK(record.stages()[0].homogeneity == doctest::Approx(0.3768086572).epsilon(1e-9));
    CHECK(record.stages()[1].stage == "s2");
    std::filesystem::remove_all(dir);
}

TEST_CASE("emit_report json") {
    const auto report = analyze_session_with_pairwise(parse_session(we::kSessionJson));
    const auto text = emit_report(report, ReportFormat::Json);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["homogeneity"].get<double>() == 0.376809);
    CHECK(j["perfect_consensus"] == false);
    CHECK(j["distances"]["column_totals"] == nlohmann::json({2, 1, 3, 5, 4}));
    CHECK(j["pairwise"]["matrix"][1][2].get<double>() == 0.25);
    CHECK(j["per_participant"][0]["id"] == "L1");

    testgen::RawSession raw{{{1, 2}, {1, 2}}, {1, 2}};
    const auto perfect = emit_report(analyze_session(testgen::make_session(raw)), ReportFormat::Json);
    CHECK(perfect.find("\"homogeneity\": 1.0,") != std::string::npos);
    CHECK(perfect.find("\"perfect_consensus\": true") != std::string::npos);
}

TEST_CASE("emit_report csv tables has five sections") {
    const auto report = analyze_session_with_pairwise(parse_session(we::kSessionJson));
    const auto csv = emit_report(report, ReportFormat::CsvTables);
    for (const char* section : {"# distances\nparticipant,ALT1,ALT2,ALT3,ALT4,ALT5\n", "# probabilities\n",
                                "# participant_indices\nparticipant,entropy,first_order_diversity,uniformity\n",
                                "# group_indices\nindex,value\n", "# pairwise\nparticipant,L1,L2,L3\n"}) {
        CHECK(csv.find(section) != std::string::npos);
    }
    CHECK(csv.find("column_total,2,1,3,5,4\n") != std::string::npos);
    CHECK(csv.find("homogeneity,0.376809\n") != std::string::npos);
    CHECK(csv.find("alpha_entropy,0.855003\n") != std::string::npos);
    CHECK(csv.find("gamma_entropy,1.83102\n") != std::string::npos);
    CHECK(csv.find("L2,0.331169,1,0.25\n") != std::string::npos);
    CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("emit_report markdown carries the same numbers") {
    const auto report = analyze_session(parse_session(we::kSessionJson));
    const auto md = emit_report(report, ReportFormat::Markdown);
    CHECK(md.find("| homogeneity | 0.376809 |") != std::string::npos);
    CHECK(md.find("Threshold 0.5: heterogeneous") != std::string::npos);
}

TEST_CASE("emit_priorities") {
    const auto pv = derive_priorities(ComparisonMatrix({{1, 3}, {1.0 / 3.0, 1}}));
    const auto j = nlohmann::json::parse(emit_priorities(pv, DerivationMethod::PrincipalEigenvector, 0.1));
    CHECK(j["priorities"] == nlohmann::json({0.75, 0.25}));
    CHECK(j["consistency_ratio"].get<double>() == 0.0);
    CHECK(j["cr_exceeds_limit"] == false);
}

TEST_CASE("format_number uses six significant digits") {
    CHECK(format_number(0.37680865720279759) == "0.376809");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(2.0 / 3.0) == "0.666667");
    CHECK(format_number(1.83102048) == "1.83102");
}

TEST_CASE("property: serialize/parse round-trip and deterministic emission") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> weight(0.1, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        auto raw = testgen::raw_session(rng, 1 + trial % 6, 2 + trial % 8);
        std::vector<double> w;
        if (trial % 2 == 1) {
            for (std::size_t k = 0; k < raw.individual.size(); ++k) w.push_back(weight(rng));
        }
        const auto mode = trial % 3 == 0 ? NormalizationMode::PerLearner : NormalizationMode::PerAlternative;
        const auto s = testgen::make_session(raw, mode, w);
        const auto text = serialize_session(s);
        CHECK(parse_session(text) == s);
        CHECK(serialize_session(parse_session(text)) == text);
    }
}
