#include "consensus/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include <json.hpp>

#include "consensus/ranking.hpp"

namespace consensus {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void schema_violation(const std::string& path, const std::string& reason) {
    throw Error(ErrorKind::SchemaViolation, (path.empty() ? "/" : path) + ": " + reason, path);
}

std::string escape_pointer_token(std::string_view token) {
    std::string out;
    for (char c : token) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // byte is 1-based and points just past the offending character.
        const std::size_t offset = e.byte == 0 ? 0 : std::min(e.byte - 1, text.size());
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < offset; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorKind::Syntax,
                    "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what(),
                    line, col);
    }
}

const json& require_field(const json& obj, const std::string& key, const std::string& parent) {
    const auto it = obj.find(key);
    if (it == obj.end()) schema_violation(parent + "/" + key, "missing required field");
    return *it;
}

std::string require_string(const json& obj, const std::string& key, const std::string& parent) {
    const json& v = require_field(obj, key, parent);
    if (!v.is_string()) schema_violation(parent + "/" + key, "expected a string");
    return v.get<std::string>();
}

std::string optional_string(const json& obj, const std::string& key, const std::string& parent,
                            const std::string& fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_string()) schema_violation(parent + "/" + key, "expected a string");
    return it->get<std::string>();
}

double require_number(const json& v, const std::string& path) {
    if (!v.is_number()) schema_violation(path, "expected a number");
    return v.get<double>();
}

const json& require_array(const json& obj, const std::string& key, const std::string& parent) {
    const json& v = require_field(obj, key, parent);
    if (!v.is_array()) schema_violation(parent + "/" + key, "expected an array");
    return v;
}

std::vector<int> integer_array(const json& v, std::size_t expected, const std::string& path) {
    if (!v.is_array()) schema_violation(path, "expected an array of integers");
    if (v.size() != expected) {
        schema_violation(path, "expected " + std::to_string(expected) + " entries (one per alternative), got " +
                                   std::to_string(v.size()));
    }
    std::vector<int> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_integer()) schema_violation(path + "/" + std::to_string(i), "expected an integer");
        out.push_back(v[i].get<int>());
    }
    return out;
}

RankVector rank_vector_at(std::vector<int> ranks, const std::string& path) {
    try {
        return RankVector(std::move(ranks));
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what(), path);
    }
}

template <typename T>
T parse_enum(const json& v, const std::string& path, std::initializer_list<std::pair<std::string_view, T>> options) {
    if (!v.is_string()) schema_violation(path, "expected a string");
    const auto s = v.get<std::string>();
    std::string allowed;
    for (const auto& [name, value] : options) {
        if (s == name) return value;
        allowed += (allowed.empty() ? "" : ", ") + std::string(name);
    }
    schema_violation(path, "unknown value '" + s + "' (expected one of: " + allowed + ")");
}

PipelineConfig parse_config(const json& root, bool any_explicit_weight) {
    NormalizationMode mode = NormalizationMode::PerAlternative;
    WeightMode weights = any_explicit_weight ? WeightMode::Explicit : WeightMode::Uniform;
    int categories = LikertScale::kMaxCategories;
    double threshold = 0.5;

    const auto it = root.find("config");
    if (it != root.end()) {
        const json& cfg = *it;
        if (!cfg.is_object()) schema_violation("/config", "expected an object");
        for (const auto& [key, value] : cfg.items()) {
            const std::string path = "/config/" + escape_pointer_token(key);
            if (key == "normalization_mode") {
                mode = parse_enum<NormalizationMode>(value, path,
                                                     {{"per_alternative", NormalizationMode::PerAlternative},
                                                      {"per_learner", NormalizationMode::PerLearner}});
            } else if (key == "participant_weights") {
                weights = parse_enum<WeightMode>(value, path,
                                                 {{"uniform", WeightMode::Uniform}, {"explicit", WeightMode::Explicit}});
            } else if (key == "likert_categories") {
                if (!value.is_number_integer()) schema_violation(path, "expected an integer");
                categories = value.get<int>();
            } else if (key == "consensus_threshold") {
                threshold = require_number(value, path);
            } else {
                schema_violation(path, "unknown config key");
            }
        }
    }
    try {
        return PipelineConfig(mode, weights, LikertScale(categories), threshold);
    } catch (const Error& e) {
        throw Error(e.kind(), std::string("/config: ") + e.what(), "/config");
    }
}

/// Rounds to 6 significant digits so that shortest-form output shows at most 6.
double round_sig6(double v) {
    if (!std::isfinite(v)) return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::strtod(buf, nullptr);
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_cell(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

ordered_json rounded_matrix(const std::vector<std::vector<double>>& m) {
    ordered_json out = ordered_json::array();
    for (const auto& row : m) {
        ordered_json r = ordered_json::array();
        for (double v : row) r.push_back(round_sig6(v));
        out.push_back(std::move(r));
    }
    return out;
}

ordered_json pairwise_json(const PairwiseMatrix& m) {
    ordered_json out;
    out["participants"] = m.participant_ids;
    out["matrix"] = rounded_matrix(m.values);
    return out;
}

std::vector<std::string> zero_total_ids(const HomogeneityReport& r) {
    std::vector<std::string> ids;
    for (std::size_t line : r.probabilities.zero_lines()) {
        ids.push_back(r.mode == NormalizationMode::PerAlternative ? r.alternative_ids[line]
                                                                  : r.per_participant[line].participant_id);
    }
    return ids;
}

std::string report_json(const HomogeneityReport& r) {
    ordered_json j;
    j["schema_version"] = kSessionSchemaVersion;
    j["session_id"] = r.session_id;
    j["stage"] = r.stage;
    j["normalization_mode"] = std::string(to_string(r.mode));
    j["alternatives"] = r.alternative_ids;
    ordered_json participants = ordered_json::array();
    for (const auto& p : r.per_participant) participants.push_back(p.participant_id);
    j["participants"] = participants;
    j["distances"]["rows"] = r.distances.distances();
    j["distances"]["column_totals"] = r.distances.column_totals();
    j["probabilities"] = rounded_matrix(r.probabilities.probabilities());
    j["zero_totals"] = zero_total_ids(r);
    ordered_json per = ordered_json::array();
    for (const auto& p : r.per_participant) {
        ordered_json e;
        e["id"] = p.participant_id;
        e["entropy"] = round_sig6(p.indices.entropy);
        e["first_order_diversity"] = round_sig6(p.indices.first_order_diversity);
        e["uniformity"] = round_sig6(p.indices.uniformity);
        e["over_dispersed"] = p.indices.over_dispersed();
        per.push_back(std::move(e));
    }
    j["per_participant"] = per;
    j["alpha_entropy"] = round_sig6(r.alpha_entropy);
    j["gamma_entropy"] = round_sig6(r.gamma_entropy);
    j["beta_entropy"] = round_sig6(r.beta_entropy);
    j["alpha_diversity"] = round_sig6(r.alpha_diversity());
    j["gamma_diversity"] = round_sig6(r.gamma_diversity());
    j["beta_diversity"] = round_sig6(r.beta_diversity);
    j["homogeneity"] = round_sig6(r.homogeneity);
    j["perfect_consensus"] = r.perfect_consensus;
    j["consensus_threshold"] = round_sig6(r.consensus_threshold);
    j["meets_threshold"] = r.meets_threshold();
    j["pairwise"] = r.pairwise ? pairwise_json(*r.pairwise) : ordered_json(nullptr);
    j["diagnostics"] = r.diagnostics;
    return j.dump(2) + "\n";
}

void csv_matrix_section(std::ostringstream& out, std::string_view title, const std::vector<std::string>& row_ids,
                        const std::vector<std::string>& col_ids, const auto& values) {
    out << "# " << title << "\nparticipant";
    for (const auto& id : col_ids) out << ',' << csv_field(id);
    out << '\n';
    for (std::size_t k = 0; k < row_ids.size(); ++k) {
        out << csv_field(row_ids[k]);
        for (const auto& v : values[k]) out << ',' << format_number(static_cast<double>(v));
        out << '\n';
    }
}

std::vector<std::string> participant_ids(const HomogeneityReport& r) {
    std::vector<std::string> ids;
    for (const auto& p : r.per_participant) ids.push_back(p.participant_id);
    return ids;
}

std::string report_csv(const HomogeneityReport& r) {
    std::ostringstream out;
    const auto ids = participant_ids(r);
    csv_matrix_section(out, "distances", ids, r.alternative_ids, r.distances.distances());
    out << "column_total";
    for (int t : r.distances.column_totals()) out << ',' << t;
    out << "\n\n";
    csv_matrix_section(out, "probabilities", ids, r.alternative_ids, r.probabilities.probabilities());
    out << "\n# participant_indices\nparticipant,entropy,first_order_diversity,uniformity\n";
    for (const auto& p : r.per_participant) {
        out << csv_field(p.participant_id) << ',' << format_number(p.indices.entropy) << ','
            << format_number(p.indices.first_order_diversity) << ',' << format_number(p.indices.uniformity) << '\n';
    }
    out << "\n# group_indices\nindex,value\n"
        << "alpha_entropy," << format_number(r.alpha_entropy) << '\n'
        << "gamma_entropy," << format_number(r.gamma_entropy) << '\n'
        << "beta_entropy," << format_number(r.beta_entropy) << '\n'
        << "alpha_diversity," << format_number(r.alpha_diversity()) << '\n'
        << "gamma_diversity," << format_number(r.gamma_diversity()) << '\n'
        << "beta_diversity," << format_number(r.beta_diversity) << '\n'
        << "homogeneity," << format_number(r.homogeneity) << '\n'
        << "perfect_consensus," << (r.perfect_consensus ? 1 : 0) << '\n';
    out << '\n';
    if (r.pairwise) {
        csv_matrix_section(out, "pairwise", r.pairwise->participant_ids, r.pairwise->participant_ids,
                           r.pairwise->values);
    } else {
        out << "# pairwise\nparticipant\n";
    }
    return out.str();
}

void md_matrix(std::ostringstream& out, std::string_view corner, const std::vector<std::string>& row_ids,
               const std::vector<std::string>& col_ids, const auto& values) {
    out << "| " << corner << " |";
    for (const auto& id : col_ids) out << ' ' << md_cell(id) << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < col_ids.size(); ++i) out << "---:|";
    out << '\n';
    for (std::size_t k = 0; k < row_ids.size(); ++k) {
        out << "| " << md_cell(row_ids[k]) << " |";
        for (const auto& v : values[k]) out << ' ' << format_number(static_cast<double>(v)) << " |";
        out << '\n';
    }
}

std::string report_markdown(const HomogeneityReport& r) {
    std::ostringstream out;
    const auto ids = participant_ids(r);
    out << "# Homogeneity report: " << r.session_id;
    if (!r.stage.empty()) out << " (" << r.stage << ")";
    out << "\n\nNormalization: " << to_string(r.mode) << "\n\n## Rank distances\n\n";
    md_matrix(out, "participant", ids, r.alternative_ids, r.distances.distances());
    out << "| **total** |";
    for (int t : r.distances.column_totals()) out << ' ' << t << " |";
    out << "\n\n## Distance distributions\n\n";
    md_matrix(out, "participant", ids, r.alternative_ids, r.probabilities.probabilities());
    out << "\n## Participant indices\n\n| participant | entropy | diversity | uniformity |\n|---|---:|---:|---:|\n";
    for (const auto& p : r.per_participant) {
        out << "| " << md_cell(p.participant_id) << " | " << format_number(p.indices.entropy) << " | "
            << format_number(p.indices.first_order_diversity) << " | " << format_number(p.indices.uniformity)
            << " |\n";
    }
    out << "\n## Group indices\n\n| index | value |\n|---|---:|\n"
        << "| alpha entropy | " << format_number(r.alpha_entropy) << " |\n"
        << "| gamma entropy | " << format_number(r.gamma_entropy) << " |\n"
        << "| beta entropy | " << format_number(r.beta_entropy) << " |\n"
        << "| beta diversity | " << format_number(r.beta_diversity) << " |\n"
        << "| homogeneity | " << format_number(r.homogeneity) << " |\n\n";
    if (r.perfect_consensus) out << "Perfect consensus: every participant matches the group ranking.\n\n";
    out << "Threshold " << format_number(r.consensus_threshold) << ": "
        << (r.meets_threshold() ? "homogeneous" : "heterogeneous") << "\n";
    if (r.pairwise) {
        out << "\n## Pairwise homogeneity\n\n";
        md_matrix(out, "", r.pairwise->participant_ids, r.pairwise->participant_ids, r.pairwise->values);
    }
    if (!r.diagnostics.empty()) {
        out << "\n## Diagnostics\n\n";
        for (const auto& d : r.diagnostics) out << "- " << d << '\n';
    }
    return out.str();
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_real(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::optional<double> parse_cell(std::string_view cell) {
    const auto slash = cell.find('/');
    if (slash == std::string_view::npos) return parse_real(cell);
    const auto num = parse_real(cell.substr(0, slash));
    const auto den = parse_real(cell.substr(slash + 1));
    if (!num || !den || *den == 0.0) return std::nullopt;
    return *num / *den;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

DecisionSession parse_session(std::string_view json_text) {
    const json root = parse_json(json_text);
    if (!root.is_object()) schema_violation("", "expected a JSON object");

    const json& version = require_field(root, "schema_version", "");
    if (!version.is_number_integer() || version.get<int>() != kSessionSchemaVersion) {
        schema_violation("/schema_version", "unsupported schema version (expected 1)");
    }
    std::string session_id = require_string(root, "session_id", "");
    std::string stage = optional_string(root, "stage", "", "");

    std::vector<Alternative> alternatives;
    const json& alts = require_array(root, "alternatives", "");
    for (std::size_t i = 0; i < alts.size(); ++i) {
        const std::string path = "/alternatives/" + std::to_string(i);
        if (!alts[i].is_object()) schema_violation(path, "expected an object");
        Alternative a;
        a.id = require_string(alts[i], "id", path);
        a.label = optional_string(alts[i], "label", path, a.id);
        alternatives.push_back(std::move(a));
    }
    const std::size_t n = alternatives.size();

    std::vector<Participant> participants;
    bool any_weight = false;
    const json& parts = require_array(root, "participants", "");
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const std::string path = "/participants/" + std::to_string(k);
        if (!parts[k].is_object()) schema_violation(path, "expected an object");
        Participant p;
        p.id = require_string(parts[k], "id", path);
        p.label = optional_string(parts[k], "label", path, p.id);
        if (const auto w = parts[k].find("weight"); w != parts[k].end()) {
            p.weight = require_number(*w, path + "/weight");
            any_weight = true;
        }
        participants.push_back(std::move(p));
    }

    const json& ranks_obj = require_field(root, "individual_ranks", "");
    if (!ranks_obj.is_object()) schema_violation("/individual_ranks", "expected an object keyed by participant id");
    std::set<std::string> known;
    std::vector<RankVector> individual;
    for (const auto& p : participants) {
        known.insert(p.id);
        const std::string path = "/individual_ranks/" + escape_pointer_token(p.id);
        const auto it = ranks_obj.find(p.id);
        if (it == ranks_obj.end()) schema_violation(path, "missing ranks for participant");
        individual.push_back(rank_vector_at(integer_array(*it, n, path), path));
    }
    for (const auto& [key, value] : ranks_obj.items()) {
        if (!known.contains(key)) {
            schema_violation("/individual_ranks/" + escape_pointer_token(key), "ranks for unknown participant");
        }
    }

    const bool has_ranks = root.contains("group_ranks");
    const bool has_scores = root.contains("group_scores");
    if (has_ranks == has_scores) {
        schema_violation(has_ranks ? "/group_scores" : "/group_ranks",
                         "exactly one of group_ranks or group_scores is required");
    }
    std::optional<RankVector> group;
    if (has_ranks) {
        group = rank_vector_at(integer_array(root["group_ranks"], n, "/group_ranks"), "/group_ranks");
    } else {
        const json& scores = root["group_scores"];
        if (!scores.is_array() || scores.size() != n) {
            schema_violation("/group_scores", "expected " + std::to_string(n) + " numbers (one per alternative)");
        }
        std::vector<double> values;
        for (std::size_t i = 0; i < n; ++i) values.push_back(require_number(scores[i], "/group_scores/" + std::to_string(i)));
        group = scores_to_ranks(values);
    }

    PipelineConfig config = parse_config(root, any_weight);
    return DecisionSession(std::move(session_id), std::move(stage), std::move(alternatives), std::move(participants),
                           std::move(individual), std::move(*group), config);
}

DecisionSession load_session(const std::filesystem::path& path) { return parse_session(read_file(path)); }

std::string serialize_session(const DecisionSession& session) {
    ordered_json j;
    j["schema_version"] = kSessionSchemaVersion;
    j["session_id"] = session.session_id();
    j["stage"] = session.stage();
    ordered_json alts = ordered_json::array();
    for (const auto& a : session.alternatives()) alts.push_back({{"id", a.id}, {"label", a.label}});
    j["alternatives"] = alts;
    ordered_json parts = ordered_json::array();
    for (const auto& p : session.participants()) {
        parts.push_back({{"id", p.id}, {"label", p.label}, {"weight", p.weight}});
    }
    j["participants"] = parts;
    ordered_json ranks = ordered_json::object();
    for (std::size_t k = 0; k < session.participant_count(); ++k) {
        ranks[session.participants()[k].id] = session.individual_ranks()[k].ranks();
    }
    j["individual_ranks"] = ranks;
    j["group_ranks"] = session.group_ranks().ranks();
    const auto& cfg = session.config();
    j["config"] = {{"normalization_mode", std::string(to_string(cfg.normalization()))},
                   {"participant_weights", std::string(to_string(cfg.participant_weights()))},
                   {"likert_categories", cfg.likert().categories()},
                   {"consensus_threshold", cfg.consensus_threshold()}};
    return j.dump(2) + "\n";
}

ComparisonMatrix parse_comparison_matrix(std::string_view csv) {
    std::vector<std::vector<double>> rows;
    std::size_t start = 0;
    while (start <= csv.size()) {
        auto end = csv.find('\n', start);
        if (end == std::string_view::npos) end = csv.size();
        const std::string_view line = trim(csv.substr(start, end - start));
        start = end + 1;
        if (line.empty()) continue;
        const std::size_t r = rows.size();
        std::vector<double> row;
        std::size_t cell_start = 0;
        while (true) {
            const auto comma = line.find(',', cell_start);
            const auto cell = line.substr(cell_start, comma == std::string_view::npos ? line.npos : comma - cell_start);
            const auto value = parse_cell(cell);
            if (!value) {
                throw Error(ErrorKind::NumberParse,
                            "cannot parse '" + std::string(trim(cell)) + "' at row " + std::to_string(r) +
                                ", column " + std::to_string(row.size()),
                            r, row.size());
            }
            row.push_back(*value);
            if (comma == std::string_view::npos) break;
            cell_start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    return ComparisonMatrix(rows);
}

ComparisonMatrix load_comparison_matrix(const std::filesystem::path& path) {
    return parse_comparison_matrix(read_file(path));
}

ProjectFile parse_project(std::string_view json_text) {
    const json root = parse_json(json_text);
    if (!root.is_object()) schema_violation("", "expected a JSON object");
    ProjectFile project;
    project.project_id = require_string(root, "project_id", "");
    project.threshold = require_number(require_field(root, "threshold", ""), "/threshold");
    if (!(project.threshold >= 0.0 && project.threshold <= 1.0)) {
        schema_violation("/threshold", "threshold must lie in [0, 1]");
    }
    const json& stages = require_array(root, "stages", "");
    if (stages.empty()) schema_violation("/stages", "a project needs at least one stage");
    for (std::size_t m = 0; m < stages.size(); ++m) {
        const std::string path = "/stages/" + std::to_string(m);
        if (!stages[m].is_object()) schema_violation(path, "expected an object");
        ProjectStage stage;
        stage.stage = require_string(stages[m], "stage", path);
        const bool has_value = stages[m].contains("homogeneity");
        const bool has_path = stages[m].contains("session_path");
        if (has_value == has_path) {
            schema_violation(path, "exactly one of homogeneity or session_path is required");
        }
        if (has_value) {
            const double h = require_number(stages[m]["homogeneity"], path + "/homogeneity");
            if (!(h >= 0.0 && h <= 1.0)) schema_violation(path + "/homogeneity", "homogeneity must lie in [0, 1]");
            stage.source = h;
        } else {
            stage.source = std::filesystem::path(require_string(stages[m], "session_path", path));
        }
        project.stages.push_back(std::move(stage));
    }
    return project;
}

ProjectRecord load_project(const std::filesystem::path& path) {
    const ProjectFile file = parse_project(read_file(path));
    const std::filesystem::path base = path.parent_path();

    std::vector<std::future<double>> values;
    values.reserve(file.stages.size());
    for (const auto& stage : file.stages) {
        if (const auto* h = std::get_if<double>(&stage.source)) {
            std::promise<double> ready;
            ready.set_value(*h);
            values.push_back(ready.get_future());
        } else {
            const auto session_path = base / std::get<std::filesystem::path>(stage.source);
            values.push_back(std::async(std::launch::async, [session_path] {
                return analyze_session(load_session(session_path)).homogeneity;
            }));
        }
    }
    std::vector<StageHomogeneity> stages;
    for (std::size_t m = 0; m < file.stages.size(); ++m) {
        stages.push_back({file.stages[m].stage, values[m].get()});
    }
    return ProjectRecord(file.project_id, std::move(stages), file.threshold);
}

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

std::string emit_report(const HomogeneityReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: return report_json(report);
        case ReportFormat::CsvTables: return report_csv(report);
        case ReportFormat::Markdown: return report_markdown(report);
    }
    return {};
}

std::string emit_pairwise(const PairwiseMatrix& matrix, ReportFormat format) {
    std::ostringstream out;
    switch (format) {
        case ReportFormat::Json: return pairwise_json(matrix).dump(2) + "\n";
        case ReportFormat::CsvTables:
            csv_matrix_section(out, "pairwise", matrix.participant_ids, matrix.participant_ids, matrix.values);
            break;
        case ReportFormat::Markdown:
            out << "# Pairwise homogeneity\n\n";
            md_matrix(out, "", matrix.participant_ids, matrix.participant_ids, matrix.values);
            break;
    }
    return out.str();
}

std::string emit_priorities(const PriorityVector& priorities, DerivationMethod method, double cr_limit) {
    ordered_json j;
    j["method"] = method == DerivationMethod::PrincipalEigenvector ? "eig" : "gmean";
    ordered_json p = ordered_json::array();
    for (double v : priorities.priorities()) p.push_back(round_sig6(v));
    j["priorities"] = p;
    if (const auto& c = priorities.consistency()) {
        j["lambda_max"] = round_sig6(c->lambda_max);
        j["consistency_index"] = round_sig6(c->consistency_index);
        j["consistency_ratio"] = round_sig6(c->consistency_ratio);
        j["cr_limit"] = round_sig6(cr_limit);
        j["cr_exceeds_limit"] = c->consistency_ratio > cr_limit;
    }
    return j.dump(2) + "\n";
}

}  // namespace consensus
