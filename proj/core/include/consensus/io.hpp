#pragma once

// File formats: session and project JSON documents, comparison-matrix CSV
// blocks, and report emission (JSON, CSV tables, markdown).

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "consensus/ahp.hpp"
#include "consensus/homogeneity.hpp"
#include "consensus/model.hpp"

namespace consensus {

inline constexpr int kSessionSchemaVersion = 1;

/// Parses a session document. Errors: Syntax (line/column in the message),
/// SchemaViolation (path() holds the JSON pointer), or the model's
/// invariant errors.
DecisionSession parse_session(std::string_view json_text);
DecisionSession load_session(const std::filesystem::path& path);

/// Inverse of parse_session: always writes group_ranks and the full config.
std::string serialize_session(const DecisionSession& session);

/// Square CSV block of positive reals; "a/b" cells are parsed as a division.
/// Blank lines are skipped.
ComparisonMatrix parse_comparison_matrix(std::string_view csv);
ComparisonMatrix load_comparison_matrix(const std::filesystem::path& path);

struct ProjectStage {
    std::string stage;
    /// Either a precomputed homogeneity value or a session file to analyze.
    std::variant<double, std::filesystem::path> source;
};

struct ProjectFile {
    std::string project_id;
    double threshold = 0.5;
    std::vector<ProjectStage> stages;
};

ProjectFile parse_project(std::string_view json_text);

/// Loads a project file and analyzes every session-backed stage, resolving
/// session paths against the project file's directory. Stage sessions are
/// analyzed concurrently and merged in stage order.
ProjectRecord load_project(const std::filesystem::path& path);

enum class ReportFormat { Json, CsvTables, Markdown };

/// Rounds to 6 significant digits and renders the shortest text for it.
std::string format_number(double value);

std::string emit_report(const HomogeneityReport& report, ReportFormat format);
std::string emit_pairwise(const PairwiseMatrix& matrix, ReportFormat format);
std::string emit_priorities(const PriorityVector& priorities, DerivationMethod method, double cr_limit);

/// Reads a whole file; throws Io if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace consensus
