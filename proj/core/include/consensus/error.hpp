#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace consensus {

enum class ErrorKind {
    // Input errors: malformed data or violated invariants.
    InvariantViolation,
    NonSquare,
    NonPositiveEntry,
    NonUnitDiagonal,
    NonReciprocal,
    DimensionMismatch,
    NonFiniteScore,
    RankExceedsScale,
    ComponentOutOfRange,
    NegativeEntropy,
    InvalidCount,
    WeightMismatch,
    Syntax,
    SchemaViolation,
    NumberParse,
    Io,
    // Domain errors: inputs are well formed but the computation is undefined.
    NonConvergence,
    UnsupportedSize,
    EmptyGroup,
    DegenerateAggregate,
    PartitionViolation,
    SingleParticipant,
    EmptyProject,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for errors caused by malformed or invalid input (CLI exit code 2).
/// Everything else is a domain error (CLI exit code 3).
bool is_input_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    Error(ErrorKind kind, const std::string& message, std::size_t row, std::size_t col)
        : Error(kind, message) {
        cell_ = std::pair{row, col};
    }

    Error(ErrorKind kind, const std::string& message, std::string path)
        : Error(kind, message) {
        path_ = std::move(path);
    }

    ErrorKind kind() const noexcept { return kind_; }

    /// Matrix cell (row, col) the error refers to, when applicable.
    const std::optional<std::pair<std::size_t, std::size_t>>& cell() const noexcept { return cell_; }

    /// JSON pointer of the offending document node, for schema errors.
    const std::string& path() const noexcept { return path_; }

private:
    ErrorKind kind_;
    std::optional<std::pair<std::size_t, std::size_t>> cell_;
    std::string path_;
};

}  // namespace consensus
