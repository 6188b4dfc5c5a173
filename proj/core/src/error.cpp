#include "consensus/error.hpp"

namespace consensus {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
        case ErrorKind::NonUnitDiagonal: return "NonUnitDiagonal";
        case ErrorKind::NonReciprocal: return "NonReciprocal";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NonFiniteScore: return "NonFiniteScore";
        case ErrorKind::RankExceedsScale: return "RankExceedsScale";
        case ErrorKind::ComponentOutOfRange: return "ComponentOutOfRange";
        case ErrorKind::NegativeEntropy: return "NegativeEntropy";
        case ErrorKind::InvalidCount: return "InvalidCount";
        case ErrorKind::WeightMismatch: return "WeightMismatch";
        case ErrorKind::Syntax: return "Syntax";
        case ErrorKind::SchemaViolation: return "SchemaViolation";
        case ErrorKind::NumberParse: return "NumberParse";
        case ErrorKind::Io: return "Io";
        case ErrorKind::NonConvergence: return "NonConvergence";
        case ErrorKind::UnsupportedSize: return "UnsupportedSize";
        case ErrorKind::EmptyGroup: return "EmptyGroup";
        case ErrorKind::DegenerateAggregate: return "DegenerateAggregate";
        case ErrorKind::PartitionViolation: return "PartitionViolation";
        case ErrorKind::SingleParticipant: return "SingleParticipant";
        case ErrorKind::EmptyProject: return "EmptyProject";
    }
    return "Unknown";
}

bool is_input_error(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonConvergence:
        case ErrorKind::UnsupportedSize:
        case ErrorKind::EmptyGroup:
        case ErrorKind::DegenerateAggregate:
        case ErrorKind::PartitionViolation:
        case ErrorKind::SingleParticipant:
        case ErrorKind::EmptyProject:
            return false;
        default:
            return true;
    }
}

}  // namespace consensus
