#pragma once

// Published worked example: three learners rank five candidate sites. The
// printed tables are kept verbatim (decimal commas converted to points) so
// that reports can be compared side by side with them.

#include <array>
#include <string_view>

namespace consensus::worked_example {

inline constexpr std::size_t kParticipants = 3;
inline constexpr std::size_t kAlternatives = 5;

inline constexpr std::array<std::array<int, kAlternatives>, kParticipants> kIndividualRanks = {{
    {2, 4, 3, 1, 5},
    {2, 3, 5, 4, 1},
    {1, 3, 4, 2, 2},
}};
inline constexpr std::array<int, kAlternatives> kGroupRanks = {1, 3, 5, 4, 2};

inline constexpr std::array<std::array<int, kAlternatives>, kParticipants> kPrintedDistances = {{
    {1, 1, 2, 3, 3},
    {1, 0, 0, 0, 1},
    {0, 0, 1, 2, 0},
}};
/// Printed "sum of the distance" row; the distance rows above sum to (2,1,3,5,4).
inline constexpr std::array<int, kAlternatives> kPrintedColumnTotals = {2, 4, 6, 9, 5};

/// Printed distance distributions, which divide by the printed totals.
inline constexpr std::array<std::array<double, kAlternatives>, kParticipants> kPrintedProbabilities = {{
    {0.500, 0.250, 0.333, 0.333, 0.600},
    {0.500, 0.000, 0.000, 0.000, 0.200},
    {0.000, 0.000, 0.167, 0.222, 0.000},
}};

struct PrintedIndices {
    double entropy;
    double diversity;
    double uniformity;
};
inline constexpr std::array<PrintedIndices, kParticipants> kPrintedIndices = {{
    {1.732, 5.652, 1.076},
    {0.668, 1.951, 0.415},
    {0.633, 1.883, 0.393},
}};

inline constexpr double kPrintedAlphaEntropy = 0.927;
inline constexpr double kPrintedGammaEntropy = 1.508;
inline constexpr double kPrintedBetaEntropy = 0.581;
inline constexpr double kPrintedBetaDiversity = 1.787;
inline constexpr double kPrintedHomogeneity = 0.560;

inline constexpr std::array<std::array<double, kParticipants>, kParticipants> kPrintedPairwise = {{
    {1.000, 0.691, 0.361},
    {0.691, 1.000, 0.686},
    {0.361, 0.686, 1.000},
}};

/// Session document encoding the rank table, identical to data/paper_4_2.json.
inline constexpr std::string_view kSessionJson = R"({
  "schema_version": 1,
  "session_id": "urban-site-selection",
  "stage": "site choice",
  "alternatives": [
    {"id": "ALT1", "label": "Site 1"},
    {"id": "ALT2", "label": "Site 2"},
    {"id": "ALT3", "label": "Site 3"},
    {"id": "ALT4", "label": "Site 4"},
    {"id": "ALT5", "label": "Site 5"}
  ],
  "participants": [
    {"id": "L1", "label": "Learner 1"},
    {"id": "L2", "label": "Learner 2"},
    {"id": "L3", "label": "Learner 3"}
  ],
  "individual_ranks": {
    "L1": [2, 4, 3, 1, 5],
    "L2": [2, 3, 5, 4, 1],
    "L3": [1, 3, 4, 2, 2]
  },
  "group_ranks": [1, 3, 5, 4, 2],
  "config": {
    "normalization_mode": "per_alternative",
    "participant_weights": "uniform",
    "likert_categories": 5,
    "consensus_threshold": 0.5
  }
}
)";

}  // namespace consensus::worked_example
