#pragma once

// Frozen output of tests/oracle/pipeline_oracle.py (mpmath, 40 digits) for the
// worked-example rank table under equal weights.

namespace golden {

inline constexpr double kPerAlternativeAlpha = 0.85500272016094097138;
inline constexpr double kPerAlternativeGamma = 1.8310204811135161523;
inline constexpr double kPerAlternativeHomogeneity = 0.37680865720279759455;
inline constexpr double kPerAlternativePairwise[3] = {0.33116889107026297658,   // (L1, L2)
                                                      0.34023965781703771733,   // (L1, L3)
                                                      0.25};                    // (L2, L3)

inline constexpr double kPerLearnerAlpha = 0.94481654417864964506;
inline constexpr double kPerLearnerGamma = 1.4597116807532624557;
inline constexpr double kPerLearnerHomogeneity = 0.59756325386253411547;
inline constexpr double kPerLearnerPairwise[3] = {0.74575845159566494597, 0.80463613469228346209, 0.5};

}  // namespace golden
