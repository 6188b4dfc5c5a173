#pragma once

// Shannon entropy and first-order diversity. All logarithms are natural.

#include <cstddef>
#include <span>

#include "consensus/model.hpp"

namespace consensus {

/// H = -sum p_i ln p_i with 0 ln 0 = 0. Components must lie in [0, 1] but
/// need not sum to 1. Summation runs in index order.
double shannon_entropy(std::span<const double> p);

/// D = exp(H), the effective number of categories.
double first_order_diversity(double entropy);

/// U = H / ln(n) over n alternatives. Exceeds 1 for unnormalized inputs.
double uniformity(double entropy, std::size_t alternative_count);

DiversityIndices diversity_indices(std::span<const double> p, std::size_t alternative_count);

/// Weighted mean of the per-participant row entropies.
double alpha_entropy(const ProbabilityTable& table, std::span<const double> weights);

/// Entropy of the pooled distribution q_i = sum_k w_k p_ik.
double gamma_entropy(const ProbabilityTable& table, std::span<const double> weights);

struct BetaPartition {
    double beta_entropy = 0.0;
    double beta_diversity = 1.0;
};

inline constexpr double kPartitionTolerance = 1e-9;

/// H_beta = H_gamma - H_alpha and D_beta = exp(H_beta) = D_gamma / D_alpha.
/// Differences within -kPartitionTolerance are treated as 0; anything lower
/// throws PartitionViolation.
BetaPartition beta_partition(double alpha, double gamma);

}  // namespace consensus
