#pragma once

// Analytic hierarchy process: priorities from pairwise comparison matrices,
// Saaty's consistency test, synthesis across criteria, and group aggregation.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "consensus/error.hpp"
#include "consensus/model.hpp"

namespace consensus {

enum class DerivationMethod { PrincipalEigenvector, GeometricMean };

enum class AggregationMethod {
    /// Weighted geometric mean of individual priority vectors (AIP).
    WeightedGeometricPriorities,
    /// Elementwise weighted geometric mean of judgment matrices (AIJ).
    ElementwiseGeometricJudgments,
};

struct AhpConfig {
    DerivationMethod derivation = DerivationMethod::PrincipalEigenvector;
    AggregationMethod aggregation = AggregationMethod::WeightedGeometricPriorities;
    double cr_limit = 0.10;
    int max_iters = 1000;
    double tolerance = 1e-10;
};

inline constexpr double kReciprocalTolerance = 1e-9;

/// Checks squareness, size >= 2, positive entries, unit diagonal and
/// reciprocal symmetry. Returns the first violation, or nullopt.
std::optional<Error> validate_comparison_matrix(const std::vector<std::vector<double>>& rows);

/// Saaty's random consistency index for an n x n matrix, n in [1, 10].
double random_index(std::size_t n);

/// CI = (lambda_max - n) / (n - 1) and CR = CI / RI(n); both are 0 for n <= 2.
/// Throws UnsupportedSize for n > 10.
Consistency consistency_ratio(const ComparisonMatrix& m, double lambda_max);

/// Normalized priorities with lambda_max, CI and CR attached.
///
/// PrincipalEigenvector runs power iteration from the uniform vector until the
/// largest componentwise change drops below cfg.tolerance; lambda_max is the
/// Rayleigh quotient of the converged vector. GeometricMean normalizes the row
/// geometric means and estimates lambda_max as the mean of (A w)_i / w_i.
PriorityVector derive_priorities(const ComparisonMatrix& m, const AhpConfig& cfg = {});

/// Overall priority of alternative i = sum_j weight_j * priority_ij.
PriorityVector synthesize_over_criteria(std::span<const PriorityVector> per_criterion,
                                        std::span<const double> criteria_weights);

/// AIP group priorities: component i is proportional to prod_k p_ik^{w_k},
/// then renormalized. A zero component in any participant with positive
/// weight zeroes that group component. Weights are normalized internally.
PriorityVector aggregate_group(std::span<const PriorityVector> individual,
                               std::span<const double> weights);

/// Group priorities from individual judgment matrices. AIJ mode combines the
/// matrices elementwise by weighted geometric mean and derives priorities
/// from the result; AIP mode derives each participant's priorities first.
PriorityVector aggregate_group(std::span<const ComparisonMatrix> judgments,
                               std::span<const double> weights, const AhpConfig& cfg);

}  // namespace consensus
