#include "consensus/diversity.hpp"

#include <cmath>
#include <string>

namespace consensus {

namespace {

void check_weights(const ProbabilityTable& table, std::span<const double> weights) {
    if (table.rows() == 0) throw Error(ErrorKind::WeightMismatch, "probability table is empty");
    if (weights.size() != table.rows()) {
        throw Error(ErrorKind::WeightMismatch, std::to_string(table.rows()) + " rows but " +
                                                   std::to_string(weights.size()) + " weights");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) throw Error(ErrorKind::WeightMismatch, "weights must be nonnegative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw Error(ErrorKind::WeightMismatch, "weights must sum to 1");
}

}  // namespace

double shannon_entropy(std::span<const double> p) {
    double h = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double x = p[i];
        if (!(x >= 0.0 && x <= 1.0)) {
            throw Error(ErrorKind::ComponentOutOfRange,
                        "component " + std::to_string(i) + " = " + std::to_string(x) + " outside [0, 1]");
        }
        if (x > 0.0) h -= x * std::log(x);
    }
    return h;
}

double first_order_diversity(double entropy) {
    if (!(entropy >= 0.0)) throw Error(ErrorKind::NegativeEntropy, "entropy must be nonnegative");
    return std::exp(entropy);
}

double uniformity(double entropy, std::size_t alternative_count) {
    if (alternative_count < 2) throw Error(ErrorKind::InvalidCount, "uniformity needs at least 2 alternatives");
    if (!(entropy >= 0.0)) throw Error(ErrorKind::NegativeEntropy, "entropy must be nonnegative");
    return entropy / std::log(static_cast<double>(alternative_count));
}

DiversityIndices diversity_indices(std::span<const double> p, std::size_t alternative_count) {
    DiversityIndices d;
    d.entropy = shannon_entropy(p);
    d.first_order_diversity = first_order_diversity(d.entropy);
    d.uniformity = uniformity(d.entropy, alternative_count);
    return d;
}

double alpha_entropy(const ProbabilityTable& table, std::span<const double> weights) {
    check_weights(table, weights);
    double h = 0.0;
    for (std::size_t k = 0; k < table.rows(); ++k) h += weights[k] * shannon_entropy(table.row(k));
    return h;
}

double gamma_entropy(const ProbabilityTable& table, std::span<const double> weights) {
    check_weights(table, weights);
    std::vector<double> pooled(table.cols(), 0.0);
    for (std::size_t k = 0; k < table.rows(); ++k) {
        for (std::size_t i = 0; i < table.cols(); ++i) pooled[i] += weights[k] * table(k, i);
    }
    // Per-learner pooling can overshoot 1 by an ulp.
    for (double& q : pooled) q = std::min(q, 1.0);
    return shannon_entropy(pooled);
}

BetaPartition beta_partition(double alpha, double gamma) {
    double beta = gamma - alpha;
    if (beta < -kPartitionTolerance) {
        throw Error(ErrorKind::PartitionViolation, "gamma entropy " + std::to_string(gamma) +
                                                       " is below alpha entropy " + std::to_string(alpha));
    }
    if (beta < 0.0) beta = 0.0;
    return {beta, std::exp(beta)};
}

}  // namespace consensus
