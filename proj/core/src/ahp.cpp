#include "consensus/ahp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace consensus {

namespace {

constexpr std::array<double, 10> kRandomIndex = {0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49};

constexpr double kLambdaSlack = 1e-9;

std::string cell_text(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<double> multiply(const ComparisonMatrix& m, const std::vector<double>& x) {
    const std::size_t n = m.size();
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) y[i] += m(i, j) * x[j];
    }
    return y;
}

void normalize_in_place(std::vector<double>& v) {
    double total = 0.0;
    for (double x : v) total += x;
    for (double& x : v) x /= total;
}

std::vector<double> checked_weights(std::size_t count, std::span<const double> weights) {
    if (count == 0) throw Error(ErrorKind::EmptyGroup, "no participants to aggregate");
    if (weights.size() != count) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::to_string(count) + " inputs but " + std::to_string(weights.size()) + " weights");
    }
    return normalize_weights(weights);
}

}  // namespace

std::optional<Error> validate_comparison_matrix(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            return Error(ErrorKind::NonSquare,
                         "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                             " entries, expected " + std::to_string(n));
        }
    }
    if (n < 2) return Error(ErrorKind::NonSquare, "comparison matrix must be at least 2x2");

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double a = rows[i][j];
            if (!std::isfinite(a) || a <= 0.0) {
                std::ostringstream msg;
                msg << "entry " << cell_text(i, j) << " = " << a << " is not positive";
                return Error(ErrorKind::NonPositiveEntry, msg.str(), i, j);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i][i] != 1.0) {
            std::ostringstream msg;
            msg << "diagonal entry " << cell_text(i, i) << " = " << rows[i][i] << ", expected 1";
            return Error(ErrorKind::NonUnitDiagonal, msg.str(), i, i);
        }
    }
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double actual = rows[i][j];
            const double expected = 1.0 / rows[j][i];
            if (std::abs(actual - expected) > kReciprocalTolerance * std::max(actual, expected)) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "entry " << cell_text(i, j) << " = " << actual << " but 1/entry "
                    << cell_text(j, i) << " = " << expected;
                return Error(ErrorKind::NonReciprocal, msg.str(), i, j);
            }
        }
    }
    return std::nullopt;
}

double random_index(std::size_t n) {
    if (n == 0 || n > kRandomIndex.size()) {
        throw Error(ErrorKind::UnsupportedSize,
                    "no random consistency index for n = " + std::to_string(n) + " (supported: 1..10)");
    }
    return kRandomIndex[n - 1];
}

Consistency consistency_ratio(const ComparisonMatrix& m, double lambda_max) {
    const std::size_t n = m.size();
    const double ri = random_index(n);
    const double dn = static_cast<double>(n);
    if (lambda_max < dn - kLambdaSlack * dn) {
        throw Error(ErrorKind::InvariantViolation,
                    "lambda_max " + std::to_string(lambda_max) + " is below n = " + std::to_string(n));
    }
    Consistency c;
    c.lambda_max = lambda_max;
    if (n <= 2) return c;
    // Power iteration can land a few ulps under n on consistent matrices.
    c.consistency_index = std::max(0.0, (lambda_max - dn) / (dn - 1.0));
    c.consistency_ratio = c.consistency_index / ri;
    return c;
}

PriorityVector derive_priorities(const ComparisonMatrix& m, const AhpConfig& cfg) {
    if (!(cfg.tolerance > 0.0) || !(cfg.cr_limit > 0.0) || cfg.max_iters < 1) {
        throw Error(ErrorKind::InvariantViolation, "AHP config needs positive tolerance, cr_limit and max_iters");
    }
    const std::size_t n = m.size();
    std::vector<double> w(n);
    double lambda = 0.0;

    if (cfg.derivation == DerivationMethod::PrincipalEigenvector) {
        std::vector<double> x(n, 1.0 / static_cast<double>(n));
        bool converged = false;
        for (int it = 0; it < cfg.max_iters; ++it) {
            std::vector<double> y = multiply(m, x);
            normalize_in_place(y);
            double change = 0.0;
            for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::abs(y[i] - x[i]));
            x = std::move(y);
            if (change < cfg.tolerance) {
                converged = true;
                break;
            }
        }
        const std::vector<double> ax = multiply(m, x);
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            num += x[i] * ax[i];
            den += x[i] * x[i];
        }
        lambda = num / den;
        if (!converged) {
            double residual = 0.0;
            for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(ax[i] - lambda * x[i]));
            throw Error(ErrorKind::NonConvergence,
                        "power iteration did not converge in " + std::to_string(cfg.max_iters) +
                            " iterations, residual " + std::to_string(residual));
        }
        w = std::move(x);
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            double log_sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) log_sum += std::log(m(i, j));
            w[i] = std::exp(log_sum / static_cast<double>(n));
        }
        normalize_in_place(w);
        const std::vector<double> aw = multiply(m, w);
        for (std::size_t i = 0; i < n; ++i) lambda += aw[i] / w[i];
        lambda /= static_cast<double>(n);
    }

    const Consistency c = consistency_ratio(m, lambda);
    normalize_in_place(w);
    return PriorityVector(std::move(w), c);
}

PriorityVector synthesize_over_criteria(std::span<const PriorityVector> per_criterion,
                                        std::span<const double> criteria_weights) {
    if (per_criterion.empty()) throw Error(ErrorKind::DimensionMismatch, "no criteria to synthesize");
    if (per_criterion.size() != criteria_weights.size()) {
        throw Error(ErrorKind::DimensionMismatch, "one weight per criterion is required");
    }
    double weight_sum = 0.0;
    for (double w : criteria_weights) {
        if (!std::isfinite(w) || w < 0.0) throw Error(ErrorKind::WeightMismatch, "criterion weight must be nonnegative");
        weight_sum += w;
    }
    if (std::abs(weight_sum - 1.0) > 1e-9) {
        throw Error(ErrorKind::WeightMismatch, "criterion weights must sum to 1");
    }
    const std::size_t n = per_criterion.front().size();
    std::vector<double> overall(n, 0.0);
    for (std::size_t j = 0; j < per_criterion.size(); ++j) {
        if (per_criterion[j].size() != n) {
            throw Error(ErrorKind::DimensionMismatch, "criterion " + std::to_string(j) + " covers " +
                                                          std::to_string(per_criterion[j].size()) +
                                                          " alternatives, expected " + std::to_string(n));
        }
        for (std::size_t i = 0; i < n; ++i) overall[i] += criteria_weights[j] * per_criterion[j][i];
    }
    // Weights summing to 1 within 1e-9 leave the same slack on the result.
    normalize_in_place(overall);
    return PriorityVector(std::move(overall));
}

PriorityVector aggregate_group(std::span<const PriorityVector> individual, std::span<const double> weights) {
    const std::vector<double> w = checked_weights(individual.size(), weights);
    const std::size_t n = individual.front().size();
    std::vector<double> log_sum(n, 0.0);
    std::vector<bool> zeroed(n, false);
    for (std::size_t k = 0; k < individual.size(); ++k) {
        if (individual[k].size() != n) {
            throw Error(ErrorKind::DimensionMismatch, "participant " + std::to_string(k) + " covers " +
                                                          std::to_string(individual[k].size()) +
                                                          " alternatives, expected " + std::to_string(n));
        }
        if (w[k] == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const double p = individual[k][i];
            if (p == 0.0) {
                zeroed[i] = true;
            } else {
                log_sum[i] += w[k] * std::log(p);
            }
        }
    }
    // Shift by the largest log so the exponentials stay representable.
    double top = -INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
        if (!zeroed[i]) top = std::max(top, log_sum[i]);
    }
    if (top == -INFINITY) {
        throw Error(ErrorKind::DegenerateAggregate,
                    "every alternative has a zero priority for some participant");
    }
    std::vector<double> group(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!zeroed[i]) group[i] = std::exp(log_sum[i] - top);
    }
    normalize_in_place(group);
    return PriorityVector(std::move(group));
}

PriorityVector aggregate_group(std::span<const ComparisonMatrix> judgments, std::span<const double> weights,
                               const AhpConfig& cfg) {
    const std::vector<double> w = checked_weights(judgments.size(), weights);
    const std::size_t n = judgments.front().size();
    for (const auto& m : judgments) {
        if (m.size() != n) throw Error(ErrorKind::DimensionMismatch, "judgment matrices differ in size");
    }

    if (cfg.aggregation == AggregationMethod::WeightedGeometricPriorities) {
        std::vector<PriorityVector> individual;
        individual.reserve(judgments.size());
        for (const auto& m : judgments) individual.push_back(derive_priorities(m, cfg));
        return aggregate_group(std::span<const PriorityVector>(individual), std::span<const double>(w));
    }

    std::vector<std::vector<double>> combined(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double log_sum = 0.0;
            for (std::size_t k = 0; k < judgments.size(); ++k) log_sum += w[k] * std::log(judgments[k](i, j));
            combined[i][j] = std::exp(log_sum);
            combined[j][i] = 1.0 / combined[i][j];
        }
    }
    return derive_priorities(ComparisonMatrix(combined), cfg);
}

}  // namespace consensus
