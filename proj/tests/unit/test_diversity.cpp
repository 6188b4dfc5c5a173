#include <doctest.h>

#include <cmath>
#include <random>

#include "consensus/diversity.hpp"
#include "consensus/worked_example.hpp"

using namespace consensus;
namespace we = consensus::worked_example;

TEST_CASE("shannon_entropy on the published distance distributions") {
    CHECK(shannon_entropy(we::kPrintedProbabilities[1]) == doctest::Approx(0.668).epsilon(1e-3));
    CHECK(shannon_entropy(we::kPrintedProbabilities[2]) == doctest::Approx(0.633).epsilon(1e-3));
    const double spike[] = {1, 0, 0};
    CHECK(shannon_entropy(spike) == 0.0);
    const double uniform[] = {0.2, 0.2, 0.2, 0.2, 0.2};
    CHECK(shannon_entropy(uniform) == doctest::Approx(std::log(5.0)).epsilon(1e-14));
}

TEST_CASE("shannon_entropy rejects components outside [0, 1]") {
    const double above[] = {0.5, 1.5};
    const double below[] = {-0.1, 0.5};
    const double nan[] = {std::nan(""), 0.5};
    CHECK_THROWS_WITH_AS(shannon_entropy(above), doctest::Contains("ComponentOutOfRange"), Error);
    CHECK_THROWS_AS(shannon_entropy(below), Error);
    CHECK_THROWS_AS(shannon_entropy(nan), Error);
}

TEST_CASE("first_order_diversity and uniformity") {
    CHECK(first_order_diversity(1.732) == doctest::Approx(5.652).epsilon(1e-4));
    CHECK(first_order_diversity(0.0) == 1.0);
    CHECK(first_order_diversity(0.633) == doctest::Approx(1.883).epsilon(1e-3));
    CHECK_THROWS_AS(first_order_diversity(-0.1), Error);

    // Natural log: 1.732 / ln 5 = 1.076, whereas 1.732 / log2 5 would be 0.746.
    CHECK(uniformity(1.732, 5) == doctest::Approx(1.076).epsilon(1e-3));
    CHECK(uniformity(std::log(5.0), 5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(uniformity(0.668, 5) == doctest::Approx(0.415).epsilon(1e-3));
    CHECK_THROWS_AS(uniformity(0.5, 1), Error);
}

TEST_CASE("alpha and gamma entropy") {
    const ProbabilityTable table({{0.5, 0.25, 0.333, 0.333, 0.6}, {0.5, 0, 0, 0, 0.2}, {0, 0, 0.167, 0.222, 0}},
                                 NormalizationMode::PerAlternative, {});
    const double third = 1.0 / 3.0;
    const double equal[] = {third, third, third};
    const double mean = (shannon_entropy(table.row(0)) + shannon_entropy(table.row(1)) + shannon_entropy(table.row(2))) / 3.0;
    CHECK(alpha_entropy(table, equal) == doctest::Approx(mean).epsilon(1e-14));
    CHECK(alpha_entropy(table, equal) == doctest::Approx(1.011).epsilon(1e-3));

    // Pooled q_i = mean of the column, computed by hand.
    double h = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        const double q = (table(0, i) + table(1, i) + table(2, i)) / 3.0;
        if (q > 0) h -= q * std::log(q);
    }
    CHECK(gamma_entropy(table, equal) == doctest::Approx(h).epsilon(1e-14));

    const ProbabilityTable single({{0.2, 0.8}}, NormalizationMode::PerLearner, {});
    const double one[] = {1.0};
    CHECK(alpha_entropy(single, one) == doctest::Approx(shannon_entropy(single.row(0))));

    const ProbabilityTable same({{0.3, 0.7}, {0.3, 0.7}}, NormalizationMode::PerLearner, {});
    const double halves[] = {0.5, 0.5};
    CHECK(gamma_entropy(same, halves) == doctest::Approx(alpha_entropy(same, halves)).epsilon(1e-14));

    const ProbabilityTable spikes({{1, 0}, {0, 1}}, NormalizationMode::PerLearner, {});
    CHECK(gamma_entropy(spikes, halves) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(alpha_entropy(spikes, halves) == 0.0);

    CHECK_THROWS_WITH_AS(alpha_entropy(spikes, one), doctest::Contains("WeightMismatch"), Error);
    const double unnormalized[] = {0.5, 0.6};
    CHECK_THROWS_AS(gamma_entropy(spikes, unnormalized), Error);
}

TEST_CASE("beta_partition") {
    const auto published = beta_partition(0.927, 1.508);
    CHECK(published.beta_entropy == doctest::Approx(0.581).epsilon(1e-9));
    CHECK(published.beta_diversity == doctest::Approx(1.787).epsilon(1e-3));

    const auto same = beta_partition(0.7, 0.7);
    CHECK(same.beta_entropy == 0.0);
    CHECK(same.beta_diversity == 1.0);

    const auto pair = beta_partition(0.0, std::log(2.0));
    CHECK(pair.beta_diversity == doctest::Approx(2.0).epsilon(1e-15));

    CHECK(beta_partition(1.0, 1.0 - 1e-12).beta_entropy == 0.0);
    CHECK_THROWS_WITH_AS(beta_partition(1.0, 0.9), doctest::Contains("PartitionViolation"), Error);
}

TEST_CASE("property: entropy bounds, concavity and multiplicative partition") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 8);
        const std::size_t k = 2 + static_cast<std::size_t>(trial % 5);
        std::vector<std::vector<double>> rows(k, std::vector<double>(n));
        for (auto& row : rows) {
            double total = 0.0;
            for (double& x : row) total += (x = u(rng));
            for (double& x : row) x /= total;
            const double h = shannon_entropy(row);
            CHECK(h >= 0.0);
            CHECK(h <= std::log(static_cast<double>(n)) + 1e-12);
        }
        std::vector<double> w(k);
        double wt = 0.0;
        for (double& x : w) wt += (x = u(rng) + 0.01);
        for (double& x : w) x /= wt;
        const ProbabilityTable table(rows, NormalizationMode::PerLearner, {});
        const double a = alpha_entropy(table, w);
        const double g = gamma_entropy(table, w);
        CHECK(g >= a - 1e-12);
        const auto b = beta_partition(a, g);
        CHECK(std::exp(b.beta_entropy) * std::exp(a) == doctest::Approx(std::exp(g)).epsilon(1e-9));
    }
    for (std::size_t n = 2; n <= 9; ++n) {
        std::vector<double> uniform(n, 1.0 / static_cast<double>(n));
        CHECK(first_order_diversity(shannon_entropy(uniform)) == doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
    }
}
