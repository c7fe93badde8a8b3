#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pwords/errors.hpp"

// Distribution side of the study: parts-count and degree histograms, the
// partition statistic that counts flip-graph edges, and maximum-likelihood
// lognormal/normal fits with a Kolmogorov-Smirnov figure of merit.

namespace pwords {

struct Histogram {
    std::map<long long, long long> bins; // value -> count, counts >= 1

    long long total() const;
};

/// bin j = number of partitions of n with exactly j parts, by direct
/// recurrence (no word enumeration involved). Equals the zero-count
/// histogram of the word set shifted by one.
Histogram parts_histogram(int n);

/// (p(n) - 1) + the number of (partition, interior index i) pairs with
/// lambda_i >= lambda_{i+1} + lambda_{i+2}; equals the edge count of the
/// d = 1 flip graph.
long long lambda_edge_statistic(int n);

/// |# partitions of n with an even number of parts - # with an odd number|;
/// the quantity whose positivity rules out Hamiltonian cycles.
long long parity_imbalance(int n);

enum class FitFamily { lognormal, normal };

std::string family_name(FitFamily family);

struct DistributionFit {
    FitFamily family = FitFamily::lognormal;
    double mu = 0.0;
    double sigma = 0.0; // > 0
    double log_likelihood = 0.0;
    double ks_statistic = 0.0; // in [0, 1]
    std::size_t sample_size = 0;
};

/// Maximum-likelihood fit; mu and sigma^2 are the mean and population
/// variance of the (log-)values. The KS statistic compares the empirical
/// CDF against the fitted one at the sample points, ties collapsed.
/// Degenerate samples (size < 2 or zero variance) raise
/// DegenerateSampleError; nonpositive values under lognormal raise
/// std::domain_error.
DistributionFit fit(std::span<const double> samples, FitFamily family);

/// Both families fitted and ranked by log-likelihood, best first.
std::vector<DistributionFit> compare(std::span<const double> samples);

/// Standard normal CDF via a rational approximation of erf with absolute
/// error below 1.5e-7; keeps outputs bit-stable across platforms.
double standard_normal_cdf(double z);

/// "value,count" rows ascending by value.
void write_histogram_csv(std::ostream &os, const Histogram &h);

/// JSON array of fit objects with keys exactly in the order
/// family, mu, sigma, log_likelihood, ks, sample_size.
std::string fit_report_json(std::span<const DistributionFit> fits);

std::vector<double> histogram_to_samples(const Histogram &h);

} // namespace pwords
