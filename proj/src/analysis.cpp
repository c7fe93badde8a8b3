#include "pwords/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <ostream>

#include "json.hpp"

#include "pwords/words.hpp"

namespace pwords {

namespace {

// partitions of m into exactly k parts, up to m = n
std::vector<std::vector<long long>> parts_count_table(int n) {
    std::vector<std::vector<long long>> count(static_cast<std::size_t>(n) + 1,
                                              std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
    count[0][0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= m; ++k)
            count[m][k] = count[m - 1][k - 1] + (m - k >= k ? count[m - k][k] : 0);
    return count;
}

double mean_of(std::span<const double> xs) {
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

} // namespace

long long Histogram::total() const {
    long long t = 0;
    for (const auto &[value, count] : bins)
        t += count;
    return t;
}

Histogram parts_histogram(int n) {
    if (n < 1)
        throw ContractError("n must be >= 1");
    auto count = parts_count_table(n);
    Histogram h;
    for (int k = 1; k <= n; ++k)
        if (count[n][k] > 0)
            h.bins[k] = count[n][k];
    return h;
}

long long lambda_edge_statistic(int n) {
    if (n < 2)
        throw ContractError("n must be >= 2");
    WordSet ws = enumerate_words(1, n);
    long long occurrences = 0;
    for (const Word &w : ws.words) {
        auto lambda = parts_from_word_1d(w);
        for (std::size_t i = 0; i + 2 < lambda.size(); ++i)
            if (lambda[i] >= lambda[i + 1] + lambda[i + 2])
                ++occurrences;
    }
    return static_cast<long long>(ws.count()) - 1 + occurrences;
}

long long parity_imbalance(int n) {
    if (n < 1)
        throw ContractError("n must be >= 1");
    auto count = parts_count_table(n);
    long long diff = 0;
    for (int k = 1; k <= n; ++k)
        diff += (k % 2 == 0 ? count[n][k] : -count[n][k]);
    return std::llabs(diff);
}

std::string family_name(FitFamily family) {
    return family == FitFamily::lognormal ? "lognormal" : "normal";
}

double standard_normal_cdf(double z) {
    // Abramowitz-Stegun 7.1.26 rational approximation of erf
    const double x = std::fabs(z) / std::sqrt(2.0);
    const double t = 1.0 / (1.0 + 0.3275911 * x);
    const double poly =
        t * (0.254829592 +
             t * (-0.284496736 + t * (1.421413741 + t * (-1.453152027 + t * 1.061405429))));
    const double erf_abs = 1.0 - poly * std::exp(-x * x);
    const double erf = z < 0 ? -erf_abs : erf_abs;
    return 0.5 * (1.0 + erf);
}

DistributionFit fit(std::span<const double> samples, FitFamily family) {
    if (samples.size() < 2)
        throw DegenerateSampleError("need at least two samples");
    std::vector<double> xs(samples.begin(), samples.end());
    if (family == FitFamily::lognormal) {
        for (double &x : xs) {
            if (x <= 0.0)
                throw std::domain_error("lognormal fits need strictly positive samples");
            x = std::log(x);
        }
    }
    const double mu = mean_of(xs);
    double var = 0.0;
    for (double x : xs)
        var += (x - mu) * (x - mu);
    var /= static_cast<double>(xs.size());
    if (var == 0.0)
        throw DegenerateSampleError("all samples equal; scale parameter would vanish");
    const double sigma = std::sqrt(var);

    DistributionFit f;
    f.family = family;
    f.mu = mu;
    f.sigma = sigma;
    f.sample_size = samples.size();

    constexpr double half_log_2pi = 0.9189385332046727; // ln(2*pi)/2
    double ll = -static_cast<double>(xs.size()) * (half_log_2pi + std::log(sigma));
    for (double x : xs)
        ll -= (x - mu) * (x - mu) / (2.0 * var);
    if (family == FitFamily::lognormal)
        for (double x : xs)
            ll -= x; // Jacobian: subtract ln of each original sample
    f.log_likelihood = ll;

    // KS at the sorted (log-)values, ties collapsed
    std::sort(xs.begin(), xs.end());
    const auto size = static_cast<double>(xs.size());
    double ks = 0.0;
    std::size_t i = 0;
    while (i < xs.size()) {
        std::size_t j = i;
        while (j < xs.size() && xs[j] == xs[i])
            ++j;
        const double cdf = standard_normal_cdf((xs[i] - mu) / sigma);
        ks = std::max(ks, std::fabs(static_cast<double>(i) / size - cdf));
        ks = std::max(ks, std::fabs(static_cast<double>(j) / size - cdf));
        i = j;
    }
    f.ks_statistic = ks;
    return f;
}

std::vector<DistributionFit> compare(std::span<const double> samples) {
    std::vector<DistributionFit> fits{fit(samples, FitFamily::lognormal),
                                      fit(samples, FitFamily::normal)};
    std::stable_sort(fits.begin(), fits.end(), [](const DistributionFit &a, const DistributionFit &b) {
        return a.log_likelihood > b.log_likelihood;
    });
    return fits;
}

void write_histogram_csv(std::ostream &os, const Histogram &h) {
    for (const auto &[value, count] : h.bins)
        os << value << ',' << count << '\n';
}

std::string fit_report_json(std::span<const DistributionFit> fits) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const DistributionFit &f : fits) {
        nlohmann::ordered_json j;
        j["family"] = family_name(f.family);
        j["mu"] = f.mu;
        j["sigma"] = f.sigma;
        j["log_likelihood"] = f.log_likelihood;
        j["ks"] = f.ks_statistic;
        j["sample_size"] = f.sample_size;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::vector<double> histogram_to_samples(const Histogram &h) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(h.total()));
    for (const auto &[value, count] : h.bins)
        for (long long i = 0; i < count; ++i)
            out.push_back(static_cast<double>(value));
    return out;
}

} // namespace pwords
