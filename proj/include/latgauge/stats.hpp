#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "latgauge/errors.hpp"

namespace latgauge {

/// Monte Carlo estimate with integrated-autocorrelation error bar:
/// stderr = sample_std * sqrt(2 tau_int / n_samples), tau_int >= 0.5.
struct Estimate {
    std::complex<double> mean{0.0, 0.0};
    double stderr_ = 0.0;
    double tau_int = 0.5;
    long n_samples = 0;
};

/// Integrated autocorrelation time of a real series with the self-consistent
/// window rule: smallest W with W >= 6 tau(W). Returns 0.5 for constant or
/// too-short series.
double integrated_autocorrelation(const std::vector<double>& xs);

/// tau_int from several chains: per-chain autocovariances (per-chain means
/// removed) averaged, then the usual windowing.
double integrated_autocorrelation(const std::vector<std::vector<double>>& chains);

/// Pooled estimate from per-chain complex measurement series. tau_int is the
/// worst of the two components; stderr combines component variances.
/// Throws InsufficientSamples when fewer than `min_samples` measurements.
Estimate pooled_estimate(const std::vector<std::vector<std::complex<double>>>& chains,
                         long min_samples = 100);

/// Jackknife mean/error of a statistic given per-bin values.
struct Jackknife {
    double mean = 0.0;
    double stderr_ = 0.0;
};

/// Leave-one-out jackknife over precomputed bin means.
Jackknife jackknife_from_bins(const std::vector<double>& bin_means);

/// Split a series into `n_bins` equal contiguous bins (remainder dropped)
/// and return the bin means. Throws InsufficientSamples if fewer than
/// 2 * n_bins entries.
std::vector<double> bin_means(const std::vector<double>& xs, int n_bins);

/// Bilinear jackknife covariance Cov(f,g) = <fg> - <f><g> over bins pooled
/// from several chains (bins never straddle a chain boundary).
struct JackCov {
    std::complex<double> value{0.0, 0.0};
    double stderr_ = 0.0;
    int n_bins = 0;
};

JackCov jackknife_covariance(const std::vector<std::vector<std::complex<double>>>& f_chains,
                             const std::vector<std::vector<std::complex<double>>>& g_chains,
                             int target_bins = 50);

/// Two-sample Kolmogorov-Smirnov statistic sup |F1 - F2|.
double ks_statistic(std::vector<double> xs, std::vector<double> ys);

/// Two-sample KS test at significance `alpha` (asymptotic critical value).
bool ks_two_sample_pass(std::vector<double> xs, std::vector<double> ys,
                        double alpha = 0.01);

} // namespace latgauge
