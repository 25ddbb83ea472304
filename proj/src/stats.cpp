#include "latgauge/stats.hpp"

#include <algorithm>
#include <cmath>

namespace latgauge {

namespace {

double mean_of(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) {
        s += x;
    }
    return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

// Averaged per-chain autocovariance at lags 0..max_lag.
std::vector<double> averaged_autocov(const std::vector<std::vector<double>>& chains,
                                     long max_lag) {
    std::vector<double> gamma(static_cast<std::size_t>(max_lag) + 1, 0.0);
    long n_chains_used = 0;
    for (const auto& xs : chains) {
        const long n = static_cast<long>(xs.size());
        if (n < 2) {
            continue;
        }
        ++n_chains_used;
        const double mu = mean_of(xs);
        for (long t = 0; t <= std::min(max_lag, n - 1); ++t) {
            double s = 0.0;
            for (long i = 0; i + t < n; ++i) {
                s += (xs[i] - mu) * (xs[i + t] - mu);
            }
            gamma[static_cast<std::size_t>(t)] += s / static_cast<double>(n);
        }
    }
    if (n_chains_used > 0) {
        for (auto& g : gamma) {
            g /= static_cast<double>(n_chains_used);
        }
    }
    return gamma;
}

double tau_from_gamma(const std::vector<double>& gamma) {
    if (gamma.empty() || gamma[0] <= 0.0) {
        return 0.5;
    }
    double tau = 0.5;
    for (std::size_t w = 1; w < gamma.size(); ++w) {
        tau += gamma[w] / gamma[0];
        if (static_cast<double>(w) >= 6.0 * tau) {
            break;
        }
    }
    return std::max(tau, 0.5);
}

} // namespace

double integrated_autocorrelation(const std::vector<double>& xs) {
    return integrated_autocorrelation(std::vector<std::vector<double>>{xs});
}

double integrated_autocorrelation(const std::vector<std::vector<double>>& chains) {
    long min_len = 0;
    for (const auto& c : chains) {
        min_len = std::max(min_len, static_cast<long>(c.size()));
    }
    if (min_len < 4) {
        return 0.5;
    }
    const long max_lag = min_len / 4;
    return tau_from_gamma(averaged_autocov(chains, max_lag));
}

Estimate pooled_estimate(const std::vector<std::vector<std::complex<double>>>& chains,
                         long min_samples) {
    long n = 0;
    for (const auto& c : chains) {
        n += static_cast<long>(c.size());
    }
    if (n < min_samples) {
        throw InsufficientSamples("need at least " + std::to_string(min_samples) +
                                  " measurements, got " + std::to_string(n));
    }

    std::complex<double> mean(0.0, 0.0);
    for (const auto& c : chains) {
        for (const auto& z : c) {
            mean += z;
        }
    }
    mean /= static_cast<double>(n);

    double var = 0.0;
    std::vector<std::vector<double>> re(chains.size()), im(chains.size());
    for (std::size_t c = 0; c < chains.size(); ++c) {
        re[c].reserve(chains[c].size());
        im[c].reserve(chains[c].size());
        for (const auto& z : chains[c]) {
            re[c].push_back(z.real());
            im[c].push_back(z.imag());
            const std::complex<double> d = z - mean;
            var += std::norm(d);
        }
    }
    var /= static_cast<double>(std::max<long>(n - 1, 1));

    Estimate est;
    est.mean = mean;
    est.n_samples = n;
    est.tau_int = std::max(integrated_autocorrelation(re), integrated_autocorrelation(im));
    est.stderr_ = std::sqrt(var * 2.0 * est.tau_int / static_cast<double>(n));
    return est;
}

Jackknife jackknife_from_bins(const std::vector<double>& bin_means) {
    const int b = static_cast<int>(bin_means.size());
    Jackknife jk;
    if (b == 0) {
        return jk;
    }
    jk.mean = mean_of(bin_means);
    if (b < 2) {
        return jk;
    }
    double ss = 0.0;
    for (double x : bin_means) {
        const double loo = (jk.mean * b - x) / (b - 1);
        ss += (loo - jk.mean) * (loo - jk.mean);
    }
    jk.stderr_ = std::sqrt(ss * static_cast<double>(b - 1) / static_cast<double>(b));
    return jk;
}

std::vector<double> bin_means(const std::vector<double>& xs, int n_bins) {
    const long n = static_cast<long>(xs.size());
    if (n < 2 * n_bins) {
        throw InsufficientSamples("series too short for " + std::to_string(n_bins) + " bins");
    }
    const long w = n / n_bins;
    std::vector<double> out(static_cast<std::size_t>(n_bins), 0.0);
    for (int b = 0; b < n_bins; ++b) {
        double s = 0.0;
        for (long i = b * w; i < (b + 1) * w; ++i) {
            s += xs[static_cast<std::size_t>(i)];
        }
        out[static_cast<std::size_t>(b)] = s / static_cast<double>(w);
    }
    return out;
}

JackCov jackknife_covariance(const std::vector<std::vector<std::complex<double>>>& f_chains,
                             const std::vector<std::vector<std::complex<double>>>& g_chains,
                             int target_bins) {
    if (f_chains.size() != g_chains.size()) {
        throw InvalidArgument("covariance needs matched chain sets");
    }
    const int n_chains = static_cast<int>(f_chains.size());
    const int per_chain = std::max(2, target_bins / std::max(n_chains, 1));

    // Per-bin means of f, g and fg; bins never straddle chains.
    std::vector<std::complex<double>> bf, bg, bfg;
    for (int c = 0; c < n_chains; ++c) {
        const auto& f = f_chains[static_cast<std::size_t>(c)];
        const auto& g = g_chains[static_cast<std::size_t>(c)];
        if (f.size() != g.size()) {
            throw InvalidArgument("f and g series must be sampled together");
        }
        const long n = static_cast<long>(f.size());
        const long w = n / per_chain;
        if (w < 1) {
            throw InsufficientSamples("chain too short for jackknife binning");
        }
        for (int b = 0; b < per_chain; ++b) {
            std::complex<double> sf(0, 0), sg(0, 0), sfg(0, 0);
            for (long i = b * w; i < (b + 1) * w; ++i) {
                const auto& zf = f[static_cast<std::size_t>(i)];
                const auto& zg = g[static_cast<std::size_t>(i)];
                sf += zf;
                sg += zg;
                sfg += zf * zg;
            }
            bf.push_back(sf / static_cast<double>(w));
            bg.push_back(sg / static_cast<double>(w));
            bfg.push_back(sfg / static_cast<double>(w));
        }
    }

    const int b = static_cast<int>(bf.size());
    std::complex<double> tf(0, 0), tg(0, 0), tfg(0, 0);
    for (int i = 0; i < b; ++i) {
        tf += bf[static_cast<std::size_t>(i)];
        tg += bg[static_cast<std::size_t>(i)];
        tfg += bfg[static_cast<std::size_t>(i)];
    }

    JackCov out;
    out.n_bins = b;
    out.value = tfg / static_cast<double>(b) -
                (tf / static_cast<double>(b)) * (tg / static_cast<double>(b));
    if (b < 2) {
        return out;
    }

    double ss_re = 0.0, ss_im = 0.0;
    std::complex<double> loo_sum(0.0, 0.0);
    std::vector<std::complex<double>> loo(static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i) {
        const double m = static_cast<double>(b - 1);
        const std::complex<double> mf = (tf - bf[static_cast<std::size_t>(i)]) / m;
        const std::complex<double> mg = (tg - bg[static_cast<std::size_t>(i)]) / m;
        const std::complex<double> mfg = (tfg - bfg[static_cast<std::size_t>(i)]) / m;
        loo[static_cast<std::size_t>(i)] = mfg - mf * mg;
        loo_sum += loo[static_cast<std::size_t>(i)];
    }
    const std::complex<double> loo_mean = loo_sum / static_cast<double>(b);
    for (int i = 0; i < b; ++i) {
        const std::complex<double> d = loo[static_cast<std::size_t>(i)] - loo_mean;
        ss_re += d.real() * d.real();
        ss_im += d.imag() * d.imag();
    }
    const double fac = static_cast<double>(b - 1) / static_cast<double>(b);
    out.stderr_ = std::sqrt(fac * (ss_re + ss_im));
    return out;
}

double ks_statistic(std::vector<double> xs, std::vector<double> ys) {
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    const std::size_t n = xs.size(), m = ys.size();
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < n && j < m) {
        if (xs[i] <= ys[j]) {
            ++i;
        } else {
            ++j;
        }
        const double fx = static_cast<double>(i) / static_cast<double>(n);
        const double fy = static_cast<double>(j) / static_cast<double>(m);
        d = std::max(d, std::abs(fx - fy));
    }
    return d;
}

bool ks_two_sample_pass(std::vector<double> xs, std::vector<double> ys, double alpha) {
    const double n = static_cast<double>(xs.size());
    const double m = static_cast<double>(ys.size());
    if (n < 1 || m < 1) {
        throw InsufficientSamples("KS test needs nonempty samples");
    }
    const double d = ks_statistic(std::move(xs), std::move(ys));
    const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
    return d <= c * std::sqrt((n + m) / (n * m));
}

} // namespace latgauge
