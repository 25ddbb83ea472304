#pragma once

#include <functional>
#include <vector>

#include "latgauge/group.hpp"
#include "latgauge/lattice.hpp"
#include "latgauge/rng.hpp"
#include "latgauge/stats.hpp"
#include "latgauge/thresholds.hpp"

namespace latgauge {

enum class Sampler { Metropolis, HeatBath, Langevin };

/// Gauge group, 't Hooft coupling and geometry of one lattice gauge model.
struct YMParams {
    GroupSpec spec;
    double beta = 0.0;
    TorusLattice lattice;

    YMParams(GroupSpec s, double b, TorusLattice lat)
        : spec(s), beta(b), lattice(std::move(lat)) {
        spec.validate();
        if (beta < 0.0) {
            throw InvalidArgument("beta must be nonnegative");
        }
        if (lattice.dim() < 2) {
            throw InvalidArgument("gauge model needs d >= 2");
        }
    }

    /// True when beta >= the coupling threshold (outside the regime where
    /// the curvature machinery applies); surfaced as a warning, not an error.
    bool beta_at_or_above_threshold() const {
        return beta >= beta_threshold(spec.family, spec.n, lattice.dim());
    }
};

/// Link matrices on positively oriented edges; the reversed edge carries the
/// inverse by convention.
struct GaugeField {
    std::vector<Mat> links;
};

GaugeField cold_gauge_field(const YMParams& params);
GaugeField hot_gauge_field(const YMParams& params, Rng& rng);

/// Ordered product of the plaquette boundary word.
Mat plaquette_matrix(const GaugeField& field, const TorusLattice& lattice, int p);

/// S(Q) = N beta sum_p Re Tr(Q_p): positive beta rewards plaquettes near 1,
/// and the sampling weight is exp(S).
double ym_action(const GaugeField& field, const YMParams& params);

/// Normalized trace (1/N) Tr of the ordered loop product.
Cplx wilson_loop(const GaugeField& field, const TorusLattice& lattice,
                 const GroupSpec& spec, const Loop& loop);

/// Q_e -> g_x Q_e g_y^{-1} for e = (x, y); leaves the action and every loop
/// observable unchanged.
GaugeField gauge_transform(const GaugeField& field, const TorusLattice& lattice,
                           const std::vector<Mat>& g);

/// Sum of the 2(d-1) staple words of edge e: the action is
/// S = N beta Re Tr(Q_e M_e) + (terms without Q_e).
Mat staple_sum(const GaugeField& field, const TorusLattice& lattice, int e);

struct SweepStats {
    double acceptance = 1.0;
};

/// One full-lattice sweep. Metropolis proposes Q_e <- exp(scale X) Q_e with
/// X a standard Gaussian algebra element; HeatBath is the exact SU(2)
/// single-link update and throws UnsupportedFamily otherwise. beta = 0
/// short-circuits to fresh Haar links.
SweepStats ym_sweep(GaugeField& field, const YMParams& params, Rng& rng,
                    double proposal_scale, Sampler sampler);

/// Chain schedule shared by every sampler in the project. Per-chain streams
/// are derived from `seed` and the chain index, so runs are reproducible and
/// chains can execute in any order or in parallel.
struct ChainConfig {
    long sweeps = 1000;
    long burn_in = 200;
    int thinning = 1;
    int n_chains = 4;
    std::uint64_t seed = 1;
    Sampler sampler = Sampler::Metropolis;
    double proposal_scale = 0.5;
    bool tune_proposal = true;   // adjust scale toward ~0.5 acceptance in burn-in
    double langevin_dt = 0.005;  // used when sampler == Langevin

    long measurements_per_chain() const {
        if (sweeps <= burn_in) {
            throw InvalidArgument("sweeps must exceed burn_in");
        }
        return (sweeps - burn_in + thinning - 1) / thinning;
    }
};

/// Measurement callback filling one value per observable.
using YMMeasure = std::function<void(const GaugeField&, std::vector<Cplx>&)>;

/// Per-chain, per-measurement, per-observable traces.
struct MultiTrace {
    std::vector<std::vector<std::vector<Cplx>>> chains; // [chain][meas][obs]
    std::vector<double> acceptance;                     // per chain, post-burn-in
    std::vector<double> tuned_scale;                    // per chain

    /// Series of observable `k` as [chain][meas].
    std::vector<std::vector<Cplx>> series(int k) const;
};

MultiTrace run_ym_chains(const YMParams& params, int n_obs, const YMMeasure& measure,
                         const ChainConfig& cfg);

/// Pooled estimate of a single observable.
Estimate estimate_ym(const YMParams& params,
                     const std::function<Cplx(const GaugeField&)>& obs,
                     const ChainConfig& cfg);

/// Rectangle side lengths of a Wilson loop.
struct LoopSpec {
    int R = 1;
    int T = 1;
};

/// Translation- and orientation-averaged Wilson loop values for a set of
/// rectangles. With `multihit` set (SU(2), beta > 0), the links on one pair
/// of opposite sides are replaced by their exact single-link conditional
/// means whenever the perpendicular separation is >= 2, which keeps the
/// estimator unbiased while collapsing its variance for large areas.
/// `stride` subsamples the translation corners.
std::vector<Cplx> measure_rect_loops(const GaugeField& field, const YMParams& params,
                                     const std::vector<LoopSpec>& loops,
                                     bool multihit, int stride = 1);

/// Average of Re W over all plaquettes.
Cplx average_plaquette(const GaugeField& field, const YMParams& params);

} // namespace latgauge
