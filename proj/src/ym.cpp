#include "latgauge/ym.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "latgauge/su2.hpp"

namespace latgauge {

namespace {

int env_thread_cap() {
    if (const char* s = std::getenv("LATGAUGE_THREADS")) {
        const int v = std::atoi(s);
        if (v >= 1) {
            return v;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

/// Runs fn(i) for i in [0, n) on up to LATGAUGE_THREADS workers. Results must
/// be written to disjoint slots; the outcome is identical at any thread count.
void parallel_for_indexed(int n, const std::function<void(int)>& fn) {
    const int workers = std::min(n, env_thread_cap());
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = w; i < n; i += workers) {
                fn(i);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
}

GaugeField cold_gauge_field(const YMParams& params) {
    GaugeField f;
    f.links.assign(static_cast<std::size_t>(params.lattice.n_edges()),
                   identity_mat(params.spec.n));
    return f;
}

GaugeField hot_gauge_field(const YMParams& params, Rng& rng) {
    GaugeField f;
    f.links.reserve(static_cast<std::size_t>(params.lattice.n_edges()));
    for (int e = 0; e < params.lattice.n_edges(); ++e) {
        f.links.push_back(haar_sample(params.spec, rng));
    }
    return f;
}

Mat plaquette_matrix(const GaugeField& field, const TorusLattice& lattice, int p) {
    const auto& word = lattice.plaquette_word(p);
    Mat q = word[0].orientation > 0 ? field.links[word[0].edge]
                                    : Mat(field.links[word[0].edge].adjoint());
    for (int s = 1; s < 4; ++s) {
        if (word[s].orientation > 0) {
            q = q * field.links[word[s].edge];
        } else {
            q = q * field.links[word[s].edge].adjoint();
        }
    }
    return q;
}

double ym_action(const GaugeField& field, const YMParams& params) {
    double sum = 0.0;
    for (int p = 0; p < params.lattice.n_plaquettes(); ++p) {
        sum += plaquette_matrix(field, params.lattice, p).trace().real();
    }
    return params.spec.n * params.beta * sum;
}

Cplx wilson_loop(const GaugeField& field, const TorusLattice& lattice,
                 const GroupSpec& spec, const Loop& loop) {
    if (loop.edges.empty()) {
        throw InvalidArgument("loop must be nonempty");
    }
    Mat q = identity_mat(spec.n);
    for (const auto& oe : loop.edges) {
        const int e = lattice.edge_index(oe.base, oe.dir);
        if (oe.orientation > 0) {
            q = q * field.links[e];
        } else {
            q = q * field.links[e].adjoint();
        }
    }
    return q.trace() / static_cast<double>(spec.n);
}

GaugeField gauge_transform(const GaugeField& field, const TorusLattice& lattice,
                           const std::vector<Mat>& g) {
    GaugeField out;
    out.links.resize(field.links.size());
    for (int e = 0; e < lattice.n_edges(); ++e) {
        const int x = lattice.edge_tail(e);
        const int y = lattice.edge_head(e);
        out.links[e] = g[x] * field.links[e] * g[y].adjoint();
    }
    return out;
}

Mat staple_sum(const GaugeField& field, const TorusLattice& lattice, int e) {
    const int n = field.links.empty() ? 0 : static_cast<int>(field.links[0].rows());
    Mat m = Mat::Zero(n, n);
    for (const auto& inc : lattice.plaquettes_of_edge(e)) {
        const auto& word = lattice.plaquette_word(inc.plaquette);
        // Product of the three word steps after position `inc.position`
        // (cyclically); the plaquette trace is Re Tr(Q_e * rest) when e is
        // traversed forward and picks up a dagger otherwise.
        Mat rest = Mat::Identity(n, n);
        for (int s = 1; s < 4; ++s) {
            const auto& step = word[(inc.position + s) % 4];
            if (step.orientation > 0) {
                rest = rest * field.links[step.edge];
            } else {
                rest = rest * field.links[step.edge].adjoint();
            }
        }
        if (word[inc.position].orientation > 0) {
            m += rest;
        } else {
            m += rest.adjoint();
        }
    }
    return m;
}

SweepStats ym_sweep(GaugeField& field, const YMParams& params, Rng& rng,
                    double proposal_scale, Sampler sampler) {
    const auto& lattice = params.lattice;
    const GroupSpec& spec = params.spec;
    const double nbeta = spec.n * params.beta;

    if (params.beta == 0.0) {
        for (auto& q : field.links) {
            q = haar_sample(spec, rng);
        }
        return SweepStats{1.0};
    }

    if (sampler == Sampler::HeatBath) {
        if (!(spec.family == GroupFamily::SU && spec.n == 2)) {
            throw UnsupportedFamily("heat bath is implemented for SU(2) only");
        }
        for (int e = 0; e < lattice.n_edges(); ++e) {
            const Mat m = staple_sum(field, lattice, e);
            field.links[e] = su2_heatbath(m, nbeta, rng);
        }
        return SweepStats{1.0};
    }

    if (sampler != Sampler::Metropolis) {
        throw UnsupportedFamily("gauge chains support Metropolis and HeatBath");
    }

    long accepted = 0;
    for (int e = 0; e < lattice.n_edges(); ++e) {
        const Mat m = staple_sum(field, lattice, e);
        const Mat x = random_algebra(spec, rng, proposal_scale);
        const Mat qnew = exp_algebra(spec, x) * field.links[e];
        const double delta =
            nbeta * ((qnew - field.links[e]) * m).trace().real();
        if (delta >= 0.0 || std::log(rng.uniform_pos()) < delta) {
            field.links[e] = qnew;
            ++accepted;
        }
    }
    return SweepStats{static_cast<double>(accepted) /
                      static_cast<double>(std::max(lattice.n_edges(), 1))};
}

std::vector<std::vector<Cplx>> MultiTrace::series(int k) const {
    std::vector<std::vector<Cplx>> out(chains.size());
    for (std::size_t c = 0; c < chains.size(); ++c) {
        out[c].reserve(chains[c].size());
        for (const auto& row : chains[c]) {
            out[c].push_back(row[static_cast<std::size_t>(k)]);
        }
    }
    return out;
}

MultiTrace run_ym_chains(const YMParams& params, int n_obs, const YMMeasure& measure,
                         const ChainConfig& cfg) {
    const long per_chain = cfg.measurements_per_chain();
    if (per_chain * cfg.n_chains < 100) {
        throw InsufficientSamples("fewer than 100 post-burn-in measurements");
    }

    MultiTrace trace;
    trace.chains.resize(static_cast<std::size_t>(cfg.n_chains));
    trace.acceptance.assign(static_cast<std::size_t>(cfg.n_chains), 0.0);
    trace.tuned_scale.assign(static_cast<std::size_t>(cfg.n_chains), cfg.proposal_scale);

    parallel_for_indexed(cfg.n_chains, [&](int c) {
        Rng rng(derive_chain_seed(cfg.seed, static_cast<std::uint64_t>(c)));
        GaugeField field = hot_gauge_field(params, rng);
        double scale = cfg.proposal_scale;
        double acc_window = 0.0;
        int window = 0;
        double acc_sum = 0.0;
        long acc_count = 0;
        std::vector<Cplx> row(static_cast<std::size_t>(n_obs));
        auto& out = trace.chains[static_cast<std::size_t>(c)];
        out.reserve(static_cast<std::size_t>(per_chain));

        for (long s = 0; s < cfg.sweeps; ++s) {
            const SweepStats st = ym_sweep(field, params, rng, scale, cfg.sampler);
            if (s < cfg.burn_in) {
                if (cfg.tune_proposal && cfg.sampler == Sampler::Metropolis) {
                    acc_window += st.acceptance;
                    if (++window == 20) {
                        const double rate = acc_window / window;
                        if (rate > 0.55) {
                            scale = std::min(scale * 1.15, 10.0);
                        } else if (rate < 0.45) {
                            scale = std::max(scale / 1.15, 1e-3);
                        }
                        acc_window = 0.0;
                        window = 0;
                    }
                }
                continue;
            }
            acc_sum += st.acceptance;
            ++acc_count;
            if ((s - cfg.burn_in) % cfg.thinning == 0) {
                measure(field, row);
                out.push_back(row);
            }
        }
        trace.acceptance[static_cast<std::size_t>(c)] =
            acc_count > 0 ? acc_sum / static_cast<double>(acc_count) : 1.0;
        trace.tuned_scale[static_cast<std::size_t>(c)] = scale;
    });
    return trace;
}

Estimate estimate_ym(const YMParams& params,
                     const std::function<Cplx(const GaugeField&)>& obs,
                     const ChainConfig& cfg) {
    const MultiTrace t = run_ym_chains(
        params, 1,
        [&](const GaugeField& f, std::vector<Cplx>& row) { row[0] = obs(f); }, cfg);
    return pooled_estimate(t.series(0));
}

namespace {

// Walks the rectangle with corner `corner`, R steps along ax_i then T along
// ax_j, multiplying link matrices; `side` marks which steps use the
// conditional-mean table instead of the raw link.
Cplx rect_value(const GaugeField& field, const TorusLattice& lattice, int n,
                int corner, int ax_i, int ax_j, int R, int T,
                const std::vector<Mat>* mh, bool mh_on_j_sides) {
    Mat q = Mat::Identity(n, n);
    int v = corner;
    auto mul_step = [&](int vertex, int dir, bool forward, bool use_mh) {
        const int e = lattice.edge_index(vertex, dir);
        const Mat& link = (use_mh && mh != nullptr) ? (*mh)[e] : field.links[e];
        if (forward) {
            q = q * link;
        } else {
            q = q * link.adjoint();
        }
    };
    const bool mh_i = mh != nullptr && !mh_on_j_sides;
    const bool mh_j = mh != nullptr && mh_on_j_sides;
    for (int s = 0; s < R; ++s) {
        mul_step(v, ax_i, true, mh_i);
        v = lattice.neighbor(v, ax_i, +1);
    }
    for (int s = 0; s < T; ++s) {
        mul_step(v, ax_j, true, mh_j);
        v = lattice.neighbor(v, ax_j, +1);
    }
    for (int s = 0; s < R; ++s) {
        v = lattice.neighbor(v, ax_i, -1);
        mul_step(v, ax_i, false, mh_i);
    }
    for (int s = 0; s < T; ++s) {
        v = lattice.neighbor(v, ax_j, -1);
        mul_step(v, ax_j, false, mh_j);
    }
    return q.trace() / static_cast<double>(n);
}

} // namespace

std::vector<Cplx> measure_rect_loops(const GaugeField& field, const YMParams& params,
                                     const std::vector<LoopSpec>& loops,
                                     bool multihit, int stride) {
    const auto& lattice = params.lattice;
    const int n = params.spec.n;
    const int d = lattice.dim();
    const int L = lattice.side();
    const bool su2 = params.spec.family == GroupFamily::SU && n == 2;
    const bool use_mh = multihit && su2 && params.beta > 0.0;

    std::vector<Mat> mh;
    if (use_mh) {
        mh.resize(static_cast<std::size_t>(lattice.n_edges()));
        const double nbeta = n * params.beta;
        for (int e = 0; e < lattice.n_edges(); ++e) {
            mh[e] = su2_conditional_mean(staple_sum(field, lattice, e), nbeta);
        }
    }

    std::vector<Cplx> out(loops.size(), Cplx(0.0, 0.0));
    for (std::size_t k = 0; k < loops.size(); ++k) {
        const int R = loops[k].R;
        const int T = loops[k].T;
        // Substitute conditional means on one pair of opposite sides; valid
        // whenever their separation (the other side, and its torus
        // complement) is >= 2, since no two substituted links then share a
        // plaquette. Prefer the longer sides.
        const std::vector<Mat>* mh_ptr = nullptr;
        bool mh_on_j = true;
        if (use_mh) {
            const bool j_ok = R >= 2 && L - R >= 2;
            const bool i_ok = T >= 2 && L - T >= 2;
            if (j_ok && (T >= R || !i_ok)) {
                mh_ptr = &mh;
                mh_on_j = true;
            } else if (i_ok) {
                mh_ptr = &mh;
                mh_on_j = false;
            }
        }

        Cplx sum(0.0, 0.0);
        long count = 0;
        for (int ax_i = 0; ax_i < d; ++ax_i) {
            for (int ax_j = 0; ax_j < d; ++ax_j) {
                if (ax_i == ax_j) {
                    continue;
                }
                for (int v = 0; v < lattice.n_vertices(); v += stride) {
                    sum += rect_value(field, lattice, n, v, ax_i, ax_j, R, T,
                                      mh_ptr, mh_on_j);
                    ++count;
                }
            }
        }
        out[k] = sum / static_cast<double>(count);
    }
    return out;
}

Cplx average_plaquette(const GaugeField& field, const YMParams& params) {
    Cplx sum(0.0, 0.0);
    const int np = params.lattice.n_plaquettes();
    for (int p = 0; p < np; ++p) {
        sum += plaquette_matrix(field, params.lattice, p).trace();
    }
    return sum / static_cast<double>(np * params.spec.n);
}

} // namespace latgauge
