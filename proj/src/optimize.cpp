#include "groverian/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "groverian/errors.hpp"
#include "groverian/grover.hpp"
#include "groverian/parallel.hpp"
#include "groverian/rng.hpp"

namespace groverian {

namespace {

constexpr double pi = 3.141592653589793;

// Contraction of the state against every local vector except qubit k
// (1-based). Folds trailing qubits first, then leading ones: O(2^n).
LocalVector contract_except(const std::vector<complex>& amps,
                            const std::vector<LocalVector>& us, int n, int k)
{
    std::vector<complex> cur(amps);
    for (int q = n; q > k; --q) {
        complex c0 = std::conj(us[q - 1][0]);
        complex c1 = std::conj(us[q - 1][1]);
        std::size_t half = cur.size() / 2;
        for (std::size_t r = 0; r < half; ++r)
            cur[r] = c0 * cur[2 * r] + c1 * cur[2 * r + 1];
        cur.resize(half);
    }
    for (int q = 1; q < k; ++q) {
        complex c0 = std::conj(us[q - 1][0]);
        complex c1 = std::conj(us[q - 1][1]);
        std::size_t half = cur.size() / 2;
        for (std::size_t r = 0; r < half; ++r)
            cur[r] = c0 * cur[r] + c1 * cur[r + half];
        cur.resize(half);
    }
    return {cur[0], cur[1]};
}

ProductState product_state_from_vectors(const std::vector<LocalVector>& us, bool state_real)
{
    std::vector<double> thetas(us.size()), phis(us.size());
    for (std::size_t k = 0; k < us.size(); ++k) {
        double m0 = std::abs(us[k][0]);
        double m1 = std::abs(us[k][1]);
        double theta = std::atan2(m1, m0); // in [0, pi/2]
        double phi = 0.0;
        if (m1 > 1e-15 && m0 > 1e-15) {
            phi = std::arg(us[k][1] * std::conj(us[k][0]));
            if (phi < 0.0)
                phi += 2.0 * pi;
        }
        if (state_real) {
            // fold a pi phase into the doubled theta range
            if (std::abs(phi - pi) < 1e-9) {
                theta = -theta;
                phi = 0.0;
            } else if (phi < 1e-9 || 2.0 * pi - phi < 1e-9) {
                phi = 0.0;
            }
        }
        thetas[k] = theta;
        phis[k] = phi;
    }
    return ProductState(std::move(thetas), std::move(phis));
}

struct StartOutcome {
    double p = -1.0;
    std::vector<LocalVector> vectors;
};

std::vector<StartOutcome> run_starts(const StateVector& s, const NumericConfig& cfg,
                                     bool parallel)
{
    if (cfg.starts < 1)
        throw config_error("numeric_pmax: starts must be >= 1");
    if (cfg.tol <= 0.0)
        throw config_error("numeric_pmax: tol must be > 0");
    auto inits = als_starts(s.qubits(), cfg.starts, cfg.seed, s.is_real());
    std::vector<StartOutcome> outcomes(static_cast<std::size_t>(cfg.starts));
    auto body = [&](std::int64_t i) {
        AscentRecord rec = als_ascend(s, inits[static_cast<std::size_t>(i)],
                                      cfg.tol, cfg.max_iters);
        outcomes[static_cast<std::size_t>(i)] =
            StartOutcome{rec.overlap * rec.overlap, std::move(rec.vectors)};
    };
    if (parallel)
        parallel_for(cfg.starts, body);
    else
        for (std::int64_t i = 0; i < cfg.starts; ++i)
            body(i);
    return outcomes;
}

MeasureResult merge_starts(const StateVector& s, std::vector<StartOutcome> outcomes)
{
    // max by value, ties broken by lowest start index: identical result
    // no matter how the starts were scheduled
    std::size_t best = 0;
    for (std::size_t i = 1; i < outcomes.size(); ++i)
        if (outcomes[i].p > outcomes[best].p)
            best = i;
    double p = outcomes[best].p;
    if (p > 1.0)
        p = 1.0;
    if (p < 0.0)
        p = 0.0;
    MeasureResult res{p, std::sqrt(1.0 - p), Method::numeric,
                      product_state_from_vectors(outcomes[best].vectors, s.is_real())};
    return res;
}

} // namespace

AscentRecord als_ascend(const StateVector& s, std::vector<LocalVector> us,
                        double tol, int max_iters)
{
    int n = s.qubits();
    if (static_cast<int>(us.size()) != n)
        throw std::domain_error("als_ascend: wrong number of local vectors");
    const auto& amps = s.amplitudes();
    AscentRecord rec;
    double prev = -1.0;
    for (int sweep = 0; sweep < max_iters; ++sweep) {
        double f = 0.0;
        for (int k = 1; k <= n; ++k) {
            LocalVector v = contract_except(amps, us, n, k);
            double nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
            if (nv > 0.0) {
                us[k - 1] = {v[0] / nv, v[1] / nv};
                f = nv;
            }
        }
        rec.sweep_overlaps.push_back(f);
        if (f - prev < tol)
            break;
        prev = f;
    }
    rec.overlap = rec.sweep_overlaps.empty() ? 0.0 : rec.sweep_overlaps.back();
    rec.vectors = std::move(us);
    return rec;
}

std::vector<std::vector<LocalVector>> als_starts(int n, int starts, std::uint64_t seed,
                                                 bool real_vectors)
{
    Rng rng(seed);
    std::vector<std::vector<LocalVector>> inits(static_cast<std::size_t>(starts));
    for (auto& vecs : inits) {
        vecs.resize(static_cast<std::size_t>(n));
        for (auto& u : vecs) {
            complex a{rng.gaussian(), real_vectors ? 0.0 : rng.gaussian()};
            complex b{rng.gaussian(), real_vectors ? 0.0 : rng.gaussian()};
            double nv = std::sqrt(std::norm(a) + std::norm(b));
            u = {a / nv, b / nv};
        }
    }
    return inits;
}

MeasureResult numeric_pmax(const StateVector& s, const NumericConfig& cfg)
{
    return merge_starts(s, run_starts(s, cfg, true));
}

namespace {

// |<e(thetas)|Psi>|^2 for real thetas, phases zero.
double real_overlap_sq(const std::vector<double>& amps, const std::vector<double>& thetas)
{
    std::vector<double> cur(amps);
    for (int k = static_cast<int>(thetas.size()); k >= 1; --k) {
        double c = std::cos(thetas[k - 1]);
        double sn = std::sin(thetas[k - 1]);
        std::size_t half = cur.size() / 2;
        for (std::size_t r = 0; r < half; ++r)
            cur[r] = c * cur[2 * r] + sn * cur[2 * r + 1];
        cur.resize(half);
    }
    return cur[0] * cur[0];
}

struct GridBest {
    double p = -1.0;
    std::uint64_t index = 0; // linear grid index, lowest wins ties
};

GridBest better(GridBest a, GridBest b)
{
    if (a.p > b.p || (a.p == b.p && a.index <= b.index))
        return a;
    return b;
}

} // namespace

MeasureResult grid_pmax(const StateVector& s, int resolution)
{
    int n = s.qubits();
    if (n > 3)
        throw config_error("grid_pmax supports n <= 3, got n = " + std::to_string(n));
    if (resolution < 8)
        throw config_error("grid_pmax: resolution must be >= 8");
    auto amps = s.real_amplitudes();

    std::vector<double> angle(static_cast<std::size_t>(resolution));
    std::vector<double> ct(angle.size()), st(angle.size());
    for (int t = 0; t < resolution; ++t) {
        angle[t] = -pi / 2.0 + pi * static_cast<double>(t) / (resolution - 1);
        ct[t] = std::cos(angle[t]);
        st[t] = std::sin(angle[t]);
    }

    // scan, folding one qubit per nesting level
    std::vector<GridBest> partial(static_cast<std::size_t>(resolution));
    parallel_for(resolution, [&](std::int64_t t1) {
        GridBest loc;
        std::vector<double> b1(amps.size() / 2);
        if (n == 1) {
            double f = ct[t1] * amps[0] + st[t1] * amps[1];
            loc = better(loc, GridBest{f * f, static_cast<std::uint64_t>(t1)});
        } else {
            std::size_t half = amps.size() / 2;
            for (std::size_t r = 0; r < half; ++r)
                b1[r] = ct[t1] * amps[r] + st[t1] * amps[r + half];
            for (int t2 = 0; t2 < resolution; ++t2) {
                if (n == 2) {
                    double f = ct[t2] * b1[0] + st[t2] * b1[1];
                    std::uint64_t idx = static_cast<std::uint64_t>(t1) * resolution + t2;
                    loc = better(loc, GridBest{f * f, idx});
                } else {
                    double c0 = ct[t2] * b1[0] + st[t2] * b1[2];
                    double c1 = ct[t2] * b1[1] + st[t2] * b1[3];
                    for (int t3 = 0; t3 < resolution; ++t3) {
                        double f = ct[t3] * c0 + st[t3] * c1;
                        std::uint64_t idx =
                            (static_cast<std::uint64_t>(t1) * resolution + t2) * resolution + t3;
                        loc = better(loc, GridBest{f * f, idx});
                    }
                }
            }
        }
        partial[static_cast<std::size_t>(t1)] = loc;
    });
    GridBest best;
    for (const auto& loc : partial)
        best = better(best, loc);

    std::vector<double> thetas(static_cast<std::size_t>(n));
    std::uint64_t idx = best.index;
    for (int k = n; k >= 1; --k) {
        thetas[k - 1] = angle[idx % resolution];
        idx /= resolution;
    }

    // per-coordinate golden-section ascent around the best grid point
    double p = best.p;
    double h = pi / (resolution - 1);
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int round = 0; round < 50; ++round) {
        for (int k = 0; k < n; ++k) {
            double a = thetas[k] - h, b = thetas[k] + h;
            double c = b - invphi * (b - a);
            double d = a + invphi * (b - a);
            for (int it = 0; it < 32; ++it) {
                thetas[k] = c;
                double fc = real_overlap_sq(amps, thetas);
                thetas[k] = d;
                double fd = real_overlap_sq(amps, thetas);
                if (fc > fd) {
                    b = d;
                    d = c;
                    c = b - invphi * (b - a);
                } else {
                    a = c;
                    c = d;
                    d = a + invphi * (b - a);
                }
            }
            thetas[k] = (a + b) / 2.0;
        }
        h = std::max(h * 0.5, 1e-9);
    }
    // |overlap|^2 is pi-periodic per coordinate (theta -> theta - pi flips
    // the local vector's sign), so refined angles wrap back into range
    for (double& th : thetas)
        th -= pi * std::round(th / pi);
    double refined = real_overlap_sq(amps, thetas);
    if (refined < p) {
        // keep the maximizer consistent with the reported value
        std::uint64_t rest = best.index;
        for (int k = n; k >= 1; --k) {
            thetas[k - 1] = angle[rest % resolution];
            rest /= resolution;
        }
    } else {
        p = refined;
    }
    if (p > 1.0)
        p = 1.0;
    return MeasureResult{p, std::sqrt(1.0 - p), Method::grid,
                         ProductState::real_angles(thetas)};
}

double operational_success(int n, std::uint64_t marked, int iterations, const ProductState& p)
{
    if (p.qubits() != n)
        throw std::domain_error("operational_success: qubit counts differ");
    StateVector s = evolve(product_to_state(p), marked, iterations);
    return success_probability(s, marked);
}

namespace reference {

MeasureResult numeric_pmax(const StateVector& s, const NumericConfig& cfg)
{
    return merge_starts(s, run_starts(s, cfg, false));
}

double grid_scan(const StateVector& s, int resolution)
{
    int n = s.qubits();
    if (n > 3)
        throw config_error("grid_scan supports n <= 3");
    auto amps = s.real_amplitudes();
    std::vector<double> angle(static_cast<std::size_t>(resolution));
    for (int t = 0; t < resolution; ++t)
        angle[t] = -pi / 2.0 + pi * static_cast<double>(t) / (resolution - 1);
    std::vector<double> thetas(static_cast<std::size_t>(n), 0.0);
    std::vector<int> ix(static_cast<std::size_t>(n), 0);
    double best = -1.0;
    bool done = false;
    while (!done) {
        for (int k = 0; k < n; ++k)
            thetas[k] = angle[ix[k]];
        best = std::max(best, real_overlap_sq(amps, thetas));
        int k = n - 1;
        while (k >= 0 && ++ix[k] == resolution) {
            ix[k] = 0;
            --k;
        }
        done = k < 0;
    }
    return best;
}

} // namespace reference

} // namespace groverian
