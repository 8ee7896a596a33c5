#include "groverian/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "groverian/closed_form.hpp"
#include "groverian/errors.hpp"
#include "groverian/grover.hpp"
#include "groverian/io.hpp"
#include "groverian/measures.hpp"
#include "groverian/optimize.hpp"
#include "groverian/parallel.hpp"
#include "groverian/rng.hpp"
#include "groverian/state.hpp"

namespace groverian {

namespace {

constexpr double pi = 3.141592653589793;

StateVector random_real_state(Rng& rng, int n)
{
    std::vector<complex> amps(std::size_t{1} << n);
    double nrm = 0.0;
    for (auto& a : amps) {
        a = complex{rng.gaussian(), 0.0};
        nrm += std::norm(a);
    }
    nrm = std::sqrt(nrm);
    for (auto& a : amps)
        a /= nrm;
    return StateVector(n, std::move(amps));
}

StateVector random_complex_state(Rng& rng, int n)
{
    std::vector<complex> amps(std::size_t{1} << n);
    double nrm = 0.0;
    for (auto& a : amps) {
        a = complex{rng.gaussian(), rng.gaussian()};
        nrm += std::norm(a);
    }
    nrm = std::sqrt(nrm);
    for (auto& a : amps)
        a /= nrm;
    return StateVector(n, std::move(amps));
}

ProductState random_real_product(Rng& rng, int n)
{
    std::vector<double> thetas(static_cast<std::size_t>(n));
    for (auto& t : thetas)
        t = rng.uniform(-pi / 2.0, pi / 2.0);
    return ProductState::real_angles(std::move(thetas));
}

// permute qubits of a state: qubit k of the output is qubit perm[k-1] of
// the input (1-based)
StateVector permute_qubits(const StateVector& s, const std::vector<int>& perm)
{
    int n = s.qubits();
    std::vector<complex> out(s.dimension());
    for (std::uint64_t i = 0; i < s.dimension(); ++i) {
        std::uint64_t src = 0;
        for (int k = 1; k <= n; ++k) {
            std::uint64_t bit = (i >> (n - k)) & 1;
            src |= bit << (n - perm[static_cast<std::size_t>(k - 1)]);
        }
        out[i] = s.amplitude(src);
    }
    return StateVector(n, std::move(out));
}

StateVector flip_qubit(const StateVector& s, int qubit)
{
    std::uint64_t bit = std::uint64_t{1} << (s.qubits() - qubit);
    std::vector<complex> out(s.dimension());
    for (std::uint64_t i = 0; i < s.dimension(); ++i)
        out[i] = s.amplitude(i ^ bit);
    return StateVector(s.qubits(), std::move(out));
}

// real orthogonal rotation by `angle` on one qubit
StateVector rotate_qubit(const StateVector& s, int qubit, double angle)
{
    double c = std::cos(angle), sn = std::sin(angle);
    int shift = s.qubits() - qubit;
    std::uint64_t bit = std::uint64_t{1} << shift;
    std::vector<complex> out(s.amplitudes());
    for (std::uint64_t i = 0; i < s.dimension(); ++i) {
        if (i & bit)
            continue;
        complex a0 = out[i], a1 = out[i | bit];
        out[i] = c * a0 - sn * a1;
        out[i | bit] = sn * a0 + c * a1;
    }
    return StateVector(s.qubits(), std::move(out));
}

nlohmann::json describe_state(const StateVector& s)
{
    return nlohmann::json::parse(state_to_json(s));
}

struct Harness {
    VerifyOptions opts;
    std::vector<CheckResult> results;

    // deterministic per-check RNG stream
    Rng rng_for(std::uint64_t tag) const { return Rng(opts.seed * 0x9e3779b97f4a7c15ull + tag); }

    void add(CheckResult r) { results.push_back(std::move(r)); }
};

void check_involutions(Harness& h)
{
    CheckResult r;
    r.name = "oracle_diffusion_involution_norm";
    Rng rng = h.rng_for(1);
    int count = std::min(h.opts.samples, 100);
    for (int c = 0; c < count; ++c) {
        int n = 2 + c % 4;
        StateVector s = random_complex_state(rng, n);
        std::uint64_t w = rng.raw() % s.dimension();
        StateVector oo = apply_oracle(apply_oracle(s, w), w);
        StateVector dd = apply_diffusion(apply_diffusion(s));
        double worst = 0.0;
        for (std::uint64_t i = 0; i < s.dimension(); ++i) {
            worst = std::max(worst, std::abs(oo.amplitude(i) - s.amplitude(i)));
            worst = std::max(worst, std::abs(dd.amplitude(i) - s.amplitude(i)));
        }
        double norm_w = 0.0, norm_d = 0.0;
        for (std::uint64_t i = 0; i < s.dimension(); ++i) {
            norm_w += std::norm(apply_oracle(s, w).amplitude(i));
            norm_d += std::norm(apply_diffusion(s).amplitude(i));
        }
        worst = std::max({worst, std::abs(norm_w - 1.0), std::abs(norm_d - 1.0)});
        r.worst = std::max(r.worst, worst);
        if (worst > 1e-12 && r.pass) {
            r.pass = false;
            r.failing_case = describe_state(s);
        }
        ++r.cases;
    }
    h.add(std::move(r));
}

void check_trace_vs_analytic(Harness& h)
{
    CheckResult r;
    r.name = "trace_matches_analytic";
    for (int n : {3, 5}) {
        int iters = optimal_iterations(n);
        std::uint64_t w = (std::uint64_t{1} << n) - 1;
        EvolutionTrace tr = run_trace(n, w, iters);
        for (int k = 0; k <= iters; ++k) {
            const StateVector& got = tr.steps[static_cast<std::size_t>(2 * k)].state;
            StateVector want = analytic_state(n, w, k);
            double dplus = 0.0, dminus = 0.0;
            for (std::uint64_t i = 0; i < got.dimension(); ++i) {
                dplus = std::max(dplus, std::abs(got.amplitude(i) - want.amplitude(i)));
                dminus = std::max(dminus, std::abs(got.amplitude(i) + want.amplitude(i)));
            }
            double d = std::min(dplus, dminus);
            r.worst = std::max(r.worst, d);
            if (d > 1e-12)
                r.pass = false;
            ++r.cases;
        }
    }
    h.add(std::move(r));
}

void check_success_bound(Harness& h)
{
    CheckResult r;
    r.name = "success_bound_at_optimal";
    for (int n : {3, 5}) {
        std::uint64_t w = (std::uint64_t{1} << n) - 1;
        StateVector s = evolve(StateVector::uniform(n), w, optimal_iterations(n));
        double p = success_probability(s, w);
        double bound = 1.0 - 2.0 / std::sqrt(static_cast<double>(std::uint64_t{1} << n));
        r.worst = std::max(r.worst, bound - p);
        if (p < bound)
            r.pass = false;
        ++r.cases;
    }
    h.add(std::move(r));
}

void check_product_roundtrip(Harness& h)
{
    CheckResult r;
    r.name = "product_roundtrip_overlap";
    Rng rng = h.rng_for(2);
    int count = std::min(h.opts.samples, 100);
    for (int c = 0; c < count; ++c) {
        int n = 1 + c % 5;
        std::vector<double> thetas(static_cast<std::size_t>(n)), phis(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            thetas[static_cast<std::size_t>(k)] = rng.uniform(-pi / 2.0, pi / 2.0);
            phis[static_cast<std::size_t>(k)] = rng.uniform(0.0, 2.0 * pi);
        }
        ProductState p(thetas, phis);
        double d = std::abs(overlap(product_to_state(p), p) - complex{1.0, 0.0});
        r.worst = std::max(r.worst, d);
        if (d > 1e-12)
            r.pass = false;
        ++r.cases;
    }
    h.add(std::move(r));
}

void check_product_marginal_pure(Harness& h)
{
    CheckResult r;
    r.name = "product_marginal_pure";
    Rng rng = h.rng_for(3);
    int count = std::min(h.opts.samples, 100);
    for (int c = 0; c < count; ++c) {
        int n = 2 + c % 4;
        std::vector<double> thetas(static_cast<std::size_t>(n)), phis(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            thetas[static_cast<std::size_t>(k)] = rng.uniform(-pi / 2.0, pi / 2.0);
            phis[static_cast<std::size_t>(k)] = rng.uniform(0.0, 2.0 * pi);
        }
        StateVector s = product_to_state(ProductState(thetas, phis));
        for (int l = 1; l <= n; ++l) {
            double top = reduce_qubit(s, l).eigenvalues()[0];
            r.worst = std::max(r.worst, std::abs(top - 1.0));
            if (std::abs(top - 1.0) > 1e-12)
                r.pass = false;
        }
        ++r.cases;
    }
    h.add(std::move(r));
}

void check_bloch_reassembly(Harness& h)
{
    CheckResult r;
    r.name = "bloch_reassembly_identity";
    Rng rng = h.rng_for(4);
    int count = std::min(h.opts.samples, 100);
    for (int c = 0; c < count; ++c) {
        StateVector s = random_complex_state(rng, 2 + c % 4);
        int l = 1 + static_cast<int>(rng.raw() % static_cast<std::uint64_t>(s.qubits()));
        ReducedDensityMatrix rdm = reduce_qubit(s, l);
        BlochVector b = bloch_from_rdm(rdm);
        // reassemble rho = (I + b.sigma)/2 and compare
        complex r00{(1.0 + b.z) / 2.0, 0.0};
        complex r01{b.x / 2.0, -b.y / 2.0};
        complex r11{(1.0 - b.z) / 2.0, 0.0};
        double d = std::max({std::abs(r00 - rdm.rho00), std::abs(r01 - rdm.rho01),
                             std::abs(r11 - rdm.rho11)});
        r.worst = std::max(r.worst, d);
        if (d > 1e-12)
            r.pass = false;
        ++r.cases;
    }
    h.add(std::move(r));
}

void check_dominance(Harness& h, int n, bool with_grid, std::uint64_t tag, const char* name)
{
    CheckResult r;
    r.name = name;
    Rng rng = h.rng_for(tag);
    int count = h.opts.samples;
    std::vector<StateVector> states;
    states.reserve(static_cast<std::size_t>(count));
    for (int c = 0; c < count; ++c)
        states.push_back(random_real_state(rng, n));
    std::vector<double> viol(static_cast<std::size_t>(count), 0.0);
    std::vector<char> ok(static_cast<std::size_t>(count), 1);
    parallel_for(count, [&](std::int64_t c) {
        const StateVector& s = states[static_cast<std::size_t>(c)];
        double cf = closed_form_pmax(s).p_max;
        double num = numeric_pmax(s).p_max;
        double v = num - cf; // > 0 would violate the upper bound
        if (with_grid) {
            double grid = grid_pmax(s, 41).p_max;
            v = std::max(v, grid - num);
        }
        viol[static_cast<std::size_t>(c)] = v;
        ok[static_cast<std::size_t>(c)] = v <= 1e-9;
    });
    for (int c = 0; c < count; ++c) {
        r.worst = std::max(r.worst, viol[static_cast<std::size_t>(c)]);
        if (!ok[static_cast<std::size_t>(c)] && r.pass) {
            r.pass = false;
            r.failing_case = describe_state(states[static_cast<std::size_t>(c)]);
        }
        ++r.cases;
    }
    h.add(std::move(r));
}

void check_product_exactness(Harness& h)
{
    CheckResult r;
    r.name = "product_state_exactness";
    Rng rng = h.rng_for(7);
    int count = 100;
    std::vector<StateVector> states;
    for (int c = 0; c < count; ++c)
        states.push_back(product_to_state(random_real_product(rng, 3)));
    std::vector<double> dev(static_cast<std::size_t>(count), 0.0);
    parallel_for(count, [&](std::int64_t c) {
        const StateVector& s = states[static_cast<std::size_t>(c)];
        double d = std::abs(closed_form_pmax(s).p_max - 1.0);
        d = std::max(d, std::abs(numeric_pmax(s).p_max - 1.0));
        d = std::max(d, std::abs(grid_pmax(s, 41).p_max - 1.0));
        dev[static_cast<std::size_t>(c)] = d;
    });
    for (int c = 0; c < count; ++c) {
        r.worst = std::max(r.worst, dev[static_cast<std::size_t>(c)]);
        if (dev[static_cast<std::size_t>(c)] > 1e-6 && r.pass) {
            r.pass = false;
            r.failing_case = describe_state(states[static_cast<std::size_t>(c)]);
        }
        ++r.cases;
    }
    h.add(std::move(r));
}

void check_relabeling_invariance(Harness& h)
{
    CheckResult r;
    r.name = "relabeling_invariance";
    Rng rng = h.rng_for(8);
    int count = std::min(h.opts.samples, 200);
    for (int c = 0; c < count; ++c) {
        int n = (c % 4 == 3) ? 5 : 3; // mostly n=3, every fourth at n=5
        StateVector s = random_real_state(rng, n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        for (int k = n - 1; k > 0; --k)
            std::swap(perm[static_cast<std::size_t>(k)],
                      perm[rng.raw() % static_cast<std::uint64_t>(k + 1)]);
        int flip = 1 + static_cast<int>(rng.raw() % static_cast<std::uint64_t>(n));
        double p0 = closed_form_pmax(s).p_max;
        double p1 = closed_form_pmax(permute_qubits(s, perm)).p_max;
        double p2 = closed_form_pmax(flip_qubit(s, flip)).p_max;
        double d = std::max(std::abs(p1 - p0), std::abs(p2 - p0));
        r.worst = std::max(r.worst, d);
        if (d > 1e-12 && r.pass) {
            r.pass = false;
            r.failing_case = describe_state(s);
        }
        ++r.cases;
    }
    h.add(std::move(r));
}

void check_local_unitary_invariance(Harness& h)
{
    CheckResult r;
    r.name = "local_unitary_invariance_numeric";
    Rng rng = h.rng_for(9);
    int count = std::min(h.opts.samples, 50);
    NumericConfig cfg;
    cfg.starts = 64;
    std::vector<StateVector> states, rotated;
    for (int c = 0; c < count; ++c) {
        StateVector s = random_real_state(rng, 3);
        int q = 1 + static_cast<int>(rng.raw() % 3);
        double ang = rng.uniform(0.0, 2.0 * pi);
        rotated.push_back(rotate_qubit(s, q, ang));
        states.push_back(std::move(s));
    }
    std::vector<double> dev(static_cast<std::size_t>(count), 0.0);
    parallel_for(count, [&](std::int64_t c) {
        double p0 = numeric_pmax(states[static_cast<std::size_t>(c)], cfg).p_max;
        double p1 = numeric_pmax(rotated[static_cast<std::size_t>(c)], cfg).p_max;
        dev[static_cast<std::size_t>(c)] = std::abs(p1 - p0);
    });
    for (int c = 0; c < count; ++c) {
        r.worst = std::max(r.worst, dev[static_cast<std::size_t>(c)]);
        if (dev[static_cast<std::size_t>(c)] > 1e-4 && r.pass) {
            r.pass = false;
            r.failing_case = describe_state(states[static_cast<std::size_t>(c)]);
        }
        ++r.cases;
    }
    h.add(std::move(r));
}

void check_ascent_monotonicity(Harness& h)
{
    CheckResult r;
    r.name = "ascent_monotonicity";
    Rng rng = h.rng_for(10);
    int count = std::min(h.opts.samples, 200);
    for (int c = 0; c < count; ++c) {
        int n = (c % 2 == 0) ? 3 : 5;
        StateVector s = random_complex_state(rng, n);
        auto inits = als_starts(n, 1, h.opts.seed + static_cast<std::uint64_t>(c), false);
        AscentRecord rec = als_ascend(s, inits[0], 1e-12, 500);
        double drop = 0.0;
        for (std::size_t i = 1; i < rec.sweep_overlaps.size(); ++i)
            drop = std::max(drop, rec.sweep_overlaps[i - 1] - rec.sweep_overlaps[i]);
        r.worst = std::max(r.worst, drop);
        if (drop > 1e-12 && r.pass) {
            r.pass = false;
            r.failing_case = describe_state(s);
        }
        ++r.cases;
    }
    h.add(std::move(r));
}

void check_ghz_w_oracles(Harness& h)
{
    CheckResult r;
    r.name = "ghz_w_against_grid";
    StateVector ghz = StateVector::ghz(3);
    StateVector w = StateVector::w(3);
    double ghz_num = numeric_pmax(ghz).p_max;
    double ghz_grid = grid_pmax(ghz).p_max;
    double w_num = numeric_pmax(w).p_max;
    double w_grid = grid_pmax(w).p_max;
    double ghz_cf = closed_form_pmax(ghz).p_max;
    double d = std::max({std::abs(ghz_num - 0.5), std::abs(ghz_grid - 0.5),
                         std::abs(w_num - 4.0 / 9.0), std::abs(w_grid - 4.0 / 9.0)});
    double gap = ghz_cf - ghz_grid;
    r.worst = std::max(d, std::abs(gap - 0.5));
    r.pass = d <= 1e-6 && std::abs(gap - 0.5) <= 1e-6;
    r.cases = 4;
    r.detail = "ghz numeric " + std::to_string(ghz_num) + ", grid " + std::to_string(ghz_grid) +
               ", closed-form bound gap " + std::to_string(gap) + "; w numeric " +
               std::to_string(w_num);
    h.add(std::move(r));
}

void check_entropy_qubit_independence(Harness& h)
{
    CheckResult r;
    r.name = "entropy_qubit_independence";
    for (int n : {3, 5}) {
        std::uint64_t w = (std::uint64_t{1} << n) - 1;
        EvolutionTrace tr = run_trace(n, w, optimal_iterations(n));
        for (const auto& step : tr.steps) {
            double s1 = entropy_measure(step.state, 1);
            for (int l = 2; l <= n; ++l) {
                double d = std::abs(entropy_measure(step.state, l) - s1);
                r.worst = std::max(r.worst, d);
                if (d > 1e-12)
                    r.pass = false;
            }
            ++r.cases;
        }
    }
    h.add(std::move(r));
}

void check_entropy_bloch_route(Harness& h)
{
    CheckResult r;
    r.name = "entropy_bloch_vs_partial_trace";
    for (int n : {3, 5}) {
        std::uint64_t w = (std::uint64_t{1} << n) - 1;
        for (int k = 0; k <= optimal_iterations(n); ++k) {
            BlochVector b = analytic_bloch(n, k);
            double s = std::sqrt(b.x * b.x + b.y * b.y + b.z * b.z);
            s = std::min(s, 1.0);
            double lo = (1.0 - s) / 2.0, hi = (1.0 + s) / 2.0;
            double ent_bloch = 0.0;
            for (double lam : {lo, hi})
                if (lam > 1e-15)
                    ent_bloch -= lam * std::log2(lam);
            double ent_trace = entropy_measure(analytic_state(n, w, k), 1);
            double d = std::abs(ent_bloch - ent_trace);
            r.worst = std::max(r.worst, d);
            if (d > 1e-12)
                r.pass = false;
            ++r.cases;
        }
    }
    h.add(std::move(r));
}

void check_tangle_range_symmetry(Harness& h)
{
    CheckResult r;
    r.name = "tangle_range_and_symmetry";
    Rng rng = h.rng_for(11);
    int count = h.opts.samples;
    for (int c = 0; c < count; ++c) {
        StateVector s = random_real_state(rng, 3);
        double t = three_tangle(s);
        double bad = std::max(-t, t - (1.0 + 1e-12));
        const std::vector<std::vector<int>> perms{{1, 3, 2}, {2, 1, 3}, {3, 2, 1}, {2, 3, 1}};
        for (const auto& perm : perms)
            bad = std::max(bad, std::abs(three_tangle(permute_qubits(s, perm)) - t));
        r.worst = std::max(r.worst, bad);
        if (bad > 1e-12 && r.pass) {
            r.pass = false;
            r.failing_case = describe_state(s);
        }
        ++r.cases;
    }
    h.add(std::move(r));
}

void check_kernel_reference_equivalence(Harness& h)
{
    CheckResult r;
    r.name = "kernel_reference_equivalence";
    Rng rng = h.rng_for(12);
    int count = std::min(h.opts.samples, 100);
    for (int c = 0; c < count; ++c) {
        int n = 1 + c % 6;
        StateVector s = random_real_state(rng, n);
        double d = std::abs(closed_form_pmax(s).p_max - reference::closed_form_pmax(s));
        if (n <= 3 && c % 10 == 0) {
            // the production scan must dominate the plain serial scan and
            // stay a valid lower bound
            double scan = reference::grid_scan(s, 31);
            double prod = grid_pmax(s, 31).p_max;
            d = std::max(d, scan - prod);
        }
        if (c % 20 == 0) {
            NumericConfig cfg;
            cfg.starts = 16;
            double a = numeric_pmax(s, cfg).p_max;
            double b = reference::numeric_pmax(s, cfg).p_max;
            if (a != b)
                d = std::max(d, std::abs(a - b) + 1.0); // parallel merge must be exact
        }
        r.worst = std::max(r.worst, d);
        if (d > 1e-12 && r.pass) {
            r.pass = false;
            r.failing_case = describe_state(s);
        }
        ++r.cases;
    }
    h.add(std::move(r));
}

void check_operational_bridge(Harness& h)
{
    CheckResult r;
    r.name = "operational_vs_pmax";
    StateVector uni = StateVector::uniform(3);
    MeasureResult num = numeric_pmax(uni);
    double avg = 0.0;
    for (std::uint64_t w = 0; w < 8; ++w)
        avg += operational_success(3, w, 2, *num.maximizer);
    avg /= 8.0;
    double gap = std::abs(avg - num.p_max);
    r.worst = gap;
    r.pass = gap <= 0.35; // O(1/sqrt(N)) slack at N = 8
    r.cases = 8;
    r.detail = "avg success " + std::to_string(avg) + " vs p_max " + std::to_string(num.p_max);
    h.add(std::move(r));
}

} // namespace

VerifyReport run_verify(const VerifyOptions& opts)
{
    if (opts.samples < 1)
        throw config_error("verify: samples must be >= 1");
    Harness h{opts, {}};
    check_involutions(h);
    check_trace_vs_analytic(h);
    check_success_bound(h);
    check_product_roundtrip(h);
    check_product_marginal_pure(h);
    check_bloch_reassembly(h);
    check_dominance(h, 3, true, 5, "dominance_n3");
    check_dominance(h, 5, false, 6, "dominance_n5");
    check_product_exactness(h);
    check_relabeling_invariance(h);
    check_local_unitary_invariance(h);
    check_ascent_monotonicity(h);
    check_ghz_w_oracles(h);
    check_entropy_qubit_independence(h);
    check_entropy_bloch_route(h);
    check_tangle_range_symmetry(h);
    check_kernel_reference_equivalence(h);
    check_operational_bridge(h);

    VerifyReport rep{opts, std::move(h.results), true};
    for (const auto& c : rep.checks)
        rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

nlohmann::json verify_report_json(const VerifyReport& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json j{{"name", c.name}, {"pass", c.pass}, {"cases", c.cases}, {"worst", c.worst}};
        if (!c.detail.empty())
            j["detail"] = c.detail;
        if (!c.failing_case.is_null())
            j["failing_case"] = c.failing_case;
        checks.push_back(std::move(j));
    }
    return nlohmann::json{{"samples", r.options.samples},
                          {"seed", r.options.seed},
                          {"checks", checks},
                          {"all_pass", r.all_pass}};
}

} // namespace groverian
