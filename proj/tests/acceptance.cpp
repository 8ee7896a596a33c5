// Reproduction acceptance suite. Every tolerance is pinned here; each
// criterion prints one PASS/FAIL line. Exit code is the number of failed
// criteria.
//
// Run all criteria:          groverian_acceptance
// Run a single criterion:    groverian_acceptance --criterion 3

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "groverian/closed_form.hpp"
#include "groverian/grover.hpp"
#include "groverian/measures.hpp"
#include "groverian/optimize.hpp"
#include "groverian/report.hpp"
#include "groverian/verify.hpp"

using namespace groverian;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Criterion {
    int id;
    bool pass;
    std::string message;
};

Criterion criterion_1()
{
    auto t0 = clock_type::now();
    EvolutionTrace tr = run_trace(3, 7, 2);
    std::vector<double> g;
    for (const auto& step : tr.steps)
        g.push_back(closed_form_pmax(step.state).g);
    double elapsed = seconds_since(t0);

    const double published[] = {0.0, 0.38, 0.27, 0.29, 0.15};
    bool ok = elapsed < 1.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        worst = std::max(worst, std::abs(g[i] - published[i]));
        ok = ok && std::abs(g[i] - published[i]) <= 0.005;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "three-qubit Groverian column (%.4f, %.4f, %.4f, %.4f, %.4f), "
                  "max |delta| %.4f (tol 0.005), %.3f s",
                  g[0], g[1], g[2], g[3], g[4], worst, elapsed);
    return {1, ok, buf};
}

// Inline evaluation of the residual-tangle polynomial, independent of the
// library implementation: the oracle for criterion 2.
double tangle_oracle(const StateVector& s)
{
    auto v = s.real_amplitudes();
    auto a = [&](unsigned b1, unsigned b2, unsigned b3) { return v[(b1 << 2) | (b2 << 1) | b3]; };
    double d1 = 0.0, d2 = 0.0, d3 = 0.0;
    for (unsigned i = 0; i < 8; ++i) {
        unsigned j = 7 - i; // complementary basis label
        if (i < j)
            d1 += a(i >> 2, (i >> 1) & 1, i & 1) * a(i >> 2, (i >> 1) & 1, i & 1) *
                  a(j >> 2, (j >> 1) & 1, j & 1) * a(j >> 2, (j >> 1) & 1, j & 1);
    }
    const unsigned pairs[3][4] = {{0, 7, 3, 4}, {0, 7, 5, 2}, {0, 7, 6, 1}};
    auto amp = [&](unsigned i) { return v[i]; };
    d2 = amp(0) * amp(7) * amp(3) * amp(4) + amp(0) * amp(7) * amp(5) * amp(2) +
         amp(0) * amp(7) * amp(6) * amp(1) + amp(3) * amp(4) * amp(5) * amp(2) +
         amp(3) * amp(4) * amp(6) * amp(1) + amp(5) * amp(2) * amp(6) * amp(1);
    d3 = amp(0) * amp(6) * amp(5) * amp(3) + amp(7) * amp(1) * amp(2) * amp(4);
    (void)pairs;
    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

Criterion criterion_2()
{
    EvolutionTrace tr = run_trace(3, 7, 2);
    std::vector<double> t;
    for (const auto& step : tr.steps)
        t.push_back(three_tangle(step.state));

    const double published[] = {0.0, 0.25, 0.0625, 0.1406};
    bool ok = true;
    for (int i = 0; i < 4; ++i)
        ok = ok && std::abs(t[static_cast<std::size_t>(i)] - published[i]) <= 0.0005;

    // final row: agree with an independent evaluation on the analytic
    // state, and flag the published 0.0224 instead of matching it
    double brute = tangle_oracle(analytic_state(3, 7, 2));
    ok = ok && std::abs(t[4] - brute) <= 1e-12;
    NumericConfig cfg;
    cfg.starts = 16;
    TraceReport rep = build_trace_report(3, 7, 2, cfg, true);
    ok = ok && rep.rows[4].tangle_flag;

    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "tangle column rows 1-4 within 0.0005; final row %.6f vs independent "
                  "evaluation %.6f (published 0.0224 flagged: %s)",
                  t[4], brute, rep.rows[4].tangle_flag ? "yes" : "no");
    return {2, ok, buf};
}

Criterion criterion_3()
{
    auto t0 = clock_type::now();
    EvolutionTrace tr = run_trace(5, 31, 4);
    std::vector<double> g;
    for (const auto& step : tr.steps)
        g.push_back(closed_form_pmax(step.state).g);
    double elapsed = seconds_since(t0);

    NumericConfig cfg;
    TraceReport rep = build_trace_report(5, 31, 4, cfg, true);

    const double published[] = {0.0, 0.24, 0.23, 0.57, 0.34, 0.38, 0.22, 0.21, 0.03};
    bool ok = elapsed < 5.0;
    int in_tol = 0;
    std::string outliers;
    for (std::size_t i = 0; i < g.size(); ++i) {
        double delta = std::abs(g[i] - published[i]);
        if (delta <= 0.01) {
            ++in_tol;
            continue;
        }
        // out-of-tolerance rows must be flagged and accompanied by the
        // maximizer-oracle value, and the closed form must stay an upper
        // bound on it
        const TraceReportRow& row = rep.rows[i];
        bool accompanied = row.g_flag && row.p_closed >= row.p_numeric - 1e-9;
        bool noted = false;
        for (const auto& note : rep.notes)
            noted = noted || (note.find(row.label) != std::string::npos &&
                              note.find("oracle p_max") != std::string::npos);
        ok = ok && accompanied && noted;
        char frag[120];
        std::snprintf(frag, sizeof(frag), " [row %zu: %.4f vs published %.2f, oracle p %.4f]",
                      i + 1, g[i], published[i], row.p_numeric);
        outliers += frag;
    }
    char buf[320];
    std::snprintf(buf, sizeof(buf),
                  "five-qubit Groverian column: %d/9 rows within 0.01, %.3f s;%s",
                  in_tol, elapsed, outliers.empty() ? " no outliers" : outliers.c_str());
    return {3, ok, buf};
}

std::string read_file(const std::string& path)
{
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (f == nullptr)
        return {};
    std::string out;
    char chunk[4096];
    std::size_t got;
    while ((got = std::fread(chunk, 1, sizeof(chunk), f)) > 0)
        out.append(chunk, got);
    std::fclose(f);
    return out;
}

Criterion criterion_4()
{
    bool ok = true;
    std::string n3 = read_file(GROVERIAN_GOLDEN_DIR "/groups_n3.txt");
    ok = ok && !n3.empty() && render_groups(3) == n3;

    std::string n5 = read_file(GROVERIAN_GOLDEN_DIR "/groups_n5_first6.txt");
    std::string got = render_groups(5);
    // compare the first six lines token for token
    std::size_t pos = 0;
    for (int line = 0; line < 6 && ok; ++line) {
        std::size_t next = got.find('\n', pos);
        std::size_t wnext = n5.find('\n');
        ok = next != std::string::npos && wnext != std::string::npos &&
             got.substr(pos, next - pos) == n5.substr(0, wnext);
        n5.erase(0, wnext + 1);
        pos = next + 1;
    }
    return {4, ok, "sign-group renderings match the transcribed expressions (4 three-qubit "
                   "radicals, first 6 five-qubit radicals)"};
}

Criterion criterion_5()
{
    // (a) uniform states: exactly zero entropy
    double s3 = entropy_measure(StateVector::uniform(3), 1);
    double s5 = entropy_measure(StateVector::uniform(5), 1);
    bool a = s3 == 0.0 && s5 == 0.0;

    // (b) published final-row entropy for the five-qubit run is 0; direct
    // computation must agree within 1e-3
    StateVector fin = evolve(StateVector::uniform(5), 31, 4);
    double sfin = entropy_measure(fin, 1);
    bool b = std::abs(sfin) <= 1e-3;

    // (c) closed-form Bloch route equals the partial trace at full iterations
    bool c = true;
    double worst = 0.0;
    for (int n : {3, 5}) {
        std::uint64_t w = (std::uint64_t{1} << n) - 1;
        for (int k = 0; k <= optimal_iterations(n); ++k) {
            BlochVector bl = analytic_bloch(n, k);
            double s = std::min(1.0, std::sqrt(bl.x * bl.x + bl.y * bl.y + bl.z * bl.z));
            double ent = 0.0;
            for (double lam : {(1.0 - s) / 2.0, (1.0 + s) / 2.0})
                if (lam > 1e-15)
                    ent -= lam * std::log2(lam);
            double d = std::abs(ent - entropy_measure(analytic_state(n, w, k), 1));
            worst = std::max(worst, d);
            c = c && d <= 1e-12;
        }
    }

    char buf[300];
    std::snprintf(buf, sizeof(buf),
                  "uniform entropy exactly 0: %s; final five-qubit entropy %.6f vs published 0 "
                  "(bound 1e-3): %s; Bloch route == partial trace (worst %.2e): %s",
                  a ? "yes" : "no", sfin, b ? "yes" : "no (known discrepancy, see report notes)",
                  worst, c ? "yes" : "no");
    return {5, a && b && c, buf};
}

Criterion criterion_6()
{
    EvolutionTrace tr3 = run_trace(3, 7, 2);
    double p3 = success_probability(tr3.steps[4].state, 7);
    double want3 = std::pow(std::sin(iteration_angle(3, 2).theta_k), 2);

    EvolutionTrace tr5 = run_trace(5, 31, 4);
    double p5 = success_probability(tr5.steps[8].state, 31);
    double want5 = std::pow(std::sin(iteration_angle(5, 4).theta_k), 2);

    bool ok = std::abs(p3 - want3) <= 1e-9 && std::abs(p5 - want5) <= 1e-9;

    double worst = 0.0;
    for (int n : {3, 5}) {
        std::uint64_t w = (std::uint64_t{1} << n) - 1;
        EvolutionTrace tr = run_trace(n, w, optimal_iterations(n));
        for (int k = 0; k <= optimal_iterations(n); ++k) {
            const StateVector& got = tr.steps[static_cast<std::size_t>(2 * k)].state;
            StateVector want = analytic_state(n, w, k);
            double dplus = 0.0, dminus = 0.0;
            for (std::uint64_t i = 0; i < got.dimension(); ++i) {
                dplus = std::max(dplus, std::abs(got.amplitude(i) - want.amplitude(i)));
                dminus = std::max(dminus, std::abs(got.amplitude(i) + want.amplitude(i)));
            }
            worst = std::max(worst, std::min(dplus, dminus));
        }
    }
    ok = ok && worst <= 1e-12;

    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "success after 2 iters (n=3) %.9f = sin^2(5 th0) %.9f; after 4 iters (n=5) "
                  "%.9f = sin^2(9 th0) %.9f; trace vs analytic worst %.2e",
                  p3, want3, p5, want5, worst);
    return {6, ok, buf};
}

Criterion criterion_7()
{
    auto t0 = clock_type::now();
    VerifyOptions opts;
    opts.samples = 1000;
    opts.seed = 42;
    VerifyReport rep = run_verify(opts);
    double elapsed = seconds_since(t0);

    const char* required[] = {"dominance_n3", "dominance_n5", "product_state_exactness",
                              "relabeling_invariance", "ascent_monotonicity",
                              "ghz_w_against_grid"};
    bool ok = elapsed < 60.0 && rep.all_pass;
    std::string missing;
    for (const char* name : required) {
        bool found = false;
        for (const auto& c : rep.checks)
            if (c.name == name) {
                found = true;
                ok = ok && c.pass;
            }
        if (!found) {
            ok = false;
            missing += std::string(" ") + name + "?";
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "property suite: %zu checks, all_pass %s, %.1f s (limit 60)%s",
                  rep.checks.size(), rep.all_pass ? "yes" : "no", elapsed, missing.c_str());
    return {7, ok, buf};
}

Criterion criterion_8()
{
    StateVector uni = StateVector::uniform(3);
    MeasureResult num = numeric_pmax(uni);
    double avg = 0.0;
    for (std::uint64_t w = 0; w < 8; ++w)
        avg += operational_success(3, w, 2, *num.maximizer);
    avg /= 8.0;
    double gap = std::abs(avg - num.p_max);
    bool ok = gap <= 0.35; // loose O(1/sqrt(N)) consistency bound at N=8
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "operational average over 8 marked states %.6f vs numeric p_max %.6f, "
                  "gap %.4f (bound 0.35)",
                  avg, num.p_max, gap);
    return {8, ok, buf};
}

} // namespace

int main(int argc, char** argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);
    }

    Criterion (*suite[])() = {criterion_1, criterion_2, criterion_3, criterion_4,
                              criterion_5, criterion_6, criterion_7, criterion_8};
    int failures = 0;
    for (int i = 0; i < 8; ++i) {
        if (only != 0 && i + 1 != only)
            continue;
        Criterion c = suite[i]();
        std::printf("criterion %d: %s  %s\n", c.id, c.pass ? "PASS" : "FAIL", c.message.c_str());
        failures += c.pass ? 0 : 1;
    }
    return failures;
}
