// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sepgeo/cli_app.hpp"
#include "sepgeo/division.hpp"
#include "sepgeo/exposure.hpp"
#include "sepgeo/fit.hpp"
#include "sepgeo/graph.hpp"
#include "sepgeo/json_io.hpp"
#include "sepgeo/separator.hpp"
#include "test_util.hpp"

using namespace sepgeo;

namespace {

// Frozen acceptance constants.
constexpr double kPointCoverConstant = 1.0;   // C_pt  in  max family <= C_pt / sigma^2
constexpr double kDensityConstant = 0.25;     // C_dens in  density_lb <= C_dens * sigma^-6
constexpr double kGrowthFitLo = 1.2, kGrowthFitHi = 2.0;
constexpr double kGridFitLo = 0.4, kGridFitHi = 0.65;

struct Outcome {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<Outcome> g_results;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    g_results.push_back({id, name, pass, detail});
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int prec = 3) {
    std::ostringstream os;
    os.precision(prec);
    os << std::fixed << v;
    return os.str();
}

// -------------------------------------------------------------------------
// 1. Separator certificate suite
// -------------------------------------------------------------------------

void criterion_separator_suite() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20250809);
    std::uniform_int_distribution<int> pick_l(1, 8), pick_h(2, 12);

    int total = 0, valid = 0, minors = 0;
    double max_ratio = 0.0;
    bool balance_ok = true;
    for (int t = 0; t < 500; ++t) {
        Graph g;
        switch (t % 4) {
            case 0: {
                int r = 4 + static_cast<int>(rng() % 67);
                int c = 4 + static_cast<int>(rng() % 67);
                g = grid_graph(r, c);  // up to 70x70 = 4900
                break;
            }
            case 1: {
                int n = 50 + static_cast<int>(rng() % 4951);  // up to 5000
                g = testutil::random_sparse(n, 3 * n, rng());
                break;
            }
            case 2: g = testutil::clique(2 + static_cast<int>(rng() % 11)); break;
            default: {
                Graph a = grid_graph(3 + static_cast<int>(rng() % 20),
                                     3 + static_cast<int>(rng() % 20));
                Graph b = testutil::random_sparse(40 + static_cast<int>(rng() % 400), 900, rng());
                g = testutil::disjoint_union(a, b);
            }
        }
        int l = pick_l(rng), h = pick_h(rng);
        auto out = prs_separate(g, l, h);
        ++total;
        if (out.is_minor()) {
            ++minors;
            if (validate_minor(g, out.minor()).all_pass() &&
                out.minor().depth <= minor_depth_budget(g.vertex_count(), l))
                ++valid;
        } else {
            auto rep = validate_separator(g, VertexSet::full(g.vertex_count()), out.separator());
            if (!rep.find("balance")->pass) balance_ok = false;
            double bound = separator_size_bound(g.vertex_count(), l, h);
            double ratio = static_cast<double>(out.separator().S.size()) / bound;
            max_ratio = std::max(max_ratio, ratio);
            if (rep.all_pass() && ratio <= 1.0) ++valid;
        }
    }
    double secs = seconds_since(t0);
    bool pass = valid == total && balance_ok && secs < 60.0;
    report(1, "separator-certificate-suite", pass,
           std::to_string(valid) + "/" + std::to_string(total) + " certificates valid (" +
               std::to_string(minors) + " minors), max size ratio " + fmt(max_ratio) +
               " of C_impl*(n/l+4lh^2 log n) with C_impl=" + fmt(kSizeConstant, 1) + ", " +
               fmt(secs, 1) + "s (< 60s)");
}

// -------------------------------------------------------------------------
// 2. Expansion schedule exactness
// -------------------------------------------------------------------------

void criterion_schedule() {
    bool pass = true;
    std::string detail;
    for (int k : {1, 2, 3}) {
        for (Vertex n : {64, 1024, 4096, 5000}) {
            for (double c : {0.1, 1.0, 12.0}) {
                Schedule s = make_schedule(n, {k, c});
                double lg = clamped_log2(static_cast<double>(n));
                double alpha = 1.0 / (2.0 * k + 2.0);
                double z = std::pow(static_cast<double>(n) * lg, alpha);
                int l = static_cast<int>(std::max<long long>(1, std::llround(z / lg)));
                int h = std::max(2, static_cast<int>(std::ceil(c * std::pow(z, k))));
                if (s.alpha != alpha || s.z != z || s.l != l || s.h != h) {
                    pass = false;
                    detail = "mismatch at k=" + std::to_string(k) + " n=" + std::to_string(n);
                }
            }
        }
    }
    Schedule s = make_schedule(4096, {1, 1.0});
    if (std::abs(s.z - 14.8897) > 1e-3 || s.l != 1 || s.alpha != 0.25) {
        pass = false;
        detail = "documented n=4096,k=1 values off";
    }
    if (pass) detail = "alpha = 1/(2k+2) exact, z/l/h match direct evaluation for k in {1,2,3}";
    report(2, "expansion-schedule", pass, detail);
}

// -------------------------------------------------------------------------
// 3. Division excess on grids
// -------------------------------------------------------------------------

void criterion_division_excess() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string worst;
    for (int side : {16, 32, 48, 64}) {
        Graph g = grid_graph(side, side);
        long long n = g.vertex_count();
        for (double eps : {0.1, 0.25, 0.5}) {
            DivisionParams p;
            p.eps = eps;
            auto res = build_division(g, p, oracle_grid_median());
            long long allowed = static_cast<long long>(eps * static_cast<double>(n));
            bool ok = res.division.total_excess <= allowed;
            for (const auto& c : res.division.clusters)
                if (static_cast<double>(c.size()) > res.schedule.b) ok = false;
            if (!validate_division(g, res.division, res.schedule.b).all_pass()) ok = false;
            if (!weakly_hyperfinite_check(g, res.division, res.schedule.b).all_pass()) ok = false;
            if (!ok) {
                pass = false;
                worst = "failed at side=" + std::to_string(side) + " eps=" + fmt(eps, 2);
            }
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 30.0) pass = false;
    report(3, "division-excess", pass,
           (pass ? "grids 16..64 squared, eps in {0.1,0.25,0.5}: excess <= eps*n, all validators green"
                 : worst) +
               ", " + fmt(secs, 1) + "s (< 30s)");
}

// -------------------------------------------------------------------------
// 4. Scaling fit + bit-exact bench
// -------------------------------------------------------------------------

void criterion_scaling_fit() {
    cli::BenchArgs args;
    args.family = "grid";
    args.sizes = "16,32,64,128";
    cli::CommonOpts common;
    json a = cli::bench_grid(args, common);
    json b = cli::bench_grid(args, common);
    bool repro = a.dump() == b.dump();
    double exponent = a["fit"].contains("exponent") ? a["fit"]["exponent"].get<double>() : -1.0;
    bool pass = repro && exponent >= kGridFitLo && exponent <= kGridFitHi;
    report(4, "scaling-fit", pass,
           "fitted exponent " + fmt(exponent) + " in [" + fmt(kGridFitLo, 2) + ", " +
               fmt(kGridFitHi, 2) + "], bench report " + (repro ? "bit-exact" : "NOT bit-exact") +
               " across runs");
}

// -------------------------------------------------------------------------
// 5. Shadow predicate vs dense sampling oracle
// -------------------------------------------------------------------------

template <int D>
std::pair<int, int> sampling_check(std::uint64_t seed, int pairs) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int agreed = 0, used = 0;
    for (int t = 0; t < pairs; ++t) {
        Segment<D> o, o2;
        for (int i = 0; i < D; ++i) {
            o.a[i] = u(rng);
            o.b[i] = u(rng);
            o2.a[i] = u(rng);
            o2.b[i] = u(rng);
        }
        double sigma = 0.05 + 0.9 * u(rng);
        if (std::abs(shadow_slack(o, o2, sigma)) < 1e-6 * std::max(1.0, o2.diameter()))
            continue;  // exclusion margin
        ++used;
        double sampled = 0.0;
        for (int i = 0; i < 1000; ++i) {
            double tt = static_cast<double>(i) / 999.0;
            sampled = std::max(sampled, point_segment_distance(o2.point_at(tt), o));
        }
        bool dense = sampled <= sigma * o2.diameter() + 1e-9;
        if (shadows(o, o2, sigma) == dense &&
            std::abs(sampled - max_distance_to(o, o2)) <= 1e-9)
            ++agreed;
    }
    return {agreed, used};
}

void criterion_shadow_oracle() {
    auto [a1, u1] = sampling_check<1>(11, 10000);
    auto [a2, u2] = sampling_check<2>(22, 10000);
    auto [a3, u3] = sampling_check<3>(33, 10000);
    bool pass = a1 == u1 && a2 == u2 && a3 == u3;
    report(5, "shadow-oracle-equivalence", pass,
           "agreement " + std::to_string(a1 + a2 + a3) + "/" + std::to_string(u1 + u2 + u3) +
               " non-excluded pairs over 10^4 draws per dimension, tol 1e-9, margin 1e-6");
}

// -------------------------------------------------------------------------
// 6. Interval gap lemma property
// -------------------------------------------------------------------------

void criterion_interval_gaps() {
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int checked = 0, holds = 0;
    long long attempts = 0;
    while (checked < 100000 && attempts < 30000000) {
        ++attempts;
        double sigma = 0.05 + 0.9 * u(rng);
        double scale = std::exp(3.0 * u(rng) - 1.5);
        Interval i1(u(rng) * 4 * scale, (u(rng) * 4 + 0.1) * scale);
        Interval i2(u(rng) * 4 * scale, (u(rng) * 4 + 0.1) * scale);
        if (!i1.overlaps(i2)) continue;
        Segment<1> s1 = i1.as_segment(), s2 = i2.as_segment();
        if (shadows(s1, s2, sigma) || shadows(s2, s1, sigma)) continue;
        ++checked;
        if (mutual_exposure_gap(i1, i2, sigma)) ++holds;
    }
    bool pass = checked == 100000 && holds == checked;
    report(6, "interval-gap-lemma", pass,
           std::to_string(holds) + "/" + std::to_string(checked) +
               " fuzzed overlapping mutually exposing pairs satisfy both gaps");
}

// -------------------------------------------------------------------------
// 7. Point-cover bound and growth fit
// -------------------------------------------------------------------------

void criterion_point_cover() {
    std::vector<std::pair<double, double>> pts;
    bool bound_ok = true;
    std::string sizes;
    for (double sigma : {0.5, 0.2, 0.1}) {
        double total = 0;
        std::size_t mx = 0;
        for (unsigned seed = 0; seed < 100; ++seed) {
            GenerateOptions opt;
            opt.sigma = sigma;
            opt.seed = seed;
            opt.through_origin = true;
            opt.n_target = 100000;  // saturate
            opt.max_attempts = 20000;
            opt.len_min = 1e-6;
            auto fam = generate_exposed<1>(opt);
            total += static_cast<double>(fam.size());
            mx = std::max(mx, fam.size());
        }
        if (static_cast<double>(mx) > kPointCoverConstant / (sigma * sigma)) bound_ok = false;
        pts.emplace_back(1.0 / sigma, total / 100.0);
        sizes += " s=" + fmt(sigma, 2) + ":mean=" + fmt(total / 100.0, 2) + ",max=" +
                 std::to_string(mx);
    }
    FitResult fit = loglog_fit(pts);
    bool fit_ok = fit.ok && fit.exponent >= kGrowthFitLo && fit.exponent <= kGrowthFitHi;
    bool pass = bound_ok && fit_ok;
    report(7, "point-cover-bound", pass,
           std::string("max <= C_pt/sigma^2 with C_pt=") + fmt(kPointCoverConstant, 1) + " " +
               (bound_ok ? "holds" : "FAILS") + ";" + sizes + "; growth-fit exponent " +
               fmt(fit.exponent) + " vs window [" + fmt(kGrowthFitLo, 1) + ", " +
               fmt(kGrowthFitHi, 1) +
               "] (saturated common-point families are monotone chains, so their size grows "
               "linearly in 1/sigma; the quadratic window is unreachable)");
}

// -------------------------------------------------------------------------
// 8. Projection lemma families
// -------------------------------------------------------------------------

void criterion_projection() {
    int families = 0, preserved = 0;
    std::size_t members = 0;
    for (double sigma : {0.5, 0.25}) {
        const double theta = 0.999 * std::asin(sigma / 4.0);
        for (unsigned seed = 0; seed < 50; ++seed) {
            GenerateOptions opt;
            opt.sigma = sigma;
            opt.seed = seed;
            opt.n_target = 20;
            opt.max_attempts = 4000;
            opt.through_origin = true;
            opt.cone_half_angle = theta / 2.0;
            opt.len_min = 1e-3;
            auto segs = generate_exposed<2>(opt);
            ++families;
            members += segs.size();
            if (!is_exposed(segs, sigma).exposed) continue;  // hypothesis violated: counts as fail
            auto intervals = project_to_axis(segs);
            std::vector<Segment<1>> proj;
            proj.reserve(intervals.size());
            for (const auto& iv : intervals) proj.push_back(iv.as_segment());
            if (is_exposed(proj, sigma / 4.0).exposed) ++preserved;
        }
    }
    bool pass = preserved == families;
    report(8, "projection-lemma", pass,
           std::to_string(preserved) + "/" + std::to_string(families) +
               " families (common point, sin(theta) <= sigma/4) project to (sigma/4)-exposed "
               "intervals; avg family size " +
               fmt(static_cast<double>(members) / families, 1));
}

// -------------------------------------------------------------------------
// 9. Degeneracy partition of (sigma,k)-exposed sets
// -------------------------------------------------------------------------

void criterion_degeneracy_partition() {
    int families = 0, good = 0;
    long long edges_total = 0;
    for (int k : {0, 1, 2}) {
        for (unsigned seed = 0; seed < 34; ++seed) {
            GenerateOptions opt;
            opt.sigma = 0.6;
            opt.seed = 1000 * static_cast<unsigned>(k) + seed;
            opt.n_target = 16;
            opt.max_attempts = 2500;
            opt.len_min = 0.01;
            auto segs = generate_k_exposed<2>(opt, k);
            if (segs.size() < 2) continue;
            ++families;
            if (!is_k_exposed(segs, 0.6, k).ok) continue;
            auto sg = build_shadow_graph(segs, 0.6);
            for (const auto& nb : sg.adj) edges_total += static_cast<long long>(nb.size());
            auto parts = degeneracy_partition(sg);
            if (static_cast<int>(parts.size()) > 2 * k + 1) continue;
            bool parts_exposed = true;
            for (const auto& part : parts) {
                std::vector<Segment<2>> sub;
                for (int idx : part) sub.push_back(segs[static_cast<std::size_t>(idx)]);
                if (!is_exposed(sub, 0.6).exposed) parts_exposed = false;
            }
            if (parts_exposed) ++good;
        }
    }
    bool pass = families > 0 && good == families && edges_total > 0;
    report(9, "degeneracy-partition", pass,
           std::to_string(good) + "/" + std::to_string(families) +
               " (sigma,k)-exposed families for k in {0,1,2} split into <= 2k+1 exposed parts (" +
               std::to_string(edges_total / 2) + " shadow edges exercised)");
}

// -------------------------------------------------------------------------
// 10. Density bound shape
// -------------------------------------------------------------------------

void criterion_density_bound() {
    bool pass = true;
    std::string detail = "C_dens=" + fmt(kDensityConstant, 2) + ";";
    for (double sigma : {0.5, 0.25}) {
        std::size_t mx = 0;
        for (unsigned seed = 0; seed < 50; ++seed) {
            GenerateOptions opt;
            opt.sigma = sigma;
            opt.seed = seed;
            opt.n_target = 64;
            opt.max_attempts = 6000;
            opt.len_min = 0.02;
            auto segs = generate_exposed<2>(opt);
            auto lb = density_lower_bound(segs).density_lb();
            mx = std::max(mx, lb);
            if (static_cast<double>(lb) > kDensityConstant * std::pow(sigma, -6.0)) pass = false;
        }
        detail += " s=" + fmt(sigma, 2) + ":max_lb=" + std::to_string(mx) + " (allowed " +
                  fmt(kDensityConstant * std::pow(sigma, -6.0), 1) + ")";
    }
    report(10, "density-bound", pass, detail);
}

}  // namespace

int main() {
    criterion_separator_suite();
    criterion_schedule();
    criterion_division_excess();
    criterion_scaling_fit();
    criterion_shadow_oracle();
    criterion_interval_gaps();
    criterion_point_cover();
    criterion_projection();
    criterion_degeneracy_partition();
    criterion_density_bound();

    int failures = 0;
    for (const auto& r : g_results) {
        if (!r.pass) ++failures;
        std::printf("[%s] %2d. %s - %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(g_results.size()) - failures,
                g_results.size());
    return failures;
}
