#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "sepgeo/geometry.hpp"

namespace sepgeo {

// Threshold comparisons in the shadow predicate use this absolute tolerance
// on unit-diameter configurations (scaled by the diameter above 1).
inline constexpr double kShadowTol = 1e-9;

/// sigma > 0, k >= 0: parameters of (sigma, k)-exposure.
struct ExposureParams {
    double sigma = 0.5;
    int k = 0;
};

// ---------------------------------------------------------------------------
// Shadow predicate
// ---------------------------------------------------------------------------

/// max over points of `target` of the distance to `obj`; for segments the
/// maximum of a convex function is attained at an endpoint.
template <int D>
inline double max_distance_to(const Segment<D>& obj, const Segment<D>& target) {
    return std::max(point_segment_distance(target.a, obj),
                    point_segment_distance(target.b, obj));
}

/// Signed margin of the shadow test: positive when `obj` sigma-shadows
/// `target`, negative otherwise, magnitude = distance to the threshold.
template <int D>
inline double shadow_slack(const Segment<D>& obj, const Segment<D>& target, double sigma) {
    return sigma * target.diameter() - max_distance_to(obj, target);
}

/// Does `obj` sigma-shadow `target`? Every point of `target` must lie within
/// sigma * diam(target) of `obj`. A degenerate target (diameter 0) is
/// shadowed exactly when it lies on `obj`.
template <int D>
inline bool shadows(const Segment<D>& obj, const Segment<D>& target, double sigma,
                    double tol = kShadowTol) {
    if (sigma < 0) throw std::invalid_argument("shadows: sigma must be >= 0");
    return shadow_slack(obj, target, sigma) >= -tol * std::max(1.0, target.diameter());
}

// ---------------------------------------------------------------------------
// Exposure checks
// ---------------------------------------------------------------------------

struct ExposureReport {
    bool exposed = true;
    int shadower = -1;  // first offending ordered pair, lexicographic
    int shadowed = -1;
};

template <int D>
inline ExposureReport is_exposed(const std::vector<Segment<D>>& objs, double sigma) {
    if (!(sigma > 0)) throw std::invalid_argument("is_exposed: sigma must be > 0");
    const int n = static_cast<int>(objs.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (shadows(objs[static_cast<std::size_t>(i)], objs[static_cast<std::size_t>(j)],
                        sigma))
                return {false, i, j};
        }
    return {};
}

struct KExposureReport {
    bool ok = true;
    std::vector<int> shadow_counts;  // per object: how many others shadow it
};

template <int D>
inline KExposureReport is_k_exposed(const std::vector<Segment<D>>& objs, double sigma, int k) {
    if (!(sigma > 0)) throw std::invalid_argument("is_k_exposed: sigma must be > 0");
    if (k < 0) throw std::invalid_argument("is_k_exposed: k must be >= 0");
    const int n = static_cast<int>(objs.size());
    KExposureReport rep;
    rep.shadow_counts.assign(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            if (shadows(objs[static_cast<std::size_t>(i)], objs[static_cast<std::size_t>(j)],
                        sigma))
                ++rep.shadow_counts[static_cast<std::size_t>(j)];
        }
    for (int c : rep.shadow_counts)
        if (c > k) rep.ok = false;
    return rep;
}

template <int D>
inline KExposureReport is_k_exposed(const std::vector<Segment<D>>& objs,
                                    const ExposureParams& params) {
    return is_k_exposed(objs, params.sigma, params.k);
}

/// For two overlapping, mutually sigma-exposing intervals the left endpoints
/// must differ by at least sigma times the length of the left-starting
/// interval, and the right endpoints by at least sigma times the length of
/// the right-ending one. Returns whether both gaps hold.
inline bool mutual_exposure_gap(const Interval& i1, const Interval& i2, double sigma) {
    if (!(sigma > 0)) throw std::invalid_argument("mutual_exposure_gap: sigma must be > 0");
    if (!i1.overlaps(i2))
        throw std::invalid_argument("mutual_exposure_gap: intervals must overlap");
    Segment<1> s1 = i1.as_segment();
    Segment<1> s2 = i2.as_segment();
    if (shadows(s1, s2, sigma) || shadows(s2, s1, sigma))
        throw std::invalid_argument("mutual_exposure_gap: intervals must sigma-expose each other");
    const Interval& left = i1.lo <= i2.lo ? i1 : i2;
    const Interval& right = i1.lo <= i2.lo ? i2 : i1;
    const double tol = kShadowTol * std::max({1.0, i1.length(), i2.length()});
    return right.lo - left.lo + tol >= sigma * left.length() &&
           right.hi - left.hi + tol >= sigma * right.length();
}

// ---------------------------------------------------------------------------
// Monotone subsequences
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<int> longest_nondecreasing(const std::vector<double>& vals) {
    std::vector<int> tails, parent(vals.size(), -1);
    for (int i = 0; i < static_cast<int>(vals.size()); ++i) {
        int lo = 0, hi = static_cast<int>(tails.size());
        while (lo < hi) {
            int mid = (lo + hi) / 2;
            if (vals[static_cast<std::size_t>(tails[static_cast<std::size_t>(mid)])] <=
                vals[static_cast<std::size_t>(i)])
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo > 0) parent[static_cast<std::size_t>(i)] = tails[static_cast<std::size_t>(lo - 1)];
        if (lo == static_cast<int>(tails.size()))
            tails.push_back(i);
        else
            tails[static_cast<std::size_t>(lo)] = i;
    }
    std::vector<int> out;
    if (!tails.empty())
        for (int i = tails.back(); i >= 0; i = parent[static_cast<std::size_t>(i)])
            out.push_back(i);
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Longest nondecreasing or nonincreasing index subsequence, whichever is
/// longer (ties go to nondecreasing). Length is always >= ceil(sqrt(n)).
inline std::vector<int> longest_monotone_subsequence(const std::vector<double>& values) {
    auto up = detail::longest_nondecreasing(values);
    std::vector<double> neg(values.size());
    std::transform(values.begin(), values.end(), neg.begin(), [](double v) { return -v; });
    auto down = detail::longest_nondecreasing(neg);
    return up.size() >= down.size() ? up : down;
}

// ---------------------------------------------------------------------------
// Projection and angle clustering
// ---------------------------------------------------------------------------

/// x-axis extents of each segment, order-preserving.
template <int D>
inline std::vector<Interval> project_to_axis(const std::vector<Segment<D>>& segs) {
    static_assert(D >= 2, "project_to_axis needs dimension >= 2");
    std::vector<Interval> out;
    out.reserve(segs.size());
    for (const auto& s : segs) out.emplace_back(s.a[0], s.b[0]);
    return out;
}

struct AngleClusters {
    std::vector<int> assignment;  // per segment, -1 never occurs
    int count = 0;
    double k_d = 0.0;  // recorded constant: count <= k_d * (1/max_angle)^(d-1)
};

// Cluster-count constants: d=2 uses direction buckets of width max_angle on
// [0, pi), d=3 uses leader clustering at max_angle/2 (projective metric).
inline constexpr double kAngleClusterK2 = 4.75;
inline constexpr double kAngleClusterK3 = 33.0;

template <int D>
inline AngleClusters angle_cluster(const std::vector<Segment<D>>& segs, double max_angle) {
    static_assert(D == 2 || D == 3, "angle clustering implemented for d in {2,3}");
    if (!(max_angle > 0 && max_angle < M_PI / 2))
        throw std::invalid_argument("angle_cluster: max_angle must lie in (0, pi/2)");

    AngleClusters out;
    out.assignment.assign(segs.size(), -1);
    if constexpr (D == 2) {
        out.k_d = kAngleClusterK2;
        std::vector<int> bucket_id;  // used buckets, renumbered in first-use order
        std::vector<int> seen_buckets;
        int degenerate_cluster = -1;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            if (segs[i].degenerate()) {
                if (degenerate_cluster < 0) {
                    degenerate_cluster = out.count++;
                }
                out.assignment[i] = degenerate_cluster;
                continue;
            }
            Vec<2> dir = segs[i].direction();
            double ang = std::atan2(dir[1], dir[0]);
            if (ang < 0) ang += M_PI;
            if (ang >= M_PI) ang -= M_PI;
            int b = static_cast<int>(ang / max_angle);
            auto it = std::find(seen_buckets.begin(), seen_buckets.end(), b);
            if (it == seen_buckets.end()) {
                seen_buckets.push_back(b);
                bucket_id.push_back(out.count++);
                out.assignment[i] = bucket_id.back();
            } else {
                out.assignment[i] = bucket_id[static_cast<std::size_t>(it - seen_buckets.begin())];
            }
        }
    } else {
        out.k_d = kAngleClusterK3;
        std::vector<Vec<3>> leaders;
        std::vector<int> leader_cluster;
        int degenerate_cluster = -1;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            if (segs[i].degenerate()) {
                if (degenerate_cluster < 0) degenerate_cluster = out.count++;
                out.assignment[i] = degenerate_cluster;
                continue;
            }
            Vec<3> dir = segs[i].direction();
            int chosen = -1;
            for (std::size_t l = 0; l < leaders.size(); ++l) {
                double cosang = std::abs(dir.dot(leaders[l]));
                double ang = std::acos(std::clamp(cosang, -1.0, 1.0));
                if (ang <= max_angle / 2) {
                    chosen = leader_cluster[l];
                    break;
                }
            }
            if (chosen < 0) {
                leaders.push_back(dir);
                leader_cluster.push_back(out.count++);
                chosen = leader_cluster.back();
            }
            out.assignment[i] = chosen;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Ball covers
// ---------------------------------------------------------------------------

// count <= kBallCoverK[d] * (r/small_r)^d for the lattice construction below
inline constexpr double kBallCoverK1 = 2.0;
inline constexpr double kBallCoverK2 = 45.0;
inline constexpr double kBallCoverK3 = 500.0;

/// Centers of radius-small_r balls covering the ball (center, r). d=1 places
/// points every 2*small_r; d>=2 uses a cubic lattice with spacing
/// small_r/sqrt(d), keeping points within r + small_r of the center.
template <int D>
inline std::vector<Vec<D>> ball_cover(const Vec<D>& center, double r, double small_r) {
    if (!(small_r > 0) || small_r > r)
        throw std::invalid_argument("ball_cover: need 0 < small_r <= r");
    if (small_r == r) return {center};

    std::vector<Vec<D>> out;
    if constexpr (D == 1) {
        int k = static_cast<int>(std::ceil(r / small_r));
        for (int i = 0; i < k; ++i) {
            Vec<1> p;
            p[0] = center[0] - r + small_r + 2.0 * small_r * i;
            out.push_back(p);
        }
    } else {
        const double s = small_r / std::sqrt(static_cast<double>(D));
        const double reach = r + small_r;
        const int m = static_cast<int>(std::ceil(reach / s));
        auto emit = [&](const Vec<D>& p) {
            if (distance(p, center) <= reach) out.push_back(p);
        };
        if constexpr (D == 2) {
            for (int i = -m; i <= m; ++i)
                for (int j = -m; j <= m; ++j) {
                    Vec<2> p;
                    p[0] = center[0] + s * i;
                    p[1] = center[1] + s * j;
                    emit(p);
                }
        } else {
            for (int i = -m; i <= m; ++i)
                for (int j = -m; j <= m; ++j)
                    for (int k2 = -m; k2 <= m; ++k2) {
                        Vec<3> p;
                        p[0] = center[0] + s * i;
                        p[1] = center[1] + s * j;
                        p[2] = center[2] + s * k2;
                        emit(p);
                    }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Shadow graph and degeneracy partition
// ---------------------------------------------------------------------------

/// Undirected graph over object indices with an edge when either object
/// shadows the other, plus a degeneracy ordering and greedy coloring.
struct ShadowGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    int degeneracy = 0;
    std::vector<int> coloring;  // part index per vertex, < degeneracy + 1
};

inline void color_by_degeneracy(ShadowGraph& sg) {
    const int n = sg.n;
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        deg[static_cast<std::size_t>(v)] = static_cast<int>(sg.adj[static_cast<std::size_t>(v)].size());
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    sg.degeneracy = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[static_cast<std::size_t>(v)] &&
                (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]))
                best = v;
        sg.degeneracy = std::max(sg.degeneracy, deg[static_cast<std::size_t>(best)]);
        removed[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
        for (int w : sg.adj[static_cast<std::size_t>(best)])
            if (!removed[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
    }
    sg.coloring.assign(static_cast<std::size_t>(n), -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<char> used(static_cast<std::size_t>(sg.degeneracy) + 2, 0);
        for (int w : sg.adj[static_cast<std::size_t>(v)])
            if (sg.coloring[static_cast<std::size_t>(w)] >= 0)
                used[static_cast<std::size_t>(sg.coloring[static_cast<std::size_t>(w)])] = 1;
        int c = 0;
        while (used[static_cast<std::size_t>(c)]) ++c;
        sg.coloring[static_cast<std::size_t>(v)] = c;
    }
}

template <int D>
inline ShadowGraph build_shadow_graph(const std::vector<Segment<D>>& objs, double sigma) {
    ShadowGraph sg;
    sg.n = static_cast<int>(objs.size());
    sg.adj.assign(static_cast<std::size_t>(sg.n), {});
    for (int i = 0; i < sg.n; ++i)
        for (int j = i + 1; j < sg.n; ++j) {
            const auto& oi = objs[static_cast<std::size_t>(i)];
            const auto& oj = objs[static_cast<std::size_t>(j)];
            if (shadows(oi, oj, sigma) || shadows(oj, oi, sigma)) {
                sg.adj[static_cast<std::size_t>(i)].push_back(j);
                sg.adj[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    color_by_degeneracy(sg);
    return sg;
}

/// Color classes of the shadow graph: at most degeneracy+1 parts, each an
/// independent set (hence sigma-exposed as an object set).
inline std::vector<std::vector<int>> degeneracy_partition(const ShadowGraph& sg) {
    int parts = 0;
    for (int c : sg.coloring) parts = std::max(parts, c + 1);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(parts));
    for (int v = 0; v < sg.n; ++v)
        out[static_cast<std::size_t>(sg.coloring[static_cast<std::size_t>(v)])].push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// Density lower bound over candidate balls
// ---------------------------------------------------------------------------

template <int D>
struct DensityCertificate {
    Vec<D> center{};
    double radius = 0.0;
    std::vector<int> hits;  // objects intersecting the ball with diameter >= 2*radius

    std::size_t density_lb() const { return hits.size(); }
};

/// Candidate ball centers: midpoints, endpoints, and midpoints of the
/// closest point pair of every segment pair.
template <int D>
inline std::vector<Vec<D>> density_candidate_centers(const std::vector<Segment<D>>& objs) {
    std::vector<Vec<D>> centers;
    centers.reserve(3 * objs.size() + objs.size() * objs.size() / 2);
    for (const auto& s : objs) centers.push_back(s.midpoint());
    for (const auto& s : objs) {
        centers.push_back(s.a);
        centers.push_back(s.b);
    }
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = i + 1; j < objs.size(); ++j) {
            auto [p, q] = segment_closest_points(objs[i], objs[j]);
            centers.push_back((p + q) * 0.5);
        }
    return centers;
}

/// Best certificate over the given centers. For a fixed center the object i
/// is countable at radius r iff dist(center, i) <= r <= len(i)/2, so the
/// optimum is a max-overlap point of those intervals; ties prefer the larger
/// radius, then the earlier center.
template <int D>
inline DensityCertificate<D> density_lower_bound(const std::vector<Segment<D>>& objs,
                                                 const std::vector<Vec<D>>& centers) {
    DensityCertificate<D> best;
    best.radius = -1.0;
    const std::size_t n = objs.size();
    std::vector<double> lo(n), hi(n), cand;
    for (const Vec<D>& c : centers) {
        std::size_t valid = 0;
        cand.clear();
        for (std::size_t i = 0; i < n; ++i) {
            double d = point_segment_distance(c, objs[i]);
            double half = objs[i].length() / 2.0;
            if (d <= half + 1e-12) {
                lo[valid] = d;
                hi[valid] = half;
                ++valid;
                cand.push_back(d);
                cand.push_back(half);
            }
        }
        if (valid == 0) continue;
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::vector<double> los(lo.begin(), lo.begin() + static_cast<std::ptrdiff_t>(valid));
        std::vector<double> his(hi.begin(), hi.begin() + static_cast<std::ptrdiff_t>(valid));
        std::sort(los.begin(), los.end());
        std::sort(his.begin(), his.end());
        for (double r : cand) {
            auto started = static_cast<std::size_t>(
                std::upper_bound(los.begin(), los.end(), r + 1e-12) - los.begin());
            auto ended = static_cast<std::size_t>(
                std::lower_bound(his.begin(), his.end(), r - 1e-12) - his.begin());
            std::size_t count = started - ended;
            if (count > best.hits.size() ||
                (count == best.hits.size() && best.radius >= 0 && r > best.radius + 1e-12)) {
                best.center = c;
                best.radius = r;
                best.hits.assign(count, 0);  // placeholder, filled below
            }
        }
    }
    if (best.radius < 0) {
        best.radius = 0;
        best.hits.clear();
        return best;
    }
    best.hits.clear();
    for (std::size_t i = 0; i < n; ++i) {
        double d = point_segment_distance(best.center, objs[i]);
        double half = objs[i].length() / 2.0;
        if (d <= best.radius + 1e-12 && half >= best.radius - 1e-12)
            best.hits.push_back(static_cast<int>(i));
    }
    return best;
}

template <int D>
inline DensityCertificate<D> density_lower_bound(const std::vector<Segment<D>>& objs) {
    return density_lower_bound(objs, density_candidate_centers(objs));
}

// ---------------------------------------------------------------------------
// Exposure-preserving generators
// ---------------------------------------------------------------------------

struct GenerateOptions {
    std::size_t n_target = 10;
    double sigma = 0.5;
    std::uint64_t seed = 0;
    bool through_origin = false;     // every object contains the origin
    double cone_half_angle = M_PI;   // directions within this angle of +x
    double margin = 1e-6;            // keep pairs this far from the threshold
    double len_min = 0.05;           // log-uniform length range
    double len_max = 1.0;
    std::size_t max_attempts = 0;    // 0: 60 * n_target
};

namespace detail {

template <int D>
inline Vec<D> random_direction(std::mt19937_64& rng, double cone) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Vec<D> dir{};
    if constexpr (D == 1) {
        dir[0] = 1.0;
    } else if constexpr (D == 2) {
        double phi = (2.0 * unit(rng) - 1.0) * cone;
        dir[0] = std::cos(phi);
        dir[1] = std::sin(phi);
    } else {
        double x = 1.0 - unit(rng) * (1.0 - std::cos(cone));
        double rad = std::sqrt(std::max(0.0, 1.0 - x * x));
        double psi = unit(rng) * 2.0 * M_PI;
        dir[0] = x;
        dir[1] = rad * std::cos(psi);
        dir[2] = rad * std::sin(psi);
    }
    return dir;
}

/// Neither direction of the shadow test may come within `margin` of the
/// threshold; keeps generated families robust under the 1e-9 predicate tol.
template <int D>
inline bool robustly_exposed_pair(const Segment<D>& a, const Segment<D>& b, double sigma,
                                  double margin) {
    double m1 = shadow_slack(a, b, sigma);
    double m2 = shadow_slack(b, a, sigma);
    return m1 <= -margin * std::max(1.0, b.diameter()) &&
           m2 <= -margin * std::max(1.0, a.diameter());
}

template <int D>
inline Segment<D> random_segment(std::mt19937_64& rng, const GenerateOptions& opt) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> loglen(std::log(opt.len_min), std::log(opt.len_max));
    Vec<D> dir = random_direction<D>(rng, opt.cone_half_angle);
    Segment<D> s;
    if (opt.through_origin) {
        double ta = std::exp(loglen(rng));
        double tb = std::exp(loglen(rng));
        s.a = dir * (-ta);
        s.b = dir * tb;
    } else {
        Vec<D> mid;
        for (int i = 0; i < D; ++i) mid[i] = unit(rng);
        double len = std::exp(loglen(rng));
        s.a = mid - dir * (len / 2.0);
        s.b = mid + dir * (len / 2.0);
    }
    return s;
}

}  // namespace detail

/// Draws random segments and greedily keeps those that leave the kept set
/// sigma-exposed (with margin). Deterministic for a fixed seed.
///
/// Through-origin interval families are single monotone chains (shrinking
/// left reach, growing right reach), so in that mode half the proposals
/// extend the current chain tail instead of sampling blindly; they still
/// pass through the same greedy exposure check.
template <int D>
inline std::vector<Segment<D>> generate_exposed(const GenerateOptions& opt) {
    if (!(opt.sigma > 0)) throw std::invalid_argument("generate_exposed: sigma must be > 0");
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Segment<D>> kept;
    std::size_t attempts = opt.max_attempts ? opt.max_attempts : 60 * std::max<std::size_t>(opt.n_target, 1);
    for (std::size_t t = 0; t < attempts && kept.size() < opt.n_target; ++t) {
        Segment<D> cand;
        bool proposed = false;
        if constexpr (D == 1) {
            if (opt.through_origin && unit(rng) < 0.5) {
                if (kept.empty()) {
                    // seed near the top of the scale with a tiny right reach
                    double a0 = opt.len_max * std::exp(-0.3 * unit(rng));
                    double r0 = opt.len_min * std::exp(0.3 * unit(rng));
                    cand = Segment<1>{{{-a0}}, {{r0}}};
                    proposed = true;
                } else {
                    // chain-tail extension: smallest left reach, then step
                    // both gaps just past their thresholds
                    double tail_a = 0, tail_r = 0;
                    bool first = true;
                    for (const auto& k : kept) {
                        double ka = -std::min(k.a[0], k.b[0]);
                        double kr = std::max(k.a[0], k.b[0]);
                        if (first || ka < tail_a) {
                            tail_a = ka;
                            tail_r = kr;
                            first = false;
                        }
                    }
                    double theta = 0.85 + 0.13 * unit(rng);
                    double a_next = theta * ((1.0 - opt.sigma) * tail_a - opt.sigma * tail_r);
                    if (a_next > opt.len_min * 1e-3) {
                        double r_next = (tail_r + opt.sigma * a_next) / (1.0 - opt.sigma) *
                                        (1.02 + 0.18 * unit(rng));
                        cand = Segment<1>{{{-a_next}}, {{r_next}}};
                        proposed = true;
                    }
                }
            }
        }
        if (!proposed) cand = detail::random_segment<D>(rng, opt);
        bool ok = true;
        for (const auto& k : kept)
            if (!detail::robustly_exposed_pair(k, cand, opt.sigma, opt.margin)) {
                ok = false;
                break;
            }
        if (ok) kept.push_back(cand);
    }
    return kept;
}

/// Greedy (sigma,k)-exposed generator: a candidate is kept when every
/// object's shadow count stays at most k and every pair is decided robustly.
template <int D>
inline std::vector<Segment<D>> generate_k_exposed(const GenerateOptions& opt, int k) {
    if (!(opt.sigma > 0)) throw std::invalid_argument("generate_k_exposed: sigma must be > 0");
    if (k < 0) throw std::invalid_argument("generate_k_exposed: k must be >= 0");
    std::mt19937_64 rng(opt.seed);
    std::vector<Segment<D>> kept;
    std::vector<int> counts;
    std::size_t attempts = opt.max_attempts ? opt.max_attempts : 60 * std::max<std::size_t>(opt.n_target, 1);
    for (std::size_t t = 0; t < attempts && kept.size() < opt.n_target; ++t) {
        Segment<D> cand = detail::random_segment<D>(rng, opt);
        int cand_count = 0;
        bool ok = true;
        std::vector<int> bumped;
        for (std::size_t i = 0; i < kept.size() && ok; ++i) {
            double m1 = shadow_slack(kept[i], cand, opt.sigma);
            double m2 = shadow_slack(cand, kept[i], opt.sigma);
            double tol1 = opt.margin * std::max(1.0, cand.diameter());
            double tol2 = opt.margin * std::max(1.0, kept[i].diameter());
            if (std::abs(m1) < tol1 || std::abs(m2) < tol2) {
                ok = false;  // too close to the threshold either way
                break;
            }
            if (m1 > 0) ++cand_count;
            if (m2 > 0) bumped.push_back(static_cast<int>(i));
        }
        if (!ok || cand_count > k) continue;
        for (int i : bumped)
            if (counts[static_cast<std::size_t>(i)] + 1 > k) ok = false;
        if (!ok) continue;
        for (int i : bumped) ++counts[static_cast<std::size_t>(i)];
        kept.push_back(cand);
        counts.push_back(cand_count);
    }
    return kept;
}

}  // namespace sepgeo
