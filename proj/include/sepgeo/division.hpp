#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "sepgeo/common.hpp"
#include "sepgeo/graph.hpp"
#include "sepgeo/separator.hpp"

namespace sepgeo {

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

/// Inputs for the recursive division builder. alpha/beta/c_sep describe the
/// separator oracle's hereditary size bound c_sep * |U|^alpha * log2^beta |U|.
struct DivisionParams {
    double eps = 0.25;
    double alpha = 0.5;
    double beta = 0.0;
    double c_sep = 1.0;
    std::optional<double> b_override;
    double c_dd = 4.0;  // constant inside the stopping threshold
    BalanceRatio balance{};
};

struct DivisionSchedule {
    double b = 0.0;  // stop splitting pieces below this size
    double c_dd = 4.0;
};

/// Cover of the vertex set by clusters, with per-vertex multiplicity.
/// total_excess = sum over vertices of (multiplicity - 1).
struct Division {
    std::vector<VertexSet> clusters;
    std::vector<int> multiplicity;
    VertexSet boundary;  // multiplicity >= 2
    VertexSet interior;  // multiplicity == 1
    long long total_excess = 0;
};

/// Diagnostic: pieces of the recursion tree bucketed by size, where a piece
/// of s vertices is at level i when (3/4)^{i+1} n < s <= (3/4)^i n.
struct LevelRow {
    int level = 0;
    long long vertices = 0;
    double delta_hat = 0.0;
};

using SeparatorOracle = std::function<SeparatorCertificate(const Graph&)>;

struct DivisionResult {
    DivisionSchedule schedule;
    Division division;
    std::vector<LevelRow> levels;
};

inline DivisionSchedule make_division_schedule(const DivisionParams& p) {
    if (!(p.eps > 0.0 && p.eps < 1.0)) throw std::invalid_argument("eps must be in (0,1)");
    if (!(p.alpha > 0.0 && p.alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
    if (p.beta < 0.0) throw std::invalid_argument("beta must be >= 0");
    DivisionSchedule s;
    s.c_dd = p.c_dd;
    if (p.b_override) {
        s.b = *p.b_override;
    } else {
        double inv_eps = 1.0 / p.eps;
        s.b = 2.0 * std::pow(p.c_dd * inv_eps * std::pow(clamped_log2(inv_eps), p.beta),
                             1.0 / (1.0 - p.alpha));
    }
    if (s.b < 1.0) throw std::invalid_argument("division threshold b must be >= 1");
    return s;
}

/// Oracle size contract for a piece of `size` vertices.
inline double oracle_size_bound(const DivisionParams& p, std::size_t size) {
    return p.c_sep * std::pow(static_cast<double>(size), p.alpha) *
           std::pow(clamped_log2(static_cast<double>(size)), p.beta);
}

// ---------------------------------------------------------------------------
// Builder
// ---------------------------------------------------------------------------

namespace detail {

inline int size_level(long long size, long long n) {
    // level i such that N_{i+1} < size <= N_i, N_i = (3/4)^i n
    int i = 0;
    double next = 0.75 * static_cast<double>(n);
    while (next >= static_cast<double>(size) && i < 512) {
        ++i;
        next *= 0.75;
    }
    return i;
}

struct Piece {
    VertexSet verts;
    long long seq = 0;
};

struct PieceOrder {
    // max-heap: largest size first, then smallest min vertex, then FIFO
    bool operator()(const Piece& a, const Piece& b) const {
        if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
        if (a.verts.min_vertex() != b.verts.min_vertex())
            return a.verts.min_vertex() > b.verts.min_vertex();
        return a.seq > b.seq;
    }
};

}  // namespace detail

/// Recursively splits the graph with the oracle until every piece is below
/// the schedule threshold. Each split replaces a piece U by A+S and B+S, so
/// separator vertices are duplicated into both children; a deliberately
/// disconnected piece is split along components first, at no cost.
inline DivisionResult build_division(const Graph& g, const DivisionParams& params,
                                     const SeparatorOracle& oracle) {
    const Vertex n = g.vertex_count();
    DivisionResult out;
    out.schedule = make_division_schedule(params);
    const double b = out.schedule.b;

    std::map<int, long long> level_mass;
    auto record = [&](const VertexSet& piece) {
        if (n > 0) level_mass[detail::size_level(static_cast<long long>(piece.size()), n)] +=
            static_cast<long long>(piece.size());
    };

    std::priority_queue<detail::Piece, std::vector<detail::Piece>, detail::PieceOrder> heap;
    long long seq = 0;
    if (n > 0) {
        auto root = VertexSet::full(n);
        record(root);
        heap.push({std::move(root), seq++});
    }

    std::vector<VertexSet> clusters;
    long long excess = 0;

    while (!heap.empty()) {
        VertexSet piece = heap.top().verts;
        heap.pop();
        if (static_cast<double>(piece.size()) < b) {
            clusters.push_back(std::move(piece));
            continue;
        }

        InducedSubgraph sub = induce(g, piece);
        auto comps = connected_components(sub.graph);
        if (comps.size() > 1) {
            for (const auto& c : comps) {
                VertexSet child = sub.lift(c);
                record(child);
                heap.push({std::move(child), seq++});
            }
            continue;
        }

        SeparatorCertificate cert = oracle(sub.graph);
        auto report = validate_separator(sub.graph, VertexSet::full(sub.graph.vertex_count()),
                                         cert, params.balance);
        if (!report.all_pass()) {
            std::string why = "oracle certificate failed validation on a piece of " +
                              std::to_string(piece.size()) + " vertices:";
            for (const auto& e : report.entries)
                if (!e.pass) why += " " + e.name;
            throw OracleBreach(why, "");
        }
        double bound = oracle_size_bound(params, piece.size());
        if (static_cast<double>(cert.S.size()) > bound + 1e-9)
            throw OracleBreach("oracle separator has " + std::to_string(cert.S.size()) +
                                   " vertices, bound " + std::to_string(bound) + " on piece of " +
                                   std::to_string(piece.size()),
                               "");
        if (cert.A.empty() || cert.B.empty())
            throw OracleBreach("oracle returned a degenerate split (empty side) on a piece of " +
                                   std::to_string(piece.size()) + " vertices",
                               "");

        VertexSet left = sub.lift(cert.A.set_union(cert.S));
        VertexSet right = sub.lift(cert.B.set_union(cert.S));
        excess += static_cast<long long>(cert.S.size());
        record(left);
        record(right);
        heap.push({std::move(left), seq++});
        heap.push({std::move(right), seq++});
    }

    std::sort(clusters.begin(), clusters.end(), [](const VertexSet& a, const VertexSet& b2) {
        if (a.min_vertex() != b2.min_vertex()) return a.min_vertex() < b2.min_vertex();
        return a.size() < b2.size();
    });

    Division d;
    d.clusters = std::move(clusters);
    d.multiplicity.assign(static_cast<std::size_t>(n), 0);
    for (const auto& c : d.clusters)
        for (Vertex v : c) ++d.multiplicity[static_cast<std::size_t>(v)];
    std::vector<Vertex> boundary, interior;
    long long mult_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
        int m = d.multiplicity[static_cast<std::size_t>(v)];
        mult_sum += m;
        (m >= 2 ? boundary : interior).push_back(v);
    }
    d.boundary = VertexSet(std::move(boundary));
    d.interior = VertexSet(std::move(interior));
    d.total_excess = mult_sum - n;
    // every split added |S| new memberships, so the two counts must agree
    if (d.total_excess != excess)
        throw std::logic_error("division excess bookkeeping mismatch");
    out.division = std::move(d);

    for (const auto& [lvl, mass] : level_mass)
        out.levels.push_back({lvl, mass, n > 0 ? static_cast<double>(mass) / n : 0.0});
    return out;
}

/// Level table only (diagnostic realization of the recursion bookkeeping).
inline std::vector<LevelRow> excess_profile(const Graph& g, const DivisionParams& params,
                                            const SeparatorOracle& oracle) {
    return build_division(g, params, oracle).levels;
}

// ---------------------------------------------------------------------------
// Validators
// ---------------------------------------------------------------------------

inline CheckReport validate_division(const Graph& g, const Division& d, double b) {
    CheckReport report;
    const Vertex n = g.vertex_count();

    bool well_formed = static_cast<Vertex>(d.multiplicity.size()) == n;
    for (const auto& c : d.clusters)
        for (Vertex v : c)
            if (v < 0 || v >= n) well_formed = false;
    report.add("well-formed", well_formed);
    if (!well_formed) return report;

    std::vector<int> mult(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> owner(static_cast<std::size_t>(n));
    for (std::size_t ci = 0; ci < d.clusters.size(); ++ci)
        for (Vertex v : d.clusters[ci]) {
            ++mult[static_cast<std::size_t>(v)];
            owner[static_cast<std::size_t>(v)].push_back(static_cast<int>(ci));
        }

    bool cover = true;
    for (Vertex v = 0; v < n; ++v)
        if (mult[static_cast<std::size_t>(v)] < 1) cover = false;
    report.add("cover", cover);

    bool sizes = true;
    for (const auto& c : d.clusters)
        if (static_cast<double>(c.size()) > b + 1e-9) sizes = false;
    report.add("cluster-size", sizes, "b=" + std::to_string(b));

    // soft diagnostic only: component splits can legitimately create pieces
    // below b/4, so small clusters are reported but never a failure
    int tiny = 0;
    for (const auto& c : d.clusters)
        if (static_cast<double>(c.size()) < b / 4.0) ++tiny;
    report.add("cluster-size-floor-diagnostic", true,
               std::to_string(tiny) + " clusters below b/4 (informational)");

    // separation: an edge is legal iff one endpoint's cluster list contains
    // the other's
    bool separated = true;
    for (Vertex u = 0; u < n && separated; ++u)
        for (Vertex v : g.neighbors(u)) {
            if (u > v) continue;
            const auto& cu = owner[static_cast<std::size_t>(u)];
            const auto& cv = owner[static_cast<std::size_t>(v)];
            bool u_in_v = std::includes(cv.begin(), cv.end(), cu.begin(), cu.end());
            bool v_in_u = std::includes(cu.begin(), cu.end(), cv.begin(), cv.end());
            if (!u_in_v && !v_in_u) {
                separated = false;
                report.add("separation", false,
                           "edge " + std::to_string(u) + "-" + std::to_string(v) +
                               " joins private parts of two clusters");
                break;
            }
        }
    if (separated) report.add("separation", true);

    bool locality = true;
    for (Vertex v = 0; v < n && locality; ++v) {
        if (mult[static_cast<std::size_t>(v)] != 1) continue;
        int c = owner[static_cast<std::size_t>(v)].front();
        for (Vertex w : g.neighbors(v))
            if (!d.clusters[static_cast<std::size_t>(c)].contains(w)) {
                locality = false;
                break;
            }
    }
    report.add("interior-locality", locality);

    long long mult_sum = 0;
    for (Vertex v = 0; v < n; ++v) mult_sum += mult[static_cast<std::size_t>(v)];
    report.add("excess-consistency", d.total_excess == mult_sum - n,
               "declared " + std::to_string(d.total_excess) + ", recount " +
                   std::to_string(mult_sum - n));
    return report;
}

/// Removing the boundary must leave only components that sit inside a single
/// cluster and are no larger than b.
inline CheckReport weakly_hyperfinite_check(const Graph& g, const Division& d, double b) {
    CheckReport report;
    const Vertex n = g.vertex_count();
    std::vector<int> sole_cluster(static_cast<std::size_t>(n), -1);
    for (std::size_t ci = 0; ci < d.clusters.size(); ++ci)
        for (Vertex v : d.clusters[ci])
            if (!d.boundary.contains(v)) sole_cluster[static_cast<std::size_t>(v)] = static_cast<int>(ci);

    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    for (Vertex v : d.boundary) alive[static_cast<std::size_t>(v)] = 0;
    auto comps = detail::alive_components(g, alive);

    bool one_cluster = true;
    bool small = true;
    for (const auto& comp : comps) {
        int c = sole_cluster[static_cast<std::size_t>(comp.min_vertex())];
        for (Vertex v : comp)
            if (sole_cluster[static_cast<std::size_t>(v)] != c) one_cluster = false;
        if (static_cast<double>(comp.size()) > b + 1e-9) small = false;
    }
    report.add("components-within-one-cluster", one_cluster);
    report.add("components-at-most-b", small, std::to_string(comps.size()) + " components");
    return report;
}

// ---------------------------------------------------------------------------
// Stock oracles
// ---------------------------------------------------------------------------

inline SeparatorOracle oracle_grid_median(BalanceRatio balance = BalanceRatio{}) {
    return [balance](const Graph& piece) {
        return baseline_separate(piece, BaselineKind::GridMedian, balance);
    };
}

inline SeparatorOracle oracle_bfs_level(BalanceRatio balance = BalanceRatio{}) {
    return [balance](const Graph& piece) {
        return baseline_separate(piece, BaselineKind::BfsLevel, balance);
    };
}

/// Wraps the either/or procedure; a minor branch means the oracle cannot
/// honor its separator contract, reported as a breach.
inline SeparatorOracle oracle_prs(int l, int h, BalanceRatio balance = BalanceRatio{}) {
    return [l, h, balance](const Graph& piece) {
        PrsOutcome outcome = prs_separate(piece, l, h, balance);
        if (outcome.is_minor())
            throw OracleBreach("prs oracle found a K_" + std::to_string(h) +
                                   " shallow minor instead of a separator",
                               "");
        return outcome.separator();
    };
}

/// Test hook: produces a *valid* certificate whose separator is padded to
/// half the piece, so the size-bound check must trip.
inline SeparatorOracle oracle_cheat(BalanceRatio balance = BalanceRatio{}) {
    return [balance](const Graph& piece) {
        SeparatorCertificate cert = baseline_separate(piece, BaselineKind::BfsLevel, balance);
        std::size_t target = static_cast<std::size_t>(piece.vertex_count()) / 2;
        std::vector<Vertex> s(cert.S.begin(), cert.S.end());
        std::vector<Vertex> a(cert.A.begin(), cert.A.end());
        std::vector<Vertex> b(cert.B.begin(), cert.B.end());
        while (s.size() < target && (!a.empty() || !b.empty())) {
            auto& side = a.size() >= b.size() ? a : b;
            s.push_back(side.back());
            side.pop_back();
        }
        cert.S = VertexSet(std::move(s));
        cert.A = VertexSet(std::move(a));
        cert.B = VertexSet(std::move(b));
        return cert;
    };
}

}  // namespace sepgeo
