#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sepgeo/common.hpp"
#include "sepgeo/graph.hpp"

namespace sepgeo {

// ---------------------------------------------------------------------------
// Certificate types
// ---------------------------------------------------------------------------

/// Balanced separator of a piece U: S, A, B partition U, no A-B edge,
/// both sides within the balance ratio of |U|.
struct SeparatorCertificate {
    VertexSet S, A, B;
};

/// Witness edge between branch sets set_i and set_j (i < j): (u, v) is an
/// edge of the host graph with u in set_i and v in set_j.
struct WitnessEdge {
    int set_i = 0;
    int set_j = 0;
    Vertex u = -1;
    Vertex v = -1;
};

/// K_h as a shallow minor: h disjoint connected branch sets, pairwise joined
/// by witness edges, each of BFS radius <= depth around its center.
struct ShallowMinorCertificate {
    std::vector<VertexSet> branch_sets;
    std::vector<Vertex> centers;
    int depth = 0;
    std::vector<WitnessEdge> witness_edges;

    int h() const { return static_cast<int>(branch_sets.size()); }
};

/// Declared expansion-class parameters: the caller asserts the input comes
/// from a class whose z-shallow-minor density stays below c * z^k / 4.
struct ExpansionParams {
    int k = 1;
    double c = 1.0;
};

/// Parameter schedule derived from (n, k, c).
struct Schedule {
    double z = 0.0;
    int l = 1;
    int h = 2;
    double alpha = 0.0;
    double predicted_size = 0.0;
};

// Module constants. kSizeConstant is the frozen multiplier in the separator
// size bound kSizeConstant * (n/l + 4*l*h^2*log2 n); the fuzz suite logs the
// measured ratio and asserts it never exceeds this value.
inline constexpr double kSizeConstant = 2.0;
inline constexpr int kCliqueSeedTries = 64;   // greedy clique restarts
inline constexpr int kLevelCandidates = 20;   // fallback cut candidates per piece

inline double separator_size_bound(Vertex n, int l, int h) {
    return kSizeConstant *
           (static_cast<double>(n) / l +
            4.0 * l * static_cast<double>(h) * h * clamped_log2(static_cast<double>(n)));
}

/// Depth budget for the minor branch: l * ceil(log2 n), clamped log.
inline int minor_depth_budget(Vertex n, int l) {
    return l * static_cast<int>(std::ceil(clamped_log2(static_cast<double>(n))));
}

struct PrsMeta {
    int l = 1;
    int h = 2;
    double size_constant = kSizeConstant;
    double bound = 0.0;
    std::size_t separator_size = 0;
    double ratio = 0.0;            // separator_size / bound, 0 for minor branch
    std::string strategy;          // which internal path produced the result
};

struct PrsOutcome {
    std::variant<ShallowMinorCertificate, SeparatorCertificate> result;
    PrsMeta meta;

    bool is_minor() const { return result.index() == 0; }
    const ShallowMinorCertificate& minor() const {
        return std::get<ShallowMinorCertificate>(result);
    }
    const SeparatorCertificate& separator() const {
        return std::get<SeparatorCertificate>(result);
    }
};

// ---------------------------------------------------------------------------
// Internal helpers
// ---------------------------------------------------------------------------

namespace detail {

/// Greedy bin-packing of disjoint pieces into two sides, largest piece first,
/// always into the lighter side. With every piece <= (num/den)*n this keeps
/// both sides within the ratio.
inline std::pair<VertexSet, VertexSet> pack_pieces(std::vector<VertexSet> pieces,
                                                   Vertex /*n*/) {
    std::sort(pieces.begin(), pieces.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.min_vertex() < b.min_vertex();
    });
    std::vector<Vertex> a, b;
    for (const auto& p : pieces) {
        auto& side = (a.size() <= b.size()) ? a : b;
        side.insert(side.end(), p.begin(), p.end());
    }
    return {VertexSet(std::move(a)), VertexSet(std::move(b))};
}

struct BfsLevels {
    std::vector<std::vector<Vertex>> levels;
    std::vector<long long> prefix;  // prefix[t] = |B_t| = |L_0| + ... + |L_t|
};

/// BFS level structure of the alive component containing `seed`.
inline BfsLevels bfs_levels(const Graph& g, Vertex seed, const std::vector<char>& alive) {
    BfsLevels out;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<Vertex> frontier{seed};
    seen[static_cast<std::size_t>(seed)] = 1;
    long long total = 0;
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end());
        total += static_cast<long long>(frontier.size());
        out.prefix.push_back(total);
        std::vector<Vertex> next;
        for (Vertex v : frontier)
            for (Vertex w : g.neighbors(v)) {
                auto wi = static_cast<std::size_t>(w);
                if (alive[wi] && !seen[wi]) {
                    seen[wi] = 1;
                    next.push_back(w);
                }
            }
        out.levels.push_back(std::move(frontier));
        frontier = std::move(next);
    }
    return out;
}

/// Components of the alive subgraph, smallest-vertex order.
inline std::vector<VertexSet> alive_components(const Graph& g, const std::vector<char>& alive) {
    const Vertex n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> comps;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        auto si = static_cast<std::size_t>(s);
        if (!alive[si] || seen[si]) continue;
        queue.clear();
        queue.push_back(s);
        seen[si] = 1;
        std::size_t head = 0;
        while (head < queue.size()) {
            Vertex v = queue[head++];
            for (Vertex w : g.neighbors(v)) {
                auto wi = static_cast<std::size_t>(w);
                if (alive[wi] && !seen[wi]) {
                    seen[wi] = 1;
                    queue.push_back(w);
                }
            }
        }
        comps.emplace_back(queue);
    }
    return comps;
}

/// Greedy clique of size h: vertices in degree-descending order, several
/// starting points. Returns vertex ids (ascending) or empty.
inline std::vector<Vertex> greedy_clique(const Graph& g, int h) {
    const Vertex n = g.vertex_count();
    if (h > n) return {};
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    const int tries = std::min<int>(kCliqueSeedTries, n);
    for (int s = 0; s < tries; ++s) {
        Vertex start = order[static_cast<std::size_t>(s)];
        if (g.degree(start) + 1 < static_cast<std::size_t>(h)) break;  // order is by degree
        std::vector<Vertex> clique{start};
        for (Vertex u : order) {
            if (u == start) continue;
            bool adj_all = true;
            for (Vertex c : clique)
                if (!g.has_edge(u, c)) {
                    adj_all = false;
                    break;
                }
            if (adj_all) {
                clique.push_back(u);
                if (static_cast<int>(clique.size()) == h) {
                    std::sort(clique.begin(), clique.end());
                    return clique;
                }
            }
        }
    }
    return {};
}

/// Minor attempt, round 1: K_h as a plain subgraph (singleton branch sets).
inline std::optional<ShallowMinorCertificate> clique_subgraph_minor(const Graph& g, int h) {
    auto clique = greedy_clique(g, h);
    if (clique.empty()) return std::nullopt;
    ShallowMinorCertificate cert;
    cert.depth = 0;
    for (Vertex v : clique) {
        cert.branch_sets.emplace_back(std::vector<Vertex>{v});
        cert.centers.push_back(v);
    }
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j)
            cert.witness_edges.push_back({i, j, clique[static_cast<std::size_t>(i)],
                                          clique[static_cast<std::size_t>(j)]});
    return cert;
}

/// Minor attempt, round 2: contract a greedy maximal star partition
/// (radius-1 branch sets) and look for K_h among the contracted nodes.
inline std::optional<ShallowMinorCertificate> star_contraction_minor(const Graph& g, int h) {
    const Vertex n = g.vertex_count();
    std::vector<int> star_of(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> star_center;
    std::vector<std::vector<Vertex>> star_members;
    for (Vertex v = 0; v < n; ++v) {
        if (star_of[static_cast<std::size_t>(v)] >= 0) continue;
        int id = static_cast<int>(star_center.size());
        star_of[static_cast<std::size_t>(v)] = id;
        star_center.push_back(v);
        star_members.push_back({v});
        for (Vertex w : g.neighbors(v))
            if (star_of[static_cast<std::size_t>(w)] < 0) {
                star_of[static_cast<std::size_t>(w)] = id;
                star_members[static_cast<std::size_t>(id)].push_back(w);
            }
    }
    const int q = static_cast<int>(star_center.size());
    if (q < h) return std::nullopt;

    std::map<std::pair<int, int>, std::pair<Vertex, Vertex>> witness;
    std::vector<std::pair<Vertex, Vertex>> qedges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w : g.neighbors(u)) {
            if (u >= w) continue;
            int su = star_of[static_cast<std::size_t>(u)];
            int sw = star_of[static_cast<std::size_t>(w)];
            if (su == sw) continue;
            auto key = std::minmax(su, sw);
            if (witness.emplace(std::make_pair(key.first, key.second),
                                su < sw ? std::make_pair(u, w) : std::make_pair(w, u))
                    .second)
                qedges.emplace_back(key.first, key.second);
        }
    Graph quotient = Graph::from_edges(static_cast<Vertex>(q), qedges);
    auto clique = greedy_clique(quotient, h);
    if (clique.empty()) return std::nullopt;

    ShallowMinorCertificate cert;
    cert.depth = 0;
    for (Vertex s : clique) {
        auto& members = star_members[static_cast<std::size_t>(s)];
        if (members.size() > 1) cert.depth = 1;
        cert.branch_sets.emplace_back(members);
        cert.centers.push_back(star_center[static_cast<std::size_t>(s)]);
    }
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j) {
            int si = clique[static_cast<std::size_t>(i)];
            int sj = clique[static_cast<std::size_t>(j)];
            auto key = std::minmax(si, sj);
            auto [u, v] = witness.at({key.first, key.second});
            if (si > sj) std::swap(u, v);  // stored edge is oriented (smaller star, larger star)
            cert.witness_edges.push_back({i, j, u, v});
        }
    return cert;
}

/// Cuts BFS levels out of the big component until every alive component fits
/// the balance ratio, then packs components into the two sides.
///
/// Primary cut rule: largest level index j with |B_{j-1}| within ratio and
/// l * |L_j| <= |B_{j-1}|; cut levels found this way are charged to disjoint
/// ball interiors, so they total at most n/l. When no such level exists the
/// piece is resolved by the cheapest of three fallbacks (the level just past
/// the ratio prefix, a small level whose removal shatters the piece, or a
/// trivial prefix removal).
class BallCutSeparator {
public:
    BallCutSeparator(const Graph& g, int l, BalanceRatio balance)
        : g_(g), l_(l), balance_(balance), n_(g.vertex_count()),
          alive_(static_cast<std::size_t>(n_), 1) {}

    SeparatorCertificate run(std::string* strategy_out) {
        std::string strategy = "level-cut";
        if (n_ > 1) {
            while (true) {
                auto comps = alive_components(g_, alive_);
                const VertexSet* big = nullptr;
                for (const auto& c : comps)
                    if (!balance_.side_ok(static_cast<long long>(c.size()), n_)) {
                        big = &c;
                        break;
                    }
                if (!big) break;
                cut_component(*big, strategy);
            }
        }
        auto pieces = alive_components(g_, alive_);
        auto [a, b] = pack_pieces(std::move(pieces), n_);
        if (strategy_out) *strategy_out = strategy;
        SeparatorCertificate cert;
        cert.S = VertexSet(cut_);
        cert.A = std::move(a);
        cert.B = std::move(b);
        return cert;
    }

private:
    void remove_level(const std::vector<Vertex>& level) {
        for (Vertex v : level) {
            alive_[static_cast<std::size_t>(v)] = 0;
            cut_.push_back(v);
        }
    }

    void cut_component(const VertexSet& w, std::string& strategy) {
        auto bl = bfs_levels(g_, w.min_vertex(), alive_);
        const int t_end = static_cast<int>(bl.levels.size()) - 1;
        int t_star = -1;
        for (int t = 0; t <= t_end; ++t) {
            if (balance_.side_ok(bl.prefix[static_cast<std::size_t>(t)], n_))
                t_star = t;
            else
                break;
        }
        assert(t_star >= 0 && t_star < t_end);  // |W| over ratio, |B_0| = 1 under it

        // Primary: deepest level in the balanced window with a small boundary.
        for (int j = t_star + 1; j >= 1; --j) {
            long long level_sz = static_cast<long long>(bl.levels[static_cast<std::size_t>(j)].size());
            if (level_sz * l_ <= bl.prefix[static_cast<std::size_t>(j - 1)]) {
                remove_level(bl.levels[static_cast<std::size_t>(j)]);
                return;
            }
        }

        // Fallback (a): cut just past the balanced prefix; the far side is
        // then smaller than n/3 regardless of how it splits.
        int best_j = t_star + 1;
        std::size_t best_size = bl.levels[static_cast<std::size_t>(best_j)].size();

        // Fallback (b): small level whose removal leaves only balanced
        // components.
        std::vector<int> order;
        for (int j = 1; j <= t_end; ++j) order.push_back(j);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            auto sa = bl.levels[static_cast<std::size_t>(a)].size();
            auto sb = bl.levels[static_cast<std::size_t>(b)].size();
            if (sa != sb) return sa < sb;
            return a < b;
        });
        int tried = 0;
        for (int j : order) {
            if (tried++ >= kLevelCandidates) break;
            if (bl.levels[static_cast<std::size_t>(j)].size() >= best_size) break;  // sorted
            if (!balance_.side_ok(bl.prefix[static_cast<std::size_t>(j - 1)], n_)) continue;
            if (split_is_balanced(bl, j)) {
                best_j = j;
                best_size = bl.levels[static_cast<std::size_t>(j)].size();
                break;
            }
        }

        // Fallback (c): trivial prefix removal.
        long long keep = (n_ * balance_.num) / balance_.den;
        long long trivial = static_cast<long long>(w.size()) - keep;
        if (trivial > 0 && trivial < static_cast<long long>(best_size)) {
            strategy = "trivial-cut";
            std::vector<Vertex> tail;
            for (int t = t_end; t >= 0 && static_cast<long long>(tail.size()) < trivial; --t)
                for (Vertex v : bl.levels[static_cast<std::size_t>(t)]) {
                    if (static_cast<long long>(tail.size()) >= trivial) break;
                    tail.push_back(v);
                }
            remove_level(tail);
            return;
        }
        if (best_j != t_star + 1) strategy = "shatter-cut";
        remove_level(bl.levels[static_cast<std::size_t>(best_j)]);
    }

    /// Would removing level j leave only ratio-sized components?
    bool split_is_balanced(const BfsLevels& bl, int j) {
        std::vector<char> tmp = alive_;
        for (int t = 0; t <= j; ++t)
            for (Vertex v : bl.levels[static_cast<std::size_t>(t)])
                tmp[static_cast<std::size_t>(v)] = 0;
        // components of the far side only; the interior prefix is one ball
        for (std::size_t t = static_cast<std::size_t>(j) + 1; t < bl.levels.size(); ++t)
            for (Vertex s : bl.levels[t]) {
                if (!tmp[static_cast<std::size_t>(s)]) continue;
                long long size = 0;
                std::vector<Vertex> queue{s};
                tmp[static_cast<std::size_t>(s)] = 0;
                std::size_t head = 0;
                while (head < queue.size()) {
                    Vertex v = queue[head++];
                    ++size;
                    for (Vertex x : g_.neighbors(v))
                        if (tmp[static_cast<std::size_t>(x)]) {
                            tmp[static_cast<std::size_t>(x)] = 0;
                            queue.push_back(x);
                        }
                }
                if (!balance_.side_ok(size, n_)) return false;
            }
        return true;
    }

    const Graph& g_;
    int l_;
    BalanceRatio balance_;
    Vertex n_;
    std::vector<char> alive_;
    std::vector<Vertex> cut_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Either/or separator (shallow K_h minor or balanced separator)
// ---------------------------------------------------------------------------

/// Either finds K_h as a shallow minor (depth <= l * ceil(log2 n)) or returns
/// a balanced separator within kSizeConstant * (n/l + 4*l*h^2*log2 n).
inline PrsOutcome prs_separate(const Graph& g, int l, int h,
                               BalanceRatio balance = BalanceRatio{}) {
    const Vertex n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("prs_separate: graph is empty");
    if (l < 1) throw std::invalid_argument("prs_separate: l must be >= 1");
    if (h < 2) throw std::invalid_argument("prs_separate: h must be >= 2");

    PrsOutcome out;
    out.meta.l = l;
    out.meta.h = h;
    out.meta.bound = separator_size_bound(n, l, h);

    // Minor attempt first: cheap, and dense inputs should surface the clique.
    const long long pairs = static_cast<long long>(h) * (h - 1) / 2;
    if (h <= n && static_cast<long long>(g.edge_count()) >= pairs) {
        if (auto cert = detail::clique_subgraph_minor(g, h)) {
            out.meta.strategy = "minor-clique";
            out.result = std::move(*cert);
            return out;
        }
        if (auto cert = detail::star_contraction_minor(g, h)) {
            out.meta.strategy = "minor-star";
            out.result = std::move(*cert);
            return out;
        }
    }

    detail::BallCutSeparator cutter(g, l, balance);
    std::string strategy;
    SeparatorCertificate cert = cutter.run(&strategy);
    out.meta.strategy = strategy;
    out.meta.separator_size = cert.S.size();
    out.meta.ratio = out.meta.bound > 0 ? static_cast<double>(cert.S.size()) / out.meta.bound : 0.0;
    out.result = std::move(cert);
    return out;
}

// ---------------------------------------------------------------------------
// Expansion-driven schedule
// ---------------------------------------------------------------------------

inline Schedule make_schedule(Vertex n, const ExpansionParams& params) {
    if (params.k < 1) throw std::invalid_argument("expansion order k must be >= 1");
    if (!(params.c > 0)) throw std::invalid_argument("expansion constant c must be > 0");
    const double lg = clamped_log2(static_cast<double>(n));
    Schedule s;
    s.alpha = 1.0 / (2.0 * params.k + 2.0);
    s.z = std::pow(static_cast<double>(n) * lg, s.alpha);
    s.l = static_cast<int>(std::max<long long>(1, std::llround(s.z / lg)));
    double h_raw = std::ceil(params.c * std::pow(s.z, params.k));
    s.h = static_cast<int>(std::clamp<double>(h_raw, 2.0, 1 << 30));
    s.predicted_size = std::pow(static_cast<double>(n) * lg, 1.0 - s.alpha);
    return s;
}

/// Separator for a graph from a declared polynomial-expansion class. If the
/// minor branch fires, the declared (c, k) bound is impossible (a K_h minor
/// has too many edges for the assumed density), and the certificate is
/// returned as evidence instead of a separator.
struct ExpansionOutcome {
    Schedule schedule;
    PrsOutcome prs;

    bool violation() const { return prs.is_minor(); }
};

inline ExpansionOutcome expansion_separate(const Graph& g, const ExpansionParams& params,
                                           BalanceRatio balance = BalanceRatio{}) {
    if (g.vertex_count() < 4)
        throw std::invalid_argument("expansion_separate: need at least 4 vertices");
    ExpansionOutcome out;
    out.schedule = make_schedule(g.vertex_count(), params);
    out.prs = prs_separate(g, out.schedule.l, out.schedule.h, balance);
    return out;
}

// ---------------------------------------------------------------------------
// Baseline separators (test-family oracles)
// ---------------------------------------------------------------------------

enum class BaselineKind { GridMedian, BfsLevel };

namespace detail {

inline SeparatorCertificate assemble_from_cut(const Graph& g, const std::vector<Vertex>& cut,
                                              Vertex n) {
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    for (Vertex v : cut) alive[static_cast<std::size_t>(v)] = 0;
    auto pieces = alive_components(g, alive);
    auto [a, b] = pack_pieces(std::move(pieces), n);
    SeparatorCertificate cert;
    cert.S = VertexSet(cut);
    cert.A = std::move(a);
    cert.B = std::move(b);
    return cert;
}

/// Best single BFS level of the big component, or empty cut when all
/// components already fit the ratio.
inline std::vector<Vertex> bfs_level_cut(const Graph& g, BalanceRatio balance) {
    const Vertex n = g.vertex_count();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    auto comps = alive_components(g, alive);
    const VertexSet* big = nullptr;
    for (const auto& c : comps)
        if (!balance.side_ok(static_cast<long long>(c.size()), n)) {
            big = &c;
            break;
        }
    if (!big) return {};
    auto bl = bfs_levels(g, big->min_vertex(), alive);
    const long long w_size = static_cast<long long>(big->size());
    const int t_end = static_cast<int>(bl.levels.size()) - 1;
    int best_j = -1;
    long long best_size = std::numeric_limits<long long>::max();
    long long best_imbalance = std::numeric_limits<long long>::max();
    for (int j = 1; j <= t_end; ++j) {
        long long inside = bl.prefix[static_cast<std::size_t>(j - 1)];
        long long outside = w_size - bl.prefix[static_cast<std::size_t>(j)];
        if (!balance.side_ok(inside, n) || !balance.side_ok(outside, n)) continue;
        long long size = static_cast<long long>(bl.levels[static_cast<std::size_t>(j)].size());
        long long imb = std::llabs(inside - outside);
        if (size < best_size || (size == best_size && imb < best_imbalance)) {
            best_j = j;
            best_size = size;
            best_imbalance = imb;
        }
    }
    assert(best_j >= 1);  // the level just past the balanced prefix always qualifies
    return bl.levels[static_cast<std::size_t>(best_j)];
}

/// Cheapest balanced single-coordinate cut of the big component. Considers
/// both axes, prefers the smallest separator, then the most even split.
inline std::vector<Vertex> grid_median_cut(const Graph& g, BalanceRatio balance) {
    const Vertex n = g.vertex_count();
    const GridInfo& info = *g.grid();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    auto comps = alive_components(g, alive);
    const VertexSet* big = nullptr;
    for (const auto& c : comps)
        if (!balance.side_ok(static_cast<long long>(c.size()), n)) {
            big = &c;
            break;
        }
    if (!big) return {};

    std::vector<Vertex> best_cut;
    long long best_size = std::numeric_limits<long long>::max();
    long long best_imbalance = std::numeric_limits<long long>::max();
    for (int axis = 0; axis < 2; ++axis) {
        const std::vector<int>& coord = axis == 0 ? info.col : info.row;
        std::map<int, std::vector<Vertex>> by_coord;
        for (Vertex v : *big) by_coord[coord[static_cast<std::size_t>(v)]].push_back(v);
        long long below = 0;
        const long long total = static_cast<long long>(big->size());
        for (auto& [x, verts] : by_coord) {
            long long here = static_cast<long long>(verts.size());
            long long above = total - below - here;
            if (balance.side_ok(below, n) && balance.side_ok(above, n)) {
                long long imb = std::llabs(below - above);
                if (here < best_size || (here == best_size && imb < best_imbalance)) {
                    best_size = here;
                    best_imbalance = imb;
                    best_cut = verts;
                }
            }
            below += here;
        }
    }
    assert(!best_cut.empty());

    // Degenerate subsets (e.g. a single fat column) can defeat coordinate
    // cuts; fall back to a BFS level if it is cheaper.
    double sqrt_bound = std::ceil(std::sqrt(static_cast<double>(n))) + 1.0;
    if (static_cast<double>(best_cut.size()) > sqrt_bound) {
        auto level = bfs_level_cut(g, balance);
        if (!level.empty() && level.size() < best_cut.size()) return level;
    }
    return best_cut;
}

}  // namespace detail

/// Simple hereditary separators for test families. grid-median needs grid
/// coordinates on the graph; bfs-level works anywhere.
inline SeparatorCertificate baseline_separate(const Graph& g, BaselineKind kind,
                                              BalanceRatio balance = BalanceRatio{}) {
    const Vertex n = g.vertex_count();
    if (n == 0) return {};
    std::vector<Vertex> cut;
    switch (kind) {
        case BaselineKind::GridMedian:
            if (!g.grid())
                throw std::invalid_argument("grid-median separator: graph has no grid coordinates");
            cut = detail::grid_median_cut(g, balance);
            break;
        case BaselineKind::BfsLevel:
            cut = detail::bfs_level_cut(g, balance);
            break;
    }
    return detail::assemble_from_cut(g, cut, n);
}

// ---------------------------------------------------------------------------
// Validators
// ---------------------------------------------------------------------------

inline CheckReport validate_separator(const Graph& g, const VertexSet& u,
                                      const SeparatorCertificate& cert,
                                      BalanceRatio balance = BalanceRatio{}) {
    CheckReport report;
    const long long total = static_cast<long long>(u.size());

    bool disjoint = !cert.S.intersects(cert.A) && !cert.S.intersects(cert.B) &&
                    !cert.A.intersects(cert.B);
    report.add("pairwise-disjoint", disjoint);

    VertexSet cover = cert.S.set_union(cert.A).set_union(cert.B);
    report.add("covers-piece", cover == u,
               "S+A+B has " + std::to_string(cover.size()) + " of " + std::to_string(u.size()));

    bool separated = true;
    std::vector<char> in_b(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : cert.B) in_b[static_cast<std::size_t>(v)] = 1;
    for (Vertex a : cert.A) {
        for (Vertex w : g.neighbors(a))
            if (in_b[static_cast<std::size_t>(w)]) {
                separated = false;
                report.add("no-edge-A-B", false,
                           "edge " + std::to_string(a) + "-" + std::to_string(w));
                break;
            }
        if (!separated) break;
    }
    if (separated) report.add("no-edge-A-B", true);

    bool balanced = balance.side_ok(static_cast<long long>(cert.A.size()), total) &&
                    balance.side_ok(static_cast<long long>(cert.B.size()), total);
    report.add("balance", balanced,
               "|A|=" + std::to_string(cert.A.size()) + " |B|=" + std::to_string(cert.B.size()) +
                   " |U|=" + std::to_string(total));
    return report;
}

inline CheckReport validate_minor(const Graph& g, const ShallowMinorCertificate& cert) {
    CheckReport report;
    const int h = cert.h();
    const Vertex n = g.vertex_count();

    bool shapes = static_cast<int>(cert.centers.size()) == h && h >= 1;
    for (int i = 0; i < h && shapes; ++i) {
        const auto& bs = cert.branch_sets[static_cast<std::size_t>(i)];
        if (bs.empty() || !bs.contains(cert.centers[static_cast<std::size_t>(i)])) shapes = false;
        for (Vertex v : bs)
            if (v < 0 || v >= n) shapes = false;
    }
    report.add("well-formed", shapes);
    if (!shapes) return report;

    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    bool disjoint = true;
    for (int i = 0; i < h; ++i)
        for (Vertex v : cert.branch_sets[static_cast<std::size_t>(i)]) {
            if (owner[static_cast<std::size_t>(v)] >= 0) disjoint = false;
            owner[static_cast<std::size_t>(v)] = i;
        }
    report.add("disjoint-branch-sets", disjoint);

    bool connected = true;
    bool radius_ok = true;
    for (int i = 0; i < h; ++i) {
        const auto& bs = cert.branch_sets[static_cast<std::size_t>(i)];
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<Vertex> queue{cert.centers[static_cast<std::size_t>(i)]};
        dist[static_cast<std::size_t>(queue[0])] = 0;
        std::size_t head = 0;
        std::size_t reached = 0;
        int max_d = 0;
        while (head < queue.size()) {
            Vertex v = queue[head++];
            ++reached;
            max_d = std::max(max_d, dist[static_cast<std::size_t>(v)]);
            for (Vertex w : g.neighbors(v))
                if (dist[static_cast<std::size_t>(w)] < 0 && bs.contains(w) &&
                    owner[static_cast<std::size_t>(w)] == i) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(w);
                }
        }
        if (reached != bs.size()) connected = false;
        if (max_d > cert.depth) radius_ok = false;
    }
    report.add("branch-sets-connected", connected);
    report.add("radius-within-depth", radius_ok);

    bool witnesses = true;
    std::vector<std::vector<char>> have(static_cast<std::size_t>(h),
                                        std::vector<char>(static_cast<std::size_t>(h), 0));
    for (const auto& we : cert.witness_edges) {
        if (we.set_i < 0 || we.set_j < 0 || we.set_i >= h || we.set_j >= h ||
            we.set_i >= we.set_j) {
            witnesses = false;
            continue;
        }
        bool ok = g.has_edge(we.u, we.v) &&
                  cert.branch_sets[static_cast<std::size_t>(we.set_i)].contains(we.u) &&
                  cert.branch_sets[static_cast<std::size_t>(we.set_j)].contains(we.v);
        if (!ok) witnesses = false;
        have[static_cast<std::size_t>(we.set_i)][static_cast<std::size_t>(we.set_j)] = 1;
    }
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j)
            if (!have[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) witnesses = false;
    report.add("witness-edges", witnesses);
    return report;
}

}  // namespace sepgeo
