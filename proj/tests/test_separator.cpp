#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "sepgeo/separator.hpp"
#include "test_util.hpp"

using namespace sepgeo;

namespace {

/// Independent A-B separation oracle: scan every edge of g.
bool no_edge_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbors(u))
            if (a.contains(u) && b.contains(v)) return false;
    return true;
}

/// Explicit contraction: every branch-set pair must be joined by some edge.
bool contraction_is_clique(const Graph& g, const ShallowMinorCertificate& cert) {
    const int h = cert.h();
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j) {
            bool joined = false;
            for (Vertex u : cert.branch_sets[static_cast<std::size_t>(i)]) {
                for (Vertex v : g.neighbors(u))
                    if (cert.branch_sets[static_cast<std::size_t>(j)].contains(v)) {
                        joined = true;
                        break;
                    }
                if (joined) break;
            }
            if (!joined) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("K5 yields its own clique as a depth-0 minor") {
    Graph k5 = testutil::clique(5);
    auto out = prs_separate(k5, 1, 5);
    REQUIRE(out.is_minor());
    const auto& cert = out.minor();
    CHECK(cert.h() == 5);
    CHECK(cert.depth == 0);
    for (const auto& bs : cert.branch_sets) CHECK(bs.size() == 1);
    CHECK(cert.depth <= minor_depth_budget(5, 1));
    CHECK(validate_minor(k5, cert).all_pass());
    CHECK(contraction_is_clique(k5, cert));
}

TEST_CASE("disconnected paths split for free") {
    Graph g = testutil::disjoint_union(testutil::path(10), testutil::path(10));
    for (int l : {1, 3, 8}) {
        auto out = prs_separate(g, l, 4);
        REQUIRE_FALSE(out.is_minor());
        const auto& cert = out.separator();
        CHECK(cert.S.empty());
        CHECK(cert.A.size() == 10);
        CHECK(cert.B.size() == 10);
        CHECK(validate_separator(g, VertexSet::full(20), cert).all_pass());
    }
}

TEST_CASE("20x20 grid separator validates and meets the size bound") {
    Graph g = grid_graph(20, 20);
    auto out = prs_separate(g, 4, 10);
    REQUIRE_FALSE(out.is_minor());
    const auto& cert = out.separator();
    auto report = validate_separator(g, VertexSet::full(400), cert);
    CHECK(report.all_pass());
    CHECK(no_edge_between(g, cert.A, cert.B));
    CHECK(static_cast<double>(cert.S.size()) <= separator_size_bound(400, 4, 10));
    CHECK(out.meta.ratio <= 1.0);
}

TEST_CASE("expansion schedule") {
    SECTION("alpha is exact for k in 1..3") {
        for (int k : {1, 2, 3}) {
            Schedule s = make_schedule(4096, {k, 1.0});
            CHECK(s.alpha == 1.0 / (2.0 * k + 2.0));
            // direct formula evaluation
            double lg = clamped_log2(4096.0);
            double z = std::pow(4096.0 * lg, 1.0 / (2.0 * k + 2.0));
            CHECK(s.z == z);
            CHECK(s.l == std::max<long long>(1, std::llround(z / lg)));
            CHECK(s.h == std::max(2, static_cast<int>(std::ceil(1.0 * std::pow(z, k)))));
            CHECK(s.predicted_size == std::pow(4096.0 * lg, 1.0 - s.alpha));
        }
    }
    SECTION("documented n=4096, k=1 values") {
        Schedule s = make_schedule(4096, {1, 1.0});
        CHECK(s.alpha == 0.25);
        CHECK_THAT(s.z, Catch::Matchers::WithinAbs(14.8897, 1e-3));
        CHECK(s.l == 1);
    }
    SECTION("bad parameters are rejected") {
        CHECK_THROWS_AS(make_schedule(100, {0, 1.0}), std::invalid_argument);
        CHECK_THROWS_AS(make_schedule(100, {1, 0.0}), std::invalid_argument);
        Graph tiny = testutil::path(3);
        CHECK_THROWS_AS(expansion_separate(tiny, {1, 1.0}), std::invalid_argument);
    }
}

TEST_CASE("a dense clique violates a small declared expansion bound") {
    Graph k50 = testutil::clique(50);
    auto out = expansion_separate(k50, {1, 0.1});
    CHECK(out.violation());
    REQUIRE(out.prs.is_minor());
    CHECK(validate_minor(k50, out.prs.minor()).all_pass());
    CHECK(out.prs.minor().depth <= minor_depth_budget(50, out.schedule.l));
}

TEST_CASE("a sparse grid under an honest declaration gets a separator") {
    Graph g = grid_graph(24, 24);
    auto out = expansion_separate(g, {1, 12.0});
    CHECK_FALSE(out.violation());
    CHECK(validate_separator(g, VertexSet::full(g.vertex_count()), out.prs.separator()).all_pass());
}

TEST_CASE("separator validator catches bad certificates") {
    Graph g = testutil::path(6);  // 0-1-2-3-4-5
    SECTION("valid certificate passes") {
        SeparatorCertificate cert{VertexSet({2}), VertexSet({0, 1}), VertexSet({3, 4, 5})};
        CHECK(validate_separator(g, VertexSet::full(6), cert).all_pass());
    }
    SECTION("A-B edge fails the separation check") {
        SeparatorCertificate cert{VertexSet({4}), VertexSet({0, 1, 2}), VertexSet({3, 5})};
        auto report = validate_separator(g, VertexSet::full(6), cert);
        CHECK_FALSE(report.all_pass());
        CHECK_FALSE(report.find("no-edge-A-B")->pass);
    }
    SECTION("oversized side fails the balance check") {
        Graph edgeless = Graph::from_edges(10, {});
        SeparatorCertificate cert{VertexSet{}, VertexSet({0, 1, 2, 3, 4, 5, 6}),
                                  VertexSet({7, 8, 9})};
        auto report = validate_separator(edgeless, VertexSet::full(10), cert);
        CHECK_FALSE(report.all_pass());
        CHECK_FALSE(report.find("balance")->pass);
        CHECK(report.find("no-edge-A-B")->pass);
    }
    SECTION("missing vertices fail the cover check") {
        SeparatorCertificate cert{VertexSet({2}), VertexSet({0, 1}), VertexSet({4, 5})};
        auto report = validate_separator(g, VertexSet::full(6), cert);
        CHECK_FALSE(report.find("covers-piece")->pass);
    }
}

TEST_CASE("minor validator catches bad certificates") {
    Graph k4 = testutil::clique(4);
    SECTION("overlapping branch sets fail disjointness") {
        ShallowMinorCertificate cert;
        cert.depth = 0;
        cert.branch_sets = {VertexSet({0, 1}), VertexSet({1, 2})};
        cert.centers = {0, 1};
        cert.witness_edges = {{0, 1, 0, 2}};
        auto report = validate_minor(k4, cert);
        CHECK_FALSE(report.find("disjoint-branch-sets")->pass);
    }
    SECTION("a long path branch set breaks the radius bound") {
        Graph g = testutil::path(6);
        ShallowMinorCertificate cert;
        cert.depth = 1;
        cert.branch_sets = {VertexSet({0, 1, 2, 3, 4}), VertexSet({5})};
        cert.centers = {0, 5};
        cert.witness_edges = {{0, 1, 4, 5}};
        auto report = validate_minor(g, cert);
        CHECK_FALSE(report.find("radius-within-depth")->pass);
        cert.depth = 4;
        CHECK(validate_minor(g, cert).all_pass());
    }
    SECTION("missing witness edges are reported") {
        ShallowMinorCertificate cert;
        cert.depth = 0;
        cert.branch_sets = {VertexSet({0}), VertexSet({1}), VertexSet({2})};
        cert.centers = {0, 1, 2};
        cert.witness_edges = {{0, 1, 0, 1}};
        auto report = validate_minor(k4, cert);
        CHECK_FALSE(report.find("witness-edges")->pass);
    }
}

TEST_CASE("baseline separators") {
    SECTION("grid-median on 5x5 cuts the middle column") {
        Graph g = grid_graph(5, 5);
        auto cert = baseline_separate(g, BaselineKind::GridMedian);
        CHECK(cert.S == VertexSet({2, 7, 12, 17, 22}));
        CHECK(cert.A.size() == 10);
        CHECK(cert.B.size() == 10);
        CHECK(validate_separator(g, VertexSet::full(25), cert).all_pass());
    }
    SECTION("bfs-level on a 3-path cuts the middle vertex") {
        Graph g = testutil::path(3);
        auto cert = baseline_separate(g, BaselineKind::BfsLevel);
        CHECK(cert.S == VertexSet({1}));
        CHECK(cert.A.size() == 1);
        CHECK(cert.B.size() == 1);
    }
    SECTION("degenerate singleton grid") {
        Graph g = grid_graph(1, 1);
        auto cert = baseline_separate(g, BaselineKind::GridMedian);
        CHECK(cert.S.empty());
        CHECK(cert.A == VertexSet({0}));
        CHECK(cert.B.empty());
        CHECK(validate_separator(g, VertexSet::full(1), cert).all_pass());
    }
    SECTION("grid-median requires coordinates") {
        Graph g = testutil::path(5);
        CHECK_THROWS_AS(baseline_separate(g, BaselineKind::GridMedian), std::invalid_argument);
    }
}

TEST_CASE("grid-median is hereditary on grid subgraphs") {
    Graph g = grid_graph(12, 12);
    std::mt19937_64 rng(11);
    auto check_piece = [&](const VertexSet& u) {
        if (u.empty()) return;
        auto sub = induce(g, u);
        auto cert = baseline_separate(sub.graph, BaselineKind::GridMedian);
        CHECK(validate_separator(sub.graph, VertexSet::full(sub.graph.vertex_count()), cert)
                  .all_pass());
        double bound = std::ceil(std::sqrt(static_cast<double>(u.size()))) + 1.0;
        CHECK(static_cast<double>(cert.S.size()) <= bound);
    };
    SECTION("sub-rectangles") {
        std::uniform_int_distribution<int> d(0, 11);
        for (int t = 0; t < 25; ++t) {
            int r1 = d(rng), r2 = d(rng), c1 = d(rng), c2 = d(rng);
            if (r1 > r2) std::swap(r1, r2);
            if (c1 > c2) std::swap(c1, c2);
            std::vector<Vertex> verts;
            for (int r = r1; r <= r2; ++r)
                for (int c = c1; c <= c2; ++c) verts.push_back(static_cast<Vertex>(r * 12 + c));
            check_piece(VertexSet(std::move(verts)));
        }
    }
    SECTION("random subsets") {
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int t = 0; t < 25; ++t) {
            std::vector<Vertex> verts;
            for (Vertex v = 0; v < 144; ++v)
                if (coin(rng) < 0.6) verts.push_back(v);
            check_piece(VertexSet(std::move(verts)));
        }
    }
}

TEST_CASE("either/or totality on mixed fuzz graphs") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> pick_l(1, 8), pick_h(2, 12);
    for (int t = 0; t < 60; ++t) {
        Graph g;
        switch (t % 4) {
            case 0: g = grid_graph(2 + t % 13, 2 + (t * 7) % 11); break;
            case 1: g = testutil::random_sparse(30 + t * 3, 3 * (30 + t * 3), rng()); break;
            case 2: g = testutil::clique(2 + t % 11); break;
            default:
                g = testutil::disjoint_union(testutil::path(5 + t % 20),
                                             testutil::clique(3 + t % 7));
        }
        int l = pick_l(rng), h = pick_h(rng);
        auto out = prs_separate(g, l, h);
        if (out.is_minor()) {
            CHECK(validate_minor(g, out.minor()).all_pass());
            CHECK(contraction_is_clique(g, out.minor()));
            CHECK(out.minor().depth <= minor_depth_budget(g.vertex_count(), l));
        } else {
            const auto& cert = out.separator();
            CHECK(validate_separator(g, VertexSet::full(g.vertex_count()), cert).all_pass());
            CHECK(static_cast<double>(cert.S.size()) <=
                  separator_size_bound(g.vertex_count(), l, h));
        }
    }
}
