#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "sepgeo/exposure.hpp"

using namespace sepgeo;

TEST_CASE("density certificate of a single segment") {
    std::vector<Segment<2>> segs{{{{0, 0}}, {{2, 0}}}};
    auto cert = density_lower_bound(segs);
    CHECK(cert.density_lb() == 1);
    CHECK_THAT(cert.radius, Catch::Matchers::WithinAbs(1.0, 1e-12));  // half-length
    CHECK_THAT(cert.center[0], Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK_THAT(cert.center[1], Catch::Matchers::WithinAbs(0.0, 1e-12));
}

TEST_CASE("unit segments through the origin are all counted") {
    std::vector<Segment<2>> segs;
    for (int i = 0; i < 5; ++i) {
        double phi = 0.2 + i * 0.5;
        Vec<2> d{{std::cos(phi), std::sin(phi)}};
        segs.push_back({d * -0.5, d * 0.5});
    }
    auto cert = density_lower_bound(segs);
    CHECK(cert.density_lb() == 5);
    CHECK(cert.center.norm() <= 1e-9);
    CHECK_THAT(cert.radius, Catch::Matchers::WithinAbs(0.5, 1e-12));
}

TEST_CASE("empty input gives an empty certificate") {
    std::vector<Segment<2>> segs;
    CHECK(density_lower_bound(segs).density_lb() == 0);
}

TEST_CASE("certificate hits are honest") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 20; ++t) {
        std::vector<Segment<2>> segs;
        for (int i = 0; i < 12; ++i)
            segs.push_back({{{u(rng), u(rng)}}, {{u(rng), u(rng)}}});
        auto cert = density_lower_bound(segs);
        for (int idx : cert.hits) {
            const auto& s = segs[static_cast<std::size_t>(idx)];
            CHECK(point_segment_distance(cert.center, s) <= cert.radius + 1e-9);
            CHECK(s.length() >= 2 * cert.radius - 1e-9);
        }
    }
}

TEST_CASE("density is subadditive on a shared candidate set") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 15; ++t) {
        std::vector<Segment<2>> a, b, both;
        for (int i = 0; i < 8; ++i) {
            Segment<2> s{{{u(rng), u(rng)}}, {{u(rng), u(rng)}}};
            a.push_back(s);
            both.push_back(s);
        }
        for (int i = 0; i < 8; ++i) {
            Segment<2> s{{{u(rng), u(rng)}}, {{u(rng), u(rng)}}};
            b.push_back(s);
            both.push_back(s);
        }
        auto centers = density_candidate_centers(both);
        auto lb_union = density_lower_bound(both, centers).density_lb();
        auto lb_a = density_lower_bound(a, centers).density_lb();
        auto lb_b = density_lower_bound(b, centers).density_lb();
        CHECK(lb_union <= lb_a + lb_b);
    }
}

TEST_CASE("exposed families have bounded density (smoke)") {
    const double sigma = 0.5;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        GenerateOptions opt;
        opt.sigma = sigma;
        opt.seed = seed;
        opt.n_target = 40;
        opt.max_attempts = 4000;
        opt.len_min = 0.02;
        auto segs = generate_exposed<2>(opt);
        REQUIRE(is_exposed(segs, sigma).exposed);
        auto cert = density_lower_bound(segs);
        // sigma^-6 scaling is pinned in the acceptance suite; this is a sanity margin
        CHECK(static_cast<double>(cert.density_lb()) <= 1.0 / std::pow(sigma, 6));
    }
}
