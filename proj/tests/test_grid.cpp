#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "fofana/grid.hpp"
#include "oracles.hpp"

using namespace fofana;

TEST_CASE("make_grid validates and counts") {
    const GridSpec a = make_grid(1, 16, 64);
    CHECK(a.point_count() == 1024);
    CHECK(a.cube_count() == 16);

    const GridSpec b = make_grid(2, 8, 16);
    CHECK(b.point_count() == 16384);
    CHECK(b.cube_count() == 64);

    CHECK_THROWS_AS(make_grid(1, 7, 64), std::invalid_argument);   // odd side
    CHECK_THROWS_AS(make_grid(1, 16, 48), std::invalid_argument);  // not a power of two
    CHECK_THROWS_AS(make_grid(1, 16, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(3, 16, 64), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1, 0, 64), std::invalid_argument);
}

TEST_CASE("sample evaluates pointwise") {
    const GridSpec spec = make_grid(1, 16, 64);
    const GridFunction ind = sample([](double x, double) { return x >= 0 && x < 1 ? 1.0 : 0.0; }, spec);
    int ones = 0;
    for (std::size_t i = 0; i < ind.size(); ++i) ones += ind[i] == 1.0 ? 1 : 0;
    CHECK(ones == 64);

    const GridFunction zero = zero_function(spec);
    for (std::size_t i = 0; i < zero.size(); ++i) REQUIRE(zero[i] == 0.0);

    const GridFunction gauss = sample([](double x, double) { return std::exp(-std::numbers::pi * x * x); }, spec);
    const int origin = spec.points_per_axis() / 2;
    CHECK(gauss[static_cast<std::size_t>(origin)] == 1.0);

    CHECK_THROWS_AS(sample([](double, double) { return std::nan(""); }, spec), std::invalid_argument);
}

TEST_CASE("cube_slices partitions the index set") {
    SUBCASE("d=1 explicit blocks") {
        const GridSpec spec = make_grid(1, 4, 2);
        const auto blocks = cube_slices(spec);
        REQUIRE(blocks.size() == 4);
        CHECK(blocks[0] == std::vector<std::size_t>{0, 1});
        CHECK(blocks[1] == std::vector<std::size_t>{2, 3});
        CHECK(blocks[2] == std::vector<std::size_t>{4, 5});
        CHECK(blocks[3] == std::vector<std::size_t>{6, 7});
    }
    SUBCASE("d=2 block sizes") {
        const GridSpec spec = make_grid(2, 2, 2);
        const auto blocks = cube_slices(spec);
        REQUIRE(blocks.size() == 4);
        for (const auto& blk : blocks) CHECK(blk.size() == 4);
    }
    SUBCASE("partition property over several specs") {
        for (const GridSpec spec : {make_grid(1, 6, 4), make_grid(1, 16, 8), make_grid(2, 4, 4)}) {
            const auto blocks = cube_slices(spec);
            std::set<std::size_t> seen;
            std::size_t total = 0;
            for (const auto& blk : blocks) {
                total += blk.size();
                seen.insert(blk.begin(), blk.end());
            }
            CHECK(total == spec.point_count());      // disjoint (sizes add up)
            CHECK(seen.size() == spec.point_count());  // cover everything
        }
    }
}

TEST_CASE("partial_derivative") {
    const GridSpec spec = make_grid(1, 16, 64);
    const double k = 2.0 * std::numbers::pi / spec.side;

    SUBCASE("sine derivative with the stated bound") {
        const GridFunction u = sample([k](double x, double) { return std::sin(k * x) / k; }, spec);
        const GridFunction du = partial_derivative(u, 0);
        const GridFunction want = sample([k](double x, double) { return std::cos(k * x); }, spec);
        const double bound = k * k * spec.spacing() * spec.spacing() / 6.0;
        CHECK(testing::max_abs_diff(du.values(), want.values()) <= bound * 1.05 + 1e-14);
    }
    SUBCASE("constants have exactly zero derivative") {
        const GridFunction du = partial_derivative(constant_function(spec, 3.5), 0);
        for (std::size_t i = 0; i < du.size(); ++i) REQUIRE(du[i] == 0.0);
    }
    SUBCASE("central difference exact on linear data away from the seam") {
        const GridFunction u = sample([](double x, double) { return 2.0 * x; }, spec);
        const GridFunction du = partial_derivative(u, 0);
        const int n = spec.points_per_axis();
        for (int i = 2; i < n - 2; ++i) CHECK(du[static_cast<std::size_t>(i)] == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("axis out of range") {
        CHECK_THROWS_AS(partial_derivative(constant_function(spec, 1.0), 1), std::invalid_argument);
    }
    SUBCASE("measured convergence order is second order") {
        // non-trivially periodic profile sampled at two resolutions
        auto profile = [&](double x, double) { return std::exp(std::sin(k * x)); };
        auto exact = [&](double x) { return k * std::cos(k * x) * std::exp(std::sin(k * x)); };
        double err[2];
        int idx = 0;
        for (int m : {64, 128}) {
            const GridSpec s = make_grid(1, 16, m);
            const GridFunction du = partial_derivative(sample(profile, s), 0);
            double worst = 0.0;
            for (int i = 0; i < s.points_per_axis(); ++i)
                worst = std::max(worst, std::fabs(du[static_cast<std::size_t>(i)] - exact(s.coord(i))));
            err[idx++] = worst;
        }
        const double order = std::log2(err[0] / err[1]);
        CHECK(order >= 1.8);
        CHECK(order <= 2.2);
    }
}

TEST_CASE("resample_dyadic") {
    const GridSpec spec = make_grid(1, 16, 64);
    const GridFunction chi = sample([](double x, double) { return x >= 0 && x < 1 ? 1.0 : 0.0; }, spec);

    SUBCASE("dyadic indicator maps exactly") {
        const GridFunction wide = resample_dyadic(chi, 2.0);
        CHECK(wide.spec().side == 32);
        CHECK(wide.spec().samples_per_unit == 32);
        const GridFunction want = sample([](double x, double) { return x >= 0 && x < 2 ? 1.0 : 0.0; }, wide.spec());
        CHECK(testing::max_abs_diff(wide.values(), want.values()) == 0.0);
    }
    SUBCASE("factor 1 is the identity") {
        const GridFunction same = resample_dyadic(chi, 1.0);
        CHECK(same.spec() == spec);
        CHECK(testing::max_abs_diff(same.values(), chi.values()) == 0.0);
    }
    SUBCASE("stretch then shrink recovers the function") {
        const GridFunction g = sample([](double x, double) { return std::exp(-std::numbers::pi * x * x); }, spec);
        const GridFunction back = resample_dyadic(resample_dyadic(g, 2.0), 0.5);
        CHECK(back.spec() == spec);
        CHECK(testing::max_abs_diff(back.values(), g.values()) == 0.0);
    }
    SUBCASE("unrepresentable factors are rejected") {
        CHECK_THROWS_AS(resample_dyadic(chi, 3.0), std::invalid_argument);
        CHECK_THROWS_AS(resample_dyadic(chi, 128.0), std::invalid_argument);   // m/128 < 1
        CHECK_THROWS_AS(resample_dyadic(chi, 1.0 / 32.0), std::invalid_argument);  // side/32 < 1
    }
}

TEST_CASE("Ladder") {
    const Ladder lad = Ladder::dyadic(-2, 2);
    const auto ms = lad.members();
    REQUIRE(ms.size() == 5);
    CHECK(ms.front() == 0.25);
    CHECK(ms.back() == 4.0);
    for (std::size_t i = 1; i < ms.size(); ++i) CHECK(ms[i] > ms[i - 1]);

    const Ladder fine = lad.refined();
    CHECK(fine.count == 9);
    CHECK(fine.members().front() == 0.25);
    CHECK(fine.members().back() == doctest::Approx(4.0).epsilon(1e-12));

    CHECK_THROWS_AS(Ladder(0.0, 2.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Ladder(1.0, 1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Ladder(1.0, 2.0, 0), std::invalid_argument);
}
