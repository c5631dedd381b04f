#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fofana/catalog.hpp"
#include "fofana/hardy.hpp"
#include "oracles.hpp"

using namespace fofana;

namespace {
constexpr double kPi = std::numbers::pi;

GridFunction scaled(const GridFunction& f, double c) {
    std::vector<double> v(f.values().begin(), f.values().end());
    for (double& x : v) x *= c;
    return GridFunction(f.spec(), std::move(v));
}

GridFunction added(const GridFunction& f, const GridFunction& g) {
    std::vector<double> v(f.values().begin(), f.values().end());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += g[i];
    return GridFunction(f.spec(), std::move(v));
}

GridFunction sharp_bump(const GridSpec& spec) {
    const double s = 1.0 / (4.0 * kPi);
    return sample([s](double x, double) { return heat_kernel_value(1, s, x); }, spec);
}
}  // namespace

TEST_CASE("hardy_fofana_norm") {
    const GridSpec spec = make_grid(1, 64, 64);
    const LadderSet ls = LadderSet::defaults(spec);
    const Exponents e = Exponents::make(1.0, 2.0, 1.5);

    SUBCASE("zero") {
        CHECK(hardy_fofana_norm(zero_function(spec), e, ls.t, ls.r).value == 0.0);
    }
    SUBCASE("constants reduce to the norm of the unit constant") {
        const double n1 = hardy_fofana_norm(constant_function(spec, 1.0), e, ls.t, ls.r).value;
        const double nc = hardy_fofana_norm(constant_function(spec, 2.5), e, ls.t, ls.r).value;
        CHECK(nc == doctest::Approx(2.5 * n1).epsilon(1e-10));
    }
    SUBCASE("exponent triples with alpha > q are rejected") {
        CHECK_THROWS_AS(Exponents::make(1.0, 1.5, 2.0), std::invalid_argument);
    }
    SUBCASE("pinned reference value stays fixed") {
        const NormReport rep = hardy_fofana_norm(sharp_bump(spec), e, ls.t, ls.r);
        CHECK(rep.value == doctest::Approx(0.85861341969305538).epsilon(1e-9));
        CHECK(rep.argmax == 1.0);
    }
    SUBCASE("theorem-mode exponents enforced") {
        CHECK_THROWS_AS(hardy_fofana_norm(zero_function(spec), Exponents::make(1.0, kInf, 2.0), ls.t, ls.r),
                        std::invalid_argument);
    }
}

TEST_CASE("poisson_characterization_norm") {
    const GridSpec spec = make_grid(1, 64, 64);
    const LadderSet ls = LadderSet::defaults(spec);
    const Exponents e = Exponents::make(1.0, 2.0, 1.5);

    SUBCASE("zero") {
        CHECK(poisson_characterization_norm(zero_function(spec), e, ls.t, ls.r).value == 0.0);
    }
    SUBCASE("homogeneity") {
        const GridFunction f = sharp_bump(spec);
        const double n1 = poisson_characterization_norm(f, e, ls.t, ls.r).value;
        const double n3 = poisson_characterization_norm(scaled(f, 3.0), e, ls.t, ls.r).value;
        CHECK(n3 == doctest::Approx(3.0 * n1).epsilon(1e-12));
    }
    SUBCASE("comparable to the grand-maximal norm on the poisson kernel") {
        const GridFunction p1 = poisson_kernel(spec, 1.0).values;
        const double pn = poisson_characterization_norm(p1, e, ls.t, ls.r).value;
        const double mn = hardy_fofana_norm(p1, e, ls.t, ls.r).value;
        CHECK(pn > 0.0);
        CHECK(mn > 0.0);
        const double ratio = pn / mn;
        CHECK(ratio >= 0.2);
        CHECK(ratio <= 5.0);
    }
}

TEST_CASE("riesz_characterization") {
    const GridSpec spec = make_grid(1, 64, 64);
    const LadderSet ls = LadderSet::defaults(spec);

    SUBCASE("zero") {
        const RieszCharacterization rep =
            riesz_characterization(zero_function(spec), Exponents::make(1.0, 2.0, 1.5), ls.t, ls.r);
        CHECK(rep.value == 0.0);
    }
    SUBCASE("at p=q=alpha=2 the value approaches the L2 norms of f and Hf") {
        const GridFunction f = sample([](double x, double) { return heat_kernel_value(1, 1.0, x); }, spec);
        const Exponents e2 = Exponents::make(2.0, 2.0, 2.0);
        const RieszCharacterization rep = riesz_characterization(f, e2, ls.t, ls.r);
        const double want = lp_norm(f, 2.0) + lp_norm(riesz_transform(f, 0), 2.0);
        CHECK(rep.value == doctest::Approx(want).epsilon(1e-2));
        CHECK(rep.argmax_t == ls.t.members().front());  // gaussian symbol <= 1, sup at the smallest scale
    }
    SUBCASE("per-term breakdown is kept and the riesz part of an even function is odd") {
        const GridFunction f = sharp_bump(spec);
        const GridFunction rf = riesz_transform(f, 0);
        const int n = spec.points_per_axis();
        double sym = 0.0;
        for (int i = 1; i < n; ++i)
            sym = std::max(sym, std::fabs(rf[static_cast<std::size_t>(i)] + rf[static_cast<std::size_t>(n - i)]));
        CHECK(sym <= 1e-10);

        const RieszCharacterization rep = riesz_characterization(f, Exponents::make(1.0, 2.0, 1.5), ls.t, ls.r);
        REQUIRE(rep.terms.size() == ls.t.members().size());
        for (const auto& term : rep.terms) {
            REQUIRE(term.riesz.size() == 1);
            CHECK(term.total == doctest::Approx(term.base + term.riesz[0]));
            CHECK(term.base > 0.0);
            CHECK(term.riesz[0] > 0.0);
        }
    }
}

TEST_CASE("dilation_characterization") {
    const GridSpec spec = make_grid(1, 64, 64);
    const LadderSet ls = LadderSet::defaults(spec);
    const Exponents e = Exponents::make(1.0, 2.0, 1.5);
    const GridFunction f = sharp_bump(spec);

    SUBCASE("zero") {
        CHECK(dilation_characterization(zero_function(spec), e, ls.rho, ls.t).value == 0.0);
    }
    SUBCASE("identical to the estimator on shared ladders") {
        const double a = dilation_characterization(f, e, ls.r, ls.t).value;
        const double b = hardy_fofana_norm(f, e, ls.t, ls.r).value;
        CHECK(std::fabs(a - b) <= 1e-10 * std::max(1.0, b));
    }
    SUBCASE("singleton ladder gives the plain amalgam estimate") {
        const double a = dilation_characterization(f, e, Ladder(1.0, 2.0, 1), ls.t).value;
        const double b = amalgam_norm(grand_maximal(f, ls.t), e.p, e.q);
        CHECK(a == doctest::Approx(b).epsilon(1e-13));
    }
}

TEST_CASE("restricted_at_infinity_diag") {
    const GridSpec spec = make_grid(1, 64, 64);
    const LadderSet ls = LadderSet::defaults(spec);
    const Exponents e = Exponents::make(1.0, 2.0, 1.5);

    SUBCASE("zero input gives an all-zero table") {
        const auto rows = restricted_at_infinity_diag(zero_function(spec), e, ls.mu, ls.r);
        for (const auto& row : rows) {
            CHECK(row.norm == 0.0);
            CHECK_FALSE(row.violates);
        }
    }
    SUBCASE("bounded inputs satisfy the interpolation bound at every mu") {
        const auto entries = default_catalog(spec, 11);
        for (const auto& entry : entries) {
            const auto rows = restricted_at_infinity_diag(realize(entry, spec), e, ls.mu, ls.r);
            for (const auto& row : rows) CHECK_FALSE(row.violates);
        }
    }
    SUBCASE("the mu = 1 row is the plain Fofana norm of f * phi") {
        const GridFunction f = sharp_bump(spec);
        const auto rows = restricted_at_infinity_diag(f, e, ls.mu, ls.r);
        REQUIRE(rows.front().mu == 1.0);
        const GridFunction g = convolve(f, mollifier(spec, 1.0).values);
        CHECK(rows.front().norm == doctest::Approx(fofana_norm(g, e, ls.r).value).epsilon(1e-13));
    }
    SUBCASE("mu below 1 is rejected") {
        CHECK_THROWS_AS(restricted_at_infinity_diag(zero_function(spec), e, Ladder(0.5, 2.0, 3), ls.r),
                        std::invalid_argument);
    }
}

TEST_CASE("estimator dilation invariance with counter-rotated ladders") {
    const GridSpec spec = make_grid(1, 64, 64);
    const LadderSet ls = LadderSet::defaults(spec);
    const Exponents e = Exponents::make(1.0, 2.0, 1.5);
    const GridFunction f = sharp_bump(spec);
    const double base = hardy_fofana_norm(f, e, ls.t, ls.r).value;
    for (double rho : {0.5, 2.0, 4.0}) {
        const GridFunction g = dilate(f, e.alpha, rho);
        const double moved = hardy_fofana_norm(g, e, ls.t.scaled(rho), ls.r.scaled(1.0 / rho)).value;
        CHECK(std::fabs(moved - base) <= 1e-10 * base);
    }
}

TEST_CASE("p-power quasi-triangle at the estimator level") {
    const GridSpec spec = make_grid(1, 16, 16);
    const LadderSet ls = LadderSet::defaults(spec);
    const Exponents e = Exponents::make(0.75, 2.0, 1.0);
    const GridFunction f = sample([](double x, double) { return heat_kernel_value(1, 0.5, x - 1.0); }, spec);
    const GridFunction g = sample([](double x, double) { return heat_kernel_value(1, 0.25, x + 2.0); }, spec);

    const double nf = hardy_fofana_norm(f, e, ls.t, ls.r).value;
    const double ng = hardy_fofana_norm(g, e, ls.t, ls.r).value;
    const double nfg = hardy_fofana_norm(added(f, g), e, ls.t, ls.r).value;
    CHECK(std::pow(nfg, e.p) <= (std::pow(nf, e.p) + std::pow(ng, e.p)) * (1.0 + 1e-12));
}

TEST_CASE("characterization report: four functionals move together") {
    const GridSpec spec = make_grid(1, 64, 64);
    const LadderSet ls = LadderSet::defaults(spec);
    const Exponents e = Exponents::make(1.0, 2.0, 1.5);

    SUBCASE("all zero on the zero function") {
        const CharacterizationReport rep = characterize(zero_function(spec), e, ls);
        CHECK(rep.maximal_norm.value == 0.0);
        CHECK(rep.poisson_norm.value == 0.0);
        CHECK(rep.riesz_functional.value == 0.0);
        CHECK(rep.dilation_norm.value == 0.0);
        CHECK(rep.ratios.empty());
    }
    SUBCASE("all positive on a bump, with ratios stable under dilation") {
        const GridFunction f = sharp_bump(spec);
        const CharacterizationReport rep = characterize(f, e, ls);
        CHECK(rep.maximal_norm.value > 0.0);
        CHECK(rep.poisson_norm.value > 0.0);
        CHECK(rep.riesz_functional.value > 0.0);
        CHECK(rep.dilation_norm.value > 0.0);
        REQUIRE(rep.ratios.size() == 6);

        LadderSet moved;
        moved.t = ls.t.scaled(2.0);
        moved.r = ls.r.scaled(0.5);
        moved.rho = ls.rho.scaled(0.5);
        moved.mu = ls.mu;
        const CharacterizationReport rep2 = characterize(dilate(f, e.alpha, 2.0), e, moved);
        for (std::size_t i = 0; i < rep.ratios.size(); ++i) {
            REQUIRE(rep2.ratios[i].pair == rep.ratios[i].pair);
            CHECK(std::fabs(rep2.ratios[i].value - rep.ratios[i].value) <= 1e-2 * rep.ratios[i].value);
        }
    }
}

TEST_CASE("mollifier independence band across the catalog") {
    const GridSpec spec = make_grid(1, 64, 64);
    const LadderSet ls = LadderSet::defaults(spec);
    const Exponents e = Exponents::make(1.0, 2.0, 1.5);
    double lo = 1e300, hi = 0.0;
    for (const auto& entry : default_catalog(spec, 2024)) {
        if (!entry.smooth) continue;
        const GridFunction f = realize(entry, spec);
        const double a = hardy_fofana_norm(f, e, ls.t, ls.r, MollifierShape::gaussian).value;
        const double b = hardy_fofana_norm(f, e, ls.t, ls.r, MollifierShape::cos2).value;
        const double ratio = a / b;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    CHECK((hi - lo) / (0.5 * (hi + lo)) <= 5e-2);
}
