#include "fofana/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fofana/kernels.hpp"

namespace fofana {

namespace {

constexpr double kPi = std::numbers::pi;

// splitmix64: tiny, deterministic across platforms.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9E3779B97f4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }
};

double gauss_bump(int dim, double s, double x0, double x1) {
    return heat_kernel_value(dim, s, x0, x1);
}

// Periodized d=1 Poisson closed form, matching the kernel constructor.
double poisson_circle(int side, double t, double x) {
    const double a = 2.0 * kPi * t / side;
    const double theta = 2.0 * kPi * x / side;
    const double em = -std::expm1(-a);
    const double sn = std::sin(0.5 * theta);
    return -std::expm1(-2.0 * a) / ((em * em + 4.0 * std::exp(-a) * sn * sn) * side);
}

}  // namespace

std::vector<CatalogEntry> default_catalog(const GridSpec& spec, std::uint64_t seed) {
    std::vector<CatalogEntry> out;
    const int dim = spec.dim;
    const int side = spec.side;

    if (dim == 1) {
        out.push_back({"gauss_quarter", true, true, false,
                       [](double x, double) { return gauss_bump(1, 0.25, x, 0.0); }});
        out.push_back({"gauss_one", true, true, false,
                       [](double x, double) { return gauss_bump(1, 1.0, x, 0.0); }});
        out.push_back({"gauss_two", true, true, false,
                       [](double x, double) { return gauss_bump(1, 2.0, x, 0.0); }});
        out.push_back({"poisson_one", true, false, false,
                       [side](double x, double) { return poisson_circle(side, 1.0, x); }});
        out.push_back({"indicator_unit", false, true, false,
                       [](double x, double) { return x >= 0.0 && x < 1.0 ? 1.0 : 0.0; }});
        out.push_back({"indicator_pair", false, true, false,
                       [](double x, double) { return x >= 0.0 && x < 2.0 ? 1.0 : 0.0; }});
        out.push_back({"bumps_multiscale", true, true, false, [](double x, double) {
                           double v = 0.0;
                           const double centers[4] = {0.0, 2.0, -3.0, 5.0};
                           for (int i = 0; i < 4; ++i)
                               v += std::ldexp(1.0, -i) * gauss_bump(1, std::pow(4.0, -i), x - centers[i], 0.0);
                           return v;
                       }});
        out.push_back({"modulated", true, true, true, [](double x, double) {
                           return std::cos(2.0 * kPi * x) * std::exp(-kPi * x * x / 16.0);
                       }});
    } else {
        out.push_back({"gauss_sixteenth", true, true, false,
                       [](double x0, double x1) { return gauss_bump(2, 1.0 / 16.0, x0, x1); }});
        out.push_back({"gauss_eighth", true, true, false,
                       [](double x0, double x1) { return gauss_bump(2, 1.0 / 8.0, x0, x1); }});
        out.push_back({"indicator_unit", false, true, false, [](double x0, double x1) {
                           return x0 >= 0.0 && x0 < 1.0 && x1 >= 0.0 && x1 < 1.0 ? 1.0 : 0.0;
                       }});
        out.push_back({"bumps_multiscale", true, true, false, [](double x0, double x1) {
                           const double cx[4] = {0.0, 1.0, -1.5, 0.5};
                           const double cy[4] = {0.0, 0.5, 1.0, -2.0};
                           const double ss[4] = {1.0 / 16, 1.0 / 32, 1.0 / 16, 1.0 / 32};
                           double v = 0.0;
                           for (int i = 0; i < 4; ++i)
                               v += std::ldexp(1.0, -i) * gauss_bump(2, ss[i], x0 - cx[i], x1 - cy[i]);
                           return v;
                       }});
        out.push_back({"modulated", true, true, true, [](double x0, double x1) {
                           return std::cos(2.0 * kPi * x0) * std::exp(-kPi * (x0 * x0 + x1 * x1) / 2.25);
                       }});
    }

    // seeded field of bumps, identical for identical seeds
    SplitMix64 rng{seed ^ 0xA5A5A5A5DEADBEEFULL};
    const int nb = 6;
    std::vector<double> w(nb), s(nb), a0(nb), a1(nb);
    const double spread = dim == 1 ? 4.0 : 1.5;
    const double s_lo = dim == 1 ? 0.25 : 1.0 / 32.0;
    const double s_hi = dim == 1 ? 1.0 : 1.0 / 16.0;
    for (int i = 0; i < nb; ++i) {
        w[static_cast<std::size_t>(i)] = rng.uniform(-1.0, 1.0);
        s[static_cast<std::size_t>(i)] = rng.uniform(s_lo, s_hi);
        a0[static_cast<std::size_t>(i)] = rng.uniform(-spread, spread);
        a1[static_cast<std::size_t>(i)] = dim == 1 ? 0.0 : rng.uniform(-spread, spread);
    }
    out.push_back({"random_field", true, true, false, [dim, w, s, a0, a1, nb](double x0, double x1) {
                       double v = 0.0;
                       for (int i = 0; i < nb; ++i)
                           v += w[static_cast<std::size_t>(i)] *
                                gauss_bump(dim, s[static_cast<std::size_t>(i)], x0 - a0[static_cast<std::size_t>(i)],
                                           x1 - a1[static_cast<std::size_t>(i)]);
                       return v;
                   }});
    return out;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name) {
    for (const auto& e : catalog)
        if (e.name == name) return e;
    throw std::invalid_argument("catalog: no entry named " + name);
}

GridFunction realize(const CatalogEntry& entry, const GridSpec& spec) {
    GridFunction g = sample(entry.f, spec);
    if (entry.compact_decay) {
        const double cut = spec.side / 4.0;
        const int n = spec.points_per_axis();
        double worst = 0.0;
        if (spec.dim == 1) {
            for (int i = 0; i < n; ++i)
                if (std::fabs(spec.coord(i)) > cut) worst = std::max(worst, std::fabs(g[static_cast<std::size_t>(i)]));
        } else {
            for (int i0 = 0; i0 < n; ++i0)
                for (int i1 = 0; i1 < n; ++i1)
                    if (std::hypot(spec.coord(i0), spec.coord(i1)) > cut)
                        worst = std::max(worst, std::fabs(g[static_cast<std::size_t>(i0) * n + i1]));
        }
        if (worst > 1e-8)
            throw std::invalid_argument("catalog entry " + entry.name + " violates the decay invariant: " +
                                        std::to_string(worst));
    }
    return g;
}

}  // namespace fofana
