#include "fofana/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fofana/spectral.hpp"
#include "fofana/util.hpp"

namespace fofana {

namespace {

constexpr double kPi = std::numbers::pi;

double riesz_constant(int dim) {
    return std::tgamma((dim + 1) / 2.0) / std::pow(kPi, (dim + 1) / 2.0);
}

// Periodized d=1 Poisson kernel on the circle of circumference L, written in
// terms of e^{-a} so it stays finite for every t > 0:
//   (1/L) (1 - e^{-2a}) / ((1-e^{-a})^2 + 4 e^{-a} sin^2(theta/2)),
// a = 2 pi t / L, theta = 2 pi x / L.
double poisson_circle_value(int side, double t, double x) {
    const double a = 2.0 * kPi * t / side;
    const double theta = 2.0 * kPi * x / side;
    const double em = -std::expm1(-a);
    const double s = std::sin(0.5 * theta);
    const double num = -std::expm1(-2.0 * a);
    const double den = em * em + 4.0 * std::exp(-a) * s * s;
    return num / (den * side);
}

int heat_image_radius(int side, double t) {
    // e^{-((n-1/2)L)^2/4t} below 1e-20 for |n| > radius
    return std::max(1, static_cast<int>(std::ceil(0.5 + std::sqrt(180.0 * t) / side)));
}

}  // namespace

double poisson_kernel_value(int dim, double t, double x0, double x1) {
    const double r2 = dim == 1 ? x0 * x0 : x0 * x0 + x1 * x1;
    return riesz_constant(dim) * t / std::pow(t * t + r2, (dim + 1) / 2.0);
}

double heat_kernel_value(int dim, double t, double x0, double x1) {
    const double r2 = dim == 1 ? x0 * x0 : x0 * x0 + x1 * x1;
    return std::exp(-r2 / (4.0 * t)) / std::pow(4.0 * kPi * t, dim / 2.0);
}

double riesz_kernel_value(int dim, int axis, double x0, double x1) {
    const double r2 = dim == 1 ? x0 * x0 : x0 * x0 + x1 * x1;
    const double xj = axis == 0 ? x0 : x1;
    return riesz_constant(dim) * xj / std::pow(std::sqrt(r2), dim + 1);
}

KernelSample poisson_kernel(const GridSpec& spec, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("poisson_kernel: t must be positive");
    const int n = spec.points_per_axis();
    const int L = spec.side;
    std::vector<double> vals(spec.point_count());

    if (spec.dim == 1) {
        for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = poisson_circle_value(L, t, spec.coord(i));
    } else {
        // Fourier synthesis of the periodization: hat(P_t)(xi) = e^{-2 pi t |xi|}.
        std::vector<cplx> hat(spec.point_count());
        for (int k0 = 0; k0 < n; ++k0)
            for (int k1 = 0; k1 < n; ++k1) {
                const double f0 = static_cast<double>(signed_freq(k0, n)) / L;
                const double f1 = static_cast<double>(signed_freq(k1, n)) / L;
                hat[static_cast<std::size_t>(k0) * n + k1] = std::exp(-2.0 * kPi * t * std::hypot(f0, f1));
            }
        const InverseResult inv = inverse_grid_transform(spec, std::move(hat));
        vals.assign(inv.real.values().begin(), inv.real.values().end());
    }

    double tail;
    if (spec.dim == 1) {
        tail = (2.0 / kPi) * std::atan(2.0 * t / L);
    } else {
        tail = t / std::hypot(t, 0.5 * L);
    }
    const bool warn = tail >= 1e-4;
    return KernelSample{KernelKind::poisson, -1, t, GridFunction(spec, std::move(vals)), tail, warn};
}

KernelSample heat_kernel(const GridSpec& spec, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("heat_kernel: t must be positive");
    const int n = spec.points_per_axis();
    const int L = spec.side;
    const int ni = heat_image_radius(L, t);
    const double norm = 1.0 / std::pow(4.0 * kPi * t, spec.dim / 2.0);
    std::vector<double> vals(spec.point_count(), 0.0);

    if (spec.dim == 1) {
        for (int i = 0; i < n; ++i) {
            const double x = spec.coord(i);
            double s = 0.0;
            for (int im = -ni; im <= ni; ++im) {
                const double y = x + im * static_cast<double>(L);
                s += std::exp(-y * y / (4.0 * t));
            }
            vals[static_cast<std::size_t>(i)] = norm * s;
        }
    } else {
        // separable image sum: per-axis 1-d sums multiply
        std::vector<double> axis_sum(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double x = spec.coord(i);
            double s = 0.0;
            for (int im = -ni; im <= ni; ++im) {
                const double y = x + im * static_cast<double>(L);
                s += std::exp(-y * y / (4.0 * t));
            }
            axis_sum[static_cast<std::size_t>(i)] = s;
        }
        for (int i0 = 0; i0 < n; ++i0)
            for (int i1 = 0; i1 < n; ++i1)
                vals[static_cast<std::size_t>(i0) * n + i1] =
                    norm * axis_sum[static_cast<std::size_t>(i0)] * axis_sum[static_cast<std::size_t>(i1)];
    }

    const double half = 0.5 * L;
    const double tail1d = std::erfc(half / (2.0 * std::sqrt(t)));
    const double tail = spec.dim == 1 ? 2.0 * tail1d : 4.0 * tail1d;  // union bound over axes
    const double sqrt_t = std::sqrt(t);
    const bool warn = sqrt_t < 2.0 * spec.spacing() || sqrt_t > L / 8.0;
    return KernelSample{KernelKind::heat, -1, t, GridFunction(spec, std::move(vals)), tail, warn};
}

KernelSample riesz_kernel_truncated(const GridSpec& spec, int axis, double eps) {
    if (axis < 0 || axis >= spec.dim) throw std::invalid_argument("riesz_kernel_truncated: axis out of range");
    if (!(eps >= 2.0 * spec.spacing()))
        throw std::invalid_argument("riesz_kernel_truncated: eps must be at least 2h");
    const int n = spec.points_per_axis();
    const int L = spec.side;
    std::vector<double> vals(spec.point_count(), 0.0);

    if (spec.dim == 1) {
        // periodization of 1/(pi x) on the circle: cot(pi x / L) / L, odd by
        // construction (evaluated from |x| with an explicit sign)
        for (int i = 1; i < n; ++i) {  // index 0 is the Nyquist coordinate -L/2, kept at zero
            const double x = spec.coord(i);
            if (std::fabs(x) <= eps) continue;
            const double mag = 1.0 / (std::tan(kPi * std::fabs(x) / L) * L);
            vals[static_cast<std::size_t>(i)] = x > 0.0 ? mag : -mag;
        }
    } else {
        // symmetric image sum: the (n, -n) pair is accumulated as one bracket
        // so the sampled kernel is exactly odd on the torus
        const int ni = 32;
        for (int i0 = 1; i0 < n; ++i0)
            for (int i1 = 1; i1 < n; ++i1) {
                const double x0 = spec.coord(i0), x1 = spec.coord(i1);
                if (std::hypot(x0, x1) <= eps) continue;
                double s = riesz_kernel_value(2, axis, x0, x1);
                for (int m0 = 0; m0 <= ni; ++m0)
                    for (int m1 = (m0 == 0 ? 1 : -ni); m1 <= ni; ++m1) {
                        s += riesz_kernel_value(2, axis, x0 + m0 * L, x1 + m1 * L) +
                             riesz_kernel_value(2, axis, x0 - m0 * L, x1 - m1 * L);
                    }
                vals[static_cast<std::size_t>(i0) * n + i1] = s;
            }
    }
    return KernelSample{KernelKind::riesz, axis, eps, GridFunction(spec, std::move(vals)), 0.0, false};
}

KernelSample mollifier(const GridSpec& spec, double t, MollifierShape shape) {
    if (!(t > 0.0)) throw std::invalid_argument("mollifier: t must be positive");
    const int n = spec.points_per_axis();
    const int L = spec.side;
    const double inv_td = 1.0 / std::pow(t, spec.dim);
    std::vector<double> vals(spec.point_count(), 0.0);

    int ni;
    if (shape == MollifierShape::gaussian) {
        ni = std::max(1, static_cast<int>(std::ceil(0.5 + 3.79 * t / L)));
    } else {
        ni = std::max(1, static_cast<int>(std::ceil(0.5 + t / L)));
    }

    auto phi_axis = [&](double y) {
        const double z = y / t;
        if (shape == MollifierShape::gaussian) return std::exp(-kPi * z * z);
        if (std::fabs(z) >= 1.0) return 0.0;
        const double c = std::cos(0.5 * kPi * z);
        return c * c;
    };
    std::vector<double> axis_sum(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = spec.coord(i);
        double s = 0.0;
        for (int im = -ni; im <= ni; ++im) s += phi_axis(x + im * static_cast<double>(L));
        axis_sum[static_cast<std::size_t>(i)] = s;
    }
    if (spec.dim == 1) {
        for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = inv_td * axis_sum[static_cast<std::size_t>(i)];
    } else {
        for (int i0 = 0; i0 < n; ++i0)
            for (int i1 = 0; i1 < n; ++i1)
                vals[static_cast<std::size_t>(i0) * n + i1] =
                    inv_td * axis_sum[static_cast<std::size_t>(i0)] * axis_sum[static_cast<std::size_t>(i1)];
    }

    const double hd = std::pow(spec.spacing(), spec.dim);
    const double mass = hd * pairwise_sum(vals);
    if (!(mass > 0.0)) throw std::invalid_argument("mollifier: degenerate discrete mass");
    for (double& v : vals) v /= mass;

    return KernelSample{KernelKind::mollifier, -1, t, GridFunction(spec, std::move(vals)), 0.0, false};
}

}  // namespace fofana
