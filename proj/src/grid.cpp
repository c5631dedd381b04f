#include "fofana/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fofana/util.hpp"

namespace fofana {

GridSpec make_grid(int dim, int side, int samples_per_unit) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("make_grid: dim must be 1 or 2");
    if (side < 2 || side % 2 != 0) throw std::invalid_argument("make_grid: side must be a positive even integer");
    if (samples_per_unit < 2 || !is_pow2(samples_per_unit))
        throw std::invalid_argument("make_grid: samples_per_unit must be a power of two >= 2");
    return GridSpec{dim, side, samples_per_unit};
}

GridFunction::GridFunction(GridSpec spec, std::vector<double> values)
    : spec_(spec), values_(std::move(values)) {
    if (values_.size() != spec_.point_count())
        throw std::invalid_argument("GridFunction: value count " + std::to_string(values_.size()) +
                                    " does not match grid size " + std::to_string(spec_.point_count()));
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("GridFunction: non-finite sample");
}

GridFunction sample(const PointFunction& f, const GridSpec& spec) {
    const int n = spec.points_per_axis();
    std::vector<double> vals(spec.point_count());
    if (spec.dim == 1) {
        for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = f(spec.coord(i), 0.0);
    } else {
        for (int i0 = 0; i0 < n; ++i0)
            for (int i1 = 0; i1 < n; ++i1)
                vals[static_cast<std::size_t>(i0) * n + i1] = f(spec.coord(i0), spec.coord(i1));
    }
    return GridFunction(spec, std::move(vals));  // ctor rejects non-finite evaluations
}

GridFunction zero_function(const GridSpec& spec) {
    return GridFunction(spec, std::vector<double>(spec.point_count(), 0.0));
}

GridFunction constant_function(const GridSpec& spec, double c) {
    return GridFunction(spec, std::vector<double>(spec.point_count(), c));
}

std::vector<std::vector<std::size_t>> cube_slices(const GridSpec& spec) {
    const int m = spec.samples_per_unit;
    const int n = spec.points_per_axis();
    std::vector<std::vector<std::size_t>> blocks;
    blocks.reserve(spec.cube_count());
    if (spec.dim == 1) {
        for (int k = 0; k < spec.side; ++k) {
            std::vector<std::size_t> block(static_cast<std::size_t>(m));
            for (int a = 0; a < m; ++a) block[static_cast<std::size_t>(a)] = static_cast<std::size_t>(k * m + a);
            blocks.push_back(std::move(block));
        }
    } else {
        for (int k0 = 0; k0 < spec.side; ++k0)
            for (int k1 = 0; k1 < spec.side; ++k1) {
                std::vector<std::size_t> block;
                block.reserve(static_cast<std::size_t>(m) * m);
                for (int a = 0; a < m; ++a)
                    for (int b = 0; b < m; ++b)
                        block.push_back(static_cast<std::size_t>(k0 * m + a) * n + (k1 * m + b));
                blocks.push_back(std::move(block));
            }
    }
    return blocks;
}

GridFunction partial_derivative(const GridFunction& u, int axis) {
    const GridSpec& spec = u.spec();
    if (axis < 0 || axis >= spec.dim) throw std::invalid_argument("partial_derivative: axis out of range");
    const int n = spec.points_per_axis();
    const double inv_2h = 0.5 / spec.spacing();
    std::vector<double> out(u.size());
    if (spec.dim == 1) {
        for (int i = 0; i < n; ++i) {
            const int ip = (i + 1) % n, im = (i + n - 1) % n;
            out[static_cast<std::size_t>(i)] = (u[static_cast<std::size_t>(ip)] - u[static_cast<std::size_t>(im)]) * inv_2h;
        }
    } else {
        for (int i0 = 0; i0 < n; ++i0)
            for (int i1 = 0; i1 < n; ++i1) {
                std::size_t p, q;
                if (axis == 0) {
                    p = static_cast<std::size_t>((i0 + 1) % n) * n + i1;
                    q = static_cast<std::size_t>((i0 + n - 1) % n) * n + i1;
                } else {
                    p = static_cast<std::size_t>(i0) * n + (i1 + 1) % n;
                    q = static_cast<std::size_t>(i0) * n + (i1 + n - 1) % n;
                }
                out[static_cast<std::size_t>(i0) * n + i1] = (u[p] - u[q]) * inv_2h;
            }
    }
    return GridFunction(spec, std::move(out));
}

bool resample_representable(const GridSpec& spec, double factor) {
    if (!is_dyadic(factor)) return false;
    const int k = dyadic_log2(factor);
    if (k >= 0) {
        // stretch: m shrinks by 2^k
        return spec.samples_per_unit >> k >= 1 && (spec.samples_per_unit >> k) << k == spec.samples_per_unit;
    }
    // shrink: side shrinks by 2^{-k}
    const int s = -k;
    return spec.side >> s >= 1 && (spec.side >> s) << s == spec.side;
}

GridFunction resample_dyadic(const GridFunction& u, double factor) {
    if (!is_dyadic(factor)) throw std::invalid_argument("resample_dyadic: factor must be a power of two");
    if (!resample_representable(u.spec(), factor))
        throw std::invalid_argument("resample_dyadic: factor " + std::to_string(factor) +
                                    " leaves the grid unrepresentable");
    const int k = dyadic_log2(factor);
    GridSpec out = u.spec();
    if (k >= 0) {
        out.side <<= k;
        out.samples_per_unit >>= k;
    } else {
        out.side >>= -k;
        out.samples_per_unit <<= -k;
    }
    return GridFunction(out, std::vector<double>(u.values().begin(), u.values().end()));
}

Ladder::Ladder(double base_, double ratio_, int count_) : base(base_), ratio(ratio_), count(count_) {
    if (!(base > 0.0)) throw std::invalid_argument("Ladder: base must be positive");
    if (!(ratio > 1.0)) throw std::invalid_argument("Ladder: ratio must exceed 1");
    if (count < 1) throw std::invalid_argument("Ladder: count must be positive");
}

std::vector<double> Ladder::members() const {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = base * std::pow(ratio, k);
    return out;
}

Ladder Ladder::refined() const {
    return Ladder(base, std::sqrt(ratio), 2 * count - 1);
}

Ladder Ladder::dyadic(int lo_pow2, int hi_pow2) {
    if (hi_pow2 < lo_pow2) throw std::invalid_argument("Ladder::dyadic: empty range");
    return Ladder(std::ldexp(1.0, lo_pow2), 2.0, hi_pow2 - lo_pow2 + 1);
}

}  // namespace fofana
