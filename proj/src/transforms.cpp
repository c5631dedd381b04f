#include "fofana/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include "fofana/util.hpp"

namespace fofana {

namespace {
// (-1)^{sum of signed frequency components}: the phase tying the box-centered
// coordinates to plain DFT indexing.
inline double corner_phase(int k0, int k1, int n, int dim) {
    int s = signed_freq(k0, n);
    if (dim == 2) s += signed_freq(k1, n);
    return (s & 1) ? -1.0 : 1.0;
}
}  // namespace

std::vector<cplx> forward_grid_transform(const GridFunction& u) {
    const GridSpec& spec = u.spec();
    const int n = spec.points_per_axis();
    std::vector<cplx> a(u.values().begin(), u.values().end());
    fft_nd(a, spec.dim, n, false);
    const double hd = std::pow(spec.spacing(), spec.dim);
    if (spec.dim == 1) {
        for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(k)] *= hd * corner_phase(k, 0, n, 1);
    } else {
        for (int k0 = 0; k0 < n; ++k0)
            for (int k1 = 0; k1 < n; ++k1)
                a[static_cast<std::size_t>(k0) * n + k1] *= hd * corner_phase(k0, k1, n, 2);
    }
    return a;
}

InverseResult inverse_grid_transform(const GridSpec& spec, std::vector<cplx> hat) {
    const int n = spec.points_per_axis();
    if (hat.size() != spec.point_count()) throw std::invalid_argument("inverse_grid_transform: size mismatch");
    const double md = std::pow(static_cast<double>(spec.samples_per_unit), spec.dim);
    if (spec.dim == 1) {
        for (int k = 0; k < n; ++k) hat[static_cast<std::size_t>(k)] *= corner_phase(k, 0, n, 1);
    } else {
        for (int k0 = 0; k0 < n; ++k0)
            for (int k1 = 0; k1 < n; ++k1)
                hat[static_cast<std::size_t>(k0) * n + k1] *= corner_phase(k0, k1, n, 2);
    }
    fft_nd(hat, spec.dim, n, true);
    std::vector<double> re(hat.size());
    double max_imag = 0.0;
    for (std::size_t i = 0; i < hat.size(); ++i) {
        re[i] = hat[i].real() * md;
        max_imag = std::max(max_imag, std::fabs(hat[i].imag() * md));
    }
    return InverseResult{GridFunction(spec, std::move(re)), max_imag};
}

Slab::Slab(GridSpec spec, std::vector<Slice> slices) : spec_(spec), slices_(std::move(slices)) {
    if (slices_.size() < 3) throw std::invalid_argument("Slab: need at least 3 slices");
    for (std::size_t i = 0; i < slices_.size(); ++i) {
        if (!(slices_[i].t > 0.0)) throw std::invalid_argument("Slab: slice heights must be positive");
        if (i > 0 && !(slices_[i].t > slices_[i - 1].t))
            throw std::invalid_argument("Slab: slice heights must be strictly increasing");
        if (!(slices_[i].u.spec() == spec_)) throw std::invalid_argument("Slab: slice grid mismatch");
    }
}

GridFunction convolve(const GridFunction& u, const GridFunction& v) {
    if (!(u.spec() == v.spec())) throw std::invalid_argument("convolve: grid mismatch");
    std::vector<cplx> a = forward_grid_transform(u);
    const std::vector<cplx> b = forward_grid_transform(v);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return inverse_grid_transform(u.spec(), std::move(a)).real;
}

SymbolTable make_symbol(const GridSpec& spec, const std::function<cplx(double, double)>& sigma) {
    const int n = spec.points_per_axis();
    SymbolTable table(spec.point_count());
    if (spec.dim == 1) {
        for (int k = 0; k < n; ++k)
            table[static_cast<std::size_t>(k)] = sigma(static_cast<double>(signed_freq(k, n)) / spec.side, 0.0);
    } else {
        for (int k0 = 0; k0 < n; ++k0)
            for (int k1 = 0; k1 < n; ++k1)
                table[static_cast<std::size_t>(k0) * n + k1] =
                    sigma(static_cast<double>(signed_freq(k0, n)) / spec.side,
                          static_cast<double>(signed_freq(k1, n)) / spec.side);
    }
    return table;
}

InverseResult apply_multiplier(const GridFunction& u, const SymbolTable& symbol) {
    if (symbol.size() != u.spec().point_count())
        throw std::invalid_argument("apply_multiplier: symbol table does not match the frequency lattice");
    std::vector<cplx> a = forward_grid_transform(u);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= symbol[i];
    return inverse_grid_transform(u.spec(), std::move(a));
}

GridFunction riesz_transform(const GridFunction& u, int axis) {
    const GridSpec& spec = u.spec();
    if (axis < 0 || axis >= spec.dim) throw std::invalid_argument("riesz_transform: axis out of range");
    const int n = spec.points_per_axis();
    const int nyq = n / 2;

    SymbolTable table(spec.point_count());
    if (spec.dim == 1) {
        for (int k = 0; k < n; ++k) {
            const int kk = signed_freq(k, n);
            table[static_cast<std::size_t>(k)] = (kk == 0 || kk == -nyq) ? cplx(0.0, 0.0)
                                                                         : cplx(0.0, kk > 0 ? -1.0 : 1.0);
        }
    } else {
        for (int k0 = 0; k0 < n; ++k0)
            for (int k1 = 0; k1 < n; ++k1) {
                const int s0 = signed_freq(k0, n), s1 = signed_freq(k1, n);
                const int sj = axis == 0 ? s0 : s1;
                cplx val(0.0, 0.0);
                if (!(s0 == 0 && s1 == 0) && sj != -nyq) {
                    const double mag = std::hypot(static_cast<double>(s0), static_cast<double>(s1));
                    val = cplx(0.0, -sj / mag);
                }
                table[static_cast<std::size_t>(k0) * n + k1] = val;
            }
    }
    InverseResult out = apply_multiplier(u, table);
    if (out.max_imag > 1e-10)
        throw std::runtime_error("riesz_transform: imaginary residue " + std::to_string(out.max_imag));
    return std::move(out.real);
}

GridFunction riesz_pv_oracle(const GridFunction& u, int axis, double eps) {
    const GridSpec& spec = u.spec();
    const KernelSample kernel = riesz_kernel_truncated(spec, axis, eps);
    const int n = spec.points_per_axis();
    const double hd = std::pow(spec.spacing(), spec.dim);
    std::vector<double> out(u.size(), 0.0);

    if (spec.dim == 1) {
        // out_j = h * sum_i K[(j-i+n/2) mod n] u_i   (index n/2 is coordinate 0)
        for (int j = 0; j < n; ++j) {
            std::vector<double> terms(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const int k = ((j - i + n / 2) % n + n) % n;
                terms[static_cast<std::size_t>(i)] = kernel.values[static_cast<std::size_t>(k)] * u[static_cast<std::size_t>(i)];
            }
            out[static_cast<std::size_t>(j)] = hd * pairwise_sum(terms);
        }
    } else {
        std::vector<double> terms(u.size());
        for (int j0 = 0; j0 < n; ++j0)
            for (int j1 = 0; j1 < n; ++j1) {
                std::size_t idx = 0;
                for (int i0 = 0; i0 < n; ++i0) {
                    const int k0 = ((j0 - i0 + n / 2) % n + n) % n;
                    for (int i1 = 0; i1 < n; ++i1) {
                        const int k1 = ((j1 - i1 + n / 2) % n + n) % n;
                        terms[idx++] = kernel.values[static_cast<std::size_t>(k0) * n + k1] *
                                       u[static_cast<std::size_t>(i0) * n + i1];
                    }
                }
                out[static_cast<std::size_t>(j0) * n + j1] = hd * pairwise_sum(terms);
            }
    }
    return GridFunction(spec, std::move(out));
}

namespace {
Slab extend_with(const GridFunction& f, const Ladder& t_ladder,
                 KernelSample (*kernel)(const GridSpec&, double)) {
    const std::vector<double> ts = t_ladder.members();
    if (ts.size() < 3) throw std::invalid_argument("extension: ladder needs at least 3 members");
    std::vector<Slab::Slice> slices;
    slices.reserve(ts.size());
    for (double t : ts) slices.push_back({t, convolve(f, kernel(f.spec(), t).values)});
    return Slab(f.spec(), std::move(slices));
}
}  // namespace

Slab poisson_extend(const GridFunction& f, const Ladder& t_ladder) {
    return extend_with(f, t_ladder, &poisson_kernel);
}

Slab heat_extend(const GridFunction& f, const Ladder& t_ladder) {
    return extend_with(f, t_ladder, &heat_kernel);
}

}  // namespace fofana
