#include "fofana/cauchy_riemann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fofana/util.hpp"

namespace fofana {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

using Vec = std::vector<double>;

double weighted_sq_l2(const Vec& v, const GridSpec& spec) {
    std::vector<double> terms(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) terms[i] = v[i] * v[i];
    return std::pow(spec.spacing(), spec.dim) * pairwise_sum(terms);
}

// 3-point nonuniform stencils at the middle node, written in difference form
// (the weights sum to zero, so constants map to exactly zero).
Vec time_derivative(const GridFunction& um, const GridFunction& u0, const GridFunction& up,
                    double a, double b) {
    const double wm = -b / (a * (a + b));
    const double wp = a / (b * (a + b));
    Vec out(u0.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = wm * (um[i] - u0[i]) + wp * (up[i] - u0[i]);
    return out;
}

Vec time_second_derivative(const GridFunction& um, const GridFunction& u0, const GridFunction& up,
                           double a, double b) {
    const double wm = 2.0 / (a * (a + b));
    const double wp = 2.0 / (b * (a + b));
    Vec out(u0.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = wm * (um[i] - u0[i]) + wp * (up[i] - u0[i]);
    return out;
}

Vec laplacian(const GridFunction& u) {
    const GridSpec& spec = u.spec();
    const int n = spec.points_per_axis();
    const double inv_h2 = 1.0 / (spec.spacing() * spec.spacing());
    Vec out(u.size());
    if (spec.dim == 1) {
        for (int i = 0; i < n; ++i) {
            const int ip = (i + 1) % n, im = (i + n - 1) % n;
            out[static_cast<std::size_t>(i)] =
                (u[static_cast<std::size_t>(ip)] - 2.0 * u[static_cast<std::size_t>(i)] + u[static_cast<std::size_t>(im)]) * inv_h2;
        }
    } else {
        for (int i0 = 0; i0 < n; ++i0)
            for (int i1 = 0; i1 < n; ++i1) {
                const std::size_t c = static_cast<std::size_t>(i0) * n + i1;
                const std::size_t xp = static_cast<std::size_t>((i0 + 1) % n) * n + i1;
                const std::size_t xm = static_cast<std::size_t>((i0 + n - 1) % n) * n + i1;
                const std::size_t yp = static_cast<std::size_t>(i0) * n + (i1 + 1) % n;
                const std::size_t ym = static_cast<std::size_t>(i0) * n + (i1 + n - 1) % n;
                out[c] = (u[xp] + u[xm] + u[yp] + u[ym] - 4.0 * u[c]) * inv_h2;
            }
    }
    return out;
}

// Fritsch-Carlson monotone cubic slopes along t for every grid point at once.
class SliceInterpolant {
public:
    SliceInterpolant(std::vector<double> ts, std::vector<const GridFunction*> slices)
        : ts_(std::move(ts)), slices_(std::move(slices)) {
        const std::size_t s = ts_.size();
        const std::size_t npts = slices_.front()->size();
        std::vector<Vec> delta(s - 1, Vec(npts));
        std::vector<double> h(s - 1);
        for (std::size_t i = 0; i + 1 < s; ++i) {
            h[i] = ts_[i + 1] - ts_[i];
            for (std::size_t x = 0; x < npts; ++x)
                delta[i][x] = ((*slices_[i + 1])[x] - (*slices_[i])[x]) / h[i];
        }
        slopes_.assign(s, Vec(npts, 0.0));
        for (std::size_t x = 0; x < npts; ++x) {
            // one-sided ends with clamping
            slopes_[0][x] = end_slope(h[0], h[1], delta[0][x], delta[1][x]);
            slopes_[s - 1][x] = end_slope(h[s - 2], h[s - 3], delta[s - 2][x], delta[s - 3][x]);
        }
        for (std::size_t i = 1; i + 1 < s; ++i) {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            for (std::size_t x = 0; x < npts; ++x) {
                const double d0 = delta[i - 1][x], d1 = delta[i][x];
                slopes_[i][x] = (d0 * d1 <= 0.0) ? 0.0 : (w1 + w2) / (w1 / d0 + w2 / d1);
            }
        }
    }

    // d/ds of the interpolant at height s, for every grid point.
    void derivative_at(double s, Vec& out) const {
        const std::size_t i = interval(s);
        const double h = ts_[i + 1] - ts_[i];
        const double tau = (s - ts_[i]) / h;
        const double a = (6.0 * tau * tau - 6.0 * tau) / h;
        const double b = -a;
        const double c = 3.0 * tau * tau - 4.0 * tau + 1.0;
        const double d = 3.0 * tau * tau - 2.0 * tau;
        const GridFunction& y0 = *slices_[i];
        const GridFunction& y1 = *slices_[i + 1];
        const Vec& m0 = slopes_[i];
        const Vec& m1 = slopes_[i + 1];
        out.resize(y0.size());
        for (std::size_t x = 0; x < out.size(); ++x)
            out[x] = a * y0[x] + b * y1[x] + c * m0[x] + d * m1[x];
    }

private:
    static double end_slope(double h0, double h1, double d0, double d1) {
        double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (m * d0 <= 0.0) return 0.0;
        if (d0 * d1 < 0.0 && std::fabs(m) > 3.0 * std::fabs(d0)) return 3.0 * d0;
        return m;
    }

    std::size_t interval(double s) const {
        if (s <= ts_.front()) return 0;
        if (s >= ts_.back()) return ts_.size() - 2;
        const auto it = std::upper_bound(ts_.begin(), ts_.end(), s);
        return static_cast<std::size_t>(it - ts_.begin()) - 1;
    }

    std::vector<double> ts_;
    std::vector<const GridFunction*> slices_;
    std::vector<Vec> slopes_;
};

CRSystem build_system(const GridFunction& f, const Ladder& t_ladder, SystemKind kind) {
    const Slab base = kind == SystemKind::harmonic ? poisson_extend(f, t_ladder) : heat_extend(f, t_ladder);
    const int dim = f.spec().dim;
    std::vector<GridFunction> riesz_f;
    for (int j = 0; j < dim; ++j) riesz_f.push_back(riesz_transform(f, j));

    std::vector<CRSystem::Slice> slices;
    slices.reserve(base.size());
    for (const auto& s : base.slices()) {
        CRSystem::Slice slice{s.t, {}};
        const KernelSample kernel = kind == SystemKind::harmonic ? poisson_kernel(f.spec(), s.t)
                                                                 : heat_kernel(f.spec(), s.t);
        for (int j = 0; j < dim; ++j) slice.comps.push_back(convolve(riesz_f[static_cast<std::size_t>(j)], kernel.values));
        slice.comps.push_back(s.u);  // the extension itself is the last component
        slices.push_back(std::move(slice));
    }
    return CRSystem(f.spec(), kind, std::move(slices));
}

}  // namespace

CRSystem::CRSystem(GridSpec spec, SystemKind kind, std::vector<Slice> slices)
    : spec_(spec), kind_(kind), slices_(std::move(slices)) {
    if (slices_.size() < 3) throw std::invalid_argument("CRSystem: need at least 3 slices");
    for (std::size_t i = 0; i < slices_.size(); ++i) {
        const auto& s = slices_[i];
        if (!(s.t > 0.0)) throw std::invalid_argument("CRSystem: slice heights must be positive");
        if (i > 0 && !(s.t > slices_[i - 1].t))
            throw std::invalid_argument("CRSystem: slice heights must be strictly increasing");
        if (static_cast<int>(s.comps.size()) != spec_.dim + 1)
            throw std::invalid_argument("CRSystem: expected dim+1 components per slice");
        for (const auto& c : s.comps)
            if (!(c.spec() == spec_)) throw std::invalid_argument("CRSystem: component grid mismatch");
    }
}

CRSystem harmonic_system(const GridFunction& f, const Ladder& t_ladder) {
    return build_system(f, t_ladder, SystemKind::harmonic);
}

CRSystem caloric_map(const GridFunction& f, const Ladder& t_ladder) {
    return build_system(f, t_ladder, SystemKind::temperature);
}

double ResidualReport::max_residual() const {
    double mx = 0.0;
    for (const auto& c : conditions) mx = std::max(mx, c.value);
    return mx;
}

double ResidualReport::operator[](const std::string& name) const {
    for (const auto& c : conditions)
        if (c.name == name) return c.value;
    throw std::invalid_argument("ResidualReport: no condition named " + name);
}

ResidualReport harmonic_cr_residual(const CRSystem& F) {
    if (F.kind() != SystemKind::harmonic) throw std::invalid_argument("harmonic_cr_residual: wrong system kind");
    const int dim = F.spec().dim;
    const int ncomp = dim + 1;
    const auto& slices = F.slices();

    // residual accumulators: curls for every pair j < k of axes (t = axis dim),
    // plus the divergence
    std::vector<std::string> names;
    for (int j = 0; j < ncomp; ++j)
        for (int k = j + 1; k < ncomp; ++k)
            names.push_back("curl_" + std::to_string(j + 1) + std::to_string(k + 1));
    names.push_back("div");
    std::vector<double> num_sq(names.size(), 0.0);
    double den_sq = 0.0;

    int used = 0;
    for (std::size_t i = 1; i + 1 < slices.size(); ++i) {
        const double a = slices[i].t - slices[i - 1].t;
        const double b = slices[i + 1].t - slices[i].t;

        // partials[c][axis]: axis < dim spatial, axis = dim temporal
        std::vector<std::vector<Vec>> partials(static_cast<std::size_t>(ncomp));
        for (int c = 0; c < ncomp; ++c) {
            for (int ax = 0; ax < dim; ++ax) {
                const GridFunction g = partial_derivative(slices[i].comps[static_cast<std::size_t>(c)], ax);
                partials[static_cast<std::size_t>(c)].emplace_back(g.values().begin(), g.values().end());
            }
            partials[static_cast<std::size_t>(c)].push_back(
                time_derivative(slices[i - 1].comps[static_cast<std::size_t>(c)], slices[i].comps[static_cast<std::size_t>(c)],
                                slices[i + 1].comps[static_cast<std::size_t>(c)], a, b));
        }

        for (int c = 0; c < ncomp; ++c)
            for (int ax = 0; ax <= dim; ++ax)
                den_sq += weighted_sq_l2(partials[static_cast<std::size_t>(c)][static_cast<std::size_t>(ax)], F.spec());

        std::size_t cond = 0;
        for (int j = 0; j < ncomp; ++j)
            for (int k = j + 1; k < ncomp; ++k, ++cond) {
                // d u_j / d x_k - d u_k / d x_j
                const Vec& djk = partials[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                const Vec& dkj = partials[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                Vec r(djk.size());
                for (std::size_t x = 0; x < r.size(); ++x) r[x] = djk[x] - dkj[x];
                num_sq[cond] += weighted_sq_l2(r, F.spec());
            }
        Vec div(F.spec().point_count(), 0.0);
        for (int c = 0; c < ncomp; ++c) {
            const Vec& d = partials[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
            for (std::size_t x = 0; x < div.size(); ++x) div[x] += d[x];
        }
        num_sq.back() += weighted_sq_l2(div, F.spec());
        ++used;
    }

    ResidualReport report;
    report.t_lo = slices[1].t;
    report.t_hi = slices[slices.size() - 2].t;
    report.slices_used = used;
    const double den = std::sqrt(den_sq);
    for (std::size_t c = 0; c < names.size(); ++c)
        report.conditions.push_back({names[c], den > 0.0 ? std::sqrt(num_sq[c]) / den : std::sqrt(num_sq[c])});
    return report;
}

ResidualReport heat_residual(const Slab& u) {
    const auto& slices = u.slices();
    double num_sq = 0.0, den_sq = 0.0;
    int used = 0;
    for (std::size_t i = 1; i + 1 < slices.size(); ++i) {
        const double a = slices[i].t - slices[i - 1].t;
        const double b = slices[i + 1].t - slices[i].t;
        const Vec dt = time_derivative(slices[i - 1].u, slices[i].u, slices[i + 1].u, a, b);
        const Vec lap = laplacian(slices[i].u);
        Vec r(dt.size());
        for (std::size_t x = 0; x < r.size(); ++x) r[x] = dt[x] - lap[x];
        num_sq += weighted_sq_l2(r, u.spec());
        den_sq += weighted_sq_l2(dt, u.spec()) + weighted_sq_l2(lap, u.spec());
        ++used;
    }
    ResidualReport report;
    report.t_lo = slices[1].t;
    report.t_hi = slices[slices.size() - 2].t;
    report.slices_used = used;
    const double den = std::sqrt(den_sq);
    report.conditions.push_back({"heat", den > 0.0 ? std::sqrt(num_sq) / den : std::sqrt(num_sq)});
    return report;
}

ResidualReport laplace_residual(const Slab& u) {
    const auto& slices = u.slices();
    double num_sq = 0.0, den_sq = 0.0;
    int used = 0;
    for (std::size_t i = 1; i + 1 < slices.size(); ++i) {
        const double a = slices[i].t - slices[i - 1].t;
        const double b = slices[i + 1].t - slices[i].t;
        const Vec dtt = time_second_derivative(slices[i - 1].u, slices[i].u, slices[i + 1].u, a, b);
        const Vec lap = laplacian(slices[i].u);
        Vec r(dtt.size());
        for (std::size_t x = 0; x < r.size(); ++x) r[x] = dtt[x] + lap[x];
        num_sq += weighted_sq_l2(r, u.spec());
        den_sq += weighted_sq_l2(dtt, u.spec()) + weighted_sq_l2(lap, u.spec());
        ++used;
    }
    ResidualReport report;
    report.t_lo = slices[1].t;
    report.t_hi = slices[slices.size() - 2].t;
    report.slices_used = used;
    const double den = std::sqrt(den_sq);
    report.conditions.push_back({"laplace", den > 0.0 ? std::sqrt(num_sq) / den : std::sqrt(num_sq)});
    return report;
}

ResidualReport temperature_cr_residual(const CRSystem& F) {
    if (F.kind() != SystemKind::temperature)
        throw std::invalid_argument("temperature_cr_residual: wrong system kind");
    if (F.size() < 5) throw std::invalid_argument("temperature_cr_residual: need at least 5 slices");
    const int dim = F.spec().dim;
    const int ncomp = dim + 1;
    const auto& slices = F.slices();
    const double t_max = F.t_max();

    std::vector<std::size_t> report_idx;
    for (std::size_t i = 1; i + 1 < slices.size(); ++i)
        if (8.0 * slices[i].t <= t_max) report_idx.push_back(i);
    if (report_idx.empty())
        throw std::runtime_error("temperature_cr_residual: slab must extend to 8x the reported heights");

    std::vector<double> ts(slices.size());
    for (std::size_t i = 0; i < slices.size(); ++i) ts[i] = slices[i].t;
    std::vector<SliceInterpolant> interp;
    interp.reserve(static_cast<std::size_t>(ncomp));
    for (int c = 0; c < ncomp; ++c) {
        std::vector<const GridFunction*> comp_slices;
        for (const auto& s : slices) comp_slices.push_back(&s.comps[static_cast<std::size_t>(c)]);
        interp.emplace_back(ts, std::move(comp_slices));
    }

    using C = std::complex<double>;
    const C iunit(0.0, 1.0);
    std::vector<std::string> names;
    names.push_back("divergence");
    for (int j = 0; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k)
            names.push_back("curl_" + std::to_string(j + 1) + std::to_string(k + 1));
    for (int j = 0; j < dim; ++j) names.push_back("gradient_" + std::to_string(j + 1));
    std::vector<double> num_sq(names.size(), 0.0), den_sq(names.size(), 0.0);

    const std::size_t npts = F.spec().point_count();
    const double hd = std::pow(F.spec().spacing(), F.spec().dim);
    const int nv = 512;  // Simpson panels over the substituted variable

    Vec deriv(npts), accum(npts);
    for (std::size_t i : report_idx) {
        const double t = slices[i].t;
        const double vmax = std::sqrt(t_max - t);
        const double dv = vmax / nv;

        // A_c = (2/sqrt(pi)) Int_0^vmax d_s u_c(t+v^2) dv; d_t^{1/2} u_c = i A_c
        std::vector<Vec> half(static_cast<std::size_t>(ncomp), Vec(npts, 0.0));
        for (int c = 0; c < ncomp; ++c) {
            Vec& acc = half[static_cast<std::size_t>(c)];
            for (int k = 0; k <= nv; ++k) {
                const double v = k * dv;
                const double w = (k == 0 || k == nv) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
                interp[static_cast<std::size_t>(c)].derivative_at(t + v * v, deriv);
                for (std::size_t x = 0; x < npts; ++x) acc[x] += w * deriv[x];
            }
            const double scale = (2.0 / kSqrtPi) * dv / 3.0;
            for (std::size_t x = 0; x < npts; ++x) acc[x] *= scale;
        }

        std::vector<std::vector<Vec>> dx(static_cast<std::size_t>(ncomp));
        for (int c = 0; c < ncomp; ++c)
            for (int ax = 0; ax < dim; ++ax) {
                const GridFunction g = partial_derivative(slices[i].comps[static_cast<std::size_t>(c)], ax);
                dx[static_cast<std::size_t>(c)].emplace_back(g.values().begin(), g.values().end());
            }

        auto accumulate = [&](std::size_t cond, const std::vector<C>& lhs, const std::vector<C>& rhs) {
            double nsq = 0.0, lsq = 0.0, rsq = 0.0;
            for (std::size_t x = 0; x < npts; ++x) {
                nsq += std::norm(lhs[x] - rhs[x]);
                lsq += std::norm(lhs[x]);
                rsq += std::norm(rhs[x]);
            }
            num_sq[cond] += hd * nsq;
            den_sq[cond] += hd * (lsq + rsq);
        };

        std::vector<C> lhs(npts), rhs(npts);
        // (1) sum_j d u_j/d x_j = i d_t^{1/2} u_{d+1}
        for (std::size_t x = 0; x < npts; ++x) {
            double s = 0.0;
            for (int j = 0; j < dim; ++j) s += dx[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)][x];
            lhs[x] = C(s, 0.0);
            rhs[x] = iunit * (iunit * half[static_cast<std::size_t>(dim)][x]);
        }
        accumulate(0, lhs, rhs);

        std::size_t cond = 1;
        // (2) spatial curls between the conjugate components
        for (int j = 0; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k, ++cond) {
                for (std::size_t x = 0; x < npts; ++x) {
                    lhs[x] = C(dx[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)][x], 0.0);
                    rhs[x] = C(dx[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)][x], 0.0);
                }
                accumulate(cond, lhs, rhs);
            }
        // (3) d u_{d+1}/d x_j = -i d_t^{1/2} u_j
        for (int j = 0; j < dim; ++j, ++cond) {
            for (std::size_t x = 0; x < npts; ++x) {
                lhs[x] = C(dx[static_cast<std::size_t>(dim)][static_cast<std::size_t>(j)][x], 0.0);
                rhs[x] = -iunit * (iunit * half[static_cast<std::size_t>(j)][x]);
            }
            accumulate(cond, lhs, rhs);
        }
    }

    ResidualReport report;
    report.t_lo = slices[report_idx.front()].t;
    report.t_hi = slices[report_idx.back()].t;
    report.slices_used = static_cast<int>(report_idx.size());
    for (std::size_t c = 0; c < names.size(); ++c) {
        const double den = std::sqrt(den_sq[c]);
        report.conditions.push_back({names[c], den > 0.0 ? std::sqrt(num_sq[c]) / den : std::sqrt(num_sq[c])});
    }
    return report;
}

NormReport caloric_norm(const CRSystem& F, const Exponents& e, const Ladder& r_ladder) {
    e.require_theorem_mode(F.spec().dim);
    std::vector<GridFunction> mags;
    mags.reserve(F.size());
    for (const auto& s : F.slices()) {
        Vec m(F.spec().point_count(), 0.0);
        for (const auto& c : s.comps)
            for (std::size_t x = 0; x < m.size(); ++x) m[x] += c[x] * c[x];
        for (double& v : m) v = std::sqrt(v);
        mags.emplace_back(F.spec(), std::move(m));
    }

    NormReport report;
    bool first = true;
    for (double r : r_ladder.members()) {
        double inner = 0.0;
        for (const auto& mag : mags)
            inner = std::max(inner, amalgam_norm(dilate(mag, e.alpha, r), e.p, e.q));
        report.terms.emplace_back(r, inner);
        if (first || inner > report.value) {
            report.value = inner;
            report.argmax = r;
            first = false;
        }
    }
    if (first) throw std::invalid_argument("caloric_norm: empty ladder");
    return report;
}

std::complex<double> half_time_derivative(const std::function<double(double)>& g_prime, double t,
                                          double t_upper, const HalfDerivOptions& opts) {
    if (!(t > 0.0)) throw std::invalid_argument("half_time_derivative: t must be positive");
    if (!(t_upper > t)) throw std::invalid_argument("half_time_derivative: t_upper must exceed t");
    if (std::fabs(g_prime(t_upper)) > opts.tail_tol)
        throw std::runtime_error("half_time_derivative: derivative tail above tolerance at the truncation point");

    const double vmax = std::sqrt(t_upper - t);
    auto simpson = [&](int nodes) {
        const double dv = vmax / nodes;
        std::vector<double> terms(static_cast<std::size_t>(nodes) + 1);
        for (int k = 0; k <= nodes; ++k) {
            const double v = k * dv;
            const double w = (k == 0 || k == nodes) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
            terms[static_cast<std::size_t>(k)] = w * g_prime(t + v * v);
        }
        return pairwise_sum(terms) * dv / 3.0;
    };

    int nodes = opts.initial_nodes;
    double prev = simpson(nodes);
    for (int it = 0; it < opts.max_doublings; ++it) {
        nodes *= 2;
        const double cur = simpson(nodes);
        if (std::fabs(cur - prev) <= std::max(opts.rel_tol * std::fabs(cur), 1e-15)) {
            prev = cur;
            break;
        }
        prev = cur;
        if (it + 1 == opts.max_doublings)
            throw std::runtime_error("half_time_derivative: quadrature did not converge");
    }
    // (i / sqrt(pi)) * 2 * integral
    return std::complex<double>(0.0, 2.0 * prev / kSqrtPi);
}

}  // namespace fofana
