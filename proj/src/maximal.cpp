#include "fofana/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "fofana/util.hpp"

namespace fofana {

namespace {

// Largest integer offset with offset * h < r, i.e. offset < r * m.
int strict_offset_bound(double r, int m) {
    return static_cast<int>(std::ceil(r * m)) - 1;
}

// out[j] = max_{|d| <= half} a[(j+d) mod n]
std::vector<double> circular_window_max(std::span<const double> a, int half) {
    const int n = static_cast<int>(a.size());
    std::vector<double> out(static_cast<std::size_t>(n));
    if (2 * half + 1 >= n) {
        double g = a[0];
        for (double v : a) g = std::max(g, v);
        std::fill(out.begin(), out.end(), g);
        return out;
    }
    std::deque<std::pair<int, double>> dq;  // (extended index, value), values decreasing
    for (int e = -half; e <= n - 1 + half; ++e) {
        const double v = a[static_cast<std::size_t>(((e % n) + n) % n)];
        while (!dq.empty() && dq.back().second <= v) dq.pop_back();
        dq.emplace_back(e, v);
        const int j = e - half;
        if (j >= 0) {
            while (dq.front().first < j - half) dq.pop_front();
            out[static_cast<std::size_t>(j)] = dq.front().second;
        }
    }
    return out;
}

// Circular window sums of fixed length via a prefix table.
class CircularPrefix {
public:
    explicit CircularPrefix(std::span<const double> a) : n_(static_cast<int>(a.size())), prefix_(a.size() + 1, 0.0) {
        for (int i = 0; i < n_; ++i) prefix_[static_cast<std::size_t>(i) + 1] = prefix_[static_cast<std::size_t>(i)] + a[static_cast<std::size_t>(i)];
    }
    double total() const { return prefix_.back(); }
    // sum of the window of length len starting at index a (mod n); len <= n
    double window(int a, int len) const {
        a = ((a % n_) + n_) % n_;
        if (a + len <= n_) return prefix_[static_cast<std::size_t>(a + len)] - prefix_[static_cast<std::size_t>(a)];
        return (total() - prefix_[static_cast<std::size_t>(a)]) + prefix_[static_cast<std::size_t>(a + len - n_)];
    }

private:
    int n_;
    std::vector<double> prefix_;
};

void pointwise_abs_max(std::vector<double>& acc, const GridFunction& g) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = std::max(acc[i], std::fabs(g[i]));
}

}  // namespace

GridFunction grand_maximal(const GridFunction& f, const Ladder& t_ladder, MollifierShape shape) {
    const std::vector<double> ts = t_ladder.members();
    if (ts.empty()) throw std::invalid_argument("grand_maximal: empty ladder");
    std::vector<double> acc(f.size(), 0.0);
    for (double t : ts) pointwise_abs_max(acc, convolve(f, mollifier(f.spec(), t, shape).values));
    return GridFunction(f.spec(), std::move(acc));
}

GridFunction hl_maximal(const GridFunction& f, const Ladder& r_ladder) {
    const GridSpec& spec = f.spec();
    const std::vector<double> rs = r_ladder.members();
    if (rs.empty()) throw std::invalid_argument("hl_maximal: empty ladder");
    if (rs.front() < spec.spacing()) throw std::invalid_argument("hl_maximal: ladder members must be >= h");
    const int n = spec.points_per_axis();
    const int m = spec.samples_per_unit;
    std::vector<double> absf(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) absf[i] = std::fabs(f[i]);
    std::vector<double> acc(f.size(), 0.0);

    if (spec.dim == 1) {
        const CircularPrefix prefix(absf);
        for (double r : rs) {
            const int half = strict_offset_bound(r, m);
            const int len = std::min(2 * half + 1, n);
            for (int j = 0; j < n; ++j) {
                const double avg = prefix.window(j - half, len) / len;
                acc[static_cast<std::size_t>(j)] = std::max(acc[static_cast<std::size_t>(j)], avg);
            }
        }
    } else {
        std::vector<CircularPrefix> rows;
        rows.reserve(static_cast<std::size_t>(n));
        for (int r0 = 0; r0 < n; ++r0)
            rows.emplace_back(std::span<const double>(absf).subspan(static_cast<std::size_t>(r0) * n, static_cast<std::size_t>(n)));

        for (double r : rs) {
            const double R2 = (r * m) * (r * m);
            const int dmax = strict_offset_bound(r, m);
            if (2 * dmax + 1 > n)
                throw std::invalid_argument("hl_maximal: d=2 ball radius must stay below half the box side");
            // per-|rho| strict column bound
            std::vector<int> cmax(static_cast<std::size_t>(dmax) + 1, -1);
            long count = 0;
            for (int rho = 0; rho <= dmax; ++rho) {
                const double D = R2 - static_cast<double>(rho) * rho;
                if (D <= 0.0) break;
                int c = static_cast<int>(std::floor(std::sqrt(D)));
                while (static_cast<double>(c + 1) * (c + 1) < D) ++c;
                while (c >= 0 && static_cast<double>(c) * c >= D) --c;
                cmax[static_cast<std::size_t>(rho)] = c;
                const int w = 2 * c + 1;
                count += (rho == 0) ? w : 2L * w;
            }
            for (int j0 = 0; j0 < n; ++j0)
                for (int j1 = 0; j1 < n; ++j1) {
                    double s = 0.0;
                    for (int rho = -dmax; rho <= dmax; ++rho) {
                        const int cm = cmax[static_cast<std::size_t>(std::abs(rho))];
                        if (cm < 0) continue;
                        s += rows[static_cast<std::size_t>(((j0 + rho) % n + n) % n)].window(j1 - cm, 2 * cm + 1);
                    }
                    const double avg = s / static_cast<double>(count);
                    auto& a = acc[static_cast<std::size_t>(j0) * n + j1];
                    a = std::max(a, avg);
                }
        }
    }
    return GridFunction(spec, std::move(acc));
}

GridFunction nontangential_maximal(const Slab& u) {
    const GridSpec& spec = u.spec();
    const int n = spec.points_per_axis();
    const int m = spec.samples_per_unit;
    std::vector<double> acc(spec.point_count(), 0.0);

    for (const auto& slice : u.slices()) {
        const int half = strict_offset_bound(kConeAperture * slice.t, m);
        std::vector<double> absu(slice.u.size());
        for (std::size_t i = 0; i < absu.size(); ++i) absu[i] = std::fabs(slice.u[i]);

        if (spec.dim == 1) {
            const std::vector<double> wm = circular_window_max(absu, half);
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = std::max(acc[i], wm[i]);
        } else {
            const double R2 = (kConeAperture * slice.t * m) * (kConeAperture * slice.t * m);
            const int dmax = std::min(half, n);
            // group row offsets by their strict column half-width
            std::vector<int> cmax(static_cast<std::size_t>(dmax) + 1, -1);
            for (int rho = 0; rho <= dmax; ++rho) {
                const double D = R2 - static_cast<double>(rho) * rho;
                if (D <= 0.0) break;
                int c = static_cast<int>(std::floor(std::sqrt(D)));
                while (static_cast<double>(c + 1) * (c + 1) < D) ++c;
                while (c >= 0 && static_cast<double>(c) * c >= D) --c;
                cmax[static_cast<std::size_t>(rho)] = c;
            }
            // distinct widths, one row-sliding-max pass per width
            std::vector<int> widths;
            for (int rho = 0; rho <= dmax; ++rho)
                if (cmax[static_cast<std::size_t>(rho)] >= 0) widths.push_back(cmax[static_cast<std::size_t>(rho)]);
            std::sort(widths.begin(), widths.end());
            widths.erase(std::unique(widths.begin(), widths.end()), widths.end());

            std::vector<double> slide(static_cast<std::size_t>(n) * n);
            for (int w : widths) {
                for (int r0 = 0; r0 < n; ++r0) {
                    const auto row = std::span<const double>(absu).subspan(static_cast<std::size_t>(r0) * n, static_cast<std::size_t>(n));
                    const std::vector<double> rm = circular_window_max(row, w);
                    std::copy(rm.begin(), rm.end(), slide.begin() + static_cast<std::ptrdiff_t>(r0) * n);
                }
                for (int rho = -dmax; rho <= dmax; ++rho) {
                    if (cmax[static_cast<std::size_t>(std::abs(rho))] != w) continue;
                    for (int j0 = 0; j0 < n; ++j0) {
                        const int sr = ((j0 + rho) % n + n) % n;
                        for (int j1 = 0; j1 < n; ++j1) {
                            auto& a = acc[static_cast<std::size_t>(j0) * n + j1];
                            a = std::max(a, slide[static_cast<std::size_t>(sr) * n + j1]);
                        }
                    }
                }
            }
        }
    }
    return GridFunction(spec, std::move(acc));
}

VectorMaximalReport vector_maximal_experiment(const std::vector<GridFunction>& fs, double u,
                                              const Exponents& e, const Ladder& hl_ladder,
                                              const Ladder& dilation_ladder) {
    if (!(e.p > 1.0)) throw std::invalid_argument("vector_maximal_experiment: requires p > 1");
    if (!(u > 1.0)) throw std::invalid_argument("vector_maximal_experiment: requires u > 1");
    if (fs.empty()) throw std::invalid_argument("vector_maximal_experiment: empty family");
    const GridSpec& spec = fs.front().spec();
    for (const auto& f : fs)
        if (!(f.spec() == spec)) throw std::invalid_argument("vector_maximal_experiment: grid mismatch");

    std::vector<double> lhs(spec.point_count(), 0.0), rhs(spec.point_count(), 0.0);
    for (const auto& f : fs) {
        const GridFunction mf = hl_maximal(f, hl_ladder);
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            lhs[i] += std::pow(mf[i], u);
            rhs[i] += std::pow(std::fabs(f[i]), u);
        }
    }
    const double inv_u = 1.0 / u;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        lhs[i] = std::pow(lhs[i], inv_u);
        rhs[i] = std::pow(rhs[i], inv_u);
    }
    VectorMaximalReport report{
        fofana_norm(GridFunction(spec, std::move(lhs)), e, dilation_ladder),
        fofana_norm(GridFunction(spec, std::move(rhs)), e, dilation_ladder),
        1.0,
    };
    if (report.plain_side.value > 0.0)
        report.ratio = report.maximal_side.value / report.plain_side.value;
    else if (report.maximal_side.value > 0.0)
        report.ratio = kInf;
    return report;
}

}  // namespace fofana
