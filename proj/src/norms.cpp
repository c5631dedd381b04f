#include "fofana/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fofana/util.hpp"

namespace fofana {

Exponents Exponents::make(double p, double q, double alpha) {
    if (!(p > 0.0) || !(q > 0.0) || !(alpha > 0.0))
        throw std::invalid_argument("Exponents: p, q, alpha must be positive");
    if (!(p <= alpha && alpha <= q))
        throw std::invalid_argument("Exponents: the space is non-trivial only for p <= alpha <= q; got p=" +
                                    std::to_string(p) + " alpha=" + std::to_string(alpha) + " q=" +
                                    std::to_string(q));
    return Exponents{p, q, alpha};
}

bool Exponents::theorem_mode(int dim) const {
    const double lower = (dim - 1.0) / dim;
    return p > lower && q < kInf;
}

void Exponents::require_theorem_mode(int dim) const {
    if (!theorem_mode(dim))
        throw std::invalid_argument("Exponents: need (dim-1)/dim < p and q < infinity for this operation");
}

Exponents Exponents::scaled(double mu) const {
    if (!(mu > 0.0)) throw std::invalid_argument("Exponents::scaled: mu must be positive");
    return Exponents{p * mu, q == kInf ? kInf : q * mu, alpha * mu};
}

double lp_norm(const GridFunction& u, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
    const auto vals = u.values();
    if (p == kInf) {
        double mx = 0.0;
        for (double v : vals) mx = std::max(mx, std::fabs(v));
        return mx;
    }
    std::vector<double> terms(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) terms[i] = std::pow(std::fabs(vals[i]), p);
    const double hd = std::pow(u.spec().spacing(), u.spec().dim);
    return std::pow(hd * pairwise_sum(terms), 1.0 / p);
}

namespace {

// Local L^p norms over the unit-cube blocks, in lexicographic cube order.
std::vector<double> cube_local_norms(const GridFunction& u, double p) {
    const GridSpec& spec = u.spec();
    const int m = spec.samples_per_unit;
    const int n = spec.points_per_axis();
    const double hd = std::pow(spec.spacing(), spec.dim);
    std::vector<double> locals;
    locals.reserve(spec.cube_count());
    std::vector<double> scratch;

    auto finish = [&](std::vector<double>& terms) {
        if (p == kInf) {
            double mx = 0.0;
            for (double t : terms) mx = std::max(mx, t);
            return mx;
        }
        return std::pow(hd * pairwise_sum(terms), 1.0 / p);
    };

    if (spec.dim == 1) {
        for (int k = 0; k < spec.side; ++k) {
            scratch.clear();
            for (int a = 0; a < m; ++a) {
                const double v = std::fabs(u[static_cast<std::size_t>(k * m + a)]);
                scratch.push_back(p == kInf ? v : std::pow(v, p));
            }
            locals.push_back(finish(scratch));
        }
    } else {
        for (int k0 = 0; k0 < spec.side; ++k0)
            for (int k1 = 0; k1 < spec.side; ++k1) {
                scratch.clear();
                for (int a = 0; a < m; ++a)
                    for (int b = 0; b < m; ++b) {
                        const double v = std::fabs(u[static_cast<std::size_t>(k0 * m + a) * n + (k1 * m + b)]);
                        scratch.push_back(p == kInf ? v : std::pow(v, p));
                    }
                locals.push_back(finish(scratch));
            }
    }
    return locals;
}

}  // namespace

double amalgam_norm(const GridFunction& u, double p, double q) {
    if (!(p > 0.0) || !(q > 0.0)) throw std::invalid_argument("amalgam_norm: exponents must be positive");
    std::vector<double> locals = cube_local_norms(u, p);
    if (q == kInf) {
        double mx = 0.0;
        for (double l : locals) mx = std::max(mx, l);
        return mx;
    }
    for (double& l : locals) l = std::pow(l, q);
    return std::pow(pairwise_sum(locals), 1.0 / q);
}

GridFunction dilate(const GridFunction& u, double alpha, double r) {
    if (!(alpha > 0.0)) throw std::invalid_argument("dilate: alpha must be positive");
    GridFunction v = resample_dyadic(u, r);
    const double scale = std::pow(r, -static_cast<double>(u.spec().dim) / alpha);
    std::vector<double> vals(v.values().begin(), v.values().end());
    for (double& x : vals) x *= scale;
    return GridFunction(v.spec(), std::move(vals));
}

NormReport fofana_norm(const GridFunction& u, const Exponents& e, const Ladder& r_ladder) {
    NormReport report;
    bool first = true;
    for (double r : r_ladder.members()) {
        if (!is_dyadic(r)) throw std::invalid_argument("fofana_norm: ladder members must be dyadic");
        const double term = amalgam_norm(dilate(u, e.alpha, r), e.p, e.q);
        report.terms.emplace_back(r, term);
        if (first || term > report.value) {
            report.value = term;
            report.argmax = r;
            first = false;
        }
    }
    if (first) throw std::invalid_argument("fofana_norm: empty ladder");
    return report;
}

double morrey_norm(const GridFunction& u, double p, double alpha) {
    if (!(p < alpha)) throw std::invalid_argument("morrey_norm: requires p < alpha");
    const Exponents e{p, kInf, alpha};
    return fofana_norm(u, e, default_dilation_ladder(u.spec())).value;
}

Ladder default_dilation_ladder(const GridSpec& spec) {
    int shrink = 0;  // largest s with 2^s dividing side
    while (shrink < 6 && spec.side % (1 << (shrink + 1)) == 0) ++shrink;
    int stretch = 0;
    while (stretch < 6 && (spec.samples_per_unit >> (stretch + 1)) >= 1 &&
           (spec.samples_per_unit % (1 << (stretch + 1))) == 0)
        ++stretch;
    return Ladder::dyadic(-shrink, stretch);
}

}  // namespace fofana
