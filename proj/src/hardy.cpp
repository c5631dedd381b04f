#include "fofana/hardy.hpp"

#include <cmath>
#include <stdexcept>

#include "fofana/util.hpp"

namespace fofana {

LadderSet LadderSet::defaults(const GridSpec& spec) {
    LadderSet set;
    set.t = Ladder::dyadic(-6, 6);
    set.r = default_dilation_ladder(spec);
    set.rho = set.r;
    set.mu = Ladder(1.0, 2.0, 4);  // 1, 2, 4, 8
    return set;
}

NormReport hardy_fofana_norm(const GridFunction& f, const Exponents& e, const Ladder& t_ladder,
                             const Ladder& r_ladder, MollifierShape shape) {
    e.require_theorem_mode(f.spec().dim);
    return fofana_norm(grand_maximal(f, t_ladder, shape), e, r_ladder);
}

NormReport poisson_characterization_norm(const GridFunction& f, const Exponents& e,
                                         const Ladder& t_ladder, const Ladder& r_ladder) {
    e.require_theorem_mode(f.spec().dim);
    return fofana_norm(nontangential_maximal(poisson_extend(f, t_ladder)), e, r_ladder);
}

RieszCharacterization riesz_characterization(const GridFunction& f, const Exponents& e,
                                             const Ladder& t_ladder, const Ladder& r_ladder,
                                             MollifierShape shape) {
    e.require_theorem_mode(f.spec().dim);
    const int dim = f.spec().dim;
    std::vector<GridFunction> riesz_f;
    riesz_f.reserve(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) riesz_f.push_back(riesz_transform(f, j));

    RieszCharacterization out;
    bool first = true;
    for (double t : t_ladder.members()) {
        const KernelSample phi = mollifier(f.spec(), t, shape);
        RieszCharacterization::Term term;
        term.t = t;
        term.base = fofana_norm(convolve(f, phi.values), e, r_ladder).value;
        term.total = term.base;
        for (int j = 0; j < dim; ++j) {
            const double rj = fofana_norm(convolve(riesz_f[static_cast<std::size_t>(j)], phi.values), e, r_ladder).value;
            term.riesz.push_back(rj);
            term.total += rj;
        }
        if (first || term.total > out.value) {
            out.value = term.total;
            out.argmax_t = t;
            first = false;
        }
        out.terms.push_back(std::move(term));
    }
    return out;
}

NormReport dilation_characterization(const GridFunction& f, const Exponents& e,
                                     const Ladder& rho_ladder, const Ladder& t_ladder,
                                     MollifierShape shape) {
    e.require_theorem_mode(f.spec().dim);
    NormReport report;
    bool first = true;
    for (double rho : rho_ladder.members()) {
        const GridFunction g = dilate(f, e.alpha, rho);
        const double term = amalgam_norm(grand_maximal(g, t_ladder.scaled(rho), shape), e.p, e.q);
        report.terms.emplace_back(rho, term);
        if (first || term > report.value) {
            report.value = term;
            report.argmax = rho;
            first = false;
        }
    }
    if (first) throw std::invalid_argument("dilation_characterization: empty ladder");
    return report;
}

std::vector<RestrictionRow> restricted_at_infinity_diag(const GridFunction& f, const Exponents& e,
                                                        const Ladder& mu_ladder, const Ladder& r_ladder) {
    const std::vector<double> mus = mu_ladder.members();
    for (double mu : mus)
        if (mu < 1.0) throw std::invalid_argument("restricted_at_infinity_diag: mu ladder members must be >= 1");

    const GridFunction g = convolve(f, mollifier(f.spec(), 1.0).values);
    const double sup = lp_norm(g, kInf);
    const double base = fofana_norm(g, e, r_ladder).value;

    std::vector<RestrictionRow> rows;
    rows.reserve(mus.size());
    for (double mu : mus) {
        RestrictionRow row;
        row.mu = mu;
        row.norm = fofana_norm(g, e.scaled(mu), r_ladder).value;
        row.bound = std::pow(sup, 1.0 - 1.0 / mu) * std::pow(base, 1.0 / mu);
        row.violates = row.norm > row.bound * (1.0 + 1e-9);
        rows.push_back(row);
    }
    return rows;
}

CharacterizationReport characterize(const GridFunction& f, const Exponents& e, const LadderSet& ladders,
                                    MollifierShape shape) {
    CharacterizationReport report;
    report.maximal_norm = hardy_fofana_norm(f, e, ladders.t, ladders.r, shape);
    report.poisson_norm = poisson_characterization_norm(f, e, ladders.t, ladders.r);
    report.riesz_functional = riesz_characterization(f, e, ladders.t, ladders.r, shape);
    report.dilation_norm = dilation_characterization(f, e, ladders.rho, ladders.t, shape);

    const std::vector<std::pair<std::string, std::pair<double, double>>> pairs = {
        {"poisson/maximal", {report.poisson_norm.value, report.maximal_norm.value}},
        {"riesz/maximal", {report.riesz_functional.value, report.maximal_norm.value}},
        {"dilation/maximal", {report.dilation_norm.value, report.maximal_norm.value}},
        {"riesz/poisson", {report.riesz_functional.value, report.poisson_norm.value}},
        {"dilation/poisson", {report.dilation_norm.value, report.poisson_norm.value}},
        {"dilation/riesz", {report.dilation_norm.value, report.riesz_functional.value}},
    };
    for (const auto& [name, vals] : pairs)
        if (vals.second > 0.0) report.ratios.push_back({name, vals.first / vals.second});
    return report;
}

}  // namespace fofana
