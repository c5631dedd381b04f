#ifndef FOFANA_HARDY_HPP
#define FOFANA_HARDY_HPP

#include <string>
#include <vector>

#include "fofana/maximal.hpp"
#include "fofana/norms.hpp"

namespace fofana {

// Scale ladders used by the characterization functionals.
struct LadderSet {
    Ladder t;    // mollifier / extension scales
    Ladder r;    // dilation ladder of the Fofana norm
    Ladder rho;  // outer dilation ladder of the dilation characterization
    Ladder mu;   // exponent-scaling ladder of the restriction diagnostic

    static LadderSet defaults(const GridSpec& spec);
};

// ||M f||_{p,q,alpha}: the quasi-norm estimator. Theorem-mode exponents.
NormReport hardy_fofana_norm(const GridFunction& f, const Exponents& e, const Ladder& t_ladder,
                             const Ladder& r_ladder, MollifierShape shape = MollifierShape::gaussian);

// Fofana norm of the non-tangential maximal function of the Poisson
// extension.
NormReport poisson_characterization_norm(const GridFunction& f, const Exponents& e,
                                         const Ladder& t_ladder, const Ladder& r_ladder);

struct RieszCharacterization {
    struct Term {
        double t;
        double base;                // ||f * phi_t||_{p,q,alpha}
        std::vector<double> riesz;  // ||R_j f * phi_t||_{p,q,alpha}
        double total;
    };
    double value = 0.0;
    double argmax_t = 0.0;
    std::vector<Term> terms;
};

// sup_t ( ||f*phi_t|| + sum_j ||(R_j f)*phi_t|| ) in the Fofana norm, with
// the per-term breakdown retained.
RieszCharacterization riesz_characterization(const GridFunction& f, const Exponents& e,
                                             const Ladder& t_ladder, const Ladder& r_ladder,
                                             MollifierShape shape = MollifierShape::gaussian);

// sup_rho ||M(St_rho f)||_{p,q} with the mollifier ladder co-dilated with
// rho, which makes the identity with hardy_fofana_norm exact on shared
// ladders.
NormReport dilation_characterization(const GridFunction& f, const Exponents& e,
                                     const Ladder& rho_ladder, const Ladder& t_ladder,
                                     MollifierShape shape = MollifierShape::gaussian);

struct RestrictionRow {
    double mu;
    double norm;       // ||f*phi||_{p mu, q mu, alpha mu}
    double bound;      // ||f*phi||_inf^{1-1/mu} ||f*phi||_{p,q,alpha}^{1/mu}
    bool violates;     // norm exceeds the bound beyond roundoff
};

// Finiteness table of ||f*phi||_{p mu, q mu, alpha mu} over the mu ladder
// (members >= 1), with the interpolation bound checked per row.
std::vector<RestrictionRow> restricted_at_infinity_diag(const GridFunction& f, const Exponents& e,
                                                        const Ladder& mu_ladder, const Ladder& r_ladder);

struct CharacterizationReport {
    NormReport maximal_norm;
    NormReport poisson_norm;
    RieszCharacterization riesz_functional;
    NormReport dilation_norm;

    struct Ratio {
        std::string pair;
        double value;
    };
    std::vector<Ratio> ratios;  // defined only when the denominator > 0
};

CharacterizationReport characterize(const GridFunction& f, const Exponents& e, const LadderSet& ladders,
                                    MollifierShape shape = MollifierShape::gaussian);

}  // namespace fofana

#endif
