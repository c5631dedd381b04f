#ifndef FOFANA_NORMS_HPP
#define FOFANA_NORMS_HPP

#include <limits>
#include <utility>
#include <vector>

#include "fofana/grid.hpp"

namespace fofana {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Exponent triple (p, q, alpha). Triples violating p <= alpha <= q are
// rejected at construction: the associated spaces are trivial outside that
// range.
struct Exponents {
    double p = 2.0;
    double q = 2.0;      // kInf allowed
    double alpha = 2.0;

    static Exponents make(double p, double q, double alpha);

    // Stricter hypotheses used by the characterization machinery:
    // (dim-1)/dim < p and q < infinity.
    bool theorem_mode(int dim) const;
    void require_theorem_mode(int dim) const;

    Exponents scaled(double mu) const;  // (p*mu, q*mu, alpha*mu)
};

// Result of a discrete supremum over a scale ladder.
struct NormReport {
    double value = 0.0;
    double argmax = 0.0;                            // smallest member attaining the max
    std::vector<std::pair<double, double>> terms;   // (member, norm at that member)
};

// (h^dim * sum |u|^p)^{1/p}; max |u| for p = infinity.
double lp_norm(const GridFunction& u, double p);

// Wiener amalgam norm: local L^p on each unit cube, then l^q over cubes
// (max over cubes for q = infinity). Exact block reduction on the grid.
double amalgam_norm(const GridFunction& u, double p, double q);

// Dilation u -> r^{-dim/alpha} u(x/r) for dyadic r, realized exactly by
// rescaling the grid coordinates (see resample_dyadic).
GridFunction dilate(const GridFunction& u, double alpha, double r);

// sup over the ladder of the amalgam norm of the dilated function. Every
// ladder member must be representable on u's grid. Ties in the argmax break
// toward the smallest member.
NormReport fofana_norm(const GridFunction& u, const Exponents& e, const Ladder& r_ladder);

// q = infinity Fofana norm over the grid's default dyadic ladder; requires
// p < alpha.
double morrey_norm(const GridFunction& u, double p, double alpha);

// Dyadic ladder 2^{-6}..2^{6} clipped to the dilations representable on the
// grid (r in [1/side, samples_per_unit]).
Ladder default_dilation_ladder(const GridSpec& spec);

}  // namespace fofana

#endif
