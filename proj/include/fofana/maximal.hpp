#ifndef FOFANA_MAXIMAL_HPP
#define FOFANA_MAXIMAL_HPP

#include "fofana/grid.hpp"
#include "fofana/kernels.hpp"
#include "fofana/norms.hpp"
#include "fofana/transforms.hpp"

namespace fofana {

// Cone aperture of the non-tangential maximal function: |x - y| < t.
inline constexpr double kConeAperture = 1.0;

// Grand maximal function: pointwise max over the ladder of |f * phi_t|.
GridFunction grand_maximal(const GridFunction& f, const Ladder& t_ladder,
                           MollifierShape shape = MollifierShape::gaussian);

// Centered Hardy-Littlewood maximal function over the radius ladder. Balls
// are realized as index masks with strict torus distance |x-y| < r and
// measure count * h^dim; ladder members must be >= h.
GridFunction hl_maximal(const GridFunction& f, const Ladder& r_ladder);

// u*(x) = max over slices t and points y with |x - y| < t of |u(y, t)|.
GridFunction nontangential_maximal(const Slab& u);

struct VectorMaximalReport {
    NormReport maximal_side;   // ||(sum M(f_i)^u)^{1/u}||
    NormReport plain_side;     // ||(sum |f_i|^u)^{1/u}||
    double ratio;              // maximal/plain, 1 when both vanish
};

// Vector-valued maximal experiment; requires p > 1 and u > 1. When the
// HL ladder reaches r = h the ratio is >= 1 exactly.
VectorMaximalReport vector_maximal_experiment(const std::vector<GridFunction>& fs, double u,
                                              const Exponents& e, const Ladder& hl_ladder,
                                              const Ladder& dilation_ladder);

}  // namespace fofana

#endif
