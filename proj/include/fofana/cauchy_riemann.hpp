#ifndef FOFANA_CAUCHY_RIEMANN_HPP
#define FOFANA_CAUCHY_RIEMANN_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "fofana/norms.hpp"
#include "fofana/transforms.hpp"

namespace fofana {

enum class SystemKind { harmonic, temperature };

// A (dim+1)-component vector field on the upper half-space, sampled on
// t-slices: components 0..dim-1 are the conjugate (Riesz) parts, component
// dim the extension of the boundary datum.
class CRSystem {
public:
    struct Slice {
        double t;
        std::vector<GridFunction> comps;  // dim + 1 components
    };

    CRSystem(GridSpec spec, SystemKind kind, std::vector<Slice> slices);

    const GridSpec& spec() const { return spec_; }
    SystemKind kind() const { return kind_; }
    const std::vector<Slice>& slices() const { return slices_; }
    std::size_t size() const { return slices_.size(); }
    int components() const { return spec_.dim + 1; }
    double t_max() const { return slices_.back().t; }

private:
    GridSpec spec_;
    SystemKind kind_;
    std::vector<Slice> slices_;
};

// (R_1 f * P_t, ..., R_d f * P_t, f * P_t) per ladder member.
CRSystem harmonic_system(const GridFunction& f, const Ladder& t_ladder);

// (R_1 f * W_t, ..., R_d f * W_t, f * W_t) per ladder member.
CRSystem caloric_map(const GridFunction& f, const Ladder& t_ladder);

struct ConditionResidual {
    std::string name;
    double value;
};

struct ResidualReport {
    std::vector<ConditionResidual> conditions;
    double t_lo = 0.0;
    double t_hi = 0.0;
    int slices_used = 0;

    double max_residual() const;
    double operator[](const std::string& name) const;
};

// Residuals of the conjugate-gradient system: all curl conditions
// d u_j / d x_k = d u_k / d x_j (x_{d+1} = t) and the divergence condition,
// relative to the pooled L2 norm of all first partials. Interior slices only;
// x by central differences, t by 3-point differences on the ladder.
ResidualReport harmonic_cr_residual(const CRSystem& F);

// Residuals of the caloric coupling conditions
//   (1) sum_j d u_j/d x_j = i d_t^{1/2} u_{d+1}
//   (2) d u_j/d x_k = d u_k/d x_j          (j, k <= d)
//   (3) d u_{d+1}/d x_j = -i d_t^{1/2} u_j
// with the half-order derivative evaluated by singularity-removed quadrature
// through the slab's monotone cubic t-interpolant. Requires >= 5 slices and
// slices reaching 8x the largest reported height.
ResidualReport temperature_cr_residual(const CRSystem& F);

// Relative residual of d u/dt = Laplacian u on interior slices.
ResidualReport heat_residual(const Slab& u);

// Relative residual of the (dim+1)-dimensional Laplace equation
// Laplacian_x u + d^2 u/dt^2 = 0 on interior slices.
ResidualReport laplace_residual(const Slab& u);

// sup over slices of the amalgam norm of the pointwise Euclidean magnitude,
// then sup over the dilation ladder (slices relabel t -> r t under dilation).
NormReport caloric_norm(const CRSystem& F, const Exponents& e, const Ladder& r_ladder);

struct HalfDerivOptions {
    double tail_tol = 1e-10;  // |g'(t_upper)| must be below this
    double rel_tol = 1e-9;
    int max_doublings = 14;
    int initial_nodes = 64;
};

// (d_t^{1/2} g)(t) = (i/sqrt(pi)) Int_t^inf g'(s)/sqrt(s-t) ds, evaluated as
// (2i/sqrt(pi)) Int_0^vmax g'(t+v^2) dv with the integral truncated at
// t_upper and refined by step doubling.
std::complex<double> half_time_derivative(const std::function<double(double)>& g_prime, double t,
                                          double t_upper, const HalfDerivOptions& opts = {});

}  // namespace fofana

#endif
