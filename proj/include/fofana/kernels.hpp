#ifndef FOFANA_KERNELS_HPP
#define FOFANA_KERNELS_HPP

#include "fofana/grid.hpp"

namespace fofana {

enum class KernelKind { poisson, heat, riesz, mollifier };

enum class MollifierShape { gaussian, cos2 };

struct KernelSample {
    KernelKind kind;
    int axis;       // riesz only, -1 otherwise
    double scale;   // t for smoothing kernels, the truncation radius for riesz
    GridFunction values;
    double tail_mass;    // closed-form mass of the raw kernel outside the box
    bool tail_warning;   // scale outside the range where the sample is trustworthy
};

// Torus Poisson kernel at scale t: the L-periodization of
// Gamma((d+1)/2)/pi^{(d+1)/2} * t / (t^2+|x|^2)^{(d+1)/2}. In d=1 this is the
// exact circle closed form; in d=2 it is synthesized from the Fourier series
// e^{-2 pi t |k|/L}, whose truncation at the grid lattice is below roundoff
// for resolvable t.
KernelSample poisson_kernel(const GridSpec& spec, double t);

// Raw (unperiodized) closed-form value, for reference checks.
double poisson_kernel_value(int dim, double t, double x0, double x1 = 0.0);

// Torus heat kernel W_t: image sum of e^{-|x|^2/4t}/(4 pi t)^{d/2}. Exact on
// the torus for every t > 0; the warning flag marks t outside
// [4h^2, (L/8)^2] where comparisons against the raw closed form degrade.
KernelSample heat_kernel(const GridSpec& spec, double t);

double heat_kernel_value(int dim, double t, double x0, double x1 = 0.0);

// Truncated principal-value Riesz kernel: the torus periodization of K_j
// (cot closed form in d=1, symmetric image sum in d=2), zeroed on |x| <= eps.
// Samples on Nyquist rows (coordinate -L/2) are zeroed so the sampled kernel
// is exactly odd under x -> -x on the torus.
KernelSample riesz_kernel_truncated(const GridSpec& spec, int axis, double eps);

double riesz_kernel_value(int dim, int axis, double x0, double x1 = 0.0);

// Smooth mollifier phi_t(x) = t^{-d} phi(x/t), periodized and renormalized to
// exact unit discrete mass. gaussian: phi = e^{-pi |x|^2}; cos2: the
// compactly supported squared-cosine bump.
KernelSample mollifier(const GridSpec& spec, double t, MollifierShape shape = MollifierShape::gaussian);

}  // namespace fofana

#endif
