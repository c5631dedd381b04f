#ifndef FOFANA_TRANSFORMS_HPP
#define FOFANA_TRANSFORMS_HPP

#include <functional>
#include <vector>

#include "fofana/grid.hpp"
#include "fofana/kernels.hpp"
#include "fofana/spectral.hpp"

namespace fofana {

// A function on the upper half-space sampled on t-slices.
class Slab {
public:
    struct Slice {
        double t;
        GridFunction u;
    };

    Slab(GridSpec spec, std::vector<Slice> slices);

    const GridSpec& spec() const { return spec_; }
    const std::vector<Slice>& slices() const { return slices_; }
    std::size_t size() const { return slices_.size(); }
    const Slice& operator[](std::size_t i) const { return slices_[i]; }
    double t_max() const { return slices_.back().t; }

private:
    GridSpec spec_;
    std::vector<Slice> slices_;
};

// Periodic convolution with h^dim measure weight, via the frequency domain.
GridFunction convolve(const GridFunction& u, const GridFunction& v);

// Frequency symbol table on the grid's lattice (indexed like the FFT output).
using SymbolTable = std::vector<cplx>;
SymbolTable make_symbol(const GridSpec& spec, const std::function<cplx(double, double)>& sigma);

// Forward transform, pointwise multiply, inverse transform; the real part is
// returned and the imaginary residue is reported via max_imag.
InverseResult apply_multiplier(const GridFunction& u, const SymbolTable& symbol);

// j-th Riesz transform via the multiplier -i xi_j/|xi| (0 at xi = 0 and on
// the unpaired Nyquist plane of axis j). Throws if the imaginary residue
// exceeds 1e-10.
GridFunction riesz_transform(const GridFunction& u, int axis);

// Direct truncated principal-value quadrature against the sampled kernel
// K_j 1_{|x|>eps}. O(N^2); the independent oracle for riesz_transform.
GridFunction riesz_pv_oracle(const GridFunction& u, int axis, double eps);

// Upper half-space extensions: one slice f * P_t (resp. f * W_t) per ladder
// member. The ladder needs at least 3 members (t-derivatives downstream).
Slab poisson_extend(const GridFunction& f, const Ladder& t_ladder);
Slab heat_extend(const GridFunction& f, const Ladder& t_ladder);

}  // namespace fofana

#endif
