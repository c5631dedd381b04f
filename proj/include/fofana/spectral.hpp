#ifndef FOFANA_SPECTRAL_HPP
#define FOFANA_SPECTRAL_HPP

#include <vector>

#include "fofana/fft.hpp"
#include "fofana/grid.hpp"

namespace fofana {

// Transform convention: hat(f)(xi) = h^dim * sum_x f(x) e^{-2 pi i x.xi} with
// xi on the lattice {kappa / side}, kappa integer, Nyquist folded to
// -n/2. Tables are indexed like the FFT output; signed_freq maps an array
// index to kappa.
inline int signed_freq(int k, int n) { return k < (n + 1) / 2 ? k : k - n; }

// hat(u) on the full index lattice.
std::vector<cplx> forward_grid_transform(const GridFunction& u);

struct InverseResult {
    GridFunction real;
    double max_imag;  // largest imaginary residue dropped
};

// Inverse of forward_grid_transform; the imaginary part is discarded but its
// maximum magnitude is reported.
InverseResult inverse_grid_transform(const GridSpec& spec, std::vector<cplx> hat);

}  // namespace fofana

#endif
