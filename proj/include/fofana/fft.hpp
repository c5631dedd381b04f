#ifndef FOFANA_FFT_HPP
#define FOFANA_FFT_HPP

#include <complex>
#include <vector>

namespace fofana {

using cplx = std::complex<double>;

// In-place unscaled DFT: forward computes sum_j a_j e^{-2pi i jk/n}, inverse
// the conjugate sum followed by division by n. Radix-2 for power-of-two
// lengths, Bluestein's chirp-z otherwise, so any length is supported.
void fft(std::vector<cplx>& a, bool inverse);

// Transform a row-major d-dimensional cube of side n along every axis.
void fft_nd(std::vector<cplx>& a, int dim, int n, bool inverse);

}  // namespace fofana

#endif
