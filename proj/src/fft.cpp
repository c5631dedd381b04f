#include "fofana/fft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "fofana/util.hpp"

namespace fofana {

namespace {

void fft_pow2(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const cplx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// Bluestein: x_k = e^{-i pi k^2 / n}; k^2 is reduced mod 2n in exact integer
// arithmetic before the trig call to keep the chirp accurate for large k.
cplx chirp(std::int64_t k, std::int64_t n, bool inverse) {
    const std::int64_t k2 = (k * k) % (2 * n);
    const double ang = (inverse ? 1.0 : -1.0) * std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
    return {std::cos(ang), std::sin(ang)};
}

void fft_bluestein(std::vector<cplx>& a, bool inverse) {
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    std::size_t m = 1;
    while (m < static_cast<std::size_t>(2 * n - 1)) m <<= 1;

    std::vector<cplx> u(m, cplx(0.0, 0.0)), v(m, cplx(0.0, 0.0));
    for (std::int64_t k = 0; k < n; ++k) {
        const cplx c = chirp(k, n, inverse);
        u[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)] * c;
        v[static_cast<std::size_t>(k)] = std::conj(c);
    }
    for (std::int64_t k = 1; k < n; ++k)
        v[m - static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(k)];

    fft_pow2(u, false);
    fft_pow2(v, false);
    for (std::size_t i = 0; i < m; ++i) u[i] *= v[i];
    fft_pow2(u, true);
    const double inv_m = 1.0 / static_cast<double>(m);

    for (std::int64_t k = 0; k < n; ++k)
        a[static_cast<std::size_t>(k)] = u[static_cast<std::size_t>(k)] * inv_m * chirp(k, n, inverse);
}

}  // namespace

void fft(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("fft: empty input");
    if (n == 1) return;
    if ((n & (n - 1)) == 0)
        fft_pow2(a, inverse);
    else
        fft_bluestein(a, inverse);
    if (inverse) {
        const double inv_n = 1.0 / static_cast<double>(n);
        for (auto& x : a) x *= inv_n;
    }
}

void fft_nd(std::vector<cplx>& a, int dim, int n, bool inverse) {
    if (dim == 1) {
        if (a.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("fft_nd: size mismatch");
        fft(a, inverse);
        return;
    }
    if (dim != 2 || a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("fft_nd: expected a square d=2 array");

    std::vector<cplx> line(static_cast<std::size_t>(n));
    // rows (contiguous)
    for (int r = 0; r < n; ++r) {
        std::copy(a.begin() + static_cast<std::ptrdiff_t>(r) * n,
                  a.begin() + static_cast<std::ptrdiff_t>(r + 1) * n, line.begin());
        fft(line, inverse);
        std::copy(line.begin(), line.end(), a.begin() + static_cast<std::ptrdiff_t>(r) * n);
    }
    // columns (strided)
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) line[static_cast<std::size_t>(r)] = a[static_cast<std::size_t>(r) * n + c];
        fft(line, inverse);
        for (int r = 0; r < n; ++r) a[static_cast<std::size_t>(r) * n + c] = line[static_cast<std::size_t>(r)];
    }
}

}  // namespace fofana
