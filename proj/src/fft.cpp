#include "voxmark/fft.hpp"

#include <cmath>
#include <cstddef>

namespace voxmark::fft {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Iterative radix-2, n must be a power of two. sign = -1 forward, +1 inverse
// (no normalization here).
void fft_pow2(std::vector<Complex>& a, double sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * kTwoPi / static_cast<double>(len);
        const Complex wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex u = a[i + k];
                const Complex v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// Bluestein chirp-z: arbitrary-length DFT via one power-of-two convolution.
void fft_bluestein(std::vector<Complex>& a, double sign) {
    const std::size_t n = a.size();
    const std::size_t m = next_pow2(2 * n - 1);

    // chirp[k] = exp(sign * i * pi * k^2 / n); k^2 mod 2n keeps the argument small
    std::vector<Complex> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double ang =
            sign * (kTwoPi / 2.0) * static_cast<double>((k * k) % (2 * n)) / static_cast<double>(n);
        chirp[k] = Complex(std::cos(ang), std::sin(ang));
    }

    std::vector<Complex> x(m, Complex(0.0, 0.0));
    std::vector<Complex> y(m, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) x[k] = a[k] * chirp[k];
    y[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) y[k] = y[m - k] = std::conj(chirp[k]);

    fft_pow2(x, -1.0);
    fft_pow2(y, -1.0);
    for (std::size_t k = 0; k < m; ++k) x[k] *= y[k];
    fft_pow2(x, 1.0);

    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * inv_m * chirp[k];
}

}  // namespace

void transform(std::vector<Complex>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    const double sign = inverse ? 1.0 : -1.0;
    if (is_pow2(n)) {
        fft_pow2(a, sign);
    } else {
        fft_bluestein(a, sign);
    }
    if (inverse) {
        const double inv_n = 1.0 / static_cast<double>(n);
        for (Complex& c : a) c *= inv_n;
    }
}

}  // namespace voxmark::fft
