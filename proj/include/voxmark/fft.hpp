#pragma once

#include <complex>
#include <vector>

namespace voxmark::fft {

using Complex = std::complex<double>;

/// In-place discrete Fourier transform of arbitrary length.
/// Forward is unnormalized; inverse divides by n. Power-of-two lengths use
/// iterative radix-2 Cooley-Tukey, everything else goes through Bluestein's
/// chirp-z reduction to a power-of-two convolution.
void transform(std::vector<Complex>& a, bool inverse);

inline void forward(std::vector<Complex>& a) { transform(a, false); }
inline void inverse(std::vector<Complex>& a) { transform(a, true); }

}  // namespace voxmark::fft
