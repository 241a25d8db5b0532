#ifndef BLINDEQ_FFT_HPP
#define BLINDEQ_FFT_HPP

#include <complex>
#include <vector>

namespace blindeq::fft {

/// In-place complex DFT, unnormalized. Backed by FFTW; plans are cached per
/// (size, direction) and plan creation is serialized, so concurrent
/// transforms on distinct buffers are safe.
void forward(std::complex<double>* data, size_t n);
void inverse(std::complex<double>* data, size_t n); // scales by 1/n

inline void forward(std::vector<std::complex<double>>& d) { forward(d.data(), d.size()); }
inline void inverse(std::vector<std::complex<double>>& d) { inverse(d.data(), d.size()); }

} // namespace blindeq::fft

#endif
