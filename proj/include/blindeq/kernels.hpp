#ifndef BLINDEQ_KERNELS_HPP
#define BLINDEQ_KERNELS_HPP

#include <complex>
#include <cstdint>
#include <cstddef>

namespace blindeq::kernels {

/// Compute kernels used on the hot paths. Each kernel has an OpenMP-parallel
/// entry point and a plain serial `_ref` twin with identical per-element
/// arithmetic order, so the two are bit-identical for any thread count and
/// the parallel decomposition is testable by direct comparison. Work is
/// split so every output element is owned by exactly one thread; no
/// floating-point reductions cross threads.

/// Valid (unpadded) strided 1-D convolution on channel-major buffers
/// (element [c][t] at c*len + t). Weights are [c_out][c_in][k]; bias may be
/// null. out length per channel: l_out = (l_in - k)/stride + 1.
/// `mult_count`, when set, accumulates the number of scalar multiplies.
void conv1d_forward(const double* in, int c_in, int l_in, const double* w,
                    const double* bias, int c_out, int k, int stride,
                    double* out, int l_out, uint64_t* mult_count = nullptr);
void conv1d_forward_ref(const double* in, int c_in, int l_in, const double* w,
                        const double* bias, int c_out, int k, int stride,
                        double* out, int l_out, uint64_t* mult_count = nullptr);

/// Backward pass: accumulates into grad_in (size c_in*l_in), grad_w and
/// grad_bias (may be null when the layer has no bias).
void conv1d_backward(const double* in, int c_in, int l_in, const double* w,
                     int c_out, int k, int stride, const double* grad_out,
                     int l_out, double* grad_in, double* grad_w, double* grad_bias);
void conv1d_backward_ref(const double* in, int c_in, int l_in, const double* w,
                         int c_out, int k, int stride, const double* grad_out,
                         int l_out, double* grad_in, double* grad_w, double* grad_bias);

/// |E|^2 of a complex field.
void magnitude_squared(const std::complex<double>* e, double* p, size_t n);
void magnitude_squared_ref(const std::complex<double>* e, double* p, size_t n);

/// Multiply spectrum bin k by exp(i * coeff * w_k^2) with w_k the angular
/// frequency of an n-point DFT at sample_rate. Used for dispersion.
void apply_quadratic_phase(std::complex<double>* spec, size_t n, double coeff,
                           double sample_rate);
void apply_quadratic_phase_ref(std::complex<double>* spec, size_t n, double coeff,
                               double sample_rate);

/// Elementwise activations (forward).
void tanh_eval(const double* x, double* y, size_t n);
void tanh_eval_ref(const double* x, double* y, size_t n);

} // namespace blindeq::kernels

#endif
