#include "blindeq/kernels.hpp"

#include <cmath>
#include <numbers>

namespace blindeq::kernels {

namespace {
// Below this many output elements the OpenMP fork costs more than it saves.
constexpr long kParallelCutoff = 1 << 14;
} // namespace

void conv1d_forward_ref(const double* in, int c_in, int l_in, const double* w,
                        const double* bias, int c_out, int k, int stride,
                        double* out, int l_out, uint64_t* mult_count) {
    for (int co = 0; co < c_out; ++co) {
        for (int t = 0; t < l_out; ++t) {
            double acc = bias ? bias[co] : 0.0;
            const int base = t * stride;
            for (int ci = 0; ci < c_in; ++ci) {
                const double* inr = in + static_cast<size_t>(ci) * l_in + base;
                const double* wr = w + (static_cast<size_t>(co) * c_in + ci) * k;
                for (int j = 0; j < k; ++j) acc += wr[j] * inr[j];
            }
            out[static_cast<size_t>(co) * l_out + t] = acc;
        }
    }
    if (mult_count) *mult_count += static_cast<uint64_t>(c_out) * l_out * c_in * k;
}

void conv1d_forward(const double* in, int c_in, int l_in, const double* w,
                    const double* bias, int c_out, int k, int stride,
                    double* out, int l_out, uint64_t* mult_count) {
    const long total = static_cast<long>(c_out) * l_out;
    if (total < kParallelCutoff) {
        conv1d_forward_ref(in, c_in, l_in, w, bias, c_out, k, stride, out, l_out, mult_count);
        return;
    }
#pragma omp parallel for collapse(2) schedule(static)
    for (int co = 0; co < c_out; ++co) {
        for (int t = 0; t < l_out; ++t) {
            double acc = bias ? bias[co] : 0.0;
            const int base = t * stride;
            for (int ci = 0; ci < c_in; ++ci) {
                const double* inr = in + static_cast<size_t>(ci) * l_in + base;
                const double* wr = w + (static_cast<size_t>(co) * c_in + ci) * k;
                for (int j = 0; j < k; ++j) acc += wr[j] * inr[j];
            }
            out[static_cast<size_t>(co) * l_out + t] = acc;
        }
    }
    if (mult_count) *mult_count += static_cast<uint64_t>(c_out) * l_out * c_in * k;
}

void conv1d_backward_ref(const double* in, int c_in, int l_in, const double* w,
                         int c_out, int k, int stride, const double* grad_out,
                         int l_out, double* grad_in, double* grad_w, double* grad_bias) {
    // grad_in[ci][i]: gather over (co, t, j) with t*stride + j == i
    for (int ci = 0; ci < c_in; ++ci) {
        for (int i = 0; i < l_in; ++i) {
            double acc = 0.0;
            const int t_max = std::min(l_out - 1, i / stride);
            for (int co = 0; co < c_out; ++co) {
                const double* wr = w + (static_cast<size_t>(co) * c_in + ci) * k;
                const double* gor = grad_out + static_cast<size_t>(co) * l_out;
                for (int t = t_max; t >= 0; --t) {
                    const int j = i - t * stride;
                    if (j >= k) break;
                    acc += gor[t] * wr[j];
                }
            }
            grad_in[static_cast<size_t>(ci) * l_in + i] += acc;
        }
    }
    for (int co = 0; co < c_out; ++co) {
        for (int ci = 0; ci < c_in; ++ci) {
            for (int j = 0; j < k; ++j) {
                double acc = 0.0;
                const double* gor = grad_out + static_cast<size_t>(co) * l_out;
                const double* inr = in + static_cast<size_t>(ci) * l_in;
                for (int t = 0; t < l_out; ++t) acc += gor[t] * inr[t * stride + j];
                grad_w[(static_cast<size_t>(co) * c_in + ci) * k + j] += acc;
            }
        }
    }
    if (grad_bias) {
        for (int co = 0; co < c_out; ++co) {
            double acc = 0.0;
            const double* gor = grad_out + static_cast<size_t>(co) * l_out;
            for (int t = 0; t < l_out; ++t) acc += gor[t];
            grad_bias[co] += acc;
        }
    }
}

void conv1d_backward(const double* in, int c_in, int l_in, const double* w,
                     int c_out, int k, int stride, const double* grad_out,
                     int l_out, double* grad_in, double* grad_w, double* grad_bias) {
    const long total = static_cast<long>(c_in) * l_in;
    if (total < kParallelCutoff) {
        conv1d_backward_ref(in, c_in, l_in, w, c_out, k, stride, grad_out, l_out,
                            grad_in, grad_w, grad_bias);
        return;
    }
#pragma omp parallel for collapse(2) schedule(static)
    for (int ci = 0; ci < c_in; ++ci) {
        for (int i = 0; i < l_in; ++i) {
            double acc = 0.0;
            const int t_max = std::min(l_out - 1, i / stride);
            for (int co = 0; co < c_out; ++co) {
                const double* wr = w + (static_cast<size_t>(co) * c_in + ci) * k;
                const double* gor = grad_out + static_cast<size_t>(co) * l_out;
                for (int t = t_max; t >= 0; --t) {
                    const int j = i - t * stride;
                    if (j >= k) break;
                    acc += gor[t] * wr[j];
                }
            }
            grad_in[static_cast<size_t>(ci) * l_in + i] += acc;
        }
    }
#pragma omp parallel for collapse(2) schedule(static)
    for (int co = 0; co < c_out; ++co) {
        for (int ci = 0; ci < c_in; ++ci) {
            for (int j = 0; j < k; ++j) {
                double acc = 0.0;
                const double* gor = grad_out + static_cast<size_t>(co) * l_out;
                const double* inr = in + static_cast<size_t>(ci) * l_in;
                for (int t = 0; t < l_out; ++t) acc += gor[t] * inr[t * stride + j];
                grad_w[(static_cast<size_t>(co) * c_in + ci) * k + j] += acc;
            }
        }
    }
    if (grad_bias) {
        for (int co = 0; co < c_out; ++co) {
            double acc = 0.0;
            const double* gor = grad_out + static_cast<size_t>(co) * l_out;
            for (int t = 0; t < l_out; ++t) acc += gor[t];
            grad_bias[co] += acc;
        }
    }
}

void magnitude_squared_ref(const std::complex<double>* e, double* p, size_t n) {
    for (size_t i = 0; i < n; ++i) p[i] = std::norm(e[i]);
}

void magnitude_squared(const std::complex<double>* e, double* p, size_t n) {
    if (n < static_cast<size_t>(kParallelCutoff)) {
        magnitude_squared_ref(e, p, n);
        return;
    }
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(n); ++i) p[i] = std::norm(e[i]);
}

void apply_quadratic_phase_ref(std::complex<double>* spec, size_t n, double coeff,
                               double sample_rate) {
    const double df = sample_rate / static_cast<double>(n);
    for (size_t i = 0; i < n; ++i) {
        const double f = (i <= n / 2 ? static_cast<double>(i) : static_cast<double>(i) - static_cast<double>(n)) * df;
        const double w = 2.0 * std::numbers::pi * f;
        const double ph = coeff * w * w;
        spec[i] *= std::complex<double>(std::cos(ph), std::sin(ph));
    }
}

void apply_quadratic_phase(std::complex<double>* spec, size_t n, double coeff,
                           double sample_rate) {
    if (n < static_cast<size_t>(kParallelCutoff)) {
        apply_quadratic_phase_ref(spec, n, coeff, sample_rate);
        return;
    }
    const double df = sample_rate / static_cast<double>(n);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(n); ++i) {
        const double f = (static_cast<size_t>(i) <= n / 2 ? static_cast<double>(i)
                                                          : static_cast<double>(i) - static_cast<double>(n)) * df;
        const double w = 2.0 * std::numbers::pi * f;
        const double ph = coeff * w * w;
        spec[i] *= std::complex<double>(std::cos(ph), std::sin(ph));
    }
}

void tanh_eval_ref(const double* x, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] = std::tanh(x[i]);
}

void tanh_eval(const double* x, double* y, size_t n) {
    if (n < static_cast<size_t>(kParallelCutoff)) {
        tanh_eval_ref(x, y, n);
        return;
    }
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(n); ++i) y[i] = std::tanh(x[i]);
}

} // namespace blindeq::kernels
