#include "blindeq/resample.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "blindeq/errors.hpp"
#include "blindeq/fft.hpp"

namespace blindeq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

size_t reflect_index(long long i, long long n) {
    if (n <= 1) return 0;
    const long long period = 2 * (n - 1);
    i %= period;
    if (i < 0) i += period;
    return static_cast<size_t>(i < n ? i : period - i);
}

std::complex<double> unit_phase(double cycles) {
    return {std::cos(kTwoPi * cycles), std::sin(kTwoPi * cycles)};
}

std::vector<std::complex<double>> resample_core(const std::vector<std::complex<double>>& x,
                                                long long p, long long q, double delay) {
    const long long n_in = static_cast<long long>(x.size());
    if (n_in == 0) return {};
    if (p == q && delay == 0.0) return x;

    const size_t out_len = static_cast<size_t>(static_cast<__int128>(n_in) * p / q);

    int m = 2;
    const long long block_target = n_in < 4096 ? 1024 : 16384;
    while ((q << m) < block_target) ++m;
    const long long nb = q << m; // input block
    const long long mb = p << m; // output block
    const long long keep = mb / 2;

    std::vector<std::complex<double>> out(out_len);
    std::vector<std::complex<double>> in_buf(static_cast<size_t>(nb));
    std::vector<std::complex<double>> out_buf(static_cast<size_t>(mb));

    const long long half = std::min(nb, mb) / 2;
    const double scale = static_cast<double>(mb) / static_cast<double>(nb);

    for (long long c = 0; c * keep < static_cast<long long>(out_len); ++c) {
        const long long start = c * (nb / 2) - nb / 4;
        for (long long j = 0; j < nb; ++j) in_buf[static_cast<size_t>(j)] = x[reflect_index(start + j, n_in)];
        fft::forward(in_buf);

        std::fill(out_buf.begin(), out_buf.end(), std::complex<double>(0.0, 0.0));
        for (long long k = 0; k < half; ++k) {
            const std::complex<double> ph =
                delay == 0.0 ? std::complex<double>(1.0, 0.0)
                             : unit_phase(-static_cast<double>(k) / static_cast<double>(nb) * delay);
            out_buf[static_cast<size_t>(k)] += in_buf[static_cast<size_t>(k)] * ph * scale;
            if (k > 0) {
                const std::complex<double> phn = delay == 0.0 ? std::complex<double>(1.0, 0.0)
                                                              : std::conj(ph);
                out_buf[static_cast<size_t>(mb - k)] += in_buf[static_cast<size_t>(nb - k)] * phn * scale;
            }
        }
        // Edge bins at +-half/nb cycles per input sample. Splitting (on
        // upsample) and folding (on downsample) keeps real signals real; the
        // fractional delay reduces to a cosine factor for the paired bins.
        const double edge_cos = delay == 0.0 ? 1.0 : std::cos(kTwoPi * static_cast<double>(half) / static_cast<double>(nb) * delay);
        if (mb >= nb) {
            out_buf[static_cast<size_t>(half)] += 0.5 * in_buf[static_cast<size_t>(half)] * edge_cos * scale;
            out_buf[static_cast<size_t>(mb - half)] += 0.5 * in_buf[static_cast<size_t>(half)] * edge_cos * scale;
        } else {
            const std::complex<double> php = delay == 0.0 ? std::complex<double>(1.0, 0.0)
                : unit_phase(-static_cast<double>(half) / static_cast<double>(nb) * delay);
            out_buf[static_cast<size_t>(half)] += (in_buf[static_cast<size_t>(half)] * php +
                                                   in_buf[static_cast<size_t>(nb - half)] * std::conj(php)) * scale;
        }
        fft::inverse(out_buf);

        for (long long j = mb / 4; j < 3 * mb / 4; ++j) {
            const long long pos = c * keep + (j - mb / 4);
            if (pos >= 0 && pos < static_cast<long long>(out_len)) out[static_cast<size_t>(pos)] = out_buf[static_cast<size_t>(j)];
        }
    }
    return out;
}

} // namespace

Fraction rate_fraction(double from_rate, double to_rate) {
    if (!(from_rate > 0.0) || !(to_rate > 0.0))
        throw std::invalid_argument("rate_fraction: rates must be positive");
    const double ratio = to_rate / from_rate;
    // continued fractions
    double x = ratio;
    long long p_prev = 1, q_prev = 0, p_cur = static_cast<long long>(std::floor(x)), q_cur = 1;
    x -= std::floor(x);
    for (int it = 0; it < 64 && q_cur <= 1000000; ++it) {
        if (std::abs(static_cast<double>(p_cur) / static_cast<double>(q_cur) - ratio) <= 1e-12 * ratio)
            return {p_cur, q_cur};
        if (x <= 1e-15) break;
        x = 1.0 / x;
        const long long a = static_cast<long long>(std::floor(x));
        x -= std::floor(x);
        const long long p_next = a * p_cur + p_prev;
        const long long q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
    }
    if (q_cur <= 1000000 &&
        std::abs(static_cast<double>(p_cur) / static_cast<double>(q_cur) - ratio) <= 1e-12 * ratio)
        return {p_cur, q_cur};
    throw ConfigError("rate_fraction: rate ratio is not a small rational");
}

ComplexWaveform resample(const ComplexWaveform& w, double target_rate, double delay_input_samples) {
    const Fraction f = rate_fraction(w.sample_rate, target_rate);
    ComplexWaveform out;
    out.samples = resample_core(w.samples, f.num, f.den, delay_input_samples);
    out.sample_rate = target_rate;
    out.sps = w.sps * static_cast<double>(f.num) / static_cast<double>(f.den);
    return out;
}

RealWaveform resample(const RealWaveform& w, double target_rate, double delay_input_samples) {
    std::vector<std::complex<double>> tmp(w.samples.begin(), w.samples.end());
    const Fraction f = rate_fraction(w.sample_rate, target_rate);
    tmp = resample_core(tmp, f.num, f.den, delay_input_samples);
    RealWaveform out;
    out.sample_rate = target_rate;
    out.sps = w.sps * static_cast<double>(f.num) / static_cast<double>(f.den);
    out.samples.resize(tmp.size());
    for (size_t i = 0; i < tmp.size(); ++i) out.samples[i] = tmp[i].real();
    return out;
}

} // namespace blindeq
