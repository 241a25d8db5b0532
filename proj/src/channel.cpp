#include "blindeq/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "blindeq/errors.hpp"
#include "blindeq/fft.hpp"
#include "blindeq/kernels.hpp"
#include "blindeq/resample.hpp"
#include "blindeq/rng.hpp"

namespace blindeq {

namespace {
constexpr double kSpeedOfLight = 299792458.0;
} // namespace

double FiberParams::beta2() const {
    const double d_si = dispersion_ps_nm_km * 1e-6;   // s/m^2
    const double lambda = wavelength_nm * 1e-9;       // m
    return -d_si * lambda * lambda / (2.0 * std::numbers::pi * kSpeedOfLight);
}

double eam_transfer_power(double drive_v, const EamParams& p) {
    const double p_max = dbm_to_watts(p.max_power_dbm);
    const double raw = 0.5 * p_max * (1.0 + std::tanh((drive_v - p.bias) / p.v_scale));
    const double floor_w = p_max / std::pow(10.0, p.extinction_db / 10.0);
    return std::max(raw, floor_w);
}

ComplexWaveform eam_modulate(const RealWaveform& drive, const EamParams& p, double tx_power_dbm) {
    ComplexWaveform out;
    out.sample_rate = drive.sample_rate;
    out.sps = drive.sps;
    out.samples.resize(drive.size());

    std::vector<double> power(drive.size());
    double mean = 0.0;
    for (size_t i = 0; i < drive.size(); ++i) {
        power[i] = eam_transfer_power(drive.samples[i], p);
        mean += power[i];
    }
    if (drive.size() > 0) mean /= static_cast<double>(drive.size());
    if (mean <= 0.0) throw std::invalid_argument("eam_modulate: zero mean optical power");
    const double cal = dbm_to_watts(tx_power_dbm) / mean;
    const double p_max = dbm_to_watts(p.max_power_dbm);

    for (size_t i = 0; i < drive.size(); ++i) {
        const double pw = power[i] * cal;
        const double amp = std::sqrt(pw);
        if (p.chirp_alpha != 0.0) {
            const double phi = 0.5 * p.chirp_alpha * std::log(power[i] / p_max);
            out.samples[i] = std::polar(amp, phi);
        } else {
            out.samples[i] = amp;
        }
    }
    return out;
}

ComplexWaveform apply_cd(const ComplexWaveform& field, const FiberParams& f) {
    ComplexWaveform out = field;
    if (out.samples.empty()) return out;
    const double coeff = 0.5 * f.beta2() * f.length_km * 1e3;
    if (coeff == 0.0) return out;
    fft::forward(out.samples);
    kernels::apply_quadratic_phase(out.samples.data(), out.samples.size(), coeff, out.sample_rate);
    fft::inverse(out.samples);
    return out;
}

ComplexWaveform voa_set_rop(const ComplexWaveform& field, double rop_dbm) {
    const double target = dbm_to_watts(rop_dbm);
    const double p = mean_power(field);
    if (p <= 0.0) throw std::invalid_argument("voa_set_rop: input has zero power");
    if (target > p * (1.0 + 1e-12))
        throw std::invalid_argument("voa_set_rop: requested ROP above input power (a VOA only attenuates)");
    const double s = std::sqrt(target / p);
    ComplexWaveform out = field;
    for (auto& v : out.samples) v *= s;
    return out;
}

double soa_steady_state_h(double power_w, const SoaParams& p) {
    const double h0 = std::log(std::pow(10.0, p.gain_db / 10.0));
    // f(h) = (h0-h)/tau - (e^h - 1) P/E_sat is strictly decreasing; bisect.
    double lo = std::min(0.0, h0), hi = std::max(0.0, h0);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = (h0 - mid) / p.carrier_lifetime_s -
                         (std::exp(mid) - 1.0) * power_w / p.saturation_energy_j;
        if (f > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

ComplexWaveform soa_amplify(const ComplexWaveform& field, const SoaParams& p) {
    ComplexWaveform out = field;
    const size_t n = out.samples.size();
    if (n == 0) return out;

    std::vector<double> power(n);
    kernels::magnitude_squared(out.samples.data(), power.data(), n);
    double pbar = 0.0;
    for (double v : power) pbar += v;
    pbar /= static_cast<double>(n);

    const double h0 = std::log(std::pow(10.0, p.gain_db / 10.0));
    const double tau = p.carrier_lifetime_s;
    const double esat = p.saturation_energy_j;
    const double dt = 1.0 / out.sample_rate;

    auto deriv = [&](double h, double pin) {
        return (h0 - h) / tau - (std::exp(h) - 1.0) * pin / esat;
    };

    double h = soa_steady_state_h(pbar, p);
    for (size_t i = 0; i < n; ++i) {
        out.samples[i] *= std::exp(0.5 * h);
        if (i + 1 == n) break;
        const double p0 = power[i];
        const double p1 = power[i + 1];
        const double pm = 0.5 * (p0 + p1);
        const double k1 = deriv(h, p0);
        const double k2 = deriv(h + 0.5 * dt * k1, pm);
        const double k3 = deriv(h + 0.5 * dt * k2, pm);
        const double k4 = deriv(h + dt * k3, p1);
        const double dh = dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!(std::abs(dh) <= 0.1))
            throw NumericError("soa_amplify: reservoir step exceeded 0.1; use a finer sample rate");
        h += dh;
    }
    return out;
}

ComplexWaveform optical_bandpass(const ComplexWaveform& field, double bandwidth_hz) {
    if (bandwidth_hz >= field.sample_rate) return field;
    ComplexWaveform out = field;
    const size_t n = out.samples.size();
    if (n == 0) return out;
    fft::forward(out.samples);
    const double df = out.sample_rate / static_cast<double>(n);
    for (size_t i = 0; i < n; ++i) {
        const double f = (i <= n / 2 ? static_cast<double>(i) : static_cast<double>(i) - static_cast<double>(n)) * df;
        if (std::abs(f) > 0.5 * bandwidth_hz) out.samples[i] = 0.0;
    }
    fft::inverse(out.samples);
    return out;
}

RealWaveform photodetect(const ComplexWaveform& field, const ReceiverParams& r, uint64_t seed) {
    if (!(r.electrical_bandwidth_hz <= 0.5 * r.adc_rate_hz))
        throw std::invalid_argument("photodetect: electrical bandwidth must be <= adc_rate/2");
    const size_t n = field.samples.size();
    RealWaveform cur;
    cur.sample_rate = field.sample_rate;
    cur.sps = field.sps;
    cur.samples.resize(n);

    if (r.square_law) {
        kernels::magnitude_squared(field.samples.data(), cur.samples.data(), n);
        for (auto& v : cur.samples) v *= r.responsivity;
    } else {
        for (size_t i = 0; i < n; ++i) cur.samples[i] = r.responsivity * field.samples[i].real();
    }

    if (r.noise_a_per_sqrt_hz > 0.0) {
        // Per-sample variance sigma^2 * fs / 2 => variance sigma^2 * B after
        // the brick-wall at B. Fixed 64k chunks with per-chunk child streams
        // keep the noise reproducible for any thread count.
        const double amp = r.noise_a_per_sqrt_hz * std::sqrt(0.5 * field.sample_rate);
        constexpr size_t kChunk = 65536;
        const size_t n_chunks = (n + kChunk - 1) / kChunk;
#pragma omp parallel for schedule(static)
        for (long c = 0; c < static_cast<long>(n_chunks); ++c) {
            SplitMix64 g(derive_seed(seed, "pd-noise", static_cast<uint64_t>(c)));
            const size_t lo = static_cast<size_t>(c) * kChunk;
            const size_t hi = std::min(n, lo + kChunk);
            for (size_t i = lo; i < hi; ++i) cur.samples[i] += amp * g.next_gaussian();
        }
    }

    // Electrical brick-wall low-pass at the receiver bandwidth.
    {
        std::vector<std::complex<double>> spec(cur.samples.begin(), cur.samples.end());
        fft::forward(spec);
        const double df = cur.sample_rate / static_cast<double>(n);
        for (size_t i = 0; i < n; ++i) {
            const double f = (i <= n / 2 ? static_cast<double>(i) : static_cast<double>(i) - static_cast<double>(n)) * df;
            if (std::abs(f) > r.electrical_bandwidth_hz) spec[i] = 0.0;
        }
        fft::inverse(spec);
        for (size_t i = 0; i < n; ++i) cur.samples[i] = spec[i].real();
    }

    return resample(cur, r.adc_rate_hz);
}

RealWaveform make_drive(const SymbolSequence& symbols, const ChannelConfig& cfg) {
    RealWaveform d = upsample_nrz(symbols, cfg.internal_sps, cfg.baud);
    // unit-power PAM4 peaks at 3/sqrt(5); map the swing onto +-vpp/2
    const double s = 0.5 * cfg.drive_vpp / (3.0 * kPam4Scale);
    for (auto& v : d.samples) v *= s;
    return d;
}

RealWaveform run_link(const RealWaveform& tx_drive, const ChannelConfig& cfg, double rop_dbm,
                      uint64_t seed) {
    const double internal_rate = cfg.baud * cfg.internal_sps;
    if (std::abs(tx_drive.sample_rate - internal_rate) > 1e-3)
        throw std::invalid_argument("run_link: drive not at the configured internal rate");

    ComplexWaveform field;
    if (cfg.eam_enabled) {
        field = eam_modulate(tx_drive, cfg.eam, cfg.tx_power_dbm);
    } else {
        field.sample_rate = tx_drive.sample_rate;
        field.sps = tx_drive.sps;
        field.samples.assign(tx_drive.samples.begin(), tx_drive.samples.end());
    }
    field = apply_cd(field, cfg.fiber);
    field = voa_set_rop(field, rop_dbm);
    if (cfg.soa_enabled) field = soa_amplify(field, cfg.soa);
    field = optical_bandpass(field, cfg.bandpass_hz);

    RealWaveform rx = photodetect(field, cfg.receiver, derive_seed(seed, "receiver", 0));

    const double delay_adc_samples =
        cfg.timing_offset_symbols * (cfg.receiver.adc_rate_hz / cfg.baud);
    RealWaveform y = resample(rx, 2.0 * cfg.baud, delay_adc_samples);
    y.sps = 2.0;
    return y;
}

} // namespace blindeq
