#ifndef BLINDEQ_CHANNEL_HPP
#define BLINDEQ_CHANNEL_HPP

#include <cstdint>

#include "blindeq/signal.hpp"

namespace blindeq {

struct FiberParams {
    double dispersion_ps_nm_km = 15.5;
    double length_km = 2.2;
    double wavelength_nm = 1540.0;
    /// Group-velocity dispersion beta2 = -D * lambda^2 / (2 pi c), in s^2/m.
    double beta2() const;
};

struct EamParams {
    double v_scale = 1.0;         // volts; width of the tanh transfer
    double bias = 0.0;            // volts
    double extinction_db = 13.0;  // static extinction ratio P_max/P_min
    double max_power_dbm = 6.9;   // transfer ceiling before calibration
    double chirp_alpha = 0.0;     // phase = (alpha/2) * ln(P/P_max); 0 = chirp-free
};

struct SoaParams {
    double gain_db = 17.0;              // small-signal gain G0
    double saturation_energy_j = 6.9e-12;
    double carrier_lifetime_s = 200e-12;
};

struct ReceiverParams {
    double responsivity = 0.7;            // A/W
    double electrical_bandwidth_hz = 33e9;
    double noise_a_per_sqrt_hz = 0.0;     // white current-noise density
    double adc_rate_hz = 80e9;
    bool square_law = true;               // false: linear probe (test hook)
};

struct ChannelConfig {
    double baud = kBaud;
    int internal_sps = 8; // optics simulated at baud * internal_sps
    bool eam_enabled = true;
    double drive_vpp = 2.0;
    double tx_power_dbm = 3.9;
    EamParams eam;
    FiberParams fiber;
    bool soa_enabled = true;
    SoaParams soa;
    double bandpass_hz = 379e9; // 3 nm at 1540 nm
    ReceiverParams receiver;
    double timing_offset_symbols = 0.0;
};

/// Static electro-optic power transfer in watts, before extinction flooring
/// and mean-power calibration.
double eam_transfer_power(double drive_v, const EamParams& p);

/// Saturating EAM: P(v) = P_max/2 * (1 + tanh((v - bias)/v_scale)), floored
/// at P_max / extinction ratio, then rescaled so the mean optical power is
/// tx_power_dbm. Output is the complex field sqrt(P)*exp(j*phi_chirp).
ComplexWaveform eam_modulate(const RealWaveform& drive, const EamParams& p, double tx_power_dbm);

/// All-pass chromatic dispersion H(w) = exp(j * beta2/2 * w^2 * L). Energy
/// preserving; composes additively in length.
ComplexWaveform apply_cd(const ComplexWaveform& field, const FiberParams& f);

/// Attenuate to an exact received optical power. A VOA only attenuates:
/// requesting more power than the input carries is an error.
ComplexWaveform voa_set_rop(const ComplexWaveform& field, double rop_dbm);

/// Saturable-gain reservoir model: dh/dt = (h0 - h)/tau_c - (e^h - 1) P(t)/E_sat,
/// E_out = E_in e^{h/2}; classic explicit 4th-order stepping at the sample
/// rate, h(0) at the steady state for the mean input power. Throws
/// NumericError when a step moves h by more than 0.1 (sampling too coarse).
ComplexWaveform soa_amplify(const ComplexWaveform& field, const SoaParams& p);

/// Scalar steady-state gain ln solving (h0-h)/tau_c = (e^h-1) P/E_sat.
double soa_steady_state_h(double power_w, const SoaParams& p);

/// Ideal brick-wall low-pass at +-bandwidth/2 on the baseband field.
ComplexWaveform optical_bandpass(const ComplexWaveform& field, double bandwidth_hz);

/// Square-law detection, additive white Gaussian current noise shaped by a
/// brick-wall electrical low-pass, then resampling to the ADC rate. The
/// injected per-sample noise variance is sigma^2 * fs / 2 so the filtered
/// output variance is sigma^2 * B (one-sided density convention).
RealWaveform photodetect(const ComplexWaveform& field, const ReceiverParams& r, uint64_t seed);

/// Drive waveform for the modulator: NRZ upsampling to the internal rate and
/// scaling to the configured peak-to-peak voltage.
RealWaveform make_drive(const SymbolSequence& symbols, const ChannelConfig& cfg);

/// Full upstream path: EAM -> fiber CD -> VOA (sets ROP) -> SOA -> optical
/// band-pass -> photodiode -> resample to exactly 2 samples/symbol.
RealWaveform run_link(const RealWaveform& tx_drive, const ChannelConfig& cfg, double rop_dbm,
                      uint64_t seed);

} // namespace blindeq

#endif
