#ifndef BLINDEQ_SIGNAL_HPP
#define BLINDEQ_SIGNAL_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace blindeq {

inline constexpr double kBaud = 56e9;

/// PAM4 alphabet normalized to unit average power: {-3,-1,+1,+3} / sqrt(5).
inline constexpr double kPam4Scale = 0.44721359549995793928;
inline constexpr std::array<double, 4> kPam4Levels = {
    -3.0 * kPam4Scale, -1.0 * kPam4Scale, 1.0 * kPam4Scale, 3.0 * kPam4Scale};

/// Gray labels per level index, two bits each (first bit, second bit).
/// 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3.
inline constexpr std::array<std::array<uint8_t, 2>, 4> kPam4Gray = {
    {{0, 0}, {0, 1}, {1, 1}, {1, 0}}};

struct BitSequence {
    std::vector<uint8_t> bits;
    size_t size() const { return bits.size(); }
};

struct SymbolSequence {
    std::vector<double> values;
    size_t size() const { return values.size(); }
};

struct RealWaveform {
    std::vector<double> samples;
    double sample_rate = 0.0;
    double sps = 0.0; // samples per symbol relative to 56 GBd
    size_t size() const { return samples.size(); }
};

struct ComplexWaveform {
    std::vector<std::complex<double>> samples;
    double sample_rate = 0.0;
    double sps = 0.0;
    size_t size() const { return samples.size(); }
};

/// 2 * n_symbols equiprobable bits, deterministic for a fixed seed.
BitSequence generate_bits(size_t n_symbols, uint64_t seed);

/// Gray-map bit pairs onto unit-power PAM4 levels.
SymbolSequence map_pam4(const BitSequence& bits);

/// Inverse Gray mapping. Values must sit on the alphabet grid; callers
/// hard-decide first.
BitSequence demap_pam4(const SymbolSequence& symbols);

/// NRZ pulse shaping: sample-and-hold each symbol sps times.
RealWaveform upsample_nrz(const SymbolSequence& symbols, int sps, double baud = kBaud);

double mean_power(const RealWaveform& w);
double mean_power(const ComplexWaveform& w);

/// Scale so that mean(|x|^2) equals target exactly.
RealWaveform normalize_power(const RealWaveform& w, double target);
ComplexWaveform normalize_power(const ComplexWaveform& w, double target);

/// Nearest alphabet level; the tie at a decision boundary goes to the
/// lower level.
double hard_decide_value(double v);
int hard_decide_index(double v);
SymbolSequence hard_decide(const SymbolSequence& x);

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

} // namespace blindeq

#endif
