#ifndef BLINDEQ_RESAMPLE_HPP
#define BLINDEQ_RESAMPLE_HPP

#include <cstdint>

#include "blindeq/signal.hpp"

namespace blindeq {

struct Fraction {
    long long num = 1;
    long long den = 1;
};

/// Reduce a rate ratio to an exact small fraction (continued-fraction
/// expansion, denominator capped at 10^6). Throws ConfigError if the ratio
/// is not representable to 1e-12 relative.
Fraction rate_fraction(double from_rate, double to_rate);

/// Band-limited rational resampling: frequency-domain zero-pad/truncate on
/// overlap-save blocks (input block q*2^m, output block p*2^m, 50% overlap,
/// central half kept). Record edges are reflection-padded; the transient is
/// confined to roughly half a block at each end. `delay_input_samples`
/// applies an additional fractional delay as a spectral linear phase.
ComplexWaveform resample(const ComplexWaveform& w, double target_rate,
                         double delay_input_samples = 0.0);
RealWaveform resample(const RealWaveform& w, double target_rate,
                      double delay_input_samples = 0.0);

} // namespace blindeq

#endif
