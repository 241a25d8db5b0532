#include "blindeq/signal.hpp"

#include <cmath>
#include <stdexcept>

#include "blindeq/rng.hpp"

namespace blindeq {

BitSequence generate_bits(size_t n_symbols, uint64_t seed) {
    if (n_symbols == 0) throw std::invalid_argument("generate_bits: n_symbols must be >= 1");
    BitSequence out;
    out.bits.resize(2 * n_symbols);
    SplitMix64 g(seed);
    size_t i = 0;
    // 64 bits per draw
    while (i + 64 <= out.bits.size()) {
        uint64_t w = g.next_u64();
        for (int b = 0; b < 64; ++b) out.bits[i++] = static_cast<uint8_t>((w >> b) & 1u);
    }
    if (i < out.bits.size()) {
        uint64_t w = g.next_u64();
        for (int b = 0; i < out.bits.size(); ++b) out.bits[i++] = static_cast<uint8_t>((w >> b) & 1u);
    }
    return out;
}

SymbolSequence map_pam4(const BitSequence& bits) {
    if (bits.size() % 2 != 0) throw std::invalid_argument("map_pam4: bit count must be even");
    SymbolSequence out;
    out.values.resize(bits.size() / 2);
    for (size_t k = 0; k < out.values.size(); ++k) {
        const uint8_t b0 = bits.bits[2 * k] & 1u;
        const uint8_t b1 = bits.bits[2 * k + 1] & 1u;
        int idx = 0;
        for (int l = 0; l < 4; ++l) {
            if (kPam4Gray[l][0] == b0 && kPam4Gray[l][1] == b1) {
                idx = l;
                break;
            }
        }
        out.values[k] = kPam4Levels[idx];
    }
    return out;
}

BitSequence demap_pam4(const SymbolSequence& symbols) {
    BitSequence out;
    out.bits.resize(2 * symbols.size());
    for (size_t k = 0; k < symbols.size(); ++k) {
        int idx = -1;
        for (int l = 0; l < 4; ++l) {
            if (std::abs(symbols.values[k] - kPam4Levels[l]) < 1e-9) {
                idx = l;
                break;
            }
        }
        if (idx < 0) throw std::invalid_argument("demap_pam4: value off the alphabet grid");
        out.bits[2 * k] = kPam4Gray[idx][0];
        out.bits[2 * k + 1] = kPam4Gray[idx][1];
    }
    return out;
}

RealWaveform upsample_nrz(const SymbolSequence& symbols, int sps, double baud) {
    if (sps < 1) throw std::invalid_argument("upsample_nrz: sps must be >= 1");
    RealWaveform w;
    w.sample_rate = baud * sps;
    w.sps = sps;
    w.samples.resize(symbols.size() * static_cast<size_t>(sps));
    for (size_t k = 0; k < symbols.size(); ++k)
        for (int j = 0; j < sps; ++j) w.samples[k * sps + j] = symbols.values[k];
    return w;
}

double mean_power(const RealWaveform& w) {
    double acc = 0.0;
    for (double v : w.samples) acc += v * v;
    return w.samples.empty() ? 0.0 : acc / static_cast<double>(w.samples.size());
}

double mean_power(const ComplexWaveform& w) {
    double acc = 0.0;
    for (const auto& v : w.samples) acc += std::norm(v);
    return w.samples.empty() ? 0.0 : acc / static_cast<double>(w.samples.size());
}

namespace {
template <class W> W normalize_impl(const W& w, double target) {
    const double p = mean_power(w);
    if (p <= 0.0) throw std::invalid_argument("normalize_power: input has zero energy");
    const double s = std::sqrt(target / p);
    W out = w;
    for (auto& v : out.samples) v *= s;
    return out;
}
} // namespace

RealWaveform normalize_power(const RealWaveform& w, double target) { return normalize_impl(w, target); }
ComplexWaveform normalize_power(const ComplexWaveform& w, double target) { return normalize_impl(w, target); }

int hard_decide_index(double v) {
    int best = 0;
    double bestd = std::abs(v - kPam4Levels[0]);
    for (int l = 1; l < 4; ++l) {
        const double d = std::abs(v - kPam4Levels[l]);
        if (d < bestd) { // strict: ties stay with the lower level
            bestd = d;
            best = l;
        }
    }
    return best;
}

double hard_decide_value(double v) { return kPam4Levels[hard_decide_index(v)]; }

SymbolSequence hard_decide(const SymbolSequence& x) {
    SymbolSequence out;
    out.values.resize(x.size());
    for (size_t k = 0; k < x.size(); ++k) out.values[k] = hard_decide_value(x.values[k]);
    return out;
}

} // namespace blindeq
