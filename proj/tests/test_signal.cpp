#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "blindeq/rng.hpp"
#include "blindeq/signal.hpp"

using namespace blindeq;

TEST_CASE("generate_bits is deterministic and balanced") {
    const auto a = generate_bits(4, 7);
    const auto b = generate_bits(4, 7);
    CHECK(a.bits == b.bits);
    CHECK(a.size() == 8);

    const auto big = generate_bits(1u << 19, 1);
    double mean = 0.0;
    for (auto v : big.bits) mean += v;
    mean /= static_cast<double>(big.size());
    CHECK(std::abs(mean - 0.5) < 0.01);

    CHECK_THROWS_AS(generate_bits(0, 1), std::invalid_argument);
}

TEST_CASE("map_pam4 follows the Gray table and unit power") {
    BitSequence b00{{0, 0}};
    BitSequence b10{{1, 0}};
    CHECK(map_pam4(b00).values[0] == doctest::Approx(-3.0 / std::sqrt(5.0)).epsilon(1e-12));
    CHECK(map_pam4(b10).values[0] == doctest::Approx(3.0 / std::sqrt(5.0)).epsilon(1e-12));

    // Monte-Carlo mean power of mapped uniform bits
    const auto bits = generate_bits(1000000, 42);
    const auto sym = map_pam4(bits);
    double p = 0.0;
    for (double v : sym.values) p += v * v;
    p /= static_cast<double>(sym.size());
    CHECK(std::abs(p - 1.0) < 0.005);

    BitSequence odd{{1}};
    CHECK_THROWS_AS(map_pam4(odd), std::invalid_argument);
}

TEST_CASE("demap inverts map and rejects off-grid values") {
    const auto bits = generate_bits(1000, 3);
    const auto sym = map_pam4(bits);
    const auto back = demap_pam4(sym);
    CHECK(back.bits == bits.bits);

    SymbolSequence low{{kPam4Levels[0]}};
    const auto d = demap_pam4(low);
    CHECK(d.bits[0] == 0);
    CHECK(d.bits[1] == 0);

    SymbolSequence off{{0.1234}};
    CHECK_THROWS_AS(demap_pam4(off), std::invalid_argument);
}

TEST_CASE("Gray property: adjacent levels differ in exactly one bit") {
    for (int l = 0; l + 1 < 4; ++l) {
        const int diff = (kPam4Gray[l][0] != kPam4Gray[l + 1][0]) +
                         (kPam4Gray[l][1] != kPam4Gray[l + 1][1]);
        CHECK(diff == 1);
    }
}

TEST_CASE("upsample_nrz holds each symbol and preserves power") {
    SymbolSequence s{{1.0, -2.0}};
    const auto w = upsample_nrz(s, 2);
    CHECK(w.samples == std::vector<double>{1.0, 1.0, -2.0, -2.0});
    CHECK(w.sample_rate == doctest::Approx(2.0 * kBaud));

    const auto id = upsample_nrz(s, 1);
    CHECK(id.samples == s.values);

    const auto bits = generate_bits(4096, 9);
    const auto sym = map_pam4(bits);
    const auto up = upsample_nrz(sym, 4);
    double p_s = 0.0, p_w = 0.0;
    for (double v : sym.values) p_s += v * v;
    for (double v : up.samples) p_w += v * v;
    CHECK(p_w / up.size() == doctest::Approx(p_s / sym.size()).epsilon(1e-12));

    // subsampling at offset 0 recovers the symbols
    for (size_t k = 0; k < sym.size(); ++k) CHECK(up.samples[4 * k] == sym.values[k]);
}

TEST_CASE("normalize_power hits the target exactly") {
    const auto bits = generate_bits(4096, 11);
    auto w = upsample_nrz(map_pam4(bits), 2);
    w = normalize_power(w, 1.0); // exactly unit power now
    const auto n1 = normalize_power(w, 1.0);
    for (size_t i = 0; i < w.size(); ++i)
        CHECK(n1.samples[i] == doctest::Approx(w.samples[i]).epsilon(1e-9));

    auto scaled = w;
    for (auto& v : scaled.samples) v *= 3.0;
    const auto n2 = normalize_power(scaled, mean_power(w));
    for (size_t i = 0; i < w.size(); ++i)
        CHECK(n2.samples[i] == doctest::Approx(w.samples[i]).epsilon(1e-12));

    const auto n3 = normalize_power(w, 2.5e-3);
    CHECK(std::abs(mean_power(n3) - 2.5e-3) < 1e-15);

    RealWaveform zero{{0.0, 0.0, 0.0}, 1.0, 1.0};
    CHECK_THROWS_AS(normalize_power(zero, 1.0), std::invalid_argument);
}

TEST_CASE("hard decision: nearest level, ties toward the lower level") {
    CHECK(hard_decide_value(0.0) == kPam4Levels[1]); // midpoint of +-1/sqrt5
    CHECK(hard_decide_value(1.4 / std::sqrt(5.0)) == kPam4Levels[2]);

    // brute-force argmin oracle over a dense grid
    SplitMix64 g(123);
    for (int i = 0; i < 100000; ++i) {
        const double v = -2.0 + 4.0 * g.next_double();
        int best = 0;
        for (int l = 1; l < 4; ++l)
            if (std::abs(v - kPam4Levels[l]) < std::abs(v - kPam4Levels[best])) best = l;
        CHECK(hard_decide_value(v) == kPam4Levels[best]);
    }
}
