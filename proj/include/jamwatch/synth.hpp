#pragma once

// Synthetic IQ generation: GNSS-like background noise, parameterized jammer
// waveforms, and the multipath channel, composed into labeled snapshots.
//
// Everything is a pure function of (inputs, seed). Per-sample randomness is
// addressed by counter, so outputs are independent of evaluation order and
// safe to generate concurrently.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "jamwatch/iq.hpp"
#include "jamwatch/rng.hpp"

namespace jamwatch {

namespace detail {

inline std::uint64_t seed_key(std::uint64_t seed, std::string_view name) {
    return derive_key(mix64(seed), name);
}

inline std::size_t sample_count(double sample_rate_hz, double duration_s) {
    if (sample_rate_hz <= 0.0) throw std::invalid_argument("sample_rate_hz must be positive");
    if (duration_s <= 0.0) throw std::invalid_argument("duration_s must be positive");
    return static_cast<std::size_t>(std::llround(sample_rate_hz * duration_s));
}

// Scale a double-precision waveform to unit mean power, then narrow to
// complex64 storage.
inline IqSnapshot normalize_and_pack(std::vector<std::complex<double>> x, double rate, double dur) {
    double acc = 0.0;
    for (const auto& v : x) acc += std::norm(v);
    const double mean = acc / static_cast<double>(x.size());
    const double s = mean > 0.0 ? 1.0 / std::sqrt(mean) : 0.0;
    IqSnapshot out;
    out.sample_rate_hz = rate;
    out.duration_s = dur;
    out.samples.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.samples[i] = cfloat(static_cast<float>(x[i].real() * s),
                                static_cast<float>(x[i].imag() * s));
    }
    return out;
}

}  // namespace detail

// Complex white Gaussian noise at power 10^(snr_background_db/10). Stands in
// for the GNSS noise floor: real signals sit below it, so AWGN is the whole
// of the clean-class signature.
inline IqSnapshot gen_background(double sample_rate_hz, double duration_s,
                                 double snr_background_db, std::uint64_t seed) {
    const std::size_t n = detail::sample_count(sample_rate_hz, duration_s);
    const double amp = std::sqrt(db_to_pow(snr_background_db) / 2.0);
    const std::uint64_t key = detail::seed_key(seed, "background");

    IqSnapshot out;
    out.sample_rate_hz = sample_rate_hz;
    out.duration_s = duration_s;
    out.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [re, im] = normal_pair_at(key, i);
        out.samples[i] = cfloat(static_cast<float>(amp * re), static_cast<float>(amp * im));
    }
    return out;
}

// Jammer waveform synthesis. Output mean power is normalized to 1.0; the
// mixing stage applies the configured StN. Signal models:
//   Chirp      sawtooth linear sweep across the band, resetting each period
//   TwoChirp   two superposed sawtooth chirps with periods T and 2T/3
//   FreqHopper tone hopping uniformly over the band, phase-continuous
//   Modulated  BPSK carrier, symbol rate = bandwidth / 2
//   Multitone  n equally spaced tones with random phases
//   Pulsed     center tone gated by duty_cycle each sweep_period_s
//   NoiseBand  dense random-tone comb approximating band-limited noise
//   Tone       single complex exponential
inline IqSnapshot gen_jammer(const JammerProfile& profile, double sample_rate_hz,
                             double duration_s, std::uint64_t seed) {
    if (profile.kind == JammerKind::None)
        throw std::invalid_argument("gen_jammer: kind=None emits no waveform");
    validate(profile);
    const std::size_t n = detail::sample_count(sample_rate_hz, duration_s);
    const double bw = profile.bandwidth_hz();
    const double fc = profile.center_freq_hz;
    if (std::abs(fc) + bw / 2.0 > sample_rate_hz / 2.0)
        throw std::invalid_argument("gen_jammer: band exceeds Nyquist interval");

    const std::uint64_t key = detail::seed_key(seed, "jammer");
    const double dt = 1.0 / sample_rate_hz;
    constexpr double two_pi = 2.0 * std::numbers::pi;

    std::vector<std::complex<double>> x(n);

    auto sawtooth_chirp = [&](double period, double phase0) {
        // Instantaneous frequency fc - bw/2 + (bw/period) * tau, reset each
        // period; phase is its integral within the period.
        const double f0 = fc - bw / 2.0;
        const double slope = bw / period;
        return [=](double t) {
            const double tau = t - std::floor(t / period) * period;
            return phase0 + two_pi * (f0 * tau + 0.5 * slope * tau * tau);
        };
    };

    switch (profile.kind) {
        case JammerKind::Tone: {
            const double phase0 = two_pi * uniform_at(key, 0);
            for (std::size_t i = 0; i < n; ++i)
                x[i] = std::polar(1.0, phase0 + two_pi * fc * (i * dt));
            break;
        }
        case JammerKind::Chirp: {
            auto ph = sawtooth_chirp(profile.sweep_period_s, two_pi * uniform_at(key, 0));
            for (std::size_t i = 0; i < n; ++i) x[i] = std::polar(1.0, ph(i * dt));
            break;
        }
        case JammerKind::TwoChirp: {
            auto ph1 = sawtooth_chirp(profile.sweep_period_s, two_pi * uniform_at(key, 0));
            auto ph2 = sawtooth_chirp(profile.sweep_period_s * (2.0 / 3.0),
                                      two_pi * uniform_at(key, 1));
            for (std::size_t i = 0; i < n; ++i) {
                const double t = i * dt;
                x[i] = std::polar(1.0, ph1(t)) + std::polar(1.0, ph2(t));
            }
            break;
        }
        case JammerKind::FreqHopper: {
            const double hop_len = 1.0 / profile.hop_rate_hz;
            const auto n_hops =
                static_cast<std::size_t>(std::floor(duration_s / hop_len)) + 1;
            std::vector<double> freq(n_hops);
            for (std::size_t h = 0; h < n_hops; ++h)
                freq[h] = fc + bw * (uniform_at(key, h) - 0.5);
            // Phase offset at each hop start keeps the waveform continuous.
            std::vector<double> base(n_hops, 0.0);
            for (std::size_t h = 1; h < n_hops; ++h)
                base[h] = base[h - 1] + two_pi * freq[h - 1] * hop_len;
            for (std::size_t i = 0; i < n; ++i) {
                const double t = i * dt;
                auto h = static_cast<std::size_t>(std::floor(t / hop_len));
                h = std::min(h, n_hops - 1);
                x[i] = std::polar(1.0, base[h] + two_pi * freq[h] * (t - h * hop_len));
            }
            break;
        }
        case JammerKind::Modulated: {
            const double sym_rate = bw / 2.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double t = i * dt;
                const auto s = static_cast<std::uint64_t>(std::floor(t * sym_rate));
                const double bit = uniform_at(key, s) < 0.5 ? -1.0 : 1.0;
                x[i] = bit * std::polar(1.0, two_pi * fc * t);
            }
            break;
        }
        case JammerKind::Multitone: {
            const int k = profile.n_tones;
            std::vector<double> freq(k), phase(k);
            for (int j = 0; j < k; ++j) {
                freq[j] = fc - bw / 2.0 + (j + 0.5) * bw / k;
                phase[j] = two_pi * uniform_at(key, static_cast<std::uint64_t>(j));
            }
            for (std::size_t i = 0; i < n; ++i) {
                const double t = i * dt;
                std::complex<double> acc = 0.0;
                for (int j = 0; j < k; ++j) acc += std::polar(1.0, phase[j] + two_pi * freq[j] * t);
                x[i] = acc;
            }
            break;
        }
        case JammerKind::Pulsed: {
            const double period = profile.sweep_period_s;
            const double on = profile.duty_cycle * period;
            const double phase0 = two_pi * uniform_at(key, 0);
            for (std::size_t i = 0; i < n; ++i) {
                const double t = i * dt;
                const double tau = t - std::floor(t / period) * period;
                x[i] = tau < on ? std::polar(1.0, phase0 + two_pi * fc * t)
                                : std::complex<double>(0.0, 0.0);
            }
            break;
        }
        case JammerKind::NoiseBand: {
            // 128 random-frequency, random-phase tones; by the CLT the sum is
            // near-Gaussian and exactly confined to the band.
            constexpr int k = 128;
            std::vector<double> freq(k), phase(k);
            for (int j = 0; j < k; ++j) {
                freq[j] = fc - bw / 2.0 + bw * uniform_at(key, 2 * static_cast<std::uint64_t>(j));
                phase[j] = two_pi * uniform_at(key, 2 * static_cast<std::uint64_t>(j) + 1);
            }
            for (std::size_t i = 0; i < n; ++i) {
                const double t = i * dt;
                std::complex<double> acc = 0.0;
                for (int j = 0; j < k; ++j) acc += std::polar(1.0, phase[j] + two_pi * freq[j] * t);
                x[i] = acc;
            }
            break;
        }
        case JammerKind::None:
            break;  // unreachable, rejected above
    }

    return detail::normalize_and_pack(std::move(x), sample_rate_hz, duration_s);
}

// Tapped-delay-line channel: out = path_gain * sum_k gain_k * x[n - d_k],
// zero-padded to the input length. Deterministic; the seed parameter is part
// of the generation interface but the static channel draws nothing.
inline IqSnapshot apply_channel(const IqSnapshot& sig, const ChannelModel& ch,
                                std::uint64_t /*seed*/ = 0) {
    validate(sig);
    validate(ch);
    const std::size_t n = sig.samples.size();
    struct Tap {
        std::size_t delay;
        std::complex<double> gain;
    };
    std::vector<Tap> taps;
    taps.reserve(ch.multipath_taps.size());
    for (const auto& t : ch.multipath_taps) {
        if (t.delay_s >= sig.duration_s)
            throw std::invalid_argument("apply_channel: tap delay exceeds snapshot duration");
        taps.push_back({static_cast<std::size_t>(std::llround(t.delay_s * sig.sample_rate_hz)),
                        t.gain});
    }

    IqSnapshot out;
    out.sample_rate_hz = sig.sample_rate_hz;
    out.duration_s = sig.duration_s;
    out.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::complex<double> acc = 0.0;
        for (const auto& t : taps) {
            if (i >= t.delay) {
                const auto& s = sig.samples[i - t.delay];
                acc += t.gain * std::complex<double>(s.real(), s.imag());
            }
        }
        acc *= ch.path_gain;
        out.samples[i] = cfloat(static_cast<float>(acc.real()), static_cast<float>(acc.imag()));
    }
    return out;
}

// Generation provenance for one snapshot; enough to regenerate it.
struct SynthMeta {
    Scenario scenario;
    double sample_rate_hz = 0.0;
    double duration_s = 0.0;
    std::uint64_t seed = 0;
};

struct SynthResult {
    IqSnapshot iq;
    int label = 0;
    SynthMeta meta;
};

// Background plus channel-filtered jammer mixed at the profile's StN ratio.
// The StN references the background power; the channel's path_gain and taps
// further shape the received jammer on top of it.
inline SynthResult synthesize(const Scenario& scenario, double sample_rate_hz,
                              double duration_s, std::uint64_t seed) {
    validate(scenario);
    IqSnapshot bg = gen_background(sample_rate_hz, duration_s,
                                   scenario.channel.snr_background_db, seed);

    SynthResult res;
    res.label = scenario.class_label;
    res.meta = {scenario, sample_rate_hz, duration_s, seed};

    if (scenario.profile.kind == JammerKind::None) {
        res.iq = std::move(bg);
        return res;
    }

    const IqSnapshot jam = gen_jammer(scenario.profile, sample_rate_hz, duration_s,
                                      detail::seed_key(seed, "mix"));
    const IqSnapshot shaped = apply_channel(jam, scenario.channel, seed);
    const double amp = std::sqrt(db_to_pow(scenario.channel.snr_background_db) *
                                 db_to_pow(scenario.profile.stn_db));

    res.iq = std::move(bg);
    for (std::size_t i = 0; i < res.iq.samples.size(); ++i) {
        const auto& j = shaped.samples[i];
        res.iq.samples[i] += cfloat(static_cast<float>(amp * j.real()),
                                    static_cast<float>(amp * j.imag()));
    }
    return res;
}

}  // namespace jamwatch
