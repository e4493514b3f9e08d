#pragma once

// Core RF domain types: IQ snapshots, jammer waveform profiles, the
// multipath channel model, and labeled generation scenarios.

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jamwatch {

using cfloat = std::complex<float>;

inline double db_to_pow(double db) { return std::pow(10.0, db / 10.0); }
inline double pow_to_db(double p) { return 10.0 * std::log10(p); }

// A raw complex-baseband capture. Sample values are unitless amplitudes.
struct IqSnapshot {
    std::vector<cfloat> samples;
    double sample_rate_hz = 0.0;
    double duration_s = 0.0;

    std::size_t size() const { return samples.size(); }
};

inline void validate(const IqSnapshot& iq) {
    if (iq.sample_rate_hz <= 0.0) throw std::invalid_argument("IqSnapshot: sample_rate_hz must be positive");
    if (iq.duration_s <= 0.0) throw std::invalid_argument("IqSnapshot: duration_s must be positive");
    const auto expect = static_cast<std::size_t>(std::llround(iq.sample_rate_hz * iq.duration_s));
    if (iq.samples.size() != expect)
        throw std::invalid_argument("IqSnapshot: sample count does not match rate * duration");
}

// Mean sample power |x|^2, the basic energy bookkeeping quantity.
inline double mean_power(const IqSnapshot& iq) {
    if (iq.samples.empty()) return 0.0;
    double acc = 0.0;
    for (const auto& s : iq.samples) acc += static_cast<double>(std::norm(s));
    return acc / static_cast<double>(iq.samples.size());
}

enum class JammerKind : std::uint8_t {
    None = 0,
    Chirp,
    TwoChirp,
    FreqHopper,
    Modulated,
    Multitone,
    Pulsed,
    NoiseBand,
    Tone,
};

constexpr int kNumClasses = 9;

// Class schema: label 0 is the no-interference class, labels 1..8 the
// interference kinds, in enum order. Total and invertible by construction.
constexpr int class_label(JammerKind kind) { return static_cast<int>(kind); }

inline JammerKind kind_for_label(int label) {
    if (label < 0 || label >= kNumClasses)
        throw std::invalid_argument("kind_for_label: label out of range 0..8");
    return static_cast<JammerKind>(label);
}

inline const char* kind_name(JammerKind kind) {
    switch (kind) {
        case JammerKind::None:       return "none";
        case JammerKind::Chirp:      return "chirp";
        case JammerKind::TwoChirp:   return "two_chirp";
        case JammerKind::FreqHopper: return "freq_hopper";
        case JammerKind::Modulated:  return "modulated";
        case JammerKind::Multitone:  return "multitone";
        case JammerKind::Pulsed:     return "pulsed";
        case JammerKind::NoiseBand:  return "noise_band";
        case JammerKind::Tone:       return "tone";
    }
    return "unknown";
}

inline JammerKind kind_from_name(const std::string& name) {
    for (int l = 0; l < kNumClasses; ++l) {
        auto k = static_cast<JammerKind>(l);
        if (name == kind_name(k)) return k;
    }
    throw std::invalid_argument("kind_from_name: unknown jammer kind '" + name + "'");
}

inline std::vector<std::string> class_names() {
    std::vector<std::string> names;
    names.reserve(kNumClasses);
    for (int l = 0; l < kNumClasses; ++l) names.emplace_back(kind_name(static_cast<JammerKind>(l)));
    return names;
}

// Jammer waveform parameters. `bandwidth` is in config units spanning
// [0.1, 60]; `bw_unit_hz` maps one unit to Hz so the same suite definition
// scales to any sample rate.
struct JammerProfile {
    JammerKind kind = JammerKind::None;
    double center_freq_hz = 0.0;   // baseband offset
    double bandwidth = 10.0;       // config units in [0.1, 60]
    double bw_unit_hz = 5000.0;    // Hz per config unit
    double stn_db = 0.0;           // jammer-over-background ratio, [-10, 10]
    double sweep_period_s = 4e-3;  // chirp sweep / pulse repetition period
    double duty_cycle = 0.5;       // pulsed gating, (0, 1]
    int n_tones = 5;               // multitone
    double hop_rate_hz = 1000.0;   // frequency hopper

    double bandwidth_hz() const { return bandwidth * bw_unit_hz; }
};

inline void validate(const JammerProfile& p) {
    if (p.bandwidth < 0.1 || p.bandwidth > 60.0)
        throw std::invalid_argument("JammerProfile: bandwidth outside [0.1, 60] config units");
    if (p.bw_unit_hz <= 0.0) throw std::invalid_argument("JammerProfile: bw_unit_hz must be positive");
    if (p.stn_db < -10.0 || p.stn_db > 10.0)
        throw std::invalid_argument("JammerProfile: stn_db outside [-10, 10]");
    if (p.sweep_period_s <= 0.0) throw std::invalid_argument("JammerProfile: sweep_period_s must be positive");
    if (p.duty_cycle <= 0.0 || p.duty_cycle > 1.0)
        throw std::invalid_argument("JammerProfile: duty_cycle outside (0, 1]");
    if (p.n_tones < 1) throw std::invalid_argument("JammerProfile: n_tones must be positive");
    if (p.hop_rate_hz <= 0.0) throw std::invalid_argument("JammerProfile: hop_rate_hz must be positive");
}

struct ChannelTap {
    double delay_s = 0.0;
    std::complex<double> gain{1.0, 0.0};
};

// Tapped-delay-line multipath plus a scalar distance-attenuation proxy.
struct ChannelModel {
    double snr_background_db = 0.0;
    std::vector<ChannelTap> multipath_taps{{0.0, {1.0, 0.0}}};
    double path_gain = 1.0;  // (0, 1]
};

inline void validate(const ChannelModel& ch) {
    if (ch.multipath_taps.empty()) throw std::invalid_argument("ChannelModel: needs at least one tap");
    if (ch.multipath_taps.front().delay_s != 0.0)
        throw std::invalid_argument("ChannelModel: first tap delay must be 0");
    for (std::size_t i = 1; i < ch.multipath_taps.size(); ++i) {
        if (ch.multipath_taps[i].delay_s <= ch.multipath_taps[i - 1].delay_s)
            throw std::invalid_argument("ChannelModel: tap delays must be strictly increasing");
    }
    if (!(ch.path_gain > 0.0) || ch.path_gain > 1.0)
        throw std::invalid_argument("ChannelModel: path_gain outside (0, 1]");
}

// Multipath presets with max excess delay 2 us and geometrically decaying
// gains; path_gain drops as the scenario gets more pronounced.
enum class MultipathPreset { Clear, Minor, Moderate, Pronounced };

inline ChannelModel multipath_preset(MultipathPreset p, double snr_background_db = 0.0) {
    ChannelModel ch;
    ch.snr_background_db = snr_background_db;
    switch (p) {
        case MultipathPreset::Clear:
            break;
        case MultipathPreset::Minor:
            ch.multipath_taps = {{0.0, {1.0, 0.0}},
                                 {0.8e-6, std::polar(0.30, 0.7)}};
            ch.path_gain = 1.0;
            break;
        case MultipathPreset::Moderate:
            ch.multipath_taps = {{0.0, {1.0, 0.0}},
                                 {0.8e-6, std::polar(0.45, 0.7)},
                                 {1.5e-6, std::polar(0.20, 2.1)}};
            ch.path_gain = 0.8;
            break;
        case MultipathPreset::Pronounced:
            ch.multipath_taps = {{0.0, {1.0, 0.0}},
                                 {0.7e-6, std::polar(0.60, 0.7)},
                                 {1.4e-6, std::polar(0.36, 2.1)},
                                 {2.0e-6, std::polar(0.20, 4.0)}};
            ch.path_gain = 0.6;
            break;
    }
    return ch;
}

inline const char* preset_name(MultipathPreset p) {
    switch (p) {
        case MultipathPreset::Clear:      return "clear";
        case MultipathPreset::Minor:      return "minor";
        case MultipathPreset::Moderate:   return "moderate";
        case MultipathPreset::Pronounced: return "pronounced";
    }
    return "unknown";
}

inline MultipathPreset preset_from_name(const std::string& name) {
    for (auto p : {MultipathPreset::Clear, MultipathPreset::Minor, MultipathPreset::Moderate,
                   MultipathPreset::Pronounced}) {
        if (name == preset_name(p)) return p;
    }
    throw std::invalid_argument("preset_from_name: unknown multipath preset '" + name + "'");
}

// One labeled generation unit: a jammer profile through a channel, tagged
// with its class and originating domain.
struct Scenario {
    JammerProfile profile;
    ChannelModel channel;
    int class_label = 0;
    std::string domain_tag = "synthA";
};

inline void validate(const Scenario& sc) {
    validate(sc.channel);
    if (sc.class_label < 0 || sc.class_label >= kNumClasses)
        throw std::invalid_argument("Scenario: class_label out of range 0..8");
    if (sc.class_label != class_label(sc.profile.kind))
        throw std::invalid_argument("Scenario: class_label inconsistent with profile.kind");
    if (sc.profile.kind != JammerKind::None) validate(sc.profile);
}

}  // namespace jamwatch
