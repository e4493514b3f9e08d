#pragma once

// IQ snapshot -> magnitude spectrogram conversion, byte-range quantization,
// and bilinear resizing. This is the classifier's input representation.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "jamwatch/fft.hpp"
#include "jamwatch/iq.hpp"

namespace jamwatch {

enum class ValueDomain { Raw, Byte255, Unit };

enum class Window { Hann, Rect };

struct StftConfig {
    std::size_t fft_size = 128;  // power of two, >= 16
    std::size_t hop = 32;        // <= fft_size
    Window window = Window::Hann;
};

inline void validate(const StftConfig& cfg) {
    if (!is_pow2(cfg.fft_size) || cfg.fft_size < 16)
        throw std::invalid_argument("StftConfig: fft_size must be a power of two >= 16");
    if (cfg.hop == 0 || cfg.hop > cfg.fft_size)
        throw std::invalid_argument("StftConfig: hop must be in [1, fft_size]");
}

// Time-frequency magnitude grid. Rows are DC-centered frequency bins, columns
// are frame times. Classifier-bound grids are at least 8x8.
struct Spectrogram {
    Eigen::MatrixXd grid;                // h x w
    std::vector<double> freq_axis_hz;    // length h
    std::vector<double> time_axis_s;     // length w
    ValueDomain value_domain = ValueDomain::Raw;

    Eigen::Index h() const { return grid.rows(); }
    Eigen::Index w() const { return grid.cols(); }
};

inline void validate(const Spectrogram& s) {
    if (!s.grid.allFinite()) throw std::invalid_argument("Spectrogram: grid has non-finite entries");
    if (s.freq_axis_hz.size() != static_cast<std::size_t>(s.grid.rows()) ||
        s.time_axis_s.size() != static_cast<std::size_t>(s.grid.cols()))
        throw std::invalid_argument("Spectrogram: axis lengths do not match grid");
    if (s.value_domain == ValueDomain::Byte255 &&
        (s.grid.minCoeff() < 0.0 || s.grid.maxCoeff() > 255.0))
        throw std::invalid_argument("Spectrogram: Byte255 entries outside [0, 255]");
    if (s.value_domain == ValueDomain::Unit &&
        (s.grid.minCoeff() < 0.0 || s.grid.maxCoeff() > 1.0))
        throw std::invalid_argument("Spectrogram: Unit entries outside [0, 1]");
}

// grid[f][t] = |FFT(window . frame_t)|[f], two-sided and DC-centered;
// w = floor((n - fft_size) / hop) + 1 frames.
inline Spectrogram stft_magnitude(const IqSnapshot& iq, const StftConfig& cfg) {
    validate(cfg);
    const std::size_t n = iq.samples.size();
    const std::size_t fft_size = cfg.fft_size;
    if (n < fft_size)
        throw std::invalid_argument("stft_magnitude: snapshot shorter than one frame");

    const std::size_t w = (n - fft_size) / cfg.hop + 1;
    std::vector<double> win(fft_size, 1.0);
    if (cfg.window == Window::Hann) {
        for (std::size_t i = 0; i < fft_size; ++i)
            win[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                          static_cast<double>(fft_size));
    }

    Spectrogram out;
    out.grid.resize(static_cast<Eigen::Index>(fft_size), static_cast<Eigen::Index>(w));
    std::vector<std::complex<double>> frame(fft_size);
    const std::size_t half = fft_size / 2;
    for (std::size_t t = 0; t < w; ++t) {
        const std::size_t start = t * cfg.hop;
        for (std::size_t i = 0; i < fft_size; ++i) {
            const auto& s = iq.samples[start + i];
            frame[i] = win[i] * std::complex<double>(s.real(), s.imag());
        }
        fft_inplace(frame);
        // fftshift: row 0 is -fs/2, row fft_size/2 is DC.
        for (std::size_t f = 0; f < fft_size; ++f)
            out.grid(static_cast<Eigen::Index>((f + half) % fft_size),
                     static_cast<Eigen::Index>(t)) = std::abs(frame[f]);
    }

    out.freq_axis_hz.resize(fft_size);
    for (std::size_t f = 0; f < fft_size; ++f)
        out.freq_axis_hz[f] = (static_cast<double>(f) - static_cast<double>(half)) *
                              iq.sample_rate_hz / static_cast<double>(fft_size);
    out.time_axis_s.resize(w);
    for (std::size_t t = 0; t < w; ++t)
        out.time_axis_s[t] = (static_cast<double>(t * cfg.hop) + static_cast<double>(half)) /
                             iq.sample_rate_hz;
    out.value_domain = ValueDomain::Raw;
    return out;
}

// Log-magnitude mapped affinely so the (p1, p99) percentiles land on (0, 255),
// clamped. Percentiles rather than min/max so a single hot bin cannot crush
// the dynamic range. A constant grid maps to all zeros.
inline Spectrogram quantize_255(const Spectrogram& spec) {
    if (spec.value_domain != ValueDomain::Raw)
        throw std::invalid_argument("quantize_255: expects a Raw-domain spectrogram");

    constexpr double kFloor = 1e-12;
    Eigen::MatrixXd logmag =
        spec.grid.unaryExpr([](double v) { return 20.0 * std::log10(std::max(v, kFloor)); });

    std::vector<double> vals(logmag.data(), logmag.data() + logmag.size());
    std::sort(vals.begin(), vals.end());
    auto percentile = [&](double q) {
        const double pos = q * static_cast<double>(vals.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const auto hi = std::min(lo + 1, vals.size() - 1);
        const double frac = pos - static_cast<double>(lo);
        return vals[lo] * (1.0 - frac) + vals[hi] * frac;
    };
    const double p1 = percentile(0.01);
    const double p99 = percentile(0.99);

    Spectrogram out;
    out.freq_axis_hz = spec.freq_axis_hz;
    out.time_axis_s = spec.time_axis_s;
    out.value_domain = ValueDomain::Byte255;
    if (p99 - p1 < 1e-12) {
        out.grid = Eigen::MatrixXd::Zero(spec.grid.rows(), spec.grid.cols());
        return out;
    }
    const double scale = 255.0 / (p99 - p1);
    out.grid = logmag.unaryExpr(
        [&](double v) { return std::clamp((v - p1) * scale, 0.0, 255.0); });
    return out;
}

namespace detail {

// Bilinear interpolation with corner alignment; exact identity when the
// shape is unchanged.
inline Eigen::MatrixXd bilinear_resize(const Eigen::MatrixXd& src, Eigen::Index h2,
                                       Eigen::Index w2) {
    const Eigen::Index h = src.rows(), w = src.cols();
    Eigen::MatrixXd dst(h2, w2);
    const double ry = h2 > 1 ? static_cast<double>(h - 1) / static_cast<double>(h2 - 1) : 0.0;
    const double rx = w2 > 1 ? static_cast<double>(w - 1) / static_cast<double>(w2 - 1) : 0.0;
    for (Eigen::Index i = 0; i < h2; ++i) {
        const double sy = static_cast<double>(i) * ry;
        const auto y0 = static_cast<Eigen::Index>(std::floor(sy));
        const Eigen::Index y1 = std::min(y0 + 1, h - 1);
        const double fy = sy - static_cast<double>(y0);
        for (Eigen::Index j = 0; j < w2; ++j) {
            const double sx = static_cast<double>(j) * rx;
            const auto x0 = static_cast<Eigen::Index>(std::floor(sx));
            const Eigen::Index x1 = std::min(x0 + 1, w - 1);
            const double fx = sx - static_cast<double>(x0);
            dst(i, j) = src(y0, x0) * (1.0 - fy) * (1.0 - fx) +
                        src(y0, x1) * (1.0 - fy) * fx +
                        src(y1, x0) * fy * (1.0 - fx) +
                        src(y1, x1) * fy * fx;
        }
    }
    return dst;
}

}  // namespace detail

inline Spectrogram resize(const Spectrogram& spec, Eigen::Index h2, Eigen::Index w2) {
    if (h2 < 8 || w2 < 8) throw std::invalid_argument("resize: target must be at least 8x8");
    if (h2 > 4 * spec.grid.rows() || w2 > 4 * spec.grid.cols())
        throw std::invalid_argument("resize: upsizing beyond 4x is not supported");

    Spectrogram out;
    out.grid = detail::bilinear_resize(spec.grid, h2, w2);
    out.value_domain = spec.value_domain;
    // Axes are resampled with the same corner-aligned mapping.
    auto resample_axis = [](const std::vector<double>& axis, Eigen::Index m2) {
        std::vector<double> out_axis(static_cast<std::size_t>(m2));
        if (axis.empty()) return out_axis;
        const double r = m2 > 1 ? static_cast<double>(axis.size() - 1) / static_cast<double>(m2 - 1) : 0.0;
        for (Eigen::Index i = 0; i < m2; ++i) {
            const double s = static_cast<double>(i) * r;
            const auto lo = static_cast<std::size_t>(std::floor(s));
            const std::size_t hi = std::min(lo + 1, axis.size() - 1);
            const double f = s - static_cast<double>(lo);
            out_axis[static_cast<std::size_t>(i)] = axis[lo] * (1.0 - f) + axis[hi] * f;
        }
        return out_axis;
    };
    out.freq_axis_hz = resample_axis(spec.freq_axis_hz, h2);
    out.time_axis_s = resample_axis(spec.time_axis_s, w2);
    return out;
}

// Row-major flattening used by the dataset container and the learner.
inline std::vector<float> to_float_rowmajor(const Spectrogram& spec) {
    std::vector<float> out(static_cast<std::size_t>(spec.grid.size()));
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < spec.grid.rows(); ++i)
        for (Eigen::Index j = 0; j < spec.grid.cols(); ++j)
            out[k++] = static_cast<float>(spec.grid(i, j));
    return out;
}

}  // namespace jamwatch
