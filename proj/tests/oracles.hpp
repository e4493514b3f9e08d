#pragma once

// Brute-force reference computations for the test suite. Everything here is
// written from definitions (direct sums, O(n^2) scans) and stays independent
// of the library implementations it checks.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

namespace oracle {

// Direct O(n^2) DFT from the definition X[k] = sum_n x[n] e^{-2pi i k n / N}.
inline std::vector<std::complex<double>> naive_dft(const std::vector<std::complex<double>>& x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            const double a = -2.0 * std::numbers::pi * static_cast<double>(k) *
                             static_cast<double>(m) / static_cast<double>(n);
            acc += x[m] * std::complex<double>(std::cos(a), std::sin(a));
        }
        out[k] = acc;
    }
    return out;
}

// Index of the strongest DFT bin of one frame, computed naively.
inline std::size_t dft_argmax(const std::vector<std::complex<double>>& frame) {
    auto spec = naive_dft(frame);
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t k = 0; k < spec.size(); ++k) {
        if (std::abs(spec[k]) > best_mag) {
            best_mag = std::abs(spec[k]);
            best = k;
        }
    }
    return best;
}

// Signed frequency (cycles/sample) of the strongest bin, mapping bins above
// Nyquist to negative frequencies.
inline double dft_peak_freq(const std::vector<std::complex<double>>& frame) {
    const std::size_t n = frame.size();
    const std::size_t k = dft_argmax(frame);
    const double kk = static_cast<double>(k);
    return k <= n / 2 ? kk / static_cast<double>(n)
                      : (kk - static_cast<double>(n)) / static_cast<double>(n);
}

// Per-bin mean power over non-overlapping segments (rectangular window).
inline std::vector<double> segment_psd(const std::vector<std::complex<double>>& x,
                                       std::size_t seg_len) {
    std::vector<double> psd(seg_len, 0.0);
    std::size_t n_seg = 0;
    for (std::size_t start = 0; start + seg_len <= x.size(); start += seg_len) {
        std::vector<std::complex<double>> seg(x.begin() + static_cast<std::ptrdiff_t>(start),
                                              x.begin() + static_cast<std::ptrdiff_t>(start + seg_len));
        auto spec = naive_dft(seg);
        for (std::size_t k = 0; k < seg_len; ++k) psd[k] += std::norm(spec[k]);
        ++n_seg;
    }
    for (auto& v : psd) v /= std::max<std::size_t>(n_seg, 1);
    return psd;
}

inline double mean(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc / static_cast<double>(v.size());
}

inline double variance(const std::vector<double>& v) {
    const double m = mean(v);
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    return acc / static_cast<double>(v.size());
}

// Excess kurtosis of a complex sequence: E|x|^4 / (E|x|^2)^2 - 2, zero for
// circular complex Gaussian, -1 for constant modulus.
inline double complex_excess_kurtosis(const std::vector<std::complex<double>>& x) {
    double m2 = 0.0, m4 = 0.0;
    for (const auto& v : x) {
        const double p = std::norm(v);
        m2 += p;
        m4 += p * p;
    }
    m2 /= static_cast<double>(x.size());
    m4 /= static_cast<double>(x.size());
    return m4 / (m2 * m2) - 2.0;
}

// Exhaustive mean-distance-to-k-nearest-neighbors scores.
inline std::vector<double> knn_scores(const std::vector<std::vector<double>>& pts, int k) {
    const std::size_t n = pts.size();
    std::vector<double> scores(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> dist;
        dist.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            double d2 = 0.0;
            for (std::size_t d = 0; d < pts[i].size(); ++d) {
                const double diff = pts[i][d] - pts[j][d];
                d2 += diff * diff;
            }
            dist.push_back(std::sqrt(d2));
        }
        std::sort(dist.begin(), dist.end());
        double acc = 0.0;
        for (int m = 0; m < k; ++m) acc += dist[static_cast<std::size_t>(m)];
        scores[i] = acc / k;
    }
    return scores;
}

// Textbook LOF with reachability distances; neighborhoods include every point
// within the k-distance (ties included).
inline std::vector<double> lof_scores(const std::vector<std::vector<double>>& pts, int k) {
    const std::size_t n = pts.size();
    std::vector<std::vector<double>> dmat(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double d2 = 0.0;
            for (std::size_t d = 0; d < pts[i].size(); ++d) {
                const double diff = pts[i][d] - pts[j][d];
                d2 += diff * diff;
            }
            dmat[i][j] = std::sqrt(d2);
        }

    std::vector<double> kdist(n);
    std::vector<std::vector<std::size_t>> nbrs(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> ds;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) ds.push_back(dmat[i][j]);
        std::sort(ds.begin(), ds.end());
        kdist[i] = ds[static_cast<std::size_t>(k - 1)];
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && dmat[i][j] <= kdist[i]) nbrs[i].push_back(j);
    }

    std::vector<double> lrd(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j : nbrs[i]) acc += std::max(kdist[j], dmat[i][j]);
        const double mean_reach = acc / static_cast<double>(nbrs[i].size());
        lrd[i] = mean_reach > 0.0 ? 1.0 / mean_reach : std::numeric_limits<double>::infinity();
    }

    std::vector<double> lof(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j : nbrs[i]) acc += lrd[j];
        if (std::isinf(lrd[i]))
            lof[i] = 1.0;  // duplicate-heavy neighborhoods: density ratio is 1
        else
            lof[i] = acc / (static_cast<double>(nbrs[i].size()) * lrd[i]);
    }
    return lof;
}

}  // namespace oracle
