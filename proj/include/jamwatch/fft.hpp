#pragma once

// Iterative radix-2 complex FFT. Sizes are powers of two throughout the
// pipeline (STFT frame sizes, band-filter chunks), so a single in-place
// Cooley-Tukey with a cached twiddle table covers every use. Unnormalized
// forward transform; inverse scales by 1/n.

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace jamwatch {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace detail {

inline std::vector<std::complex<double>> twiddles(std::size_t n) {
    std::vector<std::complex<double>> w(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double a = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        w[k] = {std::cos(a), std::sin(a)};
    }
    return w;
}

inline void bit_reverse_permute(std::complex<double>* x, std::size_t n) {
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
}

}  // namespace detail

inline void fft_inplace(std::vector<std::complex<double>>& x, bool inverse = false) {
    const std::size_t n = x.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft: length must be a power of two");
    if (n == 1) return;

    detail::bit_reverse_permute(x.data(), n);
    const auto w = detail::twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::complex<double> tw = w[k * step];
                if (inverse) tw = std::conj(tw);
                const auto u = x[i + k];
                const auto v = x[i + k + len / 2] * tw;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        const double s = 1.0 / static_cast<double>(n);
        for (auto& v : x) v *= s;
    }
}

inline std::vector<std::complex<double>> fft(std::vector<std::complex<double>> x,
                                             bool inverse = false) {
    fft_inplace(x, inverse);
    return x;
}

}  // namespace jamwatch
