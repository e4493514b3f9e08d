#pragma once

// Deterministic, splittable random number generation.
//
// Every stochastic component in the pipeline draws from a stream derived
// from a single root seed via named substreams, e.g.
//
//   Rng root(seed);
//   Rng synth = root.split("synth");
//   Rng model = root.split("init:model_3");
//
// Streams are counter-based: the value at counter i is a pure function of
// (key, i), so per-sample draws can be addressed directly and generation
// order never affects output. No std:: distributions are used anywhere;
// uniform and normal variates are constructed explicitly so results are
// identical across standard libraries and platforms.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <utility>
#include <vector>

namespace jamwatch {

namespace detail {

// SplitMix64 finalizer (Steele, Lea, Flood). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// FNV-1a over a name; used to derive substream keys from labels.
constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace detail

// Value of stream `key` at position `counter`.
constexpr std::uint64_t rng_at(std::uint64_t key, std::uint64_t counter) {
    return detail::mix64(key + counter * detail::kGolden);
}

// Derive an independent stream key from (key, name).
constexpr std::uint64_t derive_key(std::uint64_t key, std::string_view name) {
    return detail::mix64(key ^ detail::fnv1a64(name));
}

constexpr std::uint64_t derive_key(std::uint64_t key, std::uint64_t index) {
    return detail::mix64(detail::mix64(key) + index * detail::kGolden);
}

// Uniform double in [0, 1) from 53 high bits.
constexpr double to_unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Uniform double in (0, 1]; safe as a log() argument.
constexpr double to_unit_open(std::uint64_t bits) {
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

// Pair of independent standard normals by Box-Muller from counters
// (2i, 2i+1) of the stream. Addressable: the pair at index i is a pure
// function of (key, i).
inline std::pair<double, double> normal_pair_at(std::uint64_t key, std::uint64_t i) {
    const double u1 = to_unit_open(rng_at(key, 2 * i));
    const double u2 = to_unit(rng_at(key, 2 * i + 1));
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

inline double uniform_at(std::uint64_t key, std::uint64_t i) {
    return to_unit(rng_at(key, i));
}

// Sequential generator over a counter stream. Copyable value type; a copy
// continues the stream independently of the original.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(detail::mix64(seed)) {}
    Rng(std::uint64_t key, std::uint64_t counter) : key_(key), ctr_(counter) {}

    std::uint64_t next() { return rng_at(key_, ctr_++); }

    double uniform01() { return to_unit(next()); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Unbiased-enough bounded integer (Lemire multiply-shift); bias is
    // < 2^-64 * n, irrelevant at the n used here.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = to_unit_open(next());
        const double u2 = to_unit(next());
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    Rng split(std::string_view name) const { return Rng(derive_key(key_, name), 0); }
    Rng split(std::uint64_t index) const { return Rng(derive_key(key_, index), 0); }

    std::uint64_t key() const { return key_; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Injectable randomness for operations that tests need to drive with
// scripted draws (the augmentation pipeline). Production code wraps an Rng.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual double uniform01() = 0;
    virtual double normal() = 0;

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
};

class RngSource final : public RandomSource {
public:
    explicit RngSource(Rng rng) : rng_(rng) {}
    double uniform01() override { return rng_.uniform01(); }
    double normal() override { return rng_.normal(); }

private:
    Rng rng_;
};

}  // namespace jamwatch
