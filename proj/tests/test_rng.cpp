#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "jamwatch/rng.hpp"

using namespace jamwatch;

TEST_CASE("counter stream is a pure function of (key, index)", "[rng]") {
    const std::uint64_t key = derive_key(detail::mix64(42), "test");
    std::vector<std::uint64_t> forward, backward;
    for (std::uint64_t i = 0; i < 100; ++i) forward.push_back(rng_at(key, i));
    for (std::uint64_t i = 100; i-- > 0;) backward.push_back(rng_at(key, i));
    std::reverse(backward.begin(), backward.end());
    REQUIRE(forward == backward);
}

TEST_CASE("named substreams are distinct and reproducible", "[rng]") {
    Rng root(7);
    Rng a1 = root.split("synth");
    Rng a2 = root.split("synth");
    Rng b = root.split("split");
    REQUIRE(a1.next() == a2.next());
    REQUIRE(a1.key() != b.key());

    std::vector<std::uint64_t> sa, sb;
    for (int i = 0; i < 32; ++i) {
        sa.push_back(a1.next());
        sb.push_back(b.next());
    }
    REQUIRE(sa != sb);
}

TEST_CASE("uniform01 lies in [0, 1) and has uniform moments", "[rng]") {
    Rng rng(123);
    const int n = 100000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sumsq += u * u;
    }
    const double m = sum / n;
    const double var = sumsq / n - m * m;
    CHECK_THAT(m, Catch::Matchers::WithinAbs(0.5, 0.01));
    CHECK_THAT(var, Catch::Matchers::WithinAbs(1.0 / 12.0, 0.01));
}

TEST_CASE("addressable normal pairs have standard moments", "[rng]") {
    const std::uint64_t key = derive_key(detail::mix64(99), "gauss");
    const int n = 50000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto [a, b] = normal_pair_at(key, static_cast<std::uint64_t>(i));
        sum += a + b;
        sumsq += a * a + b * b;
    }
    const double m = sum / (2.0 * n);
    const double var = sumsq / (2.0 * n) - m * m;
    CHECK_THAT(m, Catch::Matchers::WithinAbs(0.0, 0.02));
    CHECK_THAT(var, Catch::Matchers::WithinAbs(1.0, 0.03));
}

TEST_CASE("bounded draws stay in range and cover values", "[rng]") {
    Rng rng(5);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 1000; ++i) {
        const auto v = rng.bounded(10);
        REQUIRE(v < 10);
        seen.insert(v);
    }
    REQUIRE(seen.size() == 10);
}

TEST_CASE("shuffle is a deterministic permutation", "[rng]") {
    std::vector<int> v1(50), v2(50);
    std::iota(v1.begin(), v1.end(), 0);
    std::iota(v2.begin(), v2.end(), 0);
    Rng(11).split("shuffle").shuffle(v1);
    Rng(11).split("shuffle").shuffle(v2);
    REQUIRE(v1 == v2);

    std::vector<int> sorted = v1;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(50);
    std::iota(expect.begin(), expect.end(), 0);
    REQUIRE(sorted == expect);
    REQUIRE(v1 != expect);  // 50 elements: identity permutation is implausible
}
