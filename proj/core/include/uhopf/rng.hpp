#pragma once

#include <complex>
#include <cstdint>

namespace uhopf {

/// Counter-based generator: output i is SplitMix64's finalizer applied to
/// seed + (i+1)*golden. Copyable value, no hidden global state, so a given
/// (seed, counter) pair always reproduces the same stream.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    std::uint64_t next_u64() noexcept;

    /// Uniform on (0, 1); never returns 0 so it is safe under log().
    double uniform() noexcept;

    /// Standard normal via Box-Muller. The sine branch is cached.
    double gaussian() noexcept;

    /// Standard complex normal: real and imaginary parts N(0, 1/2).
    std::complex<double> complex_gaussian() noexcept;

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Independent sub-seed for (seed, index), used to give each trial its own
/// stream so trials can run in any order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace uhopf
