#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace exsim {

// 64-bit finalizer used to derive independent stream seeds from a master seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Fold a token sequence into a base seed. Used for (master seed, cell, index)
// style derivations; every distinct token sequence yields a distinct stream.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tokens);

std::uint64_t fnv1a64(std::string_view s);

// Deterministic uniform draws on top of mt19937_64. The engine output of
// mt19937_64 is pinned by the standard; the standard *distributions* are not,
// so all conversions to doubles/ranges are done explicitly here to keep
// replays bit-identical across toolchains.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(gen_()) * n) >> 64);
    }

    // Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::mt19937_64 gen_;
};

} // namespace exsim
