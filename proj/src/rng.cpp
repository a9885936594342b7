#include "exsim/rng.hpp"

namespace exsim {

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tokens) {
    std::uint64_t h = splitmix64(base ^ 0x517cc1b727220a95ull);
    for (std::uint64_t t : tokens) {
        h = splitmix64(h ^ t);
    }
    return h;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace exsim
