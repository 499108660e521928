#include "jetrank/weight.hpp"

#include "jetrank/rng.hpp"

namespace jetrank {

std::uint64_t Weight::fingerprint() const {
    std::uint64_t h = Rng::mix(0x6a09e667f3bcc908ULL, static_cast<std::uint64_t>(chi));
    for (long r : lengths) h = Rng::mix(h, static_cast<std::uint64_t>(r));
    return h;
}

} // namespace jetrank
