#include "regen/rng.hpp"

namespace regen {

uint64_t Rng::uniform_int(uint64_t n) {
    if (n == 0) return 0;
    uint64_t bound = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = next();
    } while (x >= bound);
    return x % n;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t mix_seed(uint64_t base, uint64_t salt) {
    return splitmix64(base ^ splitmix64(salt + 0x9e3779b97f4a7c15ULL));
}

}  // namespace regen
