#ifndef UTIL_RNG_H
#define UTIL_RNG_H

#include <cstdlib>
#include <random>
#include <string>

namespace util {

// All randomness in the toolkit (problem generation only) flows through
// seeded mt19937 instances. ROLLER_SEED overrides the given default seed.
inline unsigned int global_seed(unsigned int default_seed = 2011) {
    if (const char *env = std::getenv("ROLLER_SEED")) {
        try {
            return static_cast<unsigned int>(std::stoul(env));
        } catch (...) {
        }
    }
    return default_seed;
}

inline std::mt19937 make_rng(unsigned int seed) {
    return std::mt19937(seed);
}

}

#endif
