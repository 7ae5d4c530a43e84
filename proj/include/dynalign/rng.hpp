#ifndef DYNALIGN_RNG_HPP
#define DYNALIGN_RNG_HPP

#include <cstdint>
#include <vector>

namespace dynalign {

// SplitMix64 generator (Steele, Lea, Flood 2014). Chosen over the standard
// library engines because its output is fully specified, so seeded runs are
// bit-reproducible across compilers and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0. Rejection sampling keeps the draw unbiased.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bool() { return (next_u64() >> 63) != 0; }

private:
    std::uint64_t state_;
};

// Mixes independent stream coordinates into a seed. Used to derive the
// per-(generation, slot) rng streams that make parallel search runs
// independent of the worker count.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    Rng mixer(seed ^ (a * 0xd6e8feb86659fd93ULL) ^ (b * 0xca5a826395121157ULL));
    mixer.next_u64();
    return mixer.next_u64();
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a) {
    return derive_seed(seed, a, 0x5bf0263fULL);
}

template <typename T>
void shuffle(std::vector<T>& values, Rng& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace dynalign

#endif  // DYNALIGN_RNG_HPP
