#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "dnb/network.h"
#include "dnb/rng.h"

namespace dnb {

// Chromosome: every network parameter packed as a 10-bit value, hidden units
// first, then output units, each unit's weights followed by its threshold.
// Bits are stored MSB-first within each byte; the last 6 bits are padding.
inline constexpr int kBitsPerParameter = 10;
inline constexpr int kQuantLevels = 1 << kBitsPerParameter;
inline constexpr int kUsedBits = Network::kParameterCount * kBitsPerParameter;
inline constexpr int kGenomeBytes = (kUsedBits + 7) / 8;
inline constexpr int kGenomeBits = kGenomeBytes * 8;

static_assert(Network::kParameterCount == 465);
static_assert(kGenomeBytes == 582);
static_assert(kGenomeBits - kUsedBits == 6);

struct Genome {
    std::array<std::uint8_t, kGenomeBytes> bytes{};

    bool operator==(const Genome&) const = default;
};

inline int get_bit(const Genome& g, int i) { return (g.bytes[i >> 3] >> (7 - (i & 7))) & 1; }

inline void set_bit(Genome& g, int i, int value) {
    std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - (i & 7)));
    if (value) {
        g.bytes[i >> 3] |= mask;
    } else {
        g.bytes[i >> 3] &= static_cast<std::uint8_t>(~mask);
    }
}

// Quantization grid: 1024 evenly spaced values spanning [-64, +64] inclusive.
double quant_value(int index);
// Nearest grid index for a raw parameter (clamped; exact midpoints round to
// the even index).
int quant_index(double value);

std::uint16_t get_field(const Genome& g, int param);
void set_field(Genome& g, int param, std::uint16_t index);

Network decode(const Genome& g);
// Quantizes each parameter to the nearest grid value; padding bits are zero.
Genome encode(const Network& net);

Genome random_genome(RngStream& rng);
void clear_unused_bits(Genome& g);

// One-point crossover: the cut falls strictly inside the bit string and the
// children swap suffixes.
std::pair<Genome, Genome> crossover(const Genome& a, const Genome& b, RngStream& rng);

// Flips each bit independently with probability rate.
void mutate(Genome& g, double rate, RngStream& rng);

std::string to_hex(const Genome& g);
Genome from_hex(const std::string& hex);

}  // namespace dnb
