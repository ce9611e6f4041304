#include "dnb/genome.h"

#include <cmath>
#include <stdexcept>

namespace dnb {

double quant_value(int index) {
    if (index < 0 || index >= kQuantLevels) throw std::out_of_range("quantization index");
    // (1023 * 128.0) / 1023.0 divides exactly, so the endpoints are -64 and
    // +64 with no rounding residue.
    return -64.0 + (index * 128.0) / (kQuantLevels - 1);
}

int quant_index(double value) {
    if (value <= -64.0) return 0;
    if (value >= 64.0) return kQuantLevels - 1;
    double t = (value + 64.0) * (kQuantLevels - 1) / 128.0;
    return static_cast<int>(std::nearbyint(t));  // ties resolve to the even index
}

std::uint16_t get_field(const Genome& g, int param) {
    int base = param * kBitsPerParameter;
    std::uint16_t v = 0;
    for (int j = 0; j < kBitsPerParameter; ++j) {
        v = static_cast<std::uint16_t>((v << 1) | get_bit(g, base + j));
    }
    return v;
}

void set_field(Genome& g, int param, std::uint16_t index) {
    int base = param * kBitsPerParameter;
    for (int j = 0; j < kBitsPerParameter; ++j) {
        set_bit(g, base + j, (index >> (kBitsPerParameter - 1 - j)) & 1);
    }
}

Network decode(const Genome& g) {
    std::vector<double> params(Network::kParameterCount);
    for (int i = 0; i < Network::kParameterCount; ++i) {
        params[i] = quant_value(get_field(g, i));
    }
    return unflatten(params);
}

Genome encode(const Network& net) {
    Genome g;
    auto params = flatten(net);
    for (int i = 0; i < Network::kParameterCount; ++i) {
        set_field(g, i, static_cast<std::uint16_t>(quant_index(params[i])));
    }
    return g;
}

Genome random_genome(RngStream& rng) {
    Genome g;
    for (auto& byte : g.bytes) {
        byte = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
    }
    return g;
}

void clear_unused_bits(Genome& g) {
    for (int i = kUsedBits; i < kGenomeBits; ++i) set_bit(g, i, 0);
}

std::pair<Genome, Genome> crossover(const Genome& a, const Genome& b, RngStream& rng) {
    int cut = rng.uniform_int(1, kGenomeBits - 1);
    Genome child_a = a;
    Genome child_b = b;
    for (int i = cut; i < kGenomeBits; ++i) {
        set_bit(child_a, i, get_bit(b, i));
        set_bit(child_b, i, get_bit(a, i));
    }
    return {child_a, child_b};
}

void mutate(Genome& g, double rate, RngStream& rng) {
    for (int i = 0; i < kGenomeBits; ++i) {
        if (rng.bernoulli(rate)) set_bit(g, i, get_bit(g, i) ^ 1);
    }
}

std::string to_hex(const Genome& g) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(kGenomeBytes * 2);
    for (std::uint8_t byte : g.bytes) {
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0x0f]);
    }
    return out;
}

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("invalid hex digit in genome");
}

}  // namespace

Genome from_hex(const std::string& hex) {
    if (hex.size() != static_cast<std::size_t>(kGenomeBytes) * 2) {
        throw std::invalid_argument("genome hex must be exactly " +
                                    std::to_string(kGenomeBytes * 2) + " characters");
    }
    Genome g;
    for (int i = 0; i < kGenomeBytes; ++i) {
        g.bytes[i] = static_cast<std::uint8_t>((hex_digit(hex[2 * i]) << 4) |
                                               hex_digit(hex[2 * i + 1]));
    }
    return g;
}

}  // namespace dnb
