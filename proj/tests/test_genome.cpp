#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "dnb/genome.h"
#include "dnb/network.h"
#include "dnb/rng.h"

using namespace dnb;

TEST_SUITE("genome") {

TEST_CASE("the chromosome is exactly 582 bytes with 6 spare bits") {
    CHECK(kGenomeBytes == 582);
    CHECK(sizeof(Genome::bytes) == 582);
    CHECK(kUsedBits == 4650);
    CHECK(kGenomeBits - kUsedBits == 6);
    CHECK(kQuantLevels == 1024);
}

TEST_CASE("quantization grid spans [-64, 64] inclusive") {
    CHECK(quant_value(0) == -64.0);
    CHECK(quant_value(1023) == 64.0);
    for (int k = 1; k < kQuantLevels; ++k) CHECK(quant_value(k) > quant_value(k - 1));
    CHECK_THROWS_AS(quant_value(-1), std::out_of_range);
    CHECK_THROWS_AS(quant_value(1024), std::out_of_range);
}

TEST_CASE("quant_index inverts quant_value on every grid point") {
    for (int k = 0; k < kQuantLevels; ++k) CHECK(quant_index(quant_value(k)) == k);
}

TEST_CASE("quant_index clamps and breaks the zero tie to the even index") {
    CHECK(quant_index(-1000.0) == 0);
    CHECK(quant_index(1000.0) == 1023);
    CHECK(quant_index(-64.0) == 0);
    CHECK(quant_index(64.0) == 1023);
    // 0.0 sits exactly between indices 511 and 512.
    CHECK(quant_index(0.0) == 512);
}

TEST_CASE("quantization error never exceeds half a step") {
    RngStream rng(21);
    const double half_step = 64.0 / 1023.0;
    for (int i = 0; i < 20000; ++i) {
        double v = (rng.uniform_real() * 2.0 - 1.0) * 64.0;
        double q = quant_value(quant_index(v));
        CHECK(std::abs(q - v) <= half_step + 1e-12);
    }
}

TEST_CASE("fields pack 10 bits MSB-first") {
    Genome g;
    set_field(g, 0, 0b1000000001);
    CHECK(g.bytes[0] == 0x80);
    CHECK(g.bytes[1] == 0x40);
    CHECK(get_field(g, 0) == 0b1000000001);

    set_field(g, 464, 1023);
    CHECK(get_field(g, 464) == 1023);
    // The last used bit is index 4649; the 6 padding bits stay clear.
    for (int i = kUsedBits; i < kGenomeBits; ++i) CHECK(get_bit(g, i) == 0);
}

TEST_CASE("an all-zero network encodes to index 512 everywhere") {
    Genome g = encode(Network{});
    for (int i = 0; i < Network::kParameterCount; ++i) CHECK(get_field(g, i) == 512);
}

TEST_CASE("decode then encode is the identity on cleaned genomes") {
    RngStream rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        Genome g = random_genome(rng);
        clear_unused_bits(g);
        CHECK(encode(decode(g)) == g);
    }
}

TEST_CASE("decode reads fields in flatten order") {
    Genome g;
    for (int i = 0; i < Network::kParameterCount; ++i) set_field(g, i, 512);
    set_field(g, 24, 1023);  // hidden unit 0's threshold slot
    Network net = decode(g);
    CHECK(net.hidden_thresholds[0] == 64.0);
    CHECK(net.hidden_weights[0][0] == quant_value(512));
    CHECK(flatten(net)[24] == 64.0);
}

TEST_CASE("hex serialization is 1164 lowercase characters") {
    RngStream rng(23);
    Genome g = random_genome(rng);
    std::string hex = to_hex(g);
    CHECK(hex.size() == 1164);
    for (char c : hex) CHECK(((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')));
    CHECK(from_hex(hex) == g);
    CHECK_THROWS_AS(from_hex(hex.substr(1)), std::invalid_argument);
    hex[10] = 'g';
    CHECK_THROWS_AS(from_hex(hex), std::invalid_argument);
}

TEST_CASE("crossover swaps a strict suffix") {
    Genome zeros;
    Genome ones;
    for (auto& b : ones.bytes) b = 0xff;
    RngStream rng(24);
    for (int trial = 0; trial < 200; ++trial) {
        auto [a, b] = crossover(zeros, ones, rng);
        // One switch point, never at the very ends.
        CHECK(get_bit(a, 0) == 0);
        CHECK(get_bit(b, 0) == 1);
        CHECK(get_bit(a, kGenomeBits - 1) == 1);
        CHECK(get_bit(b, kGenomeBits - 1) == 0);
        int switches = 0;
        for (int i = 1; i < kGenomeBits; ++i) {
            if (get_bit(a, i) != get_bit(a, i - 1)) ++switches;
            CHECK(get_bit(a, i) != get_bit(b, i));
        }
        CHECK(switches == 1);
    }
}

TEST_CASE("mutation at rate 0 and 1 is exact, mid rates are binomial") {
    RngStream rng(25);
    Genome g = random_genome(rng);

    Genome untouched = g;
    mutate(untouched, 0.0, rng);
    CHECK(untouched == g);

    Genome flipped = g;
    mutate(flipped, 1.0, rng);
    for (int i = 0; i < kGenomeBits; ++i) CHECK(get_bit(flipped, i) == (get_bit(g, i) ^ 1));

    // 200 genomes at rate 0.005: expect 4656 flips, sd ~68; allow 5 sigma.
    long long flips = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Genome m = g;
        mutate(m, 0.005, rng);
        for (int i = 0; i < kGenomeBits; ++i) flips += get_bit(m, i) != get_bit(g, i);
    }
    CHECK(flips > 4656 - 340);
    CHECK(flips < 4656 + 340);
}

TEST_CASE("random genomes differ and depend on the seed") {
    RngStream a(26), b(26), c(27);
    Genome ga = random_genome(a);
    CHECK(ga == random_genome(b));
    CHECK_FALSE(ga == random_genome(c));
}

}  // TEST_SUITE
