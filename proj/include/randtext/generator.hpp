#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "randtext/params.hpp"

namespace randtext {

// Symbols are small integers: 0 is the space, 1..m are the letters.
using SymbolId = std::uint32_t;
inline constexpr SymbolId kSpaceSymbol = 0;

// SplitMix64 (Steele, Lea, Flood 2014). Fixed across platforms; the
// output stream for a given seed is part of the corpus format contract.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Deterministic per-chunk seed: a bijective 64-bit mix of the master seed
// and the chunk index, so distinct indices never collide for a fixed seed.
std::uint64_t derive_chunk_seed(std::uint64_t seed, std::uint64_t chunk_index);

struct StreamSpec {
    ModelParams params;
    std::uint64_t length = 0;  // symbols to emit
    std::uint64_t seed = 0;
    std::uint64_t chunk_index = 0;
};

// Emits exactly `length` i.i.d. symbols with Pr(space) = q and letter
// probabilities from the params (uniform by default). Sampling is
// inverse-CDF over the cumulative table; see kPrngVersion.
class SymbolStream {
public:
    explicit SymbolStream(const StreamSpec& spec);

    bool done() const { return remaining_ == 0; }
    std::uint64_t remaining() const { return remaining_; }

    SymbolId next();

    // Fills `out` with min(out.size(), remaining()) symbols; returns count.
    std::size_t generate(std::span<SymbolId> out);

private:
    SplitMix64 rng_;
    std::vector<double> cumulative_;  // size m+1, last entry pinned to 1.0
    std::uint64_t remaining_;
};

// Byte encoding of symbols for the raw corpus export: space is 0x20 and
// letters take the 255 non-space byte values starting at 'a' (0x61..0xff,
// then 0x00..0x1f, then 0x21..0x60). Monotone in the letter id through
// m = 158, which keeps byte order and letter order aligned for ASCII-sized
// alphabets. Supports m <= 255.
inline constexpr std::uint8_t kSpaceByte = 0x20;
std::uint8_t letter_byte(SymbolId letter);
SymbolId letter_from_byte(std::uint8_t byte);

// Word key used by the statistics layer: identical to the export encoding
// for m <= 255, LEB128 otherwise, so exported corpora re-ingested byte-wise
// reproduce the same keys.
void append_word_key(std::span<const SymbolId> word, std::uint32_t alphabet_size,
                     std::string& out);
std::string word_key(std::span<const SymbolId> word, std::uint32_t alphabet_size);

}  // namespace randtext
