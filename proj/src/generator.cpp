#include "randtext/generator.hpp"

#include <algorithm>
#include <stdexcept>

namespace randtext {

namespace {

// SplitMix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_chunk_seed(std::uint64_t seed, std::uint64_t chunk_index) {
    // (chunk_index + 1) * odd constant is injective mod 2^64 and mix64 is a
    // bijection, so derived seeds are distinct across indices for one seed.
    return mix64(seed + (chunk_index + 1) * 0x9e3779b97f4a7c15ULL);
}

SymbolStream::SymbolStream(const StreamSpec& spec)
    : rng_(derive_chunk_seed(spec.seed, spec.chunk_index)),
      remaining_(spec.length) {
    const std::uint32_t m = spec.params.alphabet_size();
    const double q = spec.params.space_prob();
    cumulative_.resize(m + 1);
    cumulative_[0] = q;
    if (spec.params.letter_probs()) {
        const auto& probs = *spec.params.letter_probs();
        double acc = q;
        for (std::uint32_t j = 0; j < m; ++j) {
            acc += probs[j];
            cumulative_[j + 1] = acc;
        }
    } else {
        const double per_letter = (1.0 - q) / static_cast<double>(m);
        for (std::uint32_t j = 1; j <= m; ++j) {
            cumulative_[j] = q + per_letter * static_cast<double>(j);
        }
    }
    cumulative_[m] = 1.0;  // absorb accumulation error in the last bin
}

SymbolId SymbolStream::next() {
    if (remaining_ == 0) {
        throw std::out_of_range("symbol stream exhausted");
    }
    --remaining_;
    const double u = rng_.next_unit();
    const auto it =
        std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return static_cast<SymbolId>(it - cumulative_.begin());
}

std::size_t SymbolStream::generate(std::span<SymbolId> out) {
    const std::size_t n =
        static_cast<std::size_t>(std::min<std::uint64_t>(out.size(), remaining_));
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = next();
    }
    return n;
}

std::uint8_t letter_byte(SymbolId letter) {
    if (letter == kSpaceSymbol || letter > 255) {
        throw std::domain_error("letter id must lie in 1..255 for byte export");
    }
    const std::uint32_t idx = letter - 1;  // 0-based position in the byte order
    if (idx < 159) return static_cast<std::uint8_t>(0x61 + idx);
    if (idx < 191) return static_cast<std::uint8_t>(idx - 159);        // 0x00..0x1f
    return static_cast<std::uint8_t>(0x21 + (idx - 191));              // 0x21..0x60
}

SymbolId letter_from_byte(std::uint8_t byte) {
    if (byte == kSpaceByte) {
        throw std::domain_error("0x20 is the space byte, not a letter");
    }
    if (byte >= 0x61) return byte - 0x61 + 1;
    if (byte <= 0x1f) return byte + 159 + 1;
    return byte - 0x21 + 191 + 1;
}

void append_word_key(std::span<const SymbolId> word, std::uint32_t alphabet_size,
                     std::string& out) {
    if (alphabet_size <= 255) {
        for (SymbolId s : word) {
            out.push_back(static_cast<char>(letter_byte(s)));
        }
        return;
    }
    for (SymbolId s : word) {
        std::uint32_t v = s;
        while (v >= 0x80) {
            out.push_back(static_cast<char>((v & 0x7f) | 0x80));
            v >>= 7;
        }
        out.push_back(static_cast<char>(v));
    }
}

std::string word_key(std::span<const SymbolId> word, std::uint32_t alphabet_size) {
    std::string out;
    out.reserve(word.size());
    append_word_key(word, alphabet_size, out);
    return out;
}

}  // namespace randtext
