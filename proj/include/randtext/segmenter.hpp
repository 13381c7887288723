#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "randtext/generator.hpp"

namespace randtext {

struct WordToken {
    std::vector<SymbolId> letters;
    std::size_t length() const { return letters.size(); }
    bool operator==(const WordToken&) const = default;
};

inline constexpr std::size_t kDefaultMaxWordLength = std::size_t{1} << 20;

// Splits a symbol stream into maximal non-space runs. Holds only the
// current partial word; a run cut off by end-of-input is still a word,
// and consecutive spaces emit nothing. The sink receives each completed
// word as a span valid only for the duration of the call.
class Segmenter {
public:
    explicit Segmenter(std::size_t max_word_length = kDefaultMaxWordLength)
        : max_word_length_(max_word_length) {}

    template <typename Sink>
    void push(SymbolId symbol, Sink&& sink) {
        if (symbol == kSpaceSymbol) {
            if (!buffer_.empty()) {
                sink(std::span<const SymbolId>(buffer_));
                buffer_.clear();
            }
            return;
        }
        if (buffer_.size() >= max_word_length_) {
            throw std::length_error("word exceeds the segmenter length cap");
        }
        buffer_.push_back(symbol);
    }

    // Emits the trailing word, if any. Call once at end-of-input.
    template <typename Sink>
    void finish(Sink&& sink) {
        if (!buffer_.empty()) {
            sink(std::span<const SymbolId>(buffer_));
            buffer_.clear();
        }
    }

private:
    std::size_t max_word_length_;
    std::vector<SymbolId> buffer_;
};

template <typename Range, typename Sink>
void segment(const Range& symbols, Sink&& sink,
             std::size_t max_word_length = kDefaultMaxWordLength) {
    Segmenter seg(max_word_length);
    for (SymbolId s : symbols) {
        seg.push(s, sink);
    }
    seg.finish(sink);
}

template <typename Range>
std::vector<WordToken> segment_to_tokens(
    const Range& symbols, std::size_t max_word_length = kDefaultMaxWordLength) {
    std::vector<WordToken> tokens;
    segment(
        symbols,
        [&](std::span<const SymbolId> word) {
            tokens.push_back(WordToken{{word.begin(), word.end()}});
        },
        max_word_length);
    return tokens;
}

}  // namespace randtext
