#include <doctest.h>

#include <cstdint>
#include <vector>

#include "randtext/generator.hpp"
#include "randtext/segmenter.hpp"

using namespace randtext;

namespace {

constexpr SymbolId SP = kSpaceSymbol;

std::vector<std::vector<SymbolId>> words_of(const std::vector<SymbolId>& symbols) {
    std::vector<std::vector<SymbolId>> out;
    for (const WordToken& token : segment_to_tokens(symbols)) {
        out.push_back(token.letters);
    }
    return out;
}

}  // namespace

TEST_CASE("maximal blocks") {
    CHECK(words_of({SP, 1, 2, SP, SP, 3, SP}) ==
          std::vector<std::vector<SymbolId>>{{1, 2}, {3}});
    CHECK(words_of({1, 2, 3}) == std::vector<std::vector<SymbolId>>{{1, 2, 3}});
    CHECK(words_of({}) == std::vector<std::vector<SymbolId>>{});
    CHECK(words_of({SP, SP, SP}) == std::vector<std::vector<SymbolId>>{});
}

TEST_CASE("round trip through single spaces") {
    const std::vector<SymbolId> symbols{1, 1, SP, 2, SP, SP, 3, 3, 3, SP, 1};
    const auto words = words_of(symbols);

    std::vector<SymbolId> rejoined;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0) rejoined.push_back(SP);
        rejoined.insert(rejoined.end(), words[i].begin(), words[i].end());
    }
    CHECK(words_of(rejoined) == words);
}

TEST_CASE("conservation and the word-start rule on fuzzed input") {
    SplitMix64 rng(555);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = rng.next() % 400;
        std::vector<SymbolId> symbols(n);
        std::uint64_t non_space = 0;
        for (auto& s : symbols) {
            s = static_cast<SymbolId>(rng.next() % 4);  // space-rich alphabet
            if (s != SP) ++non_space;
        }

        std::uint64_t letters = 0, tokens = 0;
        segment(symbols, [&](std::span<const SymbolId> word) {
            CHECK(word.size() >= 1);
            for (SymbolId s : word) CHECK(s != SP);
            letters += word.size();
            ++tokens;
        });
        CHECK(letters == non_space);

        // A word starts at i = 0 with a non-space, or where a non-space
        // follows a space.
        std::uint64_t starts = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (symbols[i] != SP && (i == 0 || symbols[i - 1] == SP)) ++starts;
        }
        CHECK(tokens == starts);
    }
}

TEST_CASE("partial word cap") {
    Segmenter seg(4);
    const auto drop = [](std::span<const SymbolId>) {};
    for (int i = 0; i < 4; ++i) seg.push(1, drop);
    CHECK_THROWS_AS(seg.push(1, drop), std::length_error);
}
