#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "randtext/generator.hpp"
#include "randtext/params.hpp"

namespace randtext {

// Empirical statistics finalized from an accumulator. Immutable once built.
struct CorpusStats {
    // Indexed by word length k; entry 0 unused.
    std::vector<std::uint64_t> tokens_by_length;
    std::vector<std::uint64_t> types_by_length;
    std::vector<std::uint64_t> hapax_by_length;

    struct RankEntry {
        std::uint64_t rank;  // 1-based, contiguous
        std::string word;
        std::uint64_t count;
    };
    std::vector<RankEntry> rank_frequency;  // count descending

    std::uint64_t total_tokens = 0;
    std::uint64_t n_symbols = 0;  // raw symbols consumed, separators included
    std::uint64_t untracked_long_tokens = 0;
    std::int64_t tracked_k_max = 0;
    std::optional<ModelParams> params_hint;

    std::uint64_t tokens_at(std::int64_t k) const {
        return k >= 0 && k < static_cast<std::int64_t>(tokens_by_length.size())
                   ? tokens_by_length[k]
                   : 0;
    }
    std::uint64_t types_at(std::int64_t k) const {
        return k >= 0 && k < static_cast<std::int64_t>(types_by_length.size())
                   ? types_by_length[k]
                   : 0;
    }
    std::uint64_t hapax_at(std::int64_t k) const {
        return k >= 0 && k < static_cast<std::int64_t>(hapax_by_length.size())
                   ? hapax_by_length[k]
                   : 0;
    }
};

// hapaxes / types at length k. Undefined (throws) when no types were seen.
double hapax_fraction(const CorpusStats& stats, std::int64_t k);

// Streaming, mergeable counter set over word tokens. Tokens are counted at
// every length; per-type counts are kept only up to tracked_k_max letters
// (longer words are token-counted and flagged). Single writer; merge
// combines accumulators built with the same cap.
class StatsAccumulator {
public:
    explicit StatsAccumulator(std::int64_t tracked_k_max = 30);

    // Synthetic path: word as symbol ids; the key encoding needs m.
    void observe(std::span<const SymbolId> word, std::uint32_t alphabet_size);

    // Text path: word as bytes plus its length in letters (code points).
    void observe_key(std::string_view key, std::uint64_t letter_count) {
        observe_key_n(key, letter_count, 1);
    }

    // Counted observation of one word, e.g. from a frequency dump.
    void observe_key_n(std::string_view key, std::uint64_t letter_count,
                       std::uint64_t occurrences);

    // Raw symbols consumed upstream (separators included).
    void note_symbols(std::uint64_t n) { total_symbols_ += n; }

    void merge(const StatsAccumulator& other);

    CorpusStats finalize() const;

    std::uint64_t total_tokens() const { return total_tokens_; }
    std::uint64_t total_symbols() const { return total_symbols_; }
    std::int64_t tracked_k_max() const { return tracked_k_max_; }
    std::uint64_t untracked_long_tokens() const { return untracked_long_tokens_; }
    const std::vector<std::uint64_t>& tokens_by_length() const {
        return tokens_by_length_;
    }
    std::uint64_t type_count(std::string_view key) const;
    std::size_t distinct_types() const { return type_counts_.size(); }

private:
    struct TypeEntry {
        std::uint64_t count = 0;
        std::uint32_t letters = 0;
    };

    std::int64_t tracked_k_max_;
    std::vector<std::uint64_t> tokens_by_length_;
    std::unordered_map<std::string, TypeEntry> type_counts_;
    std::uint64_t total_tokens_ = 0;
    std::uint64_t total_symbols_ = 0;
    std::uint64_t untracked_long_tokens_ = 0;
    std::string key_scratch_;
};

}  // namespace randtext
