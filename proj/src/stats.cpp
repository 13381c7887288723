#include "randtext/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace randtext {

double hapax_fraction(const CorpusStats& stats, std::int64_t k) {
    const std::uint64_t types = stats.types_at(k);
    if (types == 0) {
        throw std::domain_error("hapax fraction is undefined: no types at length " +
                                std::to_string(k));
    }
    return static_cast<double>(stats.hapax_at(k)) / static_cast<double>(types);
}

StatsAccumulator::StatsAccumulator(std::int64_t tracked_k_max)
    : tracked_k_max_(tracked_k_max) {
    if (tracked_k_max < 1) {
        throw std::invalid_argument("tracked_k_max must be >= 1");
    }
}

void StatsAccumulator::observe(std::span<const SymbolId> word,
                               std::uint32_t alphabet_size) {
    if (word.empty()) {
        throw std::invalid_argument("words have length >= 1");
    }
    const std::uint64_t len = word.size();
    if (len >= tokens_by_length_.size()) {
        tokens_by_length_.resize(len + 1, 0);
    }
    ++tokens_by_length_[len];
    ++total_tokens_;

    if (static_cast<std::int64_t>(len) > tracked_k_max_) {
        ++untracked_long_tokens_;
        return;
    }
    key_scratch_.clear();
    append_word_key(word, alphabet_size, key_scratch_);
    auto& entry = type_counts_[key_scratch_];
    ++entry.count;
    entry.letters = static_cast<std::uint32_t>(len);
}

void StatsAccumulator::observe_key_n(std::string_view key,
                                     std::uint64_t letter_count,
                                     std::uint64_t occurrences) {
    if (letter_count == 0) {
        throw std::invalid_argument("words have length >= 1");
    }
    if (occurrences == 0) return;
    if (letter_count >= tokens_by_length_.size()) {
        tokens_by_length_.resize(letter_count + 1, 0);
    }
    tokens_by_length_[letter_count] += occurrences;
    total_tokens_ += occurrences;

    if (static_cast<std::int64_t>(letter_count) > tracked_k_max_) {
        untracked_long_tokens_ += occurrences;
        return;
    }
    auto& entry = type_counts_[std::string(key)];
    entry.count += occurrences;
    entry.letters = static_cast<std::uint32_t>(letter_count);
}

void StatsAccumulator::merge(const StatsAccumulator& other) {
    if (other.tracked_k_max_ != tracked_k_max_) {
        throw std::invalid_argument(
            "cannot merge accumulators with different tracked_k_max");
    }
    if (other.tokens_by_length_.size() > tokens_by_length_.size()) {
        tokens_by_length_.resize(other.tokens_by_length_.size(), 0);
    }
    for (std::size_t k = 0; k < other.tokens_by_length_.size(); ++k) {
        tokens_by_length_[k] += other.tokens_by_length_[k];
    }
    for (const auto& [key, entry] : other.type_counts_) {
        auto& mine = type_counts_[key];
        mine.count += entry.count;
        mine.letters = entry.letters;
    }
    total_tokens_ += other.total_tokens_;
    total_symbols_ += other.total_symbols_;
    untracked_long_tokens_ += other.untracked_long_tokens_;
}

std::uint64_t StatsAccumulator::type_count(std::string_view key) const {
    const auto it = type_counts_.find(std::string(key));
    return it == type_counts_.end() ? 0 : it->second.count;
}

CorpusStats StatsAccumulator::finalize() const {
    CorpusStats out;
    out.tokens_by_length = tokens_by_length_;
    out.total_tokens = total_tokens_;
    out.n_symbols = total_symbols_;
    out.untracked_long_tokens = untracked_long_tokens_;
    out.tracked_k_max = tracked_k_max_;

    std::size_t max_tracked = 0;
    for (const auto& [key, entry] : type_counts_) {
        max_tracked = std::max<std::size_t>(max_tracked, entry.letters);
    }
    out.types_by_length.assign(max_tracked + 1, 0);
    out.hapax_by_length.assign(max_tracked + 1, 0);

    struct Row {
        const std::string* key;
        std::uint64_t count;
        std::uint32_t letters;
    };
    std::vector<Row> rows;
    rows.reserve(type_counts_.size());
    for (const auto& [key, entry] : type_counts_) {
        ++out.types_by_length[entry.letters];
        if (entry.count == 1) ++out.hapax_by_length[entry.letters];
        rows.push_back({&key, entry.count, entry.letters});
    }

    // Deterministic order: count desc, then letter length asc, then byte order.
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.count != b.count) return a.count > b.count;
        if (a.letters != b.letters) return a.letters < b.letters;
        return *a.key < *b.key;
    });
    out.rank_frequency.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.rank_frequency.push_back({i + 1, *rows[i].key, rows[i].count});
    }
    return out;
}

}  // namespace randtext
