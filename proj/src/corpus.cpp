#include "randtext/corpus.hpp"

#include <algorithm>

#include "randtext/unicode.hpp"

namespace randtext {

namespace {

bool is_separator(char32_t cp, SeparatorPolicy policy) {
    if (policy == SeparatorPolicy::ascii_space_only) return cp == U' ';
    return uni::is_whitespace(cp);
}

}  // namespace

ProfileResult profile_text(std::string_view text, const NormalizationOptions& opts,
                           std::int64_t tracked_k_max) {
    StatsAccumulator acc(tracked_k_max);
    CorpusProfile profile;

    std::string word;           // UTF-8 bytes of the current word
    std::uint64_t word_len = 0;  // letters in the current word

    const auto flush_word = [&] {
        if (word_len > 0) {
            acc.observe_key(word, word_len);
            word.clear();
            word_len = 0;
        }
    };

    const bool raw_bytes = !opts.case_fold && !opts.strip_punctuation &&
                           opts.separator_policy == SeparatorPolicy::ascii_space_only;

    std::string cp_buf;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char32_t cp;
        if (raw_bytes) {
            cp = static_cast<unsigned char>(text[pos]);
            ++pos;
        } else {
            cp = uni::decode_utf8(text, pos);
        }
        if (opts.case_fold) cp = uni::fold_case(cp);
        if (opts.strip_punctuation && uni::is_punctuation(cp)) continue;

        ++profile.n_chars;
        if (is_separator(cp, opts.separator_policy)) {
            ++profile.n_separators;
            flush_word();
            continue;
        }
        cp_buf.clear();
        if (raw_bytes) {
            cp_buf.push_back(static_cast<char>(cp));
        } else {
            uni::append_utf8(cp, cp_buf);
        }
        ++profile.letter_histogram[cp_buf];
        word += cp_buf;
        ++word_len;
    }
    flush_word();

    if (profile.letter_histogram.empty()) {
        // Nothing but separators (or nothing at all) survived normalization.
        throw EmptyCorpusError();
    }
    acc.note_symbols(profile.n_chars);
    profile.q_hat = static_cast<double>(profile.n_separators) /
                    static_cast<double>(profile.n_chars);
    profile.m_hat = profile.letter_histogram.size();
    return {std::move(profile), acc.finalize()};
}

ModelParams infer_params(const CorpusProfile& profile) {
    if (profile.m_hat < 2) {
        throw std::domain_error(
            "cannot infer model parameters: fewer than 2 distinct letters");
    }
    if (!(profile.q_hat > 0.0) || !(profile.q_hat < 1.0)) {
        throw std::domain_error(
            "cannot infer model parameters: separator fraction is degenerate");
    }
    return ModelParams(static_cast<std::uint32_t>(profile.m_hat), profile.q_hat);
}

CorpusStats stats_from_frequency_table(
    const std::vector<std::pair<std::string, std::uint64_t>>& rows,
    std::int64_t tracked_k_max) {
    StatsAccumulator acc(tracked_k_max);
    std::uint64_t symbols = 0;
    for (const auto& [token, count] : rows) {
        if (token.empty() || count == 0) {
            throw std::domain_error("frequency rows need a token and a count >= 1");
        }
        std::uint64_t letters = 0;
        std::size_t pos = 0;
        while (pos < token.size()) {
            uni::decode_utf8(token, pos);
            ++letters;
        }
        acc.observe_key_n(token, letters, count);
        symbols += (letters + 1) * count;
    }
    acc.note_symbols(symbols);
    return acc.finalize();
}

}  // namespace randtext
