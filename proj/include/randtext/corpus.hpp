#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "randtext/params.hpp"
#include "randtext/stats.hpp"

namespace randtext {

class EmptyCorpusError : public std::runtime_error {
public:
    EmptyCorpusError() : std::runtime_error("corpus is empty after normalization") {}
};

enum class SeparatorPolicy { ascii_space_only, unicode_whitespace };

struct NormalizationOptions {
    bool case_fold = true;
    bool strip_punctuation = true;
    SeparatorPolicy separator_policy = SeparatorPolicy::unicode_whitespace;
};

// Character-level profile of a normalized text. q_hat counts every raw
// separator character (runs are NOT collapsed for the estimate; they are
// collapsed only for segmentation), matching the per-symbol space
// probability of the model. m_hat is the count of distinct letters seen.
struct CorpusProfile {
    std::uint64_t n_chars = 0;       // characters after normalization
    std::uint64_t n_separators = 0;  // separator characters among them
    double q_hat = 0.0;
    std::uint64_t m_hat = 0;
    std::map<std::string, std::uint64_t> letter_histogram;
};

struct ProfileResult {
    CorpusProfile profile;
    CorpusStats stats;
};

// Normalizes (case fold, punctuation strip, separator classification, in
// that order), then runs the standard segmentation/counting pipeline.
// With folding and stripping off and the ASCII separator policy the input
// is treated as raw bytes; otherwise it must be valid UTF-8 (DecodeError
// carries the byte offset). Throws EmptyCorpusError when nothing is left.
ProfileResult profile_text(std::string_view text,
                           const NormalizationOptions& opts = {},
                           std::int64_t tracked_k_max = 30);

// Baseline model parameters for a profiled corpus: m = m_hat, q = q_hat,
// uniform letters. Real letter frequencies are non-uniform; predictions
// at these parameters deliberately quantify that model deviation.
ModelParams infer_params(const CorpusProfile& profile);

// Builds stats from (token, count) rows, bypassing segmentation. Lengths
// are counted in code points. n_symbols is estimated as the total letter
// count plus one separator per token.
CorpusStats stats_from_frequency_table(
    const std::vector<std::pair<std::string, std::uint64_t>>& rows,
    std::int64_t tracked_k_max = 30);

}  // namespace randtext
