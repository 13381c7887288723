#pragma once

#include <cstdint>
#include <ostream>

#include "randtext/params.hpp"
#include "randtext/segmenter.hpp"
#include "randtext/stats.hpp"

namespace randtext {

struct SimulationOptions {
    std::uint64_t chunks = 1;   // independent streams with derived seeds
    unsigned threads = 1;       // workers; never affects the output
    std::int64_t tracked_k_max = 30;
    std::size_t max_word_length = kDefaultMaxWordLength;
};

// Generates N symbols, segments them and accumulates statistics. With
// chunks > 1 the text is split into contiguous chunks generated from
// derived seeds and segmented as independent texts (chunk-boundary words
// are split; an O(1)-per-chunk effect), and the per-chunk accumulators
// are merged in index order, so the result depends only on (params, N,
// seed, chunks) and never on the thread count.
StatsAccumulator run_simulation(const ModelParams& params, std::uint64_t n_symbols,
                                std::uint64_t seed,
                                const SimulationOptions& options = {});

// Writes the single-stream (chunk 0) symbol sequence as bytes: 0x20 for
// the space, letter_byte() for letters. Requires m <= 255.
void export_corpus_bytes(const ModelParams& params, std::uint64_t n_symbols,
                         std::uint64_t seed, std::ostream& out);

}  // namespace randtext
