#include "randtext/pipeline.hpp"

#include <future>
#include <stdexcept>
#include <vector>

#include "randtext/generator.hpp"

namespace randtext {

namespace {

StatsAccumulator simulate_chunk(const ModelParams& params, std::uint64_t length,
                                std::uint64_t seed, std::uint64_t chunk_index,
                                const SimulationOptions& options) {
    StatsAccumulator acc(options.tracked_k_max);
    SymbolStream stream({params, length, seed, chunk_index});
    Segmenter seg(options.max_word_length);
    const std::uint32_t m = params.alphabet_size();
    const auto sink = [&](std::span<const SymbolId> word) {
        acc.observe(word, m);
    };
    while (!stream.done()) {
        seg.push(stream.next(), sink);
    }
    seg.finish(sink);
    acc.note_symbols(length);
    return acc;
}

}  // namespace

StatsAccumulator run_simulation(const ModelParams& params, std::uint64_t n_symbols,
                                std::uint64_t seed,
                                const SimulationOptions& options) {
    const std::uint64_t chunks = options.chunks == 0 ? 1 : options.chunks;
    if (chunks == 1 || n_symbols == 0) {
        return simulate_chunk(params, n_symbols, seed, 0, options);
    }

    // Deterministic split: the first N % C chunks get one extra symbol.
    std::vector<std::uint64_t> sizes(chunks, n_symbols / chunks);
    for (std::uint64_t i = 0; i < n_symbols % chunks; ++i) ++sizes[i];

    StatsAccumulator total(options.tracked_k_max);
    if (options.threads <= 1) {
        for (std::uint64_t i = 0; i < chunks; ++i) {
            total.merge(simulate_chunk(params, sizes[i], seed, i, options));
        }
        return total;
    }

    std::vector<std::future<StatsAccumulator>> futures;
    futures.reserve(chunks);
    std::uint64_t in_flight = 0;
    std::uint64_t next_to_merge = 0;
    for (std::uint64_t i = 0; i < chunks; ++i) {
        futures.push_back(std::async(std::launch::async, simulate_chunk, params,
                                     sizes[i], seed, i, options));
        if (++in_flight >= options.threads) {
            total.merge(futures[next_to_merge++].get());
            --in_flight;
        }
    }
    while (next_to_merge < chunks) {
        total.merge(futures[next_to_merge++].get());
    }
    return total;
}

void export_corpus_bytes(const ModelParams& params, std::uint64_t n_symbols,
                         std::uint64_t seed, std::ostream& out) {
    if (params.alphabet_size() > 255) {
        throw std::domain_error("byte export supports alphabets up to 255 letters");
    }
    SymbolStream stream({params, n_symbols, seed, 0});
    std::vector<char> buffer;
    buffer.reserve(1 << 16);
    while (!stream.done()) {
        const SymbolId s = stream.next();
        buffer.push_back(s == kSpaceSymbol
                             ? static_cast<char>(kSpaceByte)
                             : static_cast<char>(letter_byte(s)));
        if (buffer.size() == buffer.capacity()) {
            out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
            buffer.clear();
        }
    }
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

}  // namespace randtext
