#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "randtext/analytic.hpp"
#include "randtext/compare.hpp"
#include "randtext/corpus.hpp"
#include "randtext/generator.hpp"
#include "randtext/json_io.hpp"
#include "randtext/pipeline.hpp"
#include "randtext/segmenter.hpp"
#include "randtext/version.hpp"
#include "randtext/zipf_fit.hpp"

namespace py = pybind11;
using namespace randtext;

namespace {

// Reuse the JSON schemas for the dict-shaped return values.
py::object to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

json from_py(const py::object& obj) {
    const std::string dumped =
        py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return json::parse(dumped);
}

ModelParams make_params(std::uint32_t m, double q,
                        const std::optional<std::vector<double>>& letter_probs) {
    if (letter_probs) return ModelParams(m, q, *letter_probs);
    return ModelParams(m, q);
}

}  // namespace

PYBIND11_MODULE(_randtext, mod) {
    mod.doc() = "Random-text null model: closed-form word statistics, seeded "
                "simulation, corpus profiling and rank-frequency fitting.";
    mod.attr("__version__") = kToolVersion;
    mod.attr("PRNG_VERSION") = kPrngVersion;

    py::class_<ModelParams>(mod, "ModelParams")
        .def(py::init(&make_params), py::arg("m"), py::arg("q"),
             py::arg("letter_probs") = std::nullopt)
        .def_property_readonly("m", &ModelParams::alphabet_size)
        .def_property_readonly("q", &ModelParams::space_prob)
        .def_property_readonly("uniform", &ModelParams::uniform)
        .def("__repr__", [](const ModelParams& p) {
            std::ostringstream s;
            s << "ModelParams(m=" << p.alphabet_size() << ", q=" << p.space_prob()
              << ")";
            return s.str();
        });

    mod.def("word_length_pmf", &word_length_pmf, py::arg("q"), py::arg("k"));
    mod.def("word_length_moments", [](double q) {
        const LengthMoments m = word_length_moments(q);
        return py::make_tuple(m.mean, m.variance);
    }, py::arg("q"));
    mod.def("expected_word_count", &expected_word_count, py::arg("n"), py::arg("q"));
    mod.def("expected_tokens_of_length", &expected_tokens_of_length,
            py::arg("n"), py::arg("q"), py::arg("k"));
    mod.def("word_probability", &word_probability, py::arg("params"), py::arg("k"));
    mod.def("expected_occurrences", &expected_occurrences, py::arg("params"),
            py::arg("n"), py::arg("k"));
    mod.def("expected_distinct_types", &expected_distinct_types, py::arg("params"),
            py::arg("n"), py::arg("k"));
    mod.def("expected_unique_types", &expected_unique_types, py::arg("params"),
            py::arg("n"), py::arg("k"));
    mod.def("critical_length", [](const ModelParams& params, std::int64_t n) {
        const CriticalLength c = critical_length(params, n);
        return py::make_tuple(c.value, c.has_core);
    }, py::arg("params"), py::arg("n"));
    mod.def("zipf_exponent", &zipf_exponent, py::arg("params"));
    mod.def("rank_boundary", &rank_boundary, py::arg("m"), py::arg("k"));
    mod.def("predicted_rank_frequency", &predicted_rank_frequency,
            py::arg("params"), py::arg("rank"));
    mod.def("poisson_occurrence_pmf", &poisson_occurrence_pmf, py::arg("mean"),
            py::arg("count"));
    mod.def("exact_bruteforce_word_stats",
            [](std::int64_t n, double q, std::int64_t k_max) {
                const BruteForceStats s = exact_bruteforce_word_stats(n, q, k_max);
                py::dict by_length;
                for (std::size_t k = 1; k < s.expected_tokens_by_length.size(); ++k) {
                    by_length[py::int_(k)] = s.expected_tokens_by_length[k];
                }
                py::dict out;
                out["expected_words"] = s.expected_words;
                out["expected_tokens_by_length"] = by_length;
                return out;
            },
            py::arg("n"), py::arg("q"), py::arg("k_max"));
    mod.def("analytic_report",
            [](const ModelParams& params, std::int64_t n, std::int64_t k_max) {
                return to_py(analytic_report_to_json(
                    build_analytic_report(params, n, k_max)));
            },
            py::arg("params"), py::arg("n"), py::arg("k_max") = 0);

    mod.def("derive_chunk_seed", &derive_chunk_seed, py::arg("seed"),
            py::arg("chunk_index"));
    mod.def("generate_symbols",
            [](const ModelParams& params, std::uint64_t n, std::uint64_t seed,
               std::uint64_t chunk_index) {
                SymbolStream stream({params, n, seed, chunk_index});
                std::vector<SymbolId> out(n);
                stream.generate(out);
                return out;
            },
            py::arg("params"), py::arg("n"), py::arg("seed"),
            py::arg("chunk_index") = 0);
    mod.def("segment_symbols", [](const std::vector<SymbolId>& symbols) {
        std::vector<std::vector<SymbolId>> words;
        segment(symbols, [&](std::span<const SymbolId> w) {
            words.emplace_back(w.begin(), w.end());
        });
        return words;
    }, py::arg("symbols"));

    mod.def("simulate",
            [](const ModelParams& params, std::uint64_t n, std::uint64_t seed,
               std::uint64_t chunks, unsigned threads, std::int64_t tracked_k_max) {
                SimulationOptions opts;
                opts.chunks = chunks;
                opts.threads = threads;
                opts.tracked_k_max = tracked_k_max;
                const CorpusStats stats =
                    run_simulation(params, n, seed, opts).finalize();
                return to_py(corpus_stats_to_json(stats));
            },
            py::arg("params"), py::arg("n"), py::arg("seed"),
            py::arg("chunks") = 1, py::arg("threads") = 1,
            py::arg("tracked_k_max") = 30);

    mod.def("profile_text",
            [](const std::string& text, bool case_fold, bool strip_punctuation,
               const std::string& separators, std::int64_t tracked_k_max) {
                NormalizationOptions opts;
                opts.case_fold = case_fold;
                opts.strip_punctuation = strip_punctuation;
                if (separators == "ascii_space_only") {
                    opts.separator_policy = SeparatorPolicy::ascii_space_only;
                } else if (separators == "unicode_whitespace") {
                    opts.separator_policy = SeparatorPolicy::unicode_whitespace;
                } else {
                    throw std::domain_error("unknown separator policy: " + separators);
                }
                const ProfileResult result = profile_text(text, opts, tracked_k_max);
                return py::make_tuple(to_py(profile_to_json(result.profile)),
                                      to_py(corpus_stats_to_json(result.stats)));
            },
            py::arg("text"), py::arg("case_fold") = true,
            py::arg("strip_punctuation") = true,
            py::arg("separators") = "unicode_whitespace",
            py::arg("tracked_k_max") = 30);
    mod.def("infer_params", [](const py::dict& profile) {
        return infer_params(profile_from_json(from_py(profile)));
    }, py::arg("profile"));

    mod.def("fit_ols",
            [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& table,
               std::uint64_t r_min, std::uint64_t r_max, std::uint64_t min_count) {
                std::vector<RankCount> rc;
                rc.reserve(table.size());
                for (const auto& [rank, count] : table) rc.push_back({rank, count});
                return to_py(fit_result_to_json(fit_ols(rc, r_min, r_max, min_count)));
            },
            py::arg("table"), py::arg("r_min"), py::arg("r_max"),
            py::arg("min_count") = 5);
    mod.def("fit_mle",
            [](const std::vector<std::uint64_t>& observations, std::uint64_t cutoff) {
                return to_py(fit_result_to_json(
                    fit_mle(std::span<const std::uint64_t>(observations), cutoff)));
            },
            py::arg("observations"), py::arg("cutoff") = 1);

    mod.def("compare",
            [](const py::dict& stats, const ModelParams& params) {
                const CorpusStats cs = corpus_stats_from_json(from_py(stats));
                return to_py(comparison_report_to_json(
                    compare_stats(cs, params, cs.n_symbols)));
            },
            py::arg("stats"), py::arg("params"));
}
