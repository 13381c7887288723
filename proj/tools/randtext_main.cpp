// randtext: generate, measure and compare random-text word statistics.
//
// Subcommands:
//   predict    closed-form report for (m, q, N)
//   simulate   seeded corpus simulation -> stats JSON (+ optional byte corpus)
//   analyze    real text or frequency CSV -> profile + stats JSON
//   compare    stats JSON vs model predictions -> comparison report
//   fit        rank/frequency table -> exponent estimate
//
// Exit codes: 0 ok, 1 comparison failures, 2 usage/domain errors, 3 I/O.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "randtext/analytic.hpp"
#include "randtext/compare.hpp"
#include "randtext/corpus.hpp"
#include "randtext/json_io.hpp"
#include "randtext/pipeline.hpp"
#include "randtext/unicode.hpp"
#include "randtext/version.hpp"
#include "randtext/zipf_fit.hpp"

namespace fs = std::filesystem;
using namespace randtext;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComparisonFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string output_path(const std::string& explicit_path,
                        const std::string& default_name) {
    if (!explicit_path.empty()) return explicit_path;
    if (const char* dir = std::getenv("RANDTEXT_OUT_DIR")) {
        return (fs::path(dir) / default_name).string();
    }
    return default_name;
}

json run_metadata(std::optional<std::uint64_t> seed = std::nullopt) {
    json meta{{"tool_version", kToolVersion}, {"prng_version", kPrngVersion}};
    if (seed) meta["seed"] = *seed;
    return meta;
}

struct ParamFlags {
    std::uint32_t m = 0;
    double q = 0.0;
    bool given() const { return m != 0; }
    ModelParams to_params() const { return ModelParams(m, q); }
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags, bool required) {
    auto* m_opt = cmd->add_option("-m,--alphabet-size", flags.m,
                                  "Number of non-space letters (>= 2)");
    auto* q_opt = cmd->add_option("-q,--space-prob", flags.q,
                                  "Per-symbol space probability in (0,1)");
    if (required) {
        m_opt->required();
        q_opt->required();
    }
    m_opt->needs(q_opt);
    q_opt->needs(m_opt);
}

int cmd_predict(std::uint32_t m, double q, std::int64_t n, std::int64_t k_max,
                const std::string& format) {
    const AnalyticReport report = build_analytic_report(ModelParams(m, q), n, k_max);
    if (format == "csv") {
        analytic_report_to_csv(report, std::cout);
    } else {
        json j = analytic_report_to_json(report);
        j["metadata"] = run_metadata();
        std::cout << j.dump(2) << '\n';
    }
    return kExitOk;
}

void write_csv_tables(const CorpusStats& stats, const std::string& prefix) {
    std::ofstream tokens(prefix + ".tokens.csv");
    if (!tokens) throw std::ios_base::failure("cannot write " + prefix + ".tokens.csv");
    tokens_table_to_csv(stats, tokens);
    std::ofstream ranks(prefix + ".ranks.csv");
    if (!ranks) throw std::ios_base::failure("cannot write " + prefix + ".ranks.csv");
    rank_table_to_csv(stats, ranks);
}

int cmd_simulate(std::uint32_t m, double q, std::uint64_t n, std::uint64_t seed,
                 std::uint64_t chunks, unsigned threads, std::int64_t tracked_k_max,
                 const std::string& stats_path, const std::string& corpus_path,
                 const std::string& csv_prefix) {
    const ModelParams params(m, q);
    SimulationOptions opts;
    opts.chunks = chunks;
    opts.threads = threads;
    opts.tracked_k_max = tracked_k_max;

    CorpusStats stats = run_simulation(params, n, seed, opts).finalize();
    stats.params_hint = params;

    if (!corpus_path.empty()) {
        std::ofstream out(corpus_path, std::ios::binary);
        if (!out) throw std::ios_base::failure("cannot write " + corpus_path);
        export_corpus_bytes(params, n, seed, out);
        if (!out) throw std::ios_base::failure("write failed for " + corpus_path);
        json sidecar{{"m", m}, {"q", q}, {"N", n}, {"seed", seed},
                     {"prng_version", kPrngVersion}};
        save_json_file(corpus_path + ".json", sidecar);
    }

    if (!csv_prefix.empty()) write_csv_tables(stats, csv_prefix);

    json j = corpus_stats_to_json(stats);
    j["metadata"] = run_metadata(seed);
    j["metadata"]["N"] = n;
    j["metadata"]["chunks"] = chunks;
    const std::string path = output_path(stats_path, "stats.json");
    save_json_file(path, j);

    std::cout << "words=" << stats.total_tokens << " symbols=" << n
              << " expected_words=" << expected_word_count(static_cast<std::int64_t>(n), q)
              << " stats=" << path << '\n';
    std::cout << "top ranks:";
    for (std::size_t i = 0; i < stats.rank_frequency.size() && i < 10; ++i) {
        std::cout << ' ' << stats.rank_frequency[i].word << ':'
                  << stats.rank_frequency[i].count;
    }
    std::cout << '\n';
    return kExitOk;
}

std::vector<std::pair<std::string, std::uint64_t>> load_frequency_csv(
    const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::vector<std::string> header;
    const auto rows = parse_csv(in, header);
    if (header.size() < 2) {
        throw std::domain_error("frequency CSV needs a token,count header");
    }
    std::vector<std::pair<std::string, std::uint64_t>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() < 2) {
            throw std::domain_error("frequency CSV row with fewer than 2 fields");
        }
        out.emplace_back(row[0], std::stoull(row[1]));
    }
    return out;
}

int cmd_analyze(const std::string& input, bool freq_csv, bool no_case_fold,
                bool keep_punctuation, const std::string& separators,
                std::int64_t tracked_k_max, const std::string& stats_path,
                const std::string& profile_path, const std::string& csv_prefix) {
    json stats_json;
    if (freq_csv) {
        const CorpusStats stats =
            stats_from_frequency_table(load_frequency_csv(input), tracked_k_max);
        if (!csv_prefix.empty()) write_csv_tables(stats, csv_prefix);
        stats_json = corpus_stats_to_json(stats);
    } else {
        NormalizationOptions opts;
        opts.case_fold = !no_case_fold;
        opts.strip_punctuation = !keep_punctuation;
        if (separators == "ascii") {
            opts.separator_policy = SeparatorPolicy::ascii_space_only;
        } else if (separators == "unicode") {
            opts.separator_policy = SeparatorPolicy::unicode_whitespace;
        } else {
            throw std::domain_error("unknown separator policy: " + separators);
        }
        const ProfileResult result =
            profile_text(read_text_file(input), opts, tracked_k_max);
        if (!csv_prefix.empty()) write_csv_tables(result.stats, csv_prefix);
        stats_json = corpus_stats_to_json(result.stats);
        stats_json["profile"] = profile_to_json(result.profile);
        save_json_file(output_path(profile_path, "profile.json"),
                       profile_to_json(result.profile));
    }
    stats_json["metadata"] = run_metadata();
    stats_json["metadata"]["input"] = input;
    const std::string path = output_path(stats_path, "stats.json");
    save_json_file(path, stats_json);
    std::cout << "stats=" << path << '\n';
    return kExitOk;
}

int cmd_compare(const std::string& stats_path, const ParamFlags& flags,
                const ToleranceConfig& tol, const std::string& report_path) {
    const json stats_json = load_json_file(stats_path);
    const CorpusStats stats = corpus_stats_from_json(stats_json);

    std::optional<ModelParams> params;
    if (flags.given()) {
        params = flags.to_params();
    } else if (stats.params_hint) {
        params = stats.params_hint;
    } else if (stats_json.contains("profile") && !stats_json["profile"].is_null()) {
        params = infer_params(profile_from_json(stats_json["profile"]));
    }
    if (!params) {
        throw std::domain_error(
            "no model parameters: pass -m/-q or use a stats file with an "
            "embedded profile or params hint");
    }

    const ComparisonReport report = compare_stats(stats, *params, stats.n_symbols, tol);
    json j = comparison_report_to_json(report);
    j["metadata"] = run_metadata();
    if (stats_json.contains("metadata")) {
        j["metadata"]["input_metadata"] = stats_json["metadata"];
    }
    if (!report_path.empty()) {
        save_json_file(report_path, j);
    }
    std::cout << j.dump(2) << '\n';
    return report.all_pass ? kExitOk : kExitComparisonFailed;
}

int cmd_fit(const std::string& table_path, std::uint64_t r_min, std::uint64_t r_max,
            std::uint64_t min_count, const std::string& method) {
    std::ifstream in(table_path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + table_path);
    std::vector<std::string> header;
    const auto rows = parse_csv(in, header);

    // rank,word,count tables carry ranks; token,count tables get ranks by
    // descending count.
    std::vector<RankCount> table;
    const bool has_rank = !header.empty() && header[0] == "rank";
    if (has_rank) {
        for (const auto& row : rows) {
            if (row.size() < 3) throw std::domain_error("rank CSV row too short");
            table.push_back({std::stoull(row[0]), std::stoull(row[2])});
        }
    } else {
        std::vector<std::uint64_t> counts;
        for (const auto& row : rows) {
            if (row.size() < 2) throw std::domain_error("frequency CSV row too short");
            counts.push_back(std::stoull(row[1]));
        }
        std::sort(counts.rbegin(), counts.rend());
        for (std::size_t i = 0; i < counts.size(); ++i) {
            table.push_back({i + 1, counts[i]});
        }
    }

    FitResult fit;
    if (method == "mle") {
        fit = fit_mle(std::span<const RankCount>(table), r_min);
    } else {
        fit = fit_ols(table, r_min, r_max, min_count);
    }
    json j = fit_result_to_json(fit);
    j["metadata"] = run_metadata();
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random-text null model: closed-form word statistics, seeded "
                 "simulation and corpus comparison"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    // predict
    auto* predict = app.add_subcommand("predict", "Closed-form report for (m, q, N)");
    ParamFlags predict_params;
    add_param_flags(predict, predict_params, true);
    std::int64_t predict_n = 0;
    std::int64_t predict_k_max = 0;
    std::string predict_format = "json";
    predict->add_option("-N,--text-length", predict_n, "Text length in symbols")
        ->required();
    predict->add_option("--k-max", predict_k_max,
                        "Largest tabulated word length (default: automatic)");
    predict->add_option("--format", predict_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Seeded corpus simulation");
    ParamFlags sim_params;
    add_param_flags(simulate, sim_params, true);
    std::uint64_t sim_n = 0, sim_seed = 0, sim_chunks = 1;
    unsigned sim_threads = 1;
    std::int64_t sim_tracked = 30;
    std::string sim_stats, sim_corpus;
    simulate->add_option("-N,--text-length", sim_n, "Symbols to generate")->required();
    simulate->add_option("--seed", sim_seed, "Master seed")->required();
    simulate->add_option("--chunks", sim_chunks, "Independent generation chunks");
    simulate->add_option("--threads", sim_threads, "Worker threads (output-neutral)");
    simulate->add_option("--tracked-k-max", sim_tracked,
                         "Type tracking cap on word length");
    simulate->add_option("--stats-out", sim_stats, "Stats JSON path");
    simulate->add_option("--corpus-out", sim_corpus,
                         "Raw byte corpus path (+ .json sidecar)");
    std::string sim_csv;
    simulate->add_option("--csv-out", sim_csv,
                         "Prefix for .tokens.csv and .ranks.csv tables");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Profile real text or a frequency CSV");
    std::string an_input, an_separators = "unicode", an_stats, an_profile;
    bool an_freq_csv = false, an_no_fold = false, an_keep_punct = false;
    std::int64_t an_tracked = 30;
    analyze->add_option("input", an_input, "UTF-8 text file or token,count CSV")
        ->required();
    analyze->add_flag("--freq-csv", an_freq_csv, "Input is a token,count CSV");
    analyze->add_flag("--no-case-fold", an_no_fold, "Keep letter case");
    analyze->add_flag("--keep-punctuation", an_keep_punct, "Keep punctuation");
    analyze->add_option("--separators", an_separators, "ascii or unicode")
        ->check(CLI::IsMember({"ascii", "unicode"}));
    analyze->add_option("--tracked-k-max", an_tracked,
                        "Type tracking cap on word length");
    analyze->add_option("--stats-out", an_stats, "Stats JSON path");
    analyze->add_option("--profile-out", an_profile, "Profile JSON path");
    std::string an_csv;
    analyze->add_option("--csv-out", an_csv,
                        "Prefix for .tokens.csv and .ranks.csv tables");

    // compare
    auto* compare = app.add_subcommand("compare", "Stats JSON vs model predictions");
    std::string cmp_stats, cmp_report;
    ParamFlags cmp_params;
    ToleranceConfig tol;
    compare->add_option("stats", cmp_stats, "Stats JSON from simulate/analyze")
        ->required();
    add_param_flags(compare, cmp_params, false);
    compare->add_option("--report-out", cmp_report, "Also write the report here");
    compare->add_option("--tol-total", tol.total_tokens, "Token total tolerance");
    compare->add_option("--tol-tokens", tol.tokens_per_length,
                        "Per-length token tolerance");
    compare->add_option("--tol-types", tol.types_per_length,
                        "Per-length type tolerance");
    compare->add_option("--tol-hapax", tol.hapax_per_length,
                        "Per-length hapax tolerance");
    compare->add_option("--tol-alpha", tol.alpha_abs, "Absolute exponent tolerance");
    compare->add_option("--tol-kstar", tol.kstar_abs,
                        "Absolute critical-length tolerance");
    compare->add_option("--tokens-floor", tol.tokens_floor,
                        "Enforce token rows with predictions >= this");
    compare->add_option("--types-floor", tol.types_floor,
                        "Enforce type rows with predictions >= this");
    compare->add_option("--hapax-floor", tol.hapax_floor,
                        "Enforce hapax rows with predictions >= this");
    compare->add_option("--fit-r-min", tol.fit_r_min, "Exponent fit window start");
    compare->add_option("--fit-r-max", tol.fit_r_max, "Exponent fit window end");

    // fit
    auto* fit = app.add_subcommand("fit", "Estimate the rank-frequency exponent");
    std::string fit_table, fit_method = "ols";
    std::uint64_t fit_r_min = 10, fit_r_max = 10000, fit_min_count = 5;
    fit->add_option("table", fit_table, "rank,word,count or token,count CSV")
        ->required();
    fit->add_option("--r-min", fit_r_min, "Window start (MLE: cutoff)");
    fit->add_option("--r-max", fit_r_max, "Window end (OLS only)");
    fit->add_option("--min-count", fit_min_count, "Drop entries below this count");
    fit->add_option("--method", fit_method, "ols or mle")
        ->check(CLI::IsMember({"ols", "mle"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*predict) {
            return cmd_predict(predict_params.m, predict_params.q, predict_n,
                               predict_k_max, predict_format);
        }
        if (*simulate) {
            return cmd_simulate(sim_params.m, sim_params.q, sim_n, sim_seed,
                                sim_chunks, sim_threads, sim_tracked, sim_stats,
                                sim_corpus, sim_csv);
        }
        if (*analyze) {
            return cmd_analyze(an_input, an_freq_csv, an_no_fold, an_keep_punct,
                               an_separators, an_tracked, an_stats, an_profile,
                               an_csv);
        }
        if (*compare) {
            return cmd_compare(cmp_stats, cmp_params, tol, cmp_report);
        }
        if (*fit) {
            return cmd_fit(fit_table, fit_r_min, fit_r_max, fit_min_count, fit_method);
        }
    } catch (const uni::DecodeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const EmptyCorpusError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}
