#include "randtext/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "randtext/unicode.hpp"

namespace randtext {

namespace {

bool valid_utf8(std::string_view s) {
    std::size_t pos = 0;
    try {
        while (pos < s.size()) uni::decode_utf8(s, pos);
    } catch (const uni::DecodeError&) {
        return false;
    }
    return true;
}

// Lossless-for-display transcoding of raw byte words into JSON-safe text.
std::string json_safe_word(const std::string& word) {
    if (valid_utf8(word)) return word;
    std::string out;
    out.reserve(word.size() * 2);
    for (unsigned char c : word) {
        uni::append_utf8(c, out);
    }
    return out;
}

template <typename T>
json counts_to_object(const std::vector<T>& by_length) {
    json obj = json::object();
    for (std::size_t k = 1; k < by_length.size(); ++k) {
        obj[std::to_string(k)] = by_length[k];
    }
    return obj;
}

template <typename T>
std::vector<T> counts_from_object(const json& obj) {
    std::size_t max_k = 0;
    for (const auto& [key, value] : obj.items()) {
        max_k = std::max(max_k, static_cast<std::size_t>(std::stoull(key)));
    }
    std::vector<T> out(max_k + 1, T{});
    for (const auto& [key, value] : obj.items()) {
        out[std::stoull(key)] = value.template get<T>();
    }
    return out;
}

void write_csv_field(std::ostream& out, const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) {
        out << field;
        return;
    }
    out << '"';
    for (char c : field) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

}  // namespace

json params_to_json(const ModelParams& params) {
    json j{{"m", params.alphabet_size()}, {"q", params.space_prob()}};
    if (params.letter_probs()) {
        j["letter_probs"] = *params.letter_probs();
    }
    return j;
}

ModelParams params_from_json(const json& j) {
    const auto m = j.at("m").get<std::uint32_t>();
    const auto q = j.at("q").get<double>();
    if (j.contains("letter_probs") && !j["letter_probs"].is_null()) {
        return ModelParams(m, q, j["letter_probs"].get<std::vector<double>>());
    }
    return ModelParams(m, q);
}

json analytic_report_to_json(const AnalyticReport& report) {
    json j;
    j["schema"] = "randtext.analytic_report.v1";
    j["params"] = params_to_json(report.params);
    j["N"] = report.text_length;
    j["k_max"] = report.k_max;
    j["expected_words"] = report.expected_words;
    j["critical_length"] = report.critical.value;
    j["zipf_alpha"] = report.zipf_alpha;
    j["word_length_pmf"] = counts_to_object(report.word_length_probability);
    j["expected_tokens_by_length"] = counts_to_object(report.expected_tokens_by_length);
    j["word_probability_by_length"] = counts_to_object(report.word_probability_by_length);
    j["expected_occurrences_by_length"] =
        counts_to_object(report.expected_occurrences_by_length);
    j["expected_distinct_by_length"] = counts_to_object(report.expected_distinct_by_length);
    j["expected_unique_by_length"] = counts_to_object(report.expected_unique_by_length);
    json bounds = json::object();
    for (std::size_t k = 0; k < report.rank_boundaries.size(); ++k) {
        bounds[std::to_string(k)] = report.rank_boundaries[k];
    }
    j["rank_boundaries"] = bounds;
    j["rank_boundary_limit"] = report.rank_boundary_limit;
    j["flags"] = {{"no_core", report.no_core},
                  {"lambda_underflow_lengths", report.lambda_underflow_lengths}};
    return j;
}

void analytic_report_to_csv(const AnalyticReport& report, std::ostream& out) {
    out << "k,word_length_pmf,expected_tokens,word_probability,"
           "expected_occurrences,expected_distinct,expected_unique\n";
    for (std::int64_t k = 1; k <= report.k_max; ++k) {
        out << k << ',' << report.word_length_probability[k] << ','
            << report.expected_tokens_by_length[k] << ','
            << report.word_probability_by_length[k] << ','
            << report.expected_occurrences_by_length[k] << ','
            << report.expected_distinct_by_length[k] << ','
            << report.expected_unique_by_length[k] << '\n';
    }
}

json corpus_stats_to_json(const CorpusStats& stats) {
    json j;
    j["schema"] = "randtext.corpus_stats.v1";
    j["n_symbols"] = stats.n_symbols;
    j["total_tokens"] = stats.total_tokens;
    j["tracked_k_max"] = stats.tracked_k_max;
    j["untracked_long_tokens"] = stats.untracked_long_tokens;
    j["tokens_by_length"] = counts_to_object(stats.tokens_by_length);
    j["types_by_length"] = counts_to_object(stats.types_by_length);
    j["hapax_by_length"] = counts_to_object(stats.hapax_by_length);
    json table = json::array();
    for (const auto& entry : stats.rank_frequency) {
        table.push_back(json::array(
            {entry.rank, json_safe_word(entry.word), entry.count}));
    }
    j["rank_frequency"] = table;
    j["params_hint"] =
        stats.params_hint ? params_to_json(*stats.params_hint) : json(nullptr);
    return j;
}

CorpusStats corpus_stats_from_json(const json& j) {
    CorpusStats stats;
    stats.n_symbols = j.at("n_symbols").get<std::uint64_t>();
    stats.total_tokens = j.at("total_tokens").get<std::uint64_t>();
    stats.tracked_k_max = j.at("tracked_k_max").get<std::int64_t>();
    stats.untracked_long_tokens = j.at("untracked_long_tokens").get<std::uint64_t>();
    stats.tokens_by_length = counts_from_object<std::uint64_t>(j.at("tokens_by_length"));
    stats.types_by_length = counts_from_object<std::uint64_t>(j.at("types_by_length"));
    stats.hapax_by_length = counts_from_object<std::uint64_t>(j.at("hapax_by_length"));
    for (const auto& row : j.at("rank_frequency")) {
        stats.rank_frequency.push_back({row.at(0).get<std::uint64_t>(),
                                        row.at(1).get<std::string>(),
                                        row.at(2).get<std::uint64_t>()});
    }
    if (j.contains("params_hint") && !j["params_hint"].is_null()) {
        stats.params_hint = params_from_json(j["params_hint"]);
    }
    return stats;
}

json profile_to_json(const CorpusProfile& profile) {
    json hist = json::object();
    for (const auto& [ch, count] : profile.letter_histogram) {
        hist[json_safe_word(ch)] = count;
    }
    return json{{"schema", "randtext.corpus_profile.v1"},
                {"n_chars", profile.n_chars},
                {"n_separators", profile.n_separators},
                {"q_hat", profile.q_hat},
                {"m_hat", profile.m_hat},
                {"letter_histogram", hist}};
}

CorpusProfile profile_from_json(const json& j) {
    CorpusProfile profile;
    profile.n_chars = j.at("n_chars").get<std::uint64_t>();
    profile.n_separators = j.at("n_separators").get<std::uint64_t>();
    profile.q_hat = j.at("q_hat").get<double>();
    profile.m_hat = j.at("m_hat").get<std::uint64_t>();
    for (const auto& [ch, count] : j.at("letter_histogram").items()) {
        profile.letter_histogram[ch] = count.get<std::uint64_t>();
    }
    return profile;
}

json fit_result_to_json(const FitResult& fit) {
    return json{{"schema", "randtext.fit_result.v1"},
                {"alpha_hat", fit.alpha_hat},
                {"stderr", fit.stderr_value},
                {"method", to_string(fit.method)},
                {"rank_window", {fit.r_min, fit.r_max}},
                {"n_points", fit.n_points}};
}

json comparison_report_to_json(const ComparisonReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json r{{"name", row.name},
               {"empirical", row.empirical},
               {"predicted", row.predicted},
               {"rel_error", row.rel_error},
               {"tolerance", row.tolerance},
               {"pass", row.pass},
               {"enforced", row.enforced}};
        if (row.k) r["k"] = *row.k;
        if (!row.note.empty()) r["note"] = row.note;
        rows.push_back(r);
    }
    json j{{"schema", "randtext.comparison_report.v1"},
           {"params", params_to_json(report.params)},
           {"N", report.n_symbols},
           {"k_max", report.k_max},
           {"all_pass", report.all_pass},
           {"rows", rows}};
    if (report.alpha_fit) j["alpha_fit"] = fit_result_to_json(*report.alpha_fit);
    return j;
}

void tokens_table_to_csv(const CorpusStats& stats, std::ostream& out) {
    out << "k,tokens,types,hapaxes\n";
    const std::size_t k_hi = std::max(stats.tokens_by_length.size(),
                                      stats.types_by_length.size());
    for (std::size_t k = 1; k < k_hi; ++k) {
        out << k << ',' << stats.tokens_at(static_cast<std::int64_t>(k)) << ','
            << stats.types_at(static_cast<std::int64_t>(k)) << ','
            << stats.hapax_at(static_cast<std::int64_t>(k)) << '\n';
    }
}

void rank_table_to_csv(const CorpusStats& stats, std::ostream& out) {
    out << "rank,word,count\n";
    for (const auto& entry : stats.rank_frequency) {
        out << entry.rank << ',';
        write_csv_field(out, json_safe_word(entry.word));
        out << ',' << entry.count << '\n';
    }
}

std::vector<std::vector<std::string>> parse_csv(std::istream& in,
                                                std::vector<std::string>& header) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> current;
    std::string field;
    bool quoted = false;
    bool first_row = true;
    bool any = false;

    const auto end_field = [&] {
        current.push_back(std::move(field));
        field.clear();
    };
    const auto end_row = [&] {
        end_field();
        if (first_row) {
            header = std::move(current);
            first_row = false;
        } else {
            rows.push_back(std::move(current));
        }
        current.clear();
    };

    char c;
    while (in.get(c)) {
        any = true;
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            end_row();
        } else {
            field.push_back(c);
        }
    }
    if (any && (!field.empty() || !current.empty())) {
        end_row();
    }
    return rows;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open " + path);
    }
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) {
        throw std::ios_base::failure("cannot write " + path);
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw std::ios_base::failure("write failed for " + path);
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::ios_base::failure("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace randtext
