#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "randtext/analytic.hpp"
#include "randtext/compare.hpp"
#include "randtext/corpus.hpp"
#include "randtext/params.hpp"
#include "randtext/stats.hpp"
#include "randtext/zipf_fit.hpp"

namespace randtext {

using json = nlohmann::json;

// Schemas. Maps over word lengths are JSON objects keyed by decimal k.
// Rank tables are arrays of [rank, word, count]. Words that are not valid
// UTF-8 (possible for exported alphabets beyond ASCII) are transcoded
// byte-for-byte as U+0000..U+00FF before they enter a JSON document.

json params_to_json(const ModelParams& params);
ModelParams params_from_json(const json& j);

json analytic_report_to_json(const AnalyticReport& report);
void analytic_report_to_csv(const AnalyticReport& report, std::ostream& out);

json corpus_stats_to_json(const CorpusStats& stats);
CorpusStats corpus_stats_from_json(const json& j);

json profile_to_json(const CorpusProfile& profile);
CorpusProfile profile_from_json(const json& j);

json fit_result_to_json(const FitResult& fit);
json comparison_report_to_json(const ComparisonReport& report);

// CSV tables per the documented schemas (UTF-8, LF, header row).
void tokens_table_to_csv(const CorpusStats& stats, std::ostream& out);
void rank_table_to_csv(const CorpusStats& stats, std::ostream& out);

// Parses a (token,count) or (rank,word,count) CSV; `header` receives the
// column names. RFC 4180 quoting is honored.
std::vector<std::vector<std::string>> parse_csv(std::istream& in,
                                                std::vector<std::string>& header);

// File helpers.
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);
std::string read_text_file(const std::string& path);

}  // namespace randtext
