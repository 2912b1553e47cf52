#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permstats/distributions.hpp"
#include "permstats/oeis.hpp"
#include "permstats/series.hpp"

namespace permstats {

enum class OutputFormat { json, csv, markdown, bfile };

std::string_view format_name(OutputFormat f);
OutputFormat parse_format(std::string_view name);

// One JSON object per n: {"basis", "stat", "n", "counts", "method"}. A single row renders as an
// object, several as an array. CSV is "n,k,count". The b-file reads each row for k = 0..max k.
std::string render_table(const DistTable& table, OutputFormat format);

// Inverse of the JSON rendering; accepts an object or an array of objects sharing basis, stat and method.
DistTable parse_table_json(std::string_view text);

std::string render_series(std::string_view name, const BivariateSeries& series, unsigned max_n, OutputFormat format);

// Human-readable: one line per report.
std::string render_reports_text(const std::vector<VerifyReport>& reports);
std::string render_reports_json(const std::vector<VerifyReport>& reports, unsigned max_n);

// "index value" lines, indices from first_index.
std::string render_bfile(const std::vector<Count>& terms, std::int64_t first_index = 1);

} // namespace permstats
