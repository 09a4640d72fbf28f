#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace curvecount {

/// One machine-readable result row. Integer results are exact decimal
/// strings; polynomial results use the canonical descending-power form.
struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string result;
    std::string provenance;
    std::int64_t elapsed_ms = 0;
};

enum class Format { Plain, Json, Csv };

Format format_from_string(const std::string& s);

/// Plain shows just the result; json/csv carry the whole record.
std::string render(const OutputRecord& rec, Format f);
std::string csv_header();

}  // namespace curvecount
