#pragma once

#include "sfq/harness.hpp"

#include <string>

namespace sfq {

enum class Format { Json, Csv };
Format parse_format(const std::string& s);

std::string report_emit(const ScanReport& r, Format f);
// Inverse of the JSON form.
ScanReport report_parse(const std::string& json);

std::string distribution_json(const ValueDistribution& d, bool all_counts);

} // namespace sfq
