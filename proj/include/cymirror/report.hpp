#pragma once

#include "cymirror/euler.hpp"

#include <string>
#include <string_view>

namespace cymirror {

/// Stable JSON object with rationals as "p/q" strings and chi_str_mirror
/// null when absent. Only the published fields are written; the individual
/// routes of EulerReport are left out.
std::string to_json(const EulerReport& report);

/// Inverse of to_json. Throws ParseError.
EulerReport report_from_json(std::string_view text);

}  // namespace cymirror
