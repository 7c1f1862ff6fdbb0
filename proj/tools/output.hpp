#pragma once

#include <string>
#include <vector>

#include "lwf/errors.hpp"

namespace lwf::cli {

/// %.17g, with −0 printed as 0 and non-finite values as nan / inf / -inf.
std::string fmt_double(double x);

/// Comma-joined CSV row.
std::string csv_row(const std::vector<std::string>& cells);

/// Writes text to path, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

}  // namespace lwf::cli
