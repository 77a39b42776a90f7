#pragma once

#include <string>
#include <vector>

namespace ladders {

/// Shortest-lossless rendering of a double for CSV cells: 17 significant
/// digits, '.' decimal separator, round-trips bit-exactly.
std::string csv_double(double v);

/// Split one CSV line on commas (no quoting in any of our formats).
std::vector<std::string> csv_split(const std::string& line);

}  // namespace ladders
