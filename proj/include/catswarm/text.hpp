#ifndef CATSWARM_TEXT_HPP
#define CATSWARM_TEXT_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace catswarm::text {

/// Shortest decimal string that round-trips the exact double value.
/// Locale-independent (std::to_chars).
std::string format_double(double v);

/// Fixed scientific notation with 6 significant digits, uppercase exponent
/// marker, matching the comparison tables' style: 3.50000E-14.
std::string format_sci6(double v);

/// Locale-independent parse; throws std::invalid_argument with `context`
/// in the message on failure.
double parse_double(std::string_view s, const std::string& context);

long long parse_int(std::string_view s, const std::string& context);
unsigned long long parse_u64(std::string_view s, const std::string& context);

std::vector<std::string_view> split(std::string_view s, char delim);
std::string_view trim(std::string_view s);

std::string join(std::span<const double> values, char delim);

/// Single number when all values coincide, otherwise ';'-joined list.
std::string join_compact(std::span<const double> values);

}  // namespace catswarm::text

#endif
