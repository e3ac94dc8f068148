#include "catswarm/text.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace catswarm::text {

std::string format_double(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string format_sci6(double v) {
    if (std::isnan(v)) return "NAN";
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 5);
    std::string s(buf, r.ptr);
    for (char& c : s)
        if (c == 'e') c = 'E';
    return s;
}

double parse_double(std::string_view s, const std::string& context) {
    s = trim(s);
    double v = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
        throw std::invalid_argument(context + ": not a number: '" + std::string(s) + "'");
    return v;
}

long long parse_int(std::string_view s, const std::string& context) {
    s = trim(s);
    long long v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
        throw std::invalid_argument(context + ": not an integer: '" + std::string(s) + "'");
    return v;
}

unsigned long long parse_u64(std::string_view s, const std::string& context) {
    s = trim(s);
    unsigned long long v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
        throw std::invalid_argument(context + ": not an unsigned integer: '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char delim) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(delim, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::string join(std::span<const double> values, char delim) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(delim);
        out += format_double(values[i]);
    }
    return out;
}

std::string join_compact(std::span<const double> values) {
    if (values.empty()) return {};
    bool uniform = true;
    for (double v : values)
        if (v != values.front()) uniform = false;
    if (uniform) return format_double(values.front());
    return join(values, ';');
}

}  // namespace catswarm::text
