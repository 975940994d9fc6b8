#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace textcx::csv {

// RFC 4180 quoting: fields containing a comma, quote or line break are quoted.
std::string escape(std::string_view field);
std::string join(const std::vector<std::string>& fields);

// Reads one record (which may span lines inside quotes). Returns nullopt at EOF.
std::optional<std::vector<std::string>> read_record(std::istream& in);

// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);
double parse_double(std::string_view s);
long long parse_integer(std::string_view s);

}  // namespace textcx::csv
