#pragma once

#include <string>
#include <vector>

namespace synthtree::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// RFC-4180 style reader: quoted fields, embedded commas/quotes/newlines,
/// CRLF or LF line ends. Header row required. Throws RaggedRows when a data
/// row's field count differs from the header's.
Table read_csv(const std::string& path);
Table parse_csv(const std::string& text);

/// Shortest round-trip formatting (std::to_chars); parsing the result yields
/// the identical double, which the external-prediction exchange relies on.
std::string format_double(double v);

/// Quote a field only when needed.
std::string escape_field(const std::string& field);

void write_csv(const std::string& path, const Table& table);

/// Parse a decimal field ('.' separator). Returns false on non-numeric or
/// empty input instead of throwing; callers decide what a miss means.
bool parse_double(const std::string& field, double& out);

}  // namespace synthtree::csv
