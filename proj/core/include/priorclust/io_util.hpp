#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace priorclust {

/// Shortest decimal representation that round-trips a float64 exactly
/// (std::to_chars). Every file this library writes serializes floats
/// through here so that write/read cycles are bit-exact.
std::string format_double(double value);

/// Strict float parse: the whole field must be consumed. Throws InputError.
double parse_double(std::string_view text);

/// Strict integer parse of a whole field. Throws InputError.
long parse_long(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// Writes via a temp file in the same directory followed by a rename, so
/// a concurrent reader never observes a half-written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Minimal CSV support: quotes a field when it contains the delimiter,
/// a quote, or a newline; split honors double-quote escaping.
std::string csv_quote(std::string_view field, char delimiter = ',');
std::vector<std::string> csv_split(std::string_view line, char delimiter = ',');

/// Splits file content into lines, accepting both \n and \r\n endings.
std::vector<std::string> split_lines(std::string_view content);

}  // namespace priorclust
