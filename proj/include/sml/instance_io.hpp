#pragma once

#include <filesystem>
#include <string>

#include "sml/instance.hpp"

namespace sml {

// Instance document format (format_version 1): a JSON object
//   { "format_version": 1,
//     "u0": <number >= 0>,
//     "products": [ { "id": <string>, "level": <integer >= 1>,
//                     "revenue": <number >= 0>, "utility": <number > 0> }, ... ] }
// Ids must be unique. Serialization uses shortest round-trip doubles, so
// parse(serialize(x)) == x for every valid instance.

/// Parse a document; ParseError with a diagnostic on any violation.
Instance parse_instance(const std::string& text);

/// Read and parse a file; ParseError mentions the path.
Instance load_instance(const std::filesystem::path& path);

std::string serialize_instance(const Instance& instance);

void save_instance(const Instance& instance, const std::filesystem::path& path);

} // namespace sml
