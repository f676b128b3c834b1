#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trackgrid/geometry.hpp"

namespace trackgrid {

enum class DatasetFormat { Auto, Csv, Json };

struct ParsedDataset {
    std::vector<Vec2> points;           // duplicates removed, input order kept
    std::size_t duplicates_removed = 0;
};

// CSV: one "x,y" pair per line, optional detected header line. JSON: array of
// [x, y] pairs. Auto picks by file extension (defaults to CSV). Malformed
// content raises DatasetParseError; a file without any syntax (empty or
// whitespace only) is a domain error.
ParsedDataset parse_dataset(const std::string& path, DatasetFormat format = DatasetFormat::Auto);

ParsedDataset parse_dataset_text(const std::string& text, DatasetFormat format);

}  // namespace trackgrid
