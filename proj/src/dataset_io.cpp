#include "trackgrid/dataset_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "trackgrid/errors.hpp"

namespace trackgrid {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool parse_double(const std::string& field, double& out) {
    const std::string t = trim(field);
    if (t.empty()) return false;
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size();
}

bool parse_csv_row(const std::string& line, Vec2& out) {
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) return false;
    if (line.find(',', comma + 1) != std::string::npos) return false;
    return parse_double(line.substr(0, comma), out.x) &&
           parse_double(line.substr(comma + 1), out.y);
}

ParsedDataset dedupe(std::vector<Vec2> raw) {
    ParsedDataset out;
    std::set<std::pair<double, double>> seen;
    for (const Vec2& p : raw) {
        if (seen.insert({p.x, p.y}).second)
            out.points.push_back(p);
        else
            ++out.duplicates_removed;
    }
    return out;
}

ParsedDataset parse_csv(const std::string& text) {
    std::vector<Vec2> raw;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool saw_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        Vec2 p;
        if (parse_csv_row(t, p)) {
            raw.push_back(p);
            saw_content = true;
            continue;
        }
        // one non-numeric leading line is accepted as a header
        if (!saw_content && raw.empty()) {
            saw_content = true;
            continue;
        }
        throw DatasetParseError("malformed row '" + t + "' at line " + std::to_string(line_no),
                                line_no);
    }
    if (!saw_content) throw std::domain_error("dataset: file is empty");
    return dedupe(std::move(raw));
}

ParsedDataset parse_json(const std::string& text) {
    if (trim(text).empty()) throw std::domain_error("dataset: file is empty");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DatasetParseError(std::string("malformed JSON dataset: ") + e.what(), 0);
    }
    if (!doc.is_array()) throw DatasetParseError("JSON dataset must be an array of pairs", 0);
    std::vector<Vec2> raw;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& item = doc[i];
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
            throw DatasetParseError("JSON dataset entry " + std::to_string(i) +
                                        " is not a numeric pair",
                                    i + 1);
        raw.push_back({item[0].get<double>(), item[1].get<double>()});
    }
    return dedupe(std::move(raw));
}

}  // namespace

ParsedDataset parse_dataset_text(const std::string& text, DatasetFormat format) {
    if (format == DatasetFormat::Json) return parse_json(text);
    return parse_csv(text);
}

ParsedDataset parse_dataset(const std::string& path, DatasetFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("dataset: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();

    DatasetFormat resolved = format;
    if (resolved == DatasetFormat::Auto) {
        const auto dot = path.find_last_of('.');
        std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        resolved = ext == "json" ? DatasetFormat::Json : DatasetFormat::Csv;
    }
    return parse_dataset_text(buffer.str(), resolved);
}

}  // namespace trackgrid
