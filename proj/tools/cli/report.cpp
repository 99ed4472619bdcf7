#include "cli/report.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace parking::cli {

Format parse_format(const std::string& text)
{
    if (text == "table") return Format::Table;
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + text + "' (table, json, csv)");
}

Json count_json(Count value)
{
    if (value <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(value);
    return to_string(value);
}

Json Report::to_json() const
{
    Json doc;
    doc["command"] = command;
    doc["parameters"] = parameters;
    doc["results"] = results;
    if (seconds) doc["timing"] = {{"seconds", *seconds}};
    return doc;
}

std::string csv_escape(const std::string& cell)
{
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void Report::render(std::ostream& out, Format format) const
{
    switch (format) {
    case Format::Json:
        out << to_json().dump(2) << "\n";
        break;
    case Format::Csv:
        for (const auto& cells : csv) {
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
            out << "\n";
        }
        break;
    case Format::Table:
        for (const auto& text : table) out << text << "\n";
        if (seconds) out << "elapsed: " << *seconds << " s\n";
        break;
    }
}

} // namespace parking::cli
