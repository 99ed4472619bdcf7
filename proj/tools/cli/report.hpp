#pragma once

#include <parking/count.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace parking::cli {

using Json = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& text);

// Counts go out as JSON numbers while they fit in 64 bits.
Json count_json(Count value);

struct Report {
    std::string command;
    Json parameters = Json::object();
    Json results = Json::object();
    std::vector<std::string> table;
    std::vector<std::vector<std::string>> csv;
    std::optional<double> seconds;

    void line(std::string text) { table.push_back(std::move(text)); }
    void row(std::vector<std::string> cells) { csv.push_back(std::move(cells)); }

    Json to_json() const;
    void render(std::ostream& out, Format format) const;
};

std::string csv_escape(const std::string& cell);

} // namespace parking::cli
