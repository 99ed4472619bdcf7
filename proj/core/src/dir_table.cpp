#include "parking/dir_table.hpp"

#include <json.hpp>

#include <stdexcept>

namespace parking {

Direction DirTable::at(std::size_t block_size, std::size_t i) const
{
    if (block_size == 0 || i == 0 || i > block_size)
        throw std::domain_error("DirTable index out of range");
    if (block_size > rows.size()) {
        if (strict)
            throw TableRangeError("block of size " + std::to_string(block_size) +
                                  " exceeds table r_max " + std::to_string(rows.size()));
        return default_beyond;
    }
    return rows[block_size - 1][i - 1];
}

void DirTable::validate() const
{
    for (std::size_t r = 1; r <= rows.size(); ++r) {
        if (rows[r - 1].size() != r)
            throw std::invalid_argument("DirTable row " + std::to_string(r) + " has " +
                                        std::to_string(rows[r - 1].size()) + " entries");
    }
}

namespace {

Direction parse_dir(const nlohmann::json& value)
{
    if (!value.is_string()) throw std::invalid_argument("DirTable entries must be \"L\" or \"R\"");
    const auto& s = value.get_ref<const std::string&>();
    if (s != "L" && s != "R") throw std::invalid_argument("DirTable entry '" + s + "'");
    return direction_from_char(s[0]);
}

} // namespace

DirTable parse_dir_table(std::string_view json_text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("DirTable JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("DirTable JSON must be an object");
    if (doc.value("type", "") != "memoryless_local")
        throw std::invalid_argument("DirTable type must be \"memoryless_local\"");
    if (!doc.contains("rows") || !doc["rows"].is_array())
        throw std::invalid_argument("DirTable needs a \"rows\" array");

    DirTable table;
    for (const auto& row : doc["rows"]) {
        if (!row.is_array()) throw std::invalid_argument("DirTable rows must be arrays");
        std::vector<Direction> dirs;
        for (const auto& entry : row) dirs.push_back(parse_dir(entry));
        table.rows.push_back(std::move(dirs));
    }
    if (doc.contains("r_max")) {
        if (!doc["r_max"].is_number_integer() ||
            doc["r_max"].get<long long>() != static_cast<long long>(table.rows.size()))
            throw std::invalid_argument("DirTable r_max does not match the number of rows");
    }
    if (doc.contains("default_beyond")) table.default_beyond = parse_dir(doc["default_beyond"]);
    if (doc.contains("strict")) {
        if (!doc["strict"].is_boolean()) throw std::invalid_argument("DirTable strict must be boolean");
        table.strict = doc["strict"].get<bool>();
    }
    table.validate();
    return table;
}

std::string to_json(const DirTable& table)
{
    nlohmann::ordered_json doc;
    doc["type"] = "memoryless_local";
    doc["r_max"] = table.rows.size();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        auto out = nlohmann::ordered_json::array();
        for (Direction d : row) out.push_back(std::string(1, to_char(d)));
        rows.push_back(out);
    }
    doc["rows"] = rows;
    doc["default_beyond"] = std::string(1, to_char(table.default_beyond));
    if (table.strict) doc["strict"] = true;
    return doc.dump();
}

DirTable tabulate(const Procedure& procedure, int r_max)
{
    DirTable table;
    for (int r = 1; r <= r_max; ++r) {
        std::vector<Direction> row;
        for (int i = 1; i <= r; ++i) row.push_back(dir_of(procedure, r, i));
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace parking
