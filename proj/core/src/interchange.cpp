#include "homcalc/interchange.hpp"

#include <cstdint>
#include <limits>

#include <json.hpp>

namespace homcalc {

namespace {

nlohmann::json entry_to_json(const Int& v) {
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Int entry_from_json(const nlohmann::json& j) {
    if (j.is_number_integer())
        return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string())
        return Int(j.get<std::string>());
    throw InterchangeError("matrix entry must be an integer or a decimal string");
}

} // namespace

std::string serialize_complex(const ChainComplex& c) {
    nlohmann::json j;
    j["name"] = c.name();
    nlohmann::json cells = nlohmann::json::object();
    nlohmann::json boundaries = nlohmann::json::object();
    for (int n = 0; n <= c.top_dim(); ++n) {
        cells[std::to_string(n)] = c.cell_names(n);
        if (n >= 1) {
            const IntegerMatrix b = c.boundary(n);
            nlohmann::json rows = nlohmann::json::array();
            if (!b.empty())
                for (std::size_t r = 0; r < b.rows(); ++r) {
                    nlohmann::json row = nlohmann::json::array();
                    for (std::size_t col = 0; col < b.cols(); ++col)
                        row.push_back(entry_to_json(b.at(r, col)));
                    rows.push_back(std::move(row));
                }
            boundaries[std::to_string(n)] = std::move(rows);
        }
    }
    j["cells"] = std::move(cells);
    j["boundaries"] = std::move(boundaries);
    return j.dump();
}

ChainComplex parse_complex(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InterchangeError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("name") || !j.contains("cells") || !j.contains("boundaries"))
        throw InterchangeError("document must have fields name, cells, boundaries");
    if (!j["name"].is_string() || !j["cells"].is_object() || !j["boundaries"].is_object())
        throw InterchangeError("field types: name string, cells object, boundaries object");

    int top = -1;
    for (const auto& [key, value] : j["cells"].items()) {
        std::size_t pos = 0;
        int n = 0;
        try {
            n = std::stoi(key, &pos);
        } catch (...) {
            throw InterchangeError("cells key is not a dimension: '" + key + "'");
        }
        if (pos != key.size() || n < 0)
            throw InterchangeError("cells key is not a dimension: '" + key + "'");
        if (!value.is_array())
            throw InterchangeError("cells[" + key + "] must be a list");
        top = std::max(top, n);
    }

    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(top + 1));
    for (const auto& [key, value] : j["cells"].items()) {
        auto& names = cells[static_cast<std::size_t>(std::stoi(key))];
        for (const auto& v : value) {
            if (!v.is_string())
                throw InterchangeError("cell names must be strings");
            names.push_back(v.get<std::string>());
        }
    }

    std::vector<IntegerMatrix> boundaries(static_cast<std::size_t>(top + 1));
    for (std::size_t n = 1; n < boundaries.size(); ++n)
        boundaries[n] = IntegerMatrix(cells[n - 1].size(), cells[n].size());

    for (const auto& [key, value] : j["boundaries"].items()) {
        int n = 0;
        std::size_t pos = 0;
        try {
            n = std::stoi(key, &pos);
        } catch (...) {
            throw InterchangeError("boundaries key is not a dimension: '" + key + "'");
        }
        if (pos != key.size() || n < 1 || n > top)
            throw InterchangeError("boundary dimension out of range: '" + key + "'");
        if (!value.is_array())
            throw InterchangeError("boundaries[" + key + "] must be a matrix");
        IntegerMatrix& b = boundaries[static_cast<std::size_t>(n)];
        if (value.empty()) {
            if (!b.empty())
                throw InterchangeError("boundaries[" + key + "]: [] given for a nonempty matrix");
            continue;
        }
        if (value.size() != b.rows())
            throw InterchangeError("boundaries[" + key + "]: row count mismatch");
        for (std::size_t r = 0; r < b.rows(); ++r) {
            const auto& row = value[r];
            if (!row.is_array() || row.size() != b.cols())
                throw InterchangeError("boundaries[" + key + "]: column count mismatch");
            for (std::size_t col = 0; col < b.cols(); ++col)
                b.at(r, col) = entry_from_json(row[col]);
        }
    }

    try {
        return ChainComplex(j["name"].get<std::string>(), std::move(cells), std::move(boundaries));
    } catch (const std::invalid_argument& e) {
        throw InterchangeError(e.what());
    }
}

} // namespace homcalc
