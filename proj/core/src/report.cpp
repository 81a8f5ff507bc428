#include "homcalc/report.hpp"

#include <json.hpp>

namespace homcalc {

void Report::pass(std::string label, std::string detail) {
    rows.push_back({std::move(label), RowStatus::pass, std::move(detail)});
}

void Report::fail(std::string label, std::string detail) {
    rows.push_back({std::move(label), RowStatus::fail, std::move(detail)});
}

void Report::info(std::string label, std::string detail) {
    rows.push_back({std::move(label), RowStatus::info, std::move(detail)});
}

void Report::check(bool ok, std::string label, std::string detail) {
    rows.push_back({std::move(label), ok ? RowStatus::pass : RowStatus::fail, std::move(detail)});
}

void Report::merge(const Report& other) {
    for (const auto& row : other.rows)
        rows.push_back({other.title.empty() ? row.label : other.title + ": " + row.label,
                        row.status, row.detail});
}

bool Report::all_pass() const {
    return fail_count() == 0;
}

std::size_t Report::fail_count() const {
    std::size_t n = 0;
    for (const auto& row : rows)
        if (row.status == RowStatus::fail)
            ++n;
    return n;
}

const char* to_string(RowStatus s) {
    switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::fail: return "FAIL";
    case RowStatus::info: return "info";
    }
    return "?";
}

void print_text(const Report& r, std::ostream& os) {
    if (!r.title.empty())
        os << "== " << r.title << " ==\n";
    if (r.seed)
        os << "seed: " << *r.seed << "\n";
    for (const auto& row : r.rows) {
        os << "[" << to_string(row.status) << "] " << row.label;
        if (!row.detail.empty())
            os << ": " << row.detail;
        os << "\n";
    }
    os << (r.all_pass() ? "all checks passed" : "FAILURES: " + std::to_string(r.fail_count()))
       << " (" << r.rows.size() << " rows)\n";
}

std::string to_json_string(const Report& r) {
    nlohmann::json j;
    j["schema"] = "homcalc.report/1";
    j["title"] = r.title;
    if (r.seed)
        j["seed"] = *r.seed;
    j["pass"] = r.all_pass();
    auto rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"label", row.label},
                        {"status", to_string(row.status)},
                        {"detail", row.detail}});
    j["rows"] = rows;
    return j.dump();
}

} // namespace homcalc
