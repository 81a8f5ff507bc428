#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace homcalc {

enum class RowStatus { pass, fail, info };

struct ReportRow {
    std::string label;
    RowStatus status = RowStatus::info;
    std::string detail;
};

/// Verification result shared by the library's verify_* operations and the
/// CLI. Info rows never affect all_pass().
struct Report {
    std::string title;
    std::vector<ReportRow> rows;
    std::optional<std::uint64_t> seed;

    void pass(std::string label, std::string detail = {});
    void fail(std::string label, std::string detail = {});
    void info(std::string label, std::string detail = {});
    void check(bool ok, std::string label, std::string detail = {});
    void merge(const Report& other);

    bool all_pass() const;
    std::size_t fail_count() const;
};

const char* to_string(RowStatus s);

void print_text(const Report& r, std::ostream& os);
/// Versioned machine-readable form ("homcalc.report/1").
std::string to_json_string(const Report& r);

} // namespace homcalc
