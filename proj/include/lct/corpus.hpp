#pragma once

#include "lct/rational.hpp"
#include "lct/weight.hpp"

#include <json.hpp>

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace lct {

using DeltaTriple = std::array<std::optional<Rational>, 3>; ///< nullopt = "-" = 0

/// Parameterized sample equation. Placeholders in braces: {n}, {m}, {a},
/// {b} and {n+K}, {m+K}. When `ab` is set ("n+11", "m+8", ...) the exponents
/// a, b satisfy 2a + 3b = ab with b as large as possible.
struct Family {
    std::string text;
    std::optional<std::string> ab;
};

/// Instantiates with n = m = `n`.
std::string instantiate(const Family& family, long n);

/// (a, b) with 2a + 3b = total, a >= 0 and b maximal. Throws DomainError if
/// no solution exists.
std::pair<long, long> ab_exponents(long total);

struct TableRow {
    int table;
    std::string section;
    std::string name;
    std::string f_text;
    std::string vars;
    std::string ell_text;
    Rational c;
    Weight weight{1, 1, 1};
    Weight s{1, 1, 1};
    DeltaTriple delta;
    std::optional<DeltaTriple> delta_alt; ///< second reading of an ambiguous cell
    std::optional<long> yonemura;
    std::optional<std::string> note;
    std::optional<Family> family;
    std::size_t position = 0; ///< index in the source file
    std::string id;           ///< "T3/II/Tr" or "T1/Cu", suffixed with #k when repeated
};

/// Parses and validates one corpus file; errors name the row index and field.
std::vector<TableRow> parse_corpus(const nlohmann::json& j);
std::vector<TableRow> load_corpus(const std::filesystem::path& path);

enum class CheckStatus { Pass, Fail, Warn };

std::string to_string(CheckStatus s);

struct CheckResult {
    int number; ///< 1..6
    std::string name;
    CheckStatus status;
    std::string expected;
    std::string got;
    std::string message;
};

struct RowReport {
    std::string id;
    int table;
    std::string section;
    std::string name;
    std::vector<CheckResult> checks;

    bool failed() const;
    bool warned() const;
    const CheckResult& check(const std::string& name) const;
};

/// Recomputes c, S, delta, ell, the balance and the K3 data of one row.
/// Never throws: computation errors become failing checks.
RowReport verify_row(const TableRow& row);

/// Same checks for the row with its family instantiated at `n`.
RowReport verify_row_instance(const TableRow& row, long n);

struct CorpusSummary {
    std::size_t rows = 0;
    std::size_t passed = 0;
    std::size_t warned = 0;
    std::size_t failed = 0;
    std::vector<std::string> failing_ids;
    std::vector<RowReport> reports; ///< ordered by (table, position)
};

CorpusSummary verify_all(const std::vector<TableRow>& rows);

} // namespace lct
