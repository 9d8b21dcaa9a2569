#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radvar/types.hpp"

namespace radvar {

enum class TableId { Table1, Table2a, Table2b, Table3, Table4, Table5 };

const char* table_name(TableId id);
std::optional<TableId> parse_table_id(std::string_view name);
std::vector<TableId> all_table_ids();

// One golden cell: the published value of this method (value_paper), plus the
// published comparison value the oracle is checked against where gated.
struct TableCell {
    std::string label;
    int n = 0;
    int l = 0;
    double nu = 1.0;
    double A = 1.0;
    int sign = +1;
    double value_paper = 0.0;
    double reference_value = 0.0;
    bool has_reference = false;
    bool check_reference = false;
};

struct TableDefinition {
    TableId id;
    const char* name;
    double tol_primary;    // gate on |value_this_work - value_paper|
    double tol_reference;  // gate on |value_oracle - reference_value| where flagged
    std::vector<TableCell> cells;
};

const TableDefinition& table_definition(TableId id);

struct TableRowResult {
    TableCell cell;
    double value_this_work = 0.0;
    double value_oracle = 0.0;
    double abs_diff = 0.0;
    double rel_diff = 0.0;
};

struct TableResult {
    TableId id;
    std::vector<TableRowResult> rows;
    bool primary_ok = true;
    bool reference_ok = true;
    std::string first_failure;
};

// Evaluates a preset; with_oracle=false skips the independent solver column
// (it is left as NaN).
TableResult compute_table(TableId id, bool with_oracle = true);

}  // namespace radvar
