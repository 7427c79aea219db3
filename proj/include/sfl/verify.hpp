// Theorem-verification campaigns: each runs a parameter sweep, emits one row
// per grid point with both sides of every checked inequality, and reports
// whether any claimed statement failed. Rows where the theorem makes no
// claim at the swept point (below a stated n-threshold, or a construction
// exponent that is non-positive) are reported as vacuous, not failures.
#pragma once

#include "sfl/oracle.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sfl::verify {

struct Grid {
    long long p_lo = 0, p_hi = 0;  // 0 = campaign default
    long long q_lo = 0, q_hi = 0;  // q is clamped to q <= p pointwise
    long long n_lo = 0, n_hi = 0;
    long long k_lo = 0, k_hi = 0;
    long long random_count = 0;
    unsigned long long seed = 7;
    int jobs = 1;
    // explicit (p, q) pairs; when set, overrides the p/q ranges
    std::vector<std::pair<long long, long long>> pairs;
};

enum class RowStatus { pass, fail, vacuous };

struct Row {
    std::vector<std::string> values;  // aligned with Report::columns
    RowStatus status = RowStatus::pass;
};

struct Report {
    std::string campaign;
    std::vector<std::string> columns;
    std::vector<Row> rows;
    long long checked = 0, failed = 0, vacuous = 0;
    bool all_pass = true;
};

// Campaign identifiers, in the order they are documented.
const std::vector<std::string>& campaign_ids();

// Runs a campaign; unknown ids raise invalid_argument. Grid fields left at 0
// take the campaign's documented defaults (the acceptance-scale sweep).
Report run_campaign(const std::string& id, const Grid& grid,
                    const oracle::Budget& budget = {});

std::string report_csv(const Report& rep);
std::string report_json(const Report& rep);  // schema sfl/1

}  // namespace sfl::verify
