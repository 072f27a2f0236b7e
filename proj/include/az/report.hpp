#pragma once

/*
 * Machine-readable reporting and the persistent sequence-value cache.
 *
 * JSON reports are line-delimited: a meta object, one object per outcome,
 * then a summary object.  Rationals travel as exact "num/den" decimal
 * strings; parsing and re-serializing a report is the identity (the
 * summary is recomputed, deterministically, from the outcomes).
 *
 * The cache file is line-delimited JSON keyed by (family, index, n); it is
 * rewritten atomically (write temp, then rename).
 */

#include "az/checks.hpp"

#include <string>
#include <vector>

namespace az {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportMeta {
    std::string timestamp;
    std::string version = kToolVersion;
    std::string grid;
    std::vector<std::string> warnings;
};

struct ReportSummary {
    long pass = 0;
    long fail = 0;
    long error = 0;
    long conjectural_violations = 0;
    std::map<std::string, Valuation> min_achieved;  // per check_id
};

struct Report {
    ReportMeta meta;
    std::vector<CheckOutcome> outcomes;
    ReportSummary summary() const;
};

std::string current_timestamp_utc();

std::string outcome_to_json(const CheckOutcome& o);
CheckOutcome outcome_from_json(const std::string& line);

std::string report_to_jsonl(const Report& r);
Report report_from_jsonl(const std::string& text);

std::string outcomes_to_csv(const std::vector<CheckOutcome>& outcomes);
std::vector<CheckOutcome> outcomes_from_csv(const std::string& text);

std::string report_to_table(const Report& r);

/// Missing file: returns true, cache untouched.  Malformed file: returns
/// false, cache untouched, *warning describes the problem.
bool load_cache_file(const std::string& path, SequenceCache& cache, std::string* warning);

/// Whole-file rewrite through a temp file in the same directory.
void save_cache_file(const std::string& path, const SequenceCache& cache);

}  // namespace az
