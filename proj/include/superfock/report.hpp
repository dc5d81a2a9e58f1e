#ifndef SUPERFOCK_REPORT_HPP
#define SUPERFOCK_REPORT_HPP

#include <string>
#include <vector>

namespace superfock {

// One verification record. The record (machine) format is line-delimited
// JSON with a fixed key order and exact rational values; identical jobs
// always serialize byte-identically, so wall time lives only in the human
// rendering.
struct CheckRecord {
  std::string job;
  std::string check;
  std::string anchor;   // stable identity of the verified statement
  std::string status;   // pass | fail
  std::string window;
  std::string margin;
  std::string residual; // "0" for exact passes, otherwise a description
  std::vector<std::pair<std::string, std::string>> constants;
  std::string detail;
  long long wall_ms = 0;

  bool ok() const { return status == "pass"; }
};

std::string to_record_line(const CheckRecord& r);
std::string to_text_line(const CheckRecord& r);

struct SuiteResult {
  std::vector<CheckRecord> records;  // sorted by job id
  bool all_ok() const;
};

// Runs one job given as a JSON object text (see the README for the schema).
// Throws ParseError for malformed inputs and MarginError for under-margined
// windows; check failures are reported through the record status.
CheckRecord run_job_json(const std::string& json_object_text);

// Runs a whole suite file: a JSON array of job objects. Records come back
// sorted by job id regardless of execution order.
SuiteResult run_suite(const std::string& json_array_text);

std::string render_records(const SuiteResult& suite);
std::string render_text(const SuiteResult& suite);

inline constexpr const char* kReportSchema = "superfock.report/1";

}  // namespace superfock

#endif
