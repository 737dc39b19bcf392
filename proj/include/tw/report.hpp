#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tw {

enum class Status { Pass, Fail, Partial };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

/// One parameter tuple of a verification range.
struct ReportRow {
  std::vector<std::pair<std::string, std::int64_t>> params;
  Status status = Status::Pass;
  std::optional<std::int64_t> value;
  std::optional<std::int64_t> expected;
  std::string note;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct TreeRecord {
  std::string label;
  std::string code;  // canonical code, or a spine/weight vector for non-tree checks
  std::int64_t value = 0;

  friend bool operator==(const TreeRecord&, const TreeRecord&) = default;
};

struct VerificationReport {
  std::string check_id;
  std::string range;
  Status status = Status::Pass;
  std::vector<ReportRow> rows;
  std::vector<TreeRecord> witnesses;
  std::vector<TreeRecord> counterexamples;
  std::vector<std::string> findings;
  std::uint64_t scanned = 0;
  std::optional<std::int64_t> wall_ms;  // only with timing on; breaks byte-identity
  std::string version;

  /// Fail if any counterexample, else Partial if any row is partial, else Pass.
  void settle();

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

enum class ReportFormat { Json, Csv };

std::string to_json(const VerificationReport& r);
std::string to_json(const std::vector<VerificationReport>& rs);
VerificationReport report_from_json(const std::string& text);
std::vector<VerificationReport> reports_from_json(const std::string& text);

/// Header line plus one line per row of every report.
std::string to_csv(const std::vector<VerificationReport>& rs);

/// Throws Error{IoError} when the file cannot be written.
void emit_report(const VerificationReport& r, ReportFormat format, const std::filesystem::path& path);
void emit_reports(const std::vector<VerificationReport>& rs, ReportFormat format,
                  const std::filesystem::path& path);
/// Throws Error{IoError} or Error{ParseError}.
VerificationReport load_report(const std::filesystem::path& path);

}  // namespace tw
