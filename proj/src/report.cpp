#include "tw/report.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tw/error.hpp"

namespace tw {

using Json = nlohmann::ordered_json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Partial: return "partial";
  }
  return "?";
}

Status status_from_string(std::string_view s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "partial") return Status::Partial;
  throw Error(ErrorCode::ParseError, "unknown status '" + std::string(s) + "'");
}

void VerificationReport::settle() {
  if (!counterexamples.empty()) {
    status = Status::Fail;
    return;
  }
  status = Status::Pass;
  for (const auto& row : rows) {
    if (row.status == Status::Partial) status = Status::Partial;
  }
}

namespace {

Json record_json(const TreeRecord& t) { return Json{{"label", t.label}, {"code", t.code}, {"value", t.value}}; }

Json report_json(const VerificationReport& r) {
  Json j;
  j["check_id"] = r.check_id;
  j["range"] = r.range;
  j["status"] = to_string(r.status);
  j["scanned"] = r.scanned;
  j["version"] = r.version;
  if (r.wall_ms) j["wall_ms"] = *r.wall_ms;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json params = Json::object();
    for (const auto& [k, v] : row.params) params[k] = v;
    Json jr{{"params", params}, {"status", to_string(row.status)}};
    jr["value"] = row.value ? Json(*row.value) : Json(nullptr);
    jr["expected"] = row.expected ? Json(*row.expected) : Json(nullptr);
    jr["note"] = row.note;
    rows.push_back(jr);
  }
  j["rows"] = rows;
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(record_json(w));
  j["counterexamples"] = Json::array();
  for (const auto& c : r.counterexamples) j["counterexamples"].push_back(record_json(c));
  j["findings"] = r.findings;
  return j;
}

TreeRecord record_from(const Json& j) {
  return {j.at("label").get<std::string>(), j.at("code").get<std::string>(), j.at("value").get<std::int64_t>()};
}

VerificationReport report_from(const Json& j) {
  VerificationReport r;
  r.check_id = j.at("check_id").get<std::string>();
  r.range = j.at("range").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.scanned = j.at("scanned").get<std::uint64_t>();
  r.version = j.at("version").get<std::string>();
  if (j.contains("wall_ms")) r.wall_ms = j.at("wall_ms").get<std::int64_t>();
  for (const auto& jr : j.at("rows")) {
    ReportRow row;
    for (const auto& [k, v] : jr.at("params").items()) row.params.emplace_back(k, v.get<std::int64_t>());
    row.status = status_from_string(jr.at("status").get<std::string>());
    if (!jr.at("value").is_null()) row.value = jr.at("value").get<std::int64_t>();
    if (!jr.at("expected").is_null()) row.expected = jr.at("expected").get<std::int64_t>();
    row.note = jr.at("note").get<std::string>();
    r.rows.push_back(std::move(row));
  }
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back(record_from(w));
  for (const auto& c : j.at("counterexamples")) r.counterexamples.push_back(record_from(c));
  r.findings = j.at("findings").get<std::vector<std::string>>();
  return r;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace

std::string to_json(const VerificationReport& r) { return report_json(r).dump(2) + "\n"; }

std::string to_json(const std::vector<VerificationReport>& rs) {
  Json arr = Json::array();
  for (const auto& r : rs) arr.push_back(report_json(r));
  return arr.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
  try {
    return report_from(parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
  try {
    Json j = parse(text);
    std::vector<VerificationReport> out;
    if (j.is_array()) {
      for (const auto& item : j) out.push_back(report_from(item));
    } else {
      out.push_back(report_from(j));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string to_csv(const std::vector<VerificationReport>& rs) {
  std::ostringstream out;
  out << "check_id,params,status,value,expected,note\n";
  for (const auto& r : rs) {
    for (const auto& row : r.rows) {
      std::string params;
      for (const auto& [k, v] : row.params) {
        if (!params.empty()) params += ';';
        params += k + "=" + std::to_string(v);
      }
      out << csv_field(r.check_id) << ',' << csv_field(params) << ',' << to_string(row.status) << ','
          << (row.value ? std::to_string(*row.value) : "") << ','
          << (row.expected ? std::to_string(*row.expected) : "") << ',' << csv_field(row.note) << '\n';
    }
  }
  return out.str();
}

void emit_report(const VerificationReport& r, ReportFormat format, const std::filesystem::path& path) {
  write_text(path, format == ReportFormat::Json ? to_json(r) : to_csv({r}));
}

void emit_reports(const std::vector<VerificationReport>& rs, ReportFormat format,
                  const std::filesystem::path& path) {
  if (format == ReportFormat::Csv) {
    write_text(path, to_csv(rs));
  } else {
    write_text(path, rs.size() == 1 ? to_json(rs.front()) : to_json(rs));
  }
}

VerificationReport load_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return report_from_json(buf.str());
}

}  // namespace tw
