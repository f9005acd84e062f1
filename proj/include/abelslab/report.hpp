#pragma once

// Check records and suite reports with JSON/TSV serialization.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace abelslab {

inline constexpr char kToolkitVersion[] = "0.3.0";
inline constexpr int kReportSchemaVersion = 1;

enum class Status { pass, fail, inconclusive };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

inline Status status_from_string(std::string const& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  return Status::inconclusive;
}

struct CheckRecord {
  std::string id;
  std::string anchor;
  Status status = Status::pass;
  std::map<std::string, std::int64_t> counts;
  double elapsed_ms = 0;
  std::string counterexample;   // set for failures
  nlohmann::json details = nlohmann::json::object();

  bool passed() const { return status == Status::pass; }

  // Records a failure, keeping the first counterexample only.
  void fail(std::string const& witness) {
    if (status != Status::fail) counterexample = witness;
    status = Status::fail;
  }
  void bump(std::string const& key, std::int64_t by = 1) { counts[key] += by; }
};

// Runs body(record) and stores the wall time.
template <class Fn>
CheckRecord timed_check(std::string id, std::string anchor, Fn&& body) {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.anchor = std::move(anchor);
  auto start = std::chrono::steady_clock::now();
  body(rec);
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

struct Report {
  std::string suite;
  std::vector<CheckRecord> checks;
  nlohmann::json config = nlohmann::json::object();

  void add(CheckRecord rec) { checks.push_back(std::move(rec)); }
  void add(std::vector<CheckRecord> recs) {
    for (auto& r : recs) checks.push_back(std::move(r));
  }
  void sort_checks() {
    std::stable_sort(checks.begin(), checks.end(), [](auto const& a, auto const& b) { return a.id < b.id; });
  }
  std::size_t count(Status s) const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](auto const& c) { return c.status == s; }));
  }
  bool any_failed() const { return count(Status::fail) > 0; }
};

inline nlohmann::json to_json(CheckRecord const& c) {
  nlohmann::json j;
  j["id"] = c.id;
  j["anchor"] = c.anchor;
  j["status"] = to_string(c.status);
  j["counts"] = c.counts;
  j["elapsed_ms"] = c.elapsed_ms;
  if (c.status == Status::fail) j["counterexample"] = c.counterexample;
  if (!c.details.empty()) j["details"] = c.details;
  return j;
}

inline CheckRecord check_from_json(nlohmann::json const& j) {
  CheckRecord c;
  c.id = j.at("id").get<std::string>();
  c.anchor = j.value("anchor", "");
  c.status = status_from_string(j.value("status", "inconclusive"));
  if (j.contains("counts")) c.counts = j["counts"].get<std::map<std::string, std::int64_t>>();
  c.elapsed_ms = j.value("elapsed_ms", 0.0);
  c.counterexample = j.value("counterexample", "");
  if (j.contains("details")) c.details = j["details"];
  return c;
}

inline std::string utc_timestamp() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

inline nlohmann::json to_json(Report const& r, bool with_timestamp = true) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["toolkit_version"] = kToolkitVersion;
  j["suite"] = r.suite;
  j["config"] = r.config;
  if (with_timestamp) j["generated_at"] = utc_timestamp();
  j["summary"] = {{"pass", r.count(Status::pass)},
                  {"fail", r.count(Status::fail)},
                  {"inconclusive", r.count(Status::inconclusive)}};
  auto arr = nlohmann::json::array();
  for (auto const& c : r.checks) arr.push_back(to_json(c));
  j["checks"] = arr;
  return j;
}

inline Report report_from_json(nlohmann::json const& j) {
  Report r;
  r.suite = j.value("suite", "");
  if (j.contains("config")) r.config = j["config"];
  for (auto const& c : j.at("checks")) r.checks.push_back(check_from_json(c));
  return r;
}

inline std::string to_tsv(Report const& r) {
  std::string out = "suite\tid\tstatus\telapsed_ms\tanchor\n";
  for (auto const& c : r.checks) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", c.elapsed_ms);
    out += r.suite + "\t" + c.id + "\t" + to_string(c.status) + "\t" + ms + "\t" + c.anchor + "\n";
  }
  return out;
}

// Removes wall-clock fields so two runs can be compared byte for byte.
inline nlohmann::json strip_volatile(nlohmann::json j) {
  if (j.is_object()) {
    j.erase("generated_at");
    j.erase("elapsed_ms");
  }
  if (j.is_structured()) {
    for (auto it = j.begin(); it != j.end(); ++it) *it = strip_volatile(*it);
  }
  return j;
}

inline Report merge_reports(std::vector<Report> const& parts, std::string suite = "merged") {
  Report out;
  out.suite = std::move(suite);
  auto cfg = nlohmann::json::array();
  for (auto const& p : parts) {
    for (auto c : p.checks) {
      c.id = p.suite + "/" + c.id;
      out.checks.push_back(std::move(c));
    }
    cfg.push_back({{"suite", p.suite}, {"config", p.config}});
  }
  out.config["parts"] = cfg;
  out.sort_checks();
  return out;
}

}  // namespace abelslab
