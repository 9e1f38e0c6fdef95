#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fcover/groebner.hpp"

namespace fcover::cli {

using json = nlohmann::ordered_json;

enum class Status { pass, fail, info };

inline const char* status_tag(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::info: return "INFO";
  }
  return "?";
}

inline std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::info: return "info";
  }
  return "?";
}

struct Entry {
  std::string name;
  Status status = Status::info;
  std::string summary;
  std::vector<std::string> details;
  json data = json::object();
};

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_budget = 3;
inline constexpr int exit_internal = 4;

struct Report {
  std::string command;
  std::string source;
  std::vector<Entry> entries;
  GroebnerStats stats;
  std::optional<double> seconds;  // only with --timing, reports are otherwise byte-stable
  int exit_code = exit_ok;

  Entry& add(std::string name, Status status, std::string summary) {
    entries.push_back(Entry{std::move(name), status, std::move(summary), {}, json::object()});
    return entries.back();
  }

  bool any_failed() const {
    for (const auto& e : entries)
      if (e.status == Status::fail) return true;
    return false;
  }

  // Sets exit_code from the entries unless an error code is already set.
  void finish() {
    if (exit_code == exit_ok && any_failed()) exit_code = exit_check_failed;
  }

  std::string text() const {
    std::string out = "fcover " + command + (source.empty() ? "" : ": " + source) + "\n";
    for (const auto& e : entries) {
      out += "[" + std::string(status_tag(e.status)) + "] " + e.name;
      if (!e.summary.empty()) out += ": " + e.summary;
      out += "\n";
      for (const auto& d : e.details) out += "    " + d + "\n";
    }
    out += "groebner: " + std::to_string(stats.pairs_reduced) + " pairs reduced, " +
           std::to_string(stats.coprime_skips + stats.chain_skips) + " skipped by criteria\n";
    if (seconds) out += "time: " + std::to_string(*seconds) + " s\n";
    out += std::string("result: ") + (exit_code == exit_ok ? "PASS" : "FAIL") + " (exit " + std::to_string(exit_code) + ")\n";
    return out;
  }

  json to_json() const {
    json j;
    j["command"] = command;
    j["source"] = source;
    j["checks"] = json::array();
    for (const auto& e : entries) {
      json c;
      c["name"] = e.name;
      c["status"] = status_name(e.status);
      c["summary"] = e.summary;
      c["details"] = e.details;
      c["data"] = e.data;
      j["checks"].push_back(std::move(c));
    }
    j["groebner"] = {{"pairs_created", stats.pairs_created},
                     {"pairs_reduced", stats.pairs_reduced},
                     {"coprime_skips", stats.coprime_skips},
                     {"chain_skips", stats.chain_skips},
                     {"zero_reductions", stats.zero_reductions}};
    if (seconds) j["seconds"] = *seconds;
    j["exit_code"] = exit_code;
    return j;
  }
};

}  // namespace fcover::cli
