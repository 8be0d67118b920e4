#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace rooksum {

/// Outcome of one named check.
struct CheckResult {
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::string note;
  /// Offending or illustrative items (permutations, subsets, indices).
  std::vector<std::string> witnesses;
  /// Named integer observations, in insertion order.
  std::vector<std::pair<std::string, std::int64_t>> ranks;
  double seconds = 0;

  void fail(std::string witness) {
    pass = false;
    if (witnesses.size() < 20) witnesses.push_back(std::move(witness));
  }
  void expect(bool ok, const std::string& witness) {
    if (!ok) fail(witness);
  }
  void record(std::string key, std::int64_t value) { ranks.emplace_back(std::move(key), value); }
  void skip(std::string why) {
    skipped = true;
    note = std::move(why);
  }
};

/// Named collection of checks.
struct Report {
  std::string name;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  /// Runs body on a fresh CheckResult, timing it and turning exceptions into failures.
  template <class Body>
  CheckResult& run(std::string check_name, Body&& body) {
    CheckResult c;
    c.name = std::move(check_name);
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    checks.push_back(std::move(c));
    return checks.back();
  }

  void append(const Report& other) {
    for (const auto& c : other.checks) {
      checks.push_back(c);
      checks.back().name = other.name + "/" + c.name;
    }
  }

  nlohmann::ordered_json to_json(bool with_timings = false) const {
    nlohmann::ordered_json j;
    j["check"] = name;
    j["result"] = passed() ? "pass" : "fail";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json cj;
      cj["check"] = c.name;
      cj["result"] = c.skipped ? "skipped" : (c.pass ? "pass" : "fail");
      if (!c.note.empty()) cj["note"] = c.note;
      nlohmann::ordered_json ranks = nlohmann::ordered_json::object();
      for (const auto& [k, v] : c.ranks) ranks[k] = v;
      cj["ranks"] = ranks;
      cj["witnesses"] = c.witnesses;
      if (with_timings) cj["seconds"] = c.seconds;
      arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    return j;
  }

  std::string to_text(bool with_timings = false) const {
    std::ostringstream os;
    os << name << ": " << (passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : checks) {
      os << "  [" << (c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL")) << "] " << c.name;
      for (const auto& [k, v] : c.ranks) os << " " << k << "=" << v;
      if (with_timings) os << " (" << c.seconds << " s)";
      if (!c.note.empty()) os << " -- " << c.note;
      os << "\n";
      for (const auto& w : c.witnesses) os << "      " << w << "\n";
    }
    return os.str();
  }
};

}  // namespace rooksum
