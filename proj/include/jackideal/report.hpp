#ifndef JACKIDEAL_REPORT_HPP
#define JACKIDEAL_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace jackideal {

/// Machine-readable outcome of a verification suite:
///   {"suite": ..., "params": {...},
///    "cases": [{"id": ..., "status": "pass"|"fail", "detail": {...}}],
///    "summary": {"pass": N, "fail": M}}
/// Suites record every case and never stop at the first failure.
struct Report {
  struct Case {
    std::string id;
    bool pass = false;
    nlohmann::json detail = nlohmann::json::object();
  };

  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Case> cases;
  /// Suite-level observations that are not pass/fail cases.
  nlohmann::json notes = nlohmann::json::object();

  void add(std::string id, bool pass, nlohmann::json detail = nlohmann::json::object()) {
    cases.push_back({std::move(id), pass, std::move(detail)});
  }
  /// Appends the cases of another report, prefixing their ids.
  void merge(const Report& other, const std::string& prefix);

  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
  bool all_pass() const { return failed() == 0; }

  nlohmann::json to_json() const;
  /// One line per failing case plus a summary line; `verbose` lists passes too.
  std::string to_text(bool verbose = false) const;
};

}  // namespace jackideal

#endif  // JACKIDEAL_REPORT_HPP
