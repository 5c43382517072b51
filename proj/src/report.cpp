#include "jackideal/report.hpp"

#include <algorithm>
#include <sstream>

namespace jackideal {

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.cases) cases.push_back({prefix + c.id, c.pass, c.detail});
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const Case& c) { return c.pass; }));
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["suite"] = suite;
  out["params"] = params;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : cases) list.push_back({{"id", c.id}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  out["cases"] = std::move(list);
  out["summary"] = {{"pass", passed()}, {"fail", failed()}};
  if (!notes.empty()) out["notes"] = notes;
  return out;
}

std::string Report::to_text(bool verbose) const {
  std::ostringstream os;
  for (const auto& c : cases) {
    if (!c.pass || verbose) os << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.detail.dump() << "\n";
  }
  if (!notes.empty()) os << "notes: " << notes.dump() << "\n";
  os << suite << " " << params.dump() << ": " << passed() << " passed, " << failed() << " failed\n";
  return os.str();
}

}  // namespace jackideal
