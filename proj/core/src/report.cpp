#include "orbitstar/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace orbitstar {

bool Report::pass() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

void Report::check(std::string name, std::string anchor, bool ok, std::string detail) {
  records.push_back({std::move(name), std::move(anchor), ok, {}, std::move(detail)});
}

void Report::check_zero(std::string name, std::string anchor, const Poly& residue) {
  CheckRecord r{std::move(name), std::move(anchor), residue.is_zero(), {}, {}};
  if (!r.pass) r.witness = residue.str();
  records.push_back(std::move(r));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto r : other.records) {
    r.name = prefix + r.name;
    records.push_back(std::move(r));
  }
  for (auto& [k, v] : other.values) values[prefix + k] = v;
}

void Report::sort() {
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
}

std::string Report::to_json() const {
  Report r = *this;
  r.sort();
  nlohmann::json recs = nlohmann::json::array();
  for (auto& c : r.records) {
    nlohmann::json j = {{"name", c.name}, {"anchor", c.anchor}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (!c.detail.empty()) j["detail"] = c.detail;
    recs.push_back(std::move(j));
  }
  nlohmann::json vals = nlohmann::json::object();
  for (auto& [k, v] : r.values) {
    if (v.size() == 1)
      vals[k] = v.front();
    else
      vals[k] = v;
  }
  nlohmann::json out = {{"command", command},
                        {"records", recs},
                        {"values", vals},
                        {"status", pass() ? "pass" : "fail"}};
  if (timing_ms) out["timing_ms"] = *timing_ms;
  return out.dump(2);
}

Report Report::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Report r;
  r.command = j.at("command").get<std::string>();
  for (auto& c : j.at("records")) {
    CheckRecord rec;
    rec.name = c.at("name").get<std::string>();
    rec.anchor = c.at("anchor").get<std::string>();
    rec.pass = c.at("status").get<std::string>() == "pass";
    if (c.contains("witness")) rec.witness = c["witness"].get<std::string>();
    if (c.contains("detail")) rec.detail = c["detail"].get<std::string>();
    r.records.push_back(std::move(rec));
  }
  for (auto& [k, v] : j.at("values").items()) {
    if (v.is_array())
      r.values[k] = v.get<std::vector<std::string>>();
    else
      r.values[k] = {v.get<std::string>()};
  }
  if (j.contains("timing_ms")) r.timing_ms = j["timing_ms"].get<double>();
  return r;
}

std::string Report::table() const {
  Report r = *this;
  r.sort();
  std::size_t w = 4;
  for (auto& c : r.records) w = std::max(w, c.name.size());
  std::ostringstream os;
  os << "$ " << command << "\n";
  for (auto& [k, v] : r.values) {
    if (v.size() == 1) {
      os << "  " << k << " = " << v.front() << "\n";
      continue;
    }
    os << "  " << k << ":\n";
    for (auto& s : v) os << "    " << s << "\n";
  }
  for (auto& c : r.records) {
    os << (c.pass ? "PASS  " : "FAIL  ") << c.name << std::string(w - c.name.size() + 2, ' ')
       << c.anchor;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
    if (!c.witness.empty()) os << "      witness: " << c.witness << "\n";
  }
  std::size_t failed = std::count_if(r.records.begin(), r.records.end(),
                                     [](const CheckRecord& c) { return !c.pass; });
  os << (failed ? "FAIL" : "PASS") << ": " << r.records.size() - failed << "/" << r.records.size()
     << " checks";
  if (timing_ms) os << " in " << *timing_ms << " ms";
  os << "\n";
  return os.str();
}

}  // namespace orbitstar
