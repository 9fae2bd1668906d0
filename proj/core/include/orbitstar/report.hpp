#pragma once

#include "orbitstar/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbitstar {

struct CheckRecord {
  std::string name;
  std::string anchor;   // what statement the check reproduces
  bool pass = false;
  std::string witness;  // nonzero residue on failure
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<CheckRecord> records;
  std::map<std::string, std::vector<std::string>> values;
  std::optional<double> timing_ms;

  bool pass() const;
  int exit_code() const { return pass() ? 0 : 1; }

  void check(std::string name, std::string anchor, bool ok, std::string detail = {});
  // passes when residue is zero; the residue becomes the witness otherwise
  void check_zero(std::string name, std::string anchor, const Poly& residue);
  void value(const std::string& key, std::string v) { values[key] = {std::move(v)}; }
  void value(const std::string& key, const Poly& p) { value(key, p.str()); }
  void list(const std::string& key, std::vector<std::string> v) { values[key] = std::move(v); }
  void merge(const Report& other, const std::string& prefix = {});

  void sort();
  std::string to_json() const;  // records sorted by name
  static Report from_json(const std::string& text);
  std::string table() const;
};

}  // namespace orbitstar
