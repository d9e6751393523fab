#pragma once

#include <string>
#include <vector>

namespace qkappa {

struct IdentityCheck {
  std::string suite;
  std::string name;
  bool pass = false;
  double defect = 0.0;
  std::string note;
};

struct CheckReport {
  std::vector<IdentityCheck> items;

  void add(std::string suite, std::string name, bool pass, double defect = 0.0,
           std::string note = "") {
    items.push_back({std::move(suite), std::move(name), pass, defect, std::move(note)});
  }
  void append(const CheckReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }
  bool all_pass() const {
    for (const auto& c : items)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace qkappa
