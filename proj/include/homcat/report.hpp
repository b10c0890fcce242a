#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace homcat {

/// Two-audience command output: free-form human lines plus machine key=value
/// records. Machine records are a superset of every number the human text
/// shows and print sorted by key for order-independent diffing.
class Report {
 public:
  void put(const std::string& key, const std::string& value) { records_.emplace_back(key, value); }
  void put(const std::string& key, long value) { put(key, std::to_string(value)); }
  void put(const std::string& key, bool value) { put(key, std::string(value ? "true" : "false")); }
  void human(const std::string& line) { human_.push_back(line); }

  void render(std::ostream& os, bool machine_only) const;

  int exit_code = 0;

 private:
  std::vector<std::pair<std::string, std::string>> records_;
  std::vector<std::string> human_;
};

}  // namespace homcat
