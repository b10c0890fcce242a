#include "homcat/report.hpp"

#include <algorithm>

namespace homcat {

void Report::render(std::ostream& os, bool machine_only) const {
  if (!machine_only)
    for (const std::string& line : human_) os << line << "\n";
  std::vector<std::pair<std::string, std::string>> sorted = records_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [k, v] : sorted) os << k << "=" << v << "\n";
}

}  // namespace homcat
