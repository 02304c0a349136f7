#pragma once

#include <string>
#include <vector>

namespace vvmf {

// One validator outcome. lhs/rhs carry the two sides of a failed (or passed)
// identity when that makes sense; detail is free-form.
struct Check {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, "", "", std::move(detail)});
  }
  void add_sides(std::string name, bool pass, std::string lhs, std::string rhs,
                 std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(lhs), std::move(rhs), std::move(detail)});
  }
  void merge(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace vvmf
