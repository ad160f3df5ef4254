#ifndef RCM_ACCEPT_HPP
#define RCM_ACCEPT_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rcm::accept {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the thirteen verification criteria, printing one pass/fail line
/// per criterion to log as they complete.
std::vector<CriterionResult> run_all(std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace rcm::accept

#endif
