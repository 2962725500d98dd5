// Named expected/actual checks; the unit every CLI command reports in.

#ifndef DORP_REPORT_HPP_
#define DORP_REPORT_HPP_

#include <map>
#include <string>
#include <vector>

namespace dorp {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  std::string command;
  std::map<std::string, std::string> parameters;  // kept sorted by key
  std::vector<Check> checks;
  double elapsed_seconds = 0.0;

  bool overall_pass() const;

  void add(const std::string& name, const std::string& expected,
           const std::string& actual);
  void add_bool(const std::string& name, bool expected, bool actual);
  // Informational line that never fails the report.
  void note(const std::string& name, const std::string& detail);

  std::string to_json() const;  // stable: keys sorted, checks in order
  std::string to_csv() const;
  std::string to_text() const;
};

std::string json_escape(const std::string& s);

}  // namespace dorp

#endif  // DORP_REPORT_HPP_
