#include "dorp/report.hpp"

#include <sstream>

namespace dorp {

bool VerificationReport::overall_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void VerificationReport::add(const std::string& name,
                             const std::string& expected,
                             const std::string& actual) {
  checks.push_back({name, expected, actual, expected == actual});
}

void VerificationReport::add_bool(const std::string& name, bool expected,
                                  bool actual) {
  add(name, expected ? "true" : "false", actual ? "true" : "false");
}

void VerificationReport::note(const std::string& name,
                              const std::string& detail) {
  checks.push_back({name, "(informational)", detail, true});
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string VerificationReport::to_json() const {
  std::ostringstream out;
  out << "{\"checks\":[";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    if (i) out << ",";
    out << "{\"actual\":\"" << json_escape(c.actual) << "\",\"expected\":\""
        << json_escape(c.expected) << "\",\"name\":\"" << json_escape(c.name)
        << "\",\"pass\":" << (c.pass ? "true" : "false") << "}";
  }
  out << "],\"command\":\"" << json_escape(command) << "\",";
  out << "\"elapsed_seconds\":" << elapsed_seconds << ",";
  out << "\"parameters\":{";
  bool first = true;
  for (const auto& [k, v] : parameters) {
    if (!first) out << ",";
    first = false;
    out << "\"" << json_escape(k) << "\":\"" << json_escape(v) << "\"";
  }
  out << "},\"pass\":" << (overall_pass() ? "true" : "false");
  out << ",\"schema\":1}";
  return out.str();
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "name,expected,actual,pass\n";
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  };
  for (const auto& c : checks) {
    out << field(c.name) << "," << field(c.expected) << "," << field(c.actual)
        << "," << (c.pass ? "true" : "false") << "\n";
  }
  return out.str();
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (c.expected != "(informational)") {
      out << "  expected=" << c.expected << "  actual=" << c.actual;
    } else {
      out << "  " << c.actual;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace dorp
