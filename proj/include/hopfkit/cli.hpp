#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfkit/report.hpp"

namespace hopfkit {

struct CliReport {
  std::string command;
  std::vector<VerificationReport> sections;
  // Named lists of formatted values, e.g. the group-likes found.
  std::map<std::string, std::vector<std::string>> results;
  // Typed failures raised by an operation, as "Code: message".
  std::vector<std::string> errors;

  bool passed() const;
};

enum class ReportFormat { Text, Structured };

std::string emit_report(const CliReport& r, ReportFormat format);

struct CommandResult {
  int exit_code = 0;
  std::string output;       // the report
  std::string diagnostics;  // usage and parse errors
};

// Arguments exclude the program name. Exit 0 when every check passes, 1 on a
// failed check or a rejected hypothesis, 2 on usage or input errors.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace hopfkit
