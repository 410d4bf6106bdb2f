#pragma once

// Check results and run reports shared by the library and the command line.

#include <string>
#include <utility>
#include <vector>

namespace gsdeform {

enum class Status { Pass, Fail, Inconclusive };

const char* to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string witness;  // empty on pass
};

/// Ordered list of checks plus free-form lines and produced files.
class RunReport {
 public:
  explicit RunReport(std::string command = {}) : command_(std::move(command)) {}

  const std::string& command() const { return command_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::string>& lines() const { return lines_; }
  const std::vector<std::string>& artifacts() const { return artifacts_; }

  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(const std::string& name, bool ok, const std::string& witness = {}) {
    add(Check{name, ok ? Status::Pass : Status::Fail, ok ? std::string{} : witness});
  }
  void inconclusive(const std::string& name, const std::string& why) {
    add(Check{name, Status::Inconclusive, why});
  }
  void note(std::string line) { lines_.push_back(std::move(line)); }
  void artifact(std::string path) { artifacts_.push_back(std::move(path)); }
  void merge(const RunReport& other);

  /// Fail if any check failed, else inconclusive if any was, else pass.
  Status status() const;
  bool passed() const { return status() == Status::Pass; }
  const Check* first_failure() const;

  std::string text() const;
  std::string json() const;

 private:
  std::string command_;
  std::vector<Check> checks_;
  std::vector<std::string> lines_;
  std::vector<std::string> artifacts_;
};

/// 0 pass, 1 fail, 2 inconclusive.
int exit_code(Status s);

}  // namespace gsdeform
