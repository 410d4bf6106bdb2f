#include "gsdeform/report.hpp"

#include <sstream>

#include "json.hpp"

namespace gsdeform {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

void RunReport::merge(const RunReport& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
  for (const auto& l : other.lines_) lines_.push_back(l);
  for (const auto& a : other.artifacts_) artifacts_.push_back(a);
}

Status RunReport::status() const {
  Status s = Status::Pass;
  for (const auto& c : checks_) {
    if (c.status == Status::Fail) return Status::Fail;
    if (c.status == Status::Inconclusive) s = Status::Inconclusive;
  }
  return s;
}

const Check* RunReport::first_failure() const {
  for (const auto& c : checks_)
    if (c.status == Status::Fail) return &c;
  return nullptr;
}

std::string RunReport::text() const {
  std::ostringstream out;
  out << "== " << command_ << " ==\n";
  for (const auto& l : lines_) out << l << '\n';
  for (const auto& c : checks_) {
    out << '[' << to_string(c.status) << "] " << c.name << '\n';
    if (!c.witness.empty()) out << "    " << c.witness << '\n';
  }
  for (const auto& a : artifacts_) out << "wrote " << a << '\n';
  out << "status: " << to_string(status()) << '\n';
  return out.str();
}

std::string RunReport::json() const {
  nlohmann::ordered_json j;
  j["command"] = command_;
  j["status"] = to_string(status());
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_)
    j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}});
  j["lines"] = lines_;
  j["artifacts"] = artifacts_;
  return j.dump(2) + "\n";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass:
      return 0;
    case Status::Fail:
      return 1;
    case Status::Inconclusive:
      return 2;
  }
  return 1;
}

}  // namespace gsdeform
