#include "equihodge/report.hpp"

namespace equihodge {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::declined: return "declined";
  }
  return "unknown";
}

void Report::check(std::string name, bool ok, std::string witness) {
  checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, ok ? std::string{} : std::move(witness)});
}

void Report::skip(std::string name, std::string reason) {
  checks.push_back({std::move(name), CheckStatus::skipped, std::move(reason)});
}

void Report::decline(std::string name, std::string reason) {
  checks.push_back({std::move(name), CheckStatus::declined, std::move(reason)});
}

void Report::table(std::string name, std::vector<long long> values) {
  tables.emplace_back(std::move(name), std::move(values));
}

void Report::fact(std::string name, std::string value) { facts.emplace_back(std::move(name), std::move(value)); }

bool Report::passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const std::vector<long long>* Report::find_table(const std::string& name) const {
  for (const auto& [n, v] : tables)
    if (n == name) return &v;
  return nullptr;
}

std::vector<const Check*> Report::failures() const {
  std::vector<const Check*> out;
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) out.push_back(&c);
  return out;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.status, c.detail});
  for (const auto& [n, v] : other.tables) tables.emplace_back(prefix + n, v);
  for (const auto& [n, v] : other.facts) facts.emplace_back(prefix + n, v);
}

}  // namespace equihodge
