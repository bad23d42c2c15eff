#include "finalg/report.hpp"

#include <algorithm>

namespace finalg {

std::string sanitize_token(const std::string& value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) out += (c == ' ' || c == '\n' || c == '\t') ? '_' : c;
  return out.empty() ? "_" : out;
}

std::string Record::line() const {
  std::string out = type;
  for (const auto& [k, v] : fields) out += " " + k + "=" + sanitize_token(v);
  return out;
}

std::pair<std::string, std::string> Record::sort_key() const {
  return {type, fields.empty() ? std::string() : fields.front().second};
}

void Report::normalize() {
  auto body_begin = records.begin();
  while (body_begin != records.end() &&
         (body_begin->type == "meta" || body_begin->type == "input"))
    ++body_begin;
  std::stable_sort(body_begin, records.end(),
                   [](const Record& a, const Record& b) { return a.sort_key() < b.sort_key(); });
}

std::string Report::structured() const {
  std::string out;
  for (const auto& r : records) out += r.line() + "\n";
  return out;
}

std::string Report::text() const {
  std::string out;
  for (const auto& r : records) {
    out += r.type;
    if (!r.fields.empty()) out += ":";
    for (const auto& [k, v] : r.fields) out += "  " + k + "=" + v;
    out += "\n";
  }
  return out;
}

}  // namespace finalg
