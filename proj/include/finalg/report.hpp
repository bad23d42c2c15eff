#pragma once

// Line-delimited report records with stable field names. Structured output
// is byte-deterministic for a fixed config: records are sorted by key and
// carry no timestamps.

#include <string>
#include <utility>
#include <vector>

namespace finalg {

inline constexpr const char* kToolVersion = "0.1.0";

struct Record {
  std::string type;
  std::vector<std::pair<std::string, std::string>> fields;

  Record& field(const std::string& key, std::string value) {
    fields.emplace_back(key, std::move(value));
    return *this;
  }
  Record& field(const std::string& key, bool value) {
    return field(key, std::string(value ? "true" : "false"));
  }
  Record& field(const std::string& key, long long value) {
    return field(key, std::to_string(value));
  }
  Record& field(const std::string& key, int value) { return field(key, std::to_string(value)); }

  std::string line() const;
  /// (type, first field value) — the sort key for order-normalized assembly.
  std::pair<std::string, std::string> sort_key() const;
};

struct Report {
  std::vector<Record> records;

  Record& add(std::string type) {
    records.push_back(Record{std::move(type), {}});
    return records.back();
  }
  /// Sorts every record after the leading meta/input block by key.
  void normalize();
  std::string structured() const;
  std::string text() const;
};

std::string sanitize_token(const std::string& value);

}  // namespace finalg
