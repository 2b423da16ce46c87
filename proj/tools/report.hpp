#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metalie::cli {

std::uint64_t fnv1a64(std::string_view data);

/// Ordered "key: value" lines.
class Report {
 public:
  explicit Report(std::string command) { add("command", std::move(command)); }

  void add(std::string key, std::string value);
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "yes" : "no")); }
  /// Digest of the concatenated inputs, "fnv1a64:" followed by 16 hex digits.
  void digest(const std::vector<std::string>& inputs);

  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

}  // namespace metalie::cli
