#include "report.hpp"

#include <cstdio>

namespace metalie::cli {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

void Report::add(std::string key, std::string value) {
  for (char& c : value)
    if (c == '\n') c = ' ';
  lines_.emplace_back(std::move(key), std::move(value));
}

void Report::digest(const std::vector<std::string>& inputs) {
  std::string all;
  for (const auto& s : inputs) {
    all += s;
    all.push_back('\0');
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(fnv1a64(all)));
  add("input-digest", std::string(buf));
}

std::string Report::str() const {
  std::string out;
  for (const auto& [k, v] : lines_) out += k + ": " + v + "\n";
  return out;
}

}  // namespace metalie::cli
