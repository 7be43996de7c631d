#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace paratrap::config {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structured-text configuration: `[section]` headers, `key = value [unit]`
// lines, `#` comments. Keys are flattened to `section.key`; top-level keys
// keep their plain name. Numeric values are normalized to SI at load; values
// that are not quantities are kept as strings.
struct Document {
  std::map<std::string, double> numbers;
  std::map<std::string, std::string> strings;

  bool has(const std::string& key) const { return numbers.count(key) > 0; }
};

Document parse_string(const std::string& text, const std::string& origin = "<string>");
Document parse_file(const std::string& path);

}  // namespace paratrap::config
