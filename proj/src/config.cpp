#include "paratrap/config.hpp"

#include <fstream>
#include <sstream>

#include "paratrap/units.hpp"

namespace paratrap::config {

namespace {

std::string trim(const std::string& s) {
  const std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Document parse_string(const std::string& text, const std::string& origin) {
  Document doc;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ConfigError(origin + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    const std::string key_part = trim(line.substr(0, eq));
    const std::string value_part = trim(line.substr(eq + 1));
    if (key_part.empty()) fail("empty key");
    if (value_part.empty()) fail("empty value for key '" + key_part + "'");
    const std::string key = section.empty() ? key_part : section + "." + key_part;
    try {
      doc.numbers[key] = units::parse_quantity(value_part);
    } catch (const units::UnitError&) {
      doc.strings[key] = value_part;
    }
  }
  return doc;
}

Document parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str(), path);
}

}  // namespace paratrap::config
