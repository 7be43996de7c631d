#include "paratrap/units.hpp"

#include <cstdio>
#include <map>

#include "paratrap/constants.hpp"

namespace paratrap::units {

namespace {

const std::map<std::string, double>& unit_table() {
  static const std::map<std::string, double> table = {
      {"1", 1.0},
      {"Hz", 1.0},
      {"kHz", 1e3},
      {"MHz", 1e6},
      {"GHz", 1e9},
      {"s", 1.0},
      {"ms", 1e-3},
      {"us", 1e-6},
      {"ns", 1e-9},
      {"ps", 1e-12},
      {"V", 1.0},
      {"mV", 1e-3},
      {"uV", 1e-6},
      {"A", 1.0},
      {"mA", 1e-3},
      {"T", 1.0},
      {"mT", 1e-3},
      {"uT", 1e-6},
      {"nT", 1e-9},
      {"pT", 1e-12},
      {"T/sqrtHz", 1.0},
      {"pT/sqrtHz", 1e-12},
      {"ohm", 1.0},
      {"kohm", 1e3},
      {"F", 1.0},
      {"pF", 1e-12},
      {"fF", 1e-15},
      {"aF", 1e-18},
      {"H", 1.0},
      {"nH", 1e-9},
      {"m", 1.0},
      {"cm", 1e-2},
      {"mm", 1e-3},
      {"um", 1e-6},
      {"nm", 1e-9},
      {"m^3", 1.0},
      {"kg", 1.0},
      {"C", 1.0},
      {"rad", 1.0},
      {"deg", constants::pi / 180.0},
      {"rad/s", 1.0},
      {"quanta/s", 1.0},
      {"1/s", 1.0},
      {"V/m", 1.0},
      {"V/m^2", 1.0},
      {"(V/m)^2/Hz", 1.0},
      {"T/m", 1.0},
  };
  return table;
}

}  // namespace

double unit_factor(const std::string& symbol) {
  const auto& table = unit_table();
  auto it = table.find(symbol);
  if (it == table.end()) throw UnitError("unknown unit '" + symbol + "'");
  return it->second;
}

double parse_quantity(const std::string& text) {
  const std::size_t begin = text.find_first_not_of(" \t");
  const std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw UnitError("empty quantity");
  const std::string body = text.substr(begin, end - begin + 1);

  std::size_t pos = 0;
  double value = 0;
  try {
    value = std::stod(body, &pos);
  } catch (const std::exception&) {
    throw UnitError("cannot parse number in '" + body + "'");
  }
  while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t')) ++pos;
  if (pos == body.size()) return value;
  return value * unit_factor(body.substr(pos));
}

std::string format_number(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace paratrap::units
