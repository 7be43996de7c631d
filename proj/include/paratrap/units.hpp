#pragma once

#include <stdexcept>
#include <string>

namespace paratrap::units {

struct UnitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse "1.1 MHz", "45 us", "0.4 mV", "10 aF", "20 deg", or a bare number.
// Returns the value in SI base units (Hz, s, V, F, rad, ...).
double parse_quantity(const std::string& text);

// Multiplier for a unit symbol; throws UnitError for unknown symbols.
double unit_factor(const std::string& symbol);

// Canonical shortest-roundtrip formatting used for all numeric output.
std::string format_number(double value);

}  // namespace paratrap::units
