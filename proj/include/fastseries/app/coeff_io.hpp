#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fastseries/poly.hpp"

namespace fastseries::app {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One coefficient per line, `re` or `re im`. Text after `#` is ignored, as are
// blank lines.
Poly parse_coeff_text(std::string_view text);
Poly read_coeff_file(const std::filesystem::path& path);

// Comma separated reals, e.g. "1,-1". An item may also be "re im".
Poly parse_coeff_list(std::string_view list);

// Values with magnitude below this print as 0.
inline constexpr double kPrintSnap = 1e-12;

// "1,0.5,-0.125"; a complex entry prints as "re+imi".
std::string format_coeff_list(const Poly& p);
// The line format accepted by parse_coeff_text.
std::string format_coeff_text(const Poly& p);
void write_coeff_file(const std::filesystem::path& path, const Poly& p);

}  // namespace fastseries::app
