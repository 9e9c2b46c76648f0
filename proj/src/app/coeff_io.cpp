#include "fastseries/app/coeff_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace fastseries::app {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view token, std::size_t line) {
  double value = 0.0;
  const char* end = token.data() + token.size();
  // from_chars rejects a leading '+', which people do write.
  const char* begin = token.data();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line) + ": bad number '" + std::string(token) + "'");
  }
  return value;
}

Complex parse_entry(std::string_view item, std::size_t line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < item.size()) {
    const auto start = item.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto stop = item.find_first_of(" \t", start);
    if (stop == std::string_view::npos) stop = item.size();
    tokens.push_back(item.substr(start, stop - start));
    pos = stop;
  }
  if (tokens.empty() || tokens.size() > 2) {
    throw ParseError("line " + std::to_string(line) + ": expected 're' or 're im'");
  }
  const double re = parse_double(tokens[0], line);
  const double im = tokens.size() == 2 ? parse_double(tokens[1], line) : 0.0;
  return {re, im};
}

std::string format_real(double x) {
  if (std::abs(x) < kPrintSnap) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

}  // namespace

Poly parse_coeff_text(std::string_view text) {
  std::vector<Complex> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    out.push_back(parse_entry(line, line_no));
  }
  return Poly(std::move(out));
}

Poly read_coeff_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_coeff_text(buf.str());
}

Poly parse_coeff_list(std::string_view list) {
  std::vector<Complex> out;
  std::size_t item_no = 0;
  while (true) {
    ++item_no;
    const auto comma = list.find(',');
    const std::string_view item = trim(list.substr(0, comma));
    if (item.empty()) throw ParseError("item " + std::to_string(item_no) + ": empty coefficient");
    out.push_back(parse_entry(item, item_no));
    if (comma == std::string_view::npos) break;
    list = list.substr(comma + 1);
  }
  return Poly(std::move(out));
}

std::string format_coeff_list(const Poly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += format_real(p[i].real());
    if (std::abs(p[i].imag()) >= kPrintSnap) {
      const std::string im = format_real(p[i].imag());
      out += (im.front() == '-' ? "" : "+") + im + "i";
    }
  }
  return out;
}

std::string format_coeff_text(const Poly& p) {
  std::string out;
  for (const Complex& c : p) {
    out += format_real(c.real());
    if (std::abs(c.imag()) >= kPrintSnap) out += ' ' + format_real(c.imag());
    out += '\n';
  }
  return out;
}

void write_coeff_file(const std::filesystem::path& path, const Poly& p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_coeff_text(p);
}

}  // namespace fastseries::app
