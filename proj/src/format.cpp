#include "hardy/format.hpp"

#include <cmath>
#include <cstdio>

namespace hardy {

std::string format_real(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::string format_complex(std::complex<double> z) {
  const double im = z.imag();
  return format_real(z.real()) + (std::signbit(im) ? "-" : "+") +
         format_real(std::abs(im)) + "i";
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string json_real(double v) { return format_real(v); }

std::string json_int(long long v) { return std::to_string(v); }

std::string json_bool(bool b) { return b ? "true" : "false"; }

std::string json_object(const JsonFields& fields) {
  std::string out = "{";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += json_string(fields[i].first);
    out += ':';
    out += fields[i].second;
  }
  out += '}';
  return out;
}

std::string json_array(const std::vector<std::string>& rendered) {
  std::string out = "[";
  for (std::size_t i = 0; i < rendered.size(); ++i) {
    if (i) out += ',';
    out += rendered[i];
  }
  out += ']';
  return out;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
  return out;
}

}  // namespace hardy
