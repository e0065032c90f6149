#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace hardy {

// Fixed 17-significant-digit rendering so equal doubles always produce the
// same bytes and every double round-trips.
std::string format_real(double v);

// Canonical "a+bi" form using format_real for both parts.
std::string format_complex(std::complex<double> z);

// Already-rendered JSON fragments paired with their keys, emitted in order.
using JsonFields = std::vector<std::pair<std::string, std::string>>;

std::string json_string(const std::string& s);
std::string json_real(double v);
std::string json_int(long long v);
std::string json_bool(bool b);
std::string json_object(const JsonFields& fields);
std::string json_array(const std::vector<std::string>& rendered);

// One CSV row: '.' decimal cells joined by ',' with a trailing LF.
std::string csv_row(const std::vector<std::string>& cells);

}  // namespace hardy
