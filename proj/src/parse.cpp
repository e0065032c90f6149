#include "hardy/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace hardy {

namespace {

std::string trimmed(const std::string& text) {
  std::size_t first = 0;
  std::size_t last = text.size();
  while (first < last && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1]))) --last;
  return text.substr(first, last - first);
}

// Full-string strtod; rejects partial parses and non-finite results.
double parse_real_strict(const std::string& text) {
  if (text.empty()) throw ParseError("empty number");
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + text.size()) {
    throw ParseError("bad number '" + text + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError("number '" + text + "' is not finite");
  }
  return value;
}

// "", "+", "-" mean the implicit unit in front of i; anything else is a real.
double parse_imag_coefficient(const std::string& text) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real_strict(text);
}

// Position of the '+'/'-' separating real and imaginary parts, or npos.
// Signs in exponents ("1e-3") and a leading sign do not separate.
std::size_t split_point(const std::string& text) {
  for (std::size_t k = text.size(); k-- > 1;) {
    const char c = text[k];
    if (c != '+' && c != '-') continue;
    const char prev = text[k - 1];
    if (prev == 'e' || prev == 'E') continue;
    return k;
  }
  return std::string::npos;
}

}  // namespace

std::complex<double> parse_complex(const std::string& raw) {
  const std::string text = trimmed(raw);
  if (text.empty()) throw ParseError("empty complex literal");
  if (text.back() == 'i') {
    const std::string body = text.substr(0, text.size() - 1);
    const std::size_t split = split_point(body);
    if (split == std::string::npos) {
      return {0.0, parse_imag_coefficient(body)};
    }
    const std::string imag = body.substr(split);
    return {parse_real_strict(body.substr(0, split)),
            parse_imag_coefficient(imag)};
  }
  return {parse_real_strict(text), 0.0};
}

CoeffVec parse_coeff_list(const std::string& text) {
  CoeffVec coeffs;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) coeffs.push_back(parse_complex(item));
  if (coeffs.empty()) throw ParseError("empty coefficient list");
  return coeffs;
}

Exponent parse_exponent(const std::string& raw) {
  std::string text = trimmed(raw);
  for (char& c : text) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (text == "inf") return Exponent::inf();
  return {parse_real_strict(text)};
}

RealMatrix parse_matrix_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows")) {
    throw ParseError("matrix JSON needs an object with \"n\" and \"rows\"");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<int>() < 1) {
    throw ParseError("matrix JSON: \"n\" must be a positive integer");
  }
  const int n = doc["n"].get<int>();
  const auto& rows = doc["rows"];
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) {
    throw ParseError("matrix JSON: \"rows\" must hold exactly n rows");
  }
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw ParseError("matrix JSON: every row must hold exactly n numbers");
    }
    for (const auto& cell : row) {
      if (!cell.is_number()) {
        throw ParseError("matrix JSON: entries must be numbers");
      }
      const double value = cell.get<double>();
      if (!std::isfinite(value)) {
        throw ParseError("matrix JSON: entries must be finite");
      }
      entries.push_back(value);
    }
  }
  return {n, std::move(entries)};
}

RealMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open matrix file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_json(buffer.str());
}

}  // namespace hardy
